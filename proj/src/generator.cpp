#include "generator.hpp"

#include "rng.hpp"

namespace bkp {

std::int64_t follower_capacity(int ins, std::int64_t sum_w) {
    return (static_cast<std::int64_t>(ins) * sum_w + 10) / 11;
}

GeneratedInstance generate(const GenSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("generate: n must be >= 2");
    if (spec.ins < 1 || spec.ins > 10)
        throw std::invalid_argument("generate: ins must be in [1, 10]");

    constexpr int kMaxAttempts = 100;
    // Substream k starts at seed + k * (odd mixing constant); distinct
    // substreams cannot collide within any realistic draw count.
    constexpr std::uint64_t kSubstreamStride = 0xBF58476D1CE4E5B9ULL;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RngState rng(spec.seed + static_cast<std::uint64_t>(attempt) * kSubstreamStride);
        Instance inst;
        inst.n = spec.n;
        for (int i = 0; i < spec.n; ++i) {
            inst.profit.push_back(rng.next_uniform(1, 100));
            inst.weight.push_back(rng.next_uniform(1, 100));
            inst.leader_weight.push_back(rng.next_uniform(1, 100));
        }
        inst.cap_follower = follower_capacity(spec.ins, inst.total_weight());
        inst.cap_leader = rng.next_uniform(inst.cap_follower - 10, inst.cap_follower + 10);

        if (!validate_assumptions(inst).empty()) continue;

        auto [sorted, perm] = sort_by_efficiency(inst);
        return GeneratedInstance{std::move(sorted), std::move(perm), attempt + 1};
    }
    throw GenerationError("no valid instance after " + std::to_string(kMaxAttempts) +
                          " attempts (n=" + std::to_string(spec.n) +
                          ", ins=" + std::to_string(spec.ins) + ")");
}

std::string instance_filename(const GenSpec& spec) {
    return "bkp_n" + std::to_string(spec.n) + "_ins" + std::to_string(spec.ins) + "_s" +
           std::to_string(spec.seed) + ".txt";
}

}  // namespace bkp
