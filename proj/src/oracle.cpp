#include "oracle.hpp"

#include <stdexcept>

#include "knapsack.hpp"

namespace bkp {

namespace {

struct Enumeration {
    const Instance& inst;
    std::vector<std::uint8_t> x;
    std::int64_t spent = 0;
    OracleResult best;
    bool have_best = false;

    explicit Enumeration(const Instance& i) : inst(i), x(i.n, 0) {}

    void evaluate() {
        ++best.leaders_enumerated;
        KpResult kp = solve_kp(inst, follower_set(inst, x), inst.cap_follower);
        if (!have_best || kp.value < best.value) {
            have_best = true;
            best.value = kp.value;
            best.x = x;
            best.y.assign(inst.n, 0);
            for (int idx : kp.selection) best.y[idx] = 1;
        }
    }

    // Pre-order visit: a set is evaluated before any of its extensions, and
    // extensions use strictly larger indices, so the first optimum found is
    // the lexicographically smallest optimal index set.
    void extend(int from) {
        for (int i = from; i < inst.n; ++i) {
            if (spent + inst.leader_weight[i] > inst.cap_leader) continue;
            spent += inst.leader_weight[i];
            x[i] = 1;
            evaluate();
            extend(i + 1);
            x[i] = 0;
            spent -= inst.leader_weight[i];
        }
    }
};

}  // namespace

OracleResult brute_force(const Instance& inst, int hard_limit_n) {
    if (inst.n > hard_limit_n)
        throw std::invalid_argument("brute_force: n = " + std::to_string(inst.n) +
                                    " exceeds hard limit " + std::to_string(hard_limit_n));
    Enumeration e(inst);
    e.evaluate();  // the empty interdiction set
    e.extend(0);
    return e.best;
}

}  // namespace bkp
