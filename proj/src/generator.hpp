#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "instance.hpp"

namespace bkp {

// Instance class scheme: profits, follower weights and leader weights uniform
// in [1,100]; C_l = ceil(INS/11 * sum(w)); C_u uniform in [C_l-10, C_l+10].
struct GenSpec {
    int n = 0;
    int ins = 1;  // instance class, 1..10
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Instance instance;  // already in efficiency order
    Permutation perm;   // draw order <-> efficiency order
    int attempts = 1;   // substreams consumed until a valid draw
};

class GenerationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exact integer ceil(ins * sum_w / 11).
std::int64_t follower_capacity(int ins, std::int64_t sum_w);

// Deterministic in spec: draws p_1,w_1,v_1,p_2,... then C_u. A draw that
// violates the standing assumptions is retried on the next substream, at most
// 100 times, after which GenerationError is thrown (tiny n and small INS can
// make w_i < C_l unsatisfiable).
GeneratedInstance generate(const GenSpec& spec);

// Conventional file name: bkp_n{n}_ins{INS}_s{seed}.txt
std::string instance_filename(const GenSpec& spec);

}  // namespace bkp
