#pragma once

#include <cstdint>
#include <vector>

#include "instance.hpp"

namespace bkp {

// Ground truth by exhaustive enumeration of the leader's choices.
struct OracleResult {
    std::int64_t value = 0;
    std::vector<std::uint8_t> x;  // first optimal interdiction set in
                                  // lexicographic index-set order
    std::vector<std::uint8_t> y;  // follower best response to x
    long leaders_enumerated = 0;  // feasible leader sets visited
};

// Enumerates every leader set within cap_leader (depth-first over item
// indices, pruned on remaining capacity) and solves the follower knapsack for
// each. Refuses n > hard_limit_n.
OracleResult brute_force(const Instance& inst, int hard_limit_n = 20);

}  // namespace bkp
