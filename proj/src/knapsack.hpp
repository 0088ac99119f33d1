#pragma once

#include <cstdint>
#include <vector>

#include "instance.hpp"

namespace bkp {

// Exact 0-1 knapsack optimum with the chosen item indices (ascending).
struct KpResult {
    std::int64_t value = 0;
    std::vector<int> selection;
};

// Critical item of the greedy LP fill over an item list in efficiency order.
// residual = capacity - split_weight is the room left when the critical item
// is reached; it lies in [1, w_c] whenever a critical item exists.
struct SplitInfo {
    bool has_critical = false;
    int critical = -1;              // index into the instance
    std::int64_t split_profit = 0;  // profit of items strictly before critical
    std::int64_t split_weight = 0;
    std::int64_t residual = 0;
};

// Indices i with x_i == 0, in the order the instance stores them.
std::vector<int> follower_set(const Instance& inst, const std::vector<std::uint8_t>& x);

// Dynamic program over capacities 0..capacity with full traceback. Item order
// does not affect the value.
KpResult solve_kp(const Instance& inst, const std::vector<int>& items,
                  std::int64_t capacity);

// items must be in efficiency order. No critical item iff the whole list fits.
SplitInfo split_info(const Instance& inst, const std::vector<int>& items,
                     std::int64_t capacity);

}  // namespace bkp
