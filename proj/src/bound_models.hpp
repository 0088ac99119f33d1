#pragma once

#include <cstdint>
#include <vector>

#include "instance.hpp"
#include "linear_model.hpp"

namespace bkp {

// One improving tuple: members removed before the critical item and added
// from it onward, with the net profit/weight change against the split
// solution. weight_delta may be negative (net removal).
struct TupleConstraint {
    std::vector<int> members;  // ascending item indices within the core window
    std::int64_t profit_delta = 0;
    std::int64_t weight_delta = 0;
};

struct TupleGenParams {
    int alpha = 100;  // max backward sets
    int beta = 100;   // max forward sets (after the weight filter)
    int delta = 10;   // core half-width
    int mu = 150;     // max merged tuple constraints
};

// A CRIT model over x_1..x_n, k_1..k_{w_c} and (CRIT_2 only) the improvement
// variable pi. Always contains the leader capacity row, the critical-weight
// equality, the SOS row on k, and x_c fixed to 0.
struct CritModel {
    int critical = -1;  // index into the (sorted) instance
    LinearModel model;
    std::vector<TupleConstraint> tuples;
    std::vector<int> x_vars;  // column of x_i per item
    std::vector<int> k_vars;  // column of k_j, j = 1..w_c
    int pi_var = -1;
};

// min sum p_i(1-x_i)  s.t.  sum v_i x_i <= C_u,  sum w_i(1-x_i) <= C_l.
// Optimal when no critical item exists: the follower takes everything left.
LinearModel build_ncr(const Instance& inst);

// max sum w_i x_i s.t. sum v_i x_i <= C_u, encoded as min of the negation;
// negate the optimum to recover z(LW).
LinearModel build_lw(const Instance& inst);

// 0-based candidate range [l, r]: l is the first index whose weight prefix
// reaches C_l; r the first whose prefix reaches C_l + z(LW), or n-1 if none.
// Items outside the range can never be critical. Requires efficiency order.
std::pair<int, int> critical_range(const Instance& inst, std::int64_t lw_value);

CritModel build_crit1(const Instance& inst, int critical);

// Greedy tuple enumeration around the critical item: backward subsets of
// (c-1..a) capped at alpha, forward subsets of (c..b) capped at beta and
// filtered to the heaviest backward weight, merged backward-ascending by
// profit against forward-descending, keeping improving tuples that fit the
// critical weight until mu constraints exist. The singleton {c} is appended
// when the merge did not already produce it.
std::vector<TupleConstraint> compute_tuples(const Instance& inst, int critical,
                                            const TupleGenParams& params);

// CRIT_1 plus pi >= profit_delta * (sum_{j >= max(1, weight_delta)} k_j -
// sum_{i in tuple} x_i) per tuple, with pi added to the objective.
CritModel build_crit2(const Instance& inst, int critical,
                      const std::vector<TupleConstraint>& tuples);

}  // namespace bkp
