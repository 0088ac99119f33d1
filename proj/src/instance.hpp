#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bkp {

// A bilevel interdiction knapsack instance. The leader removes items subject
// to capacity cap_leader; the follower then solves a 0-1 knapsack over the
// surviving items with capacity cap_follower.
struct Instance {
    int n = 0;
    std::vector<std::int64_t> profit;         // p_i, shared by both agents
    std::vector<std::int64_t> weight;         // w_i, follower knapsack weight
    std::vector<std::int64_t> leader_weight;  // v_i, leader knapsack weight
    std::int64_t cap_leader = 0;              // C_u
    std::int64_t cap_follower = 0;            // C_l

    std::int64_t total_profit() const;
    std::int64_t total_weight() const;
    std::int64_t total_leader_weight() const;
};

// Index maps between an instance's input item order and its efficiency-sorted
// order. All indices are 0-based.
struct Permutation {
    std::vector<int> to_sorted;    // input index -> sorted position
    std::vector<int> to_original;  // sorted position -> input index
};

// Checks the standing assumptions on the data plus the efficiency ordering.
// Returns one message per violated condition; empty report means well formed.
// Item indices in messages are 1-based.
std::vector<std::string> validate(const Instance& inst);

// Same checks minus the efficiency-order condition, for callers that re-sort
// the items themselves.
std::vector<std::string> validate_assumptions(const Instance& inst);

// True when p_i/w_i is non-increasing, decided by exact integer
// cross-multiplication (p_i * w_{i+1} >= p_{i+1} * w_i).
bool is_efficiency_sorted(const Instance& inst);

// Stable sort by non-increasing profit/weight ratio, ties broken by input
// index. Returns the sorted instance plus the index maps.
std::pair<Instance, Permutation> sort_by_efficiency(const Instance& inst);

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Thrown by the solver entry points when handed an instance that fails the
// standing assumptions.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Instance file format (UTF-8 text, space separated integers):
//   line 1:        n
//   line 2:        C_u C_l
//   lines 3..n+2:  p_i w_i v_i
// The writer emits exactly this with single spaces and a trailing newline.
Instance read_instance(const std::string& text);
std::string write_instance(const Instance& inst);

Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& inst, const std::string& path);

}  // namespace bkp
