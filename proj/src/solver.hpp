#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bound_models.hpp"
#include "instance.hpp"
#include "simplex.hpp"

namespace bkp {

// Wall-clock budget, checked between engine calls only.
struct Deadline {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::optional<double> limit_s;

    double elapsed_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
    bool expired() const { return limit_s && elapsed_s() >= *limit_s; }
};

struct SolverParams {
    TupleGenParams tuples;
    int gamma = 2;  // subproblems integer-solved in the step-1 heuristic pass
    std::optional<double> time_limit_s;
    bool reduced_cost_fixing = true;
    // Test hook: called with each strictly improving incumbent value.
    std::function<void(std::int64_t)> on_incumbent;
};

SolverParams small_preset();  // alpha=beta=100, delta=10, mu=150, gamma=2
SolverParams large_preset();  // alpha=beta=500, delta=20, mu=1000, gamma=5

struct SolveStats {
    std::int64_t step2_subproblems = 0;  // records worked past the bound check
    std::int64_t crit2_solves = 0;       // integer solves of CRIT_2 models, both steps
    std::int64_t cut_rounds = 0;         // cut pairs added across all subproblems
    std::int64_t max_cut_rounds_single = 0;
    std::int64_t candidates = 0;  // feasible CRIT_2 relaxations ranked in step 1
    bool entered_step2 = false;
    double wall_time_s = 0.0;
};

struct BilevelSolution {
    bool has_solution = false;
    std::vector<std::uint8_t> x;  // in the caller's item order
    std::vector<std::uint8_t> y;
    std::int64_t value = 0;
    bool proven_optimal = false;
    SolveStats stats;
};

// Internal incumbent, kept in efficiency order.
struct Incumbent {
    std::vector<std::uint8_t> x, y;
    std::int64_t value = 0;
};

struct SubproblemRecord {
    enum class Status { Open, Pruned, Exhausted };
    int critical = -1;
    CritModel crit;
    LpSolution lp;       // root relaxation, source of the reduced costs
    double lp_value = 0.0;
    Status status = Status::Open;
};

struct Step1Result {
    std::optional<Incumbent> incumbent;
    std::vector<SubproblemRecord> records;  // sorted by increasing lp_value;
                                            // empty when certified optimal
    bool certified = false;
    SolveStats stats;
    bool timed_out = false;
};

// Solves the instance exactly. The instance may arrive in any item order; the
// returned vectors are mapped back to it. With a time limit, the best known
// solution is returned with proven_optimal = false once the limit trips.
BilevelSolution solve(const Instance& inst, const SolverParams& params = small_preset());

// Step 1 on an efficiency-sorted instance: NCR incumbent, candidate critical
// range, CRIT_2 construction and LP ranking, then the gamma heuristic solves.
Step1Result step1(const Instance& sorted, const SolverParams& params);

// Fixes every nonbasic binary whose reduced cost magnitude covers the gap
// z_star - lp_value; returns how many variables were fixed.
int fix_by_reduced_costs(SubproblemRecord& record, std::int64_t z_star);

// Appends the two cut rows: the no-good on x_bar and "interdict one chosen
// item" on y_bar. An empty y_bar yields an unsatisfiable row, which is the
// correct way to close the subproblem.
void add_cuts(CritModel& crit, const std::vector<std::uint8_t>& x_bar,
              const std::vector<std::uint8_t>& y_bar);

// Constraint-generation loop for one open record: integer-solve, evaluate the
// follower's true response, add the two cuts, repeat until the model cannot
// beat the incumbent. Returns false if the deadline tripped mid-loop.
bool solve_subproblem(const Instance& sorted, SubproblemRecord& record,
                      std::optional<Incumbent>& incumbent, const SolverParams& params,
                      SolveStats& stats, const Deadline& deadline);

}  // namespace bkp
