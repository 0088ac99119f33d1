#pragma once

#include <vector>

#include "linear_model.hpp"

namespace bkp {

enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

enum class VarStatus { Basic, NonbasicLower, NonbasicUpper };

// LP relaxation result. Binaries are relaxed to [0,1]. Reduced costs follow
// the minimization convention: nonbasic at lower bound >= 0, nonbasic at
// upper bound <= 0 (up to the solver tolerance).
struct LpSolution {
    LpStatus status = LpStatus::NumericalFailure;
    double objective = 0.0;               // includes the model offset
    std::vector<double> values;           // structural variables only
    std::vector<double> reduced_costs;
    std::vector<VarStatus> var_status;
    int iterations = 0;
};

// Two-phase primal simplex on a dense tableau with general variable bounds.
// Compiled once per model; solve() may be called repeatedly with different
// structural bounds (used by branch and bound), reusing the workspace.
class DenseSimplex {
  public:
    explicit DenseSimplex(const LinearModel& model);

    LpSolution solve(const std::vector<double>& lower, const std::vector<double>& upper);

  private:
    LpSolution run(const std::vector<double>& lower, const std::vector<double>& upper,
                   bool bland_from_start);

    int m_ = 0;   // rows
    int ns_ = 0;  // structural columns
    std::vector<double> dense_;  // m x ns structural coefficients
    std::vector<Relation> rel_;
    std::vector<double> rhs_;
    std::vector<double> obj_;
    double offset_ = 0.0;

    // per-solve workspace, kept to spare reallocation across nodes
    std::vector<double> tab_, lo_, up_, beta_, cost_, dvec_, xval_, act_;
    std::vector<VarStatus> vstat_;
    std::vector<int> basis_, art_of_row_;
};

LpSolution solve_lp(const LinearModel& model);

}  // namespace bkp
