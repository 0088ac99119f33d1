#pragma once

#include <optional>
#include <vector>

#include "linear_model.hpp"
#include "simplex.hpp"

namespace bkp {

enum class MipStatus {
    Optimal,
    Infeasible,
    Cutoff,             // no solution strictly below the given cutoff
    ResourceExhausted,  // node limit hit; result is unusable
    NumericalFailure,
};

struct MipResult {
    MipStatus status = MipStatus::Infeasible;
    double value = 0.0;
    std::vector<double> values;  // binaries rounded exactly to 0/1
    long nodes = 0;
};

struct MipOptions {
    // Nodes whose LP bound reaches the cutoff are pruned; with a cutoff the
    // solver only reports optima strictly below it.
    std::optional<double> cutoff;
    long node_limit = 1'000'000;
};

// Depth-first branch and bound on the LP relaxation: branch on the most
// fractional binary, value-0 child first. For models flagged
// objective_integral, LP bounds are rounded up before pruning.
MipResult solve_mip(const LinearModel& model, const MipOptions& options = {});

}  // namespace bkp
