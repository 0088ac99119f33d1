#include "branch_and_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bkp {

namespace {

constexpr double kIntTol = 1e-6;

struct Search {
    const LinearModel& model;
    DenseSimplex simplex;
    MipOptions opts;
    std::vector<double> lo, up;
    std::optional<double> best_value;
    std::vector<double> best_values;
    long nodes = 0;
    bool out_of_nodes = false;
    bool numerical_failure = false;

    explicit Search(const LinearModel& m, const MipOptions& o)
        : model(m), simplex(m), opts(o), lo(m.num_vars()), up(m.num_vars()) {
        for (int j = 0; j < m.num_vars(); ++j) {
            lo[j] = m.lower_bound(j);
            up[j] = m.upper_bound(j);
        }
    }

    double sharpen(double bound) const {
        return model.objective_integral ? std::ceil(bound - kIntTol) : bound;
    }

    // Zeroes a slice of an exactly-one group in one child and its complement
    // in the other. Returns false when the group carries at most one nonzero,
    // i.e. there is nothing to split.
    bool branch_on_group(const std::vector<int>& group, const LpSolution& lp) {
        int nonzero = 0;
        double mass = 0.0;
        for (int j : group) {
            if (lp.values[j] > kIntTol) {
                ++nonzero;
                mass += lp.values[j];
            }
        }
        if (nonzero <= 1) return false;

        // Split at the fractional-mass median, but always between the first
        // and last nonzero member so each child zeroes at least one of them
        // (otherwise a child would repeat the parent relaxation verbatim).
        std::size_t first_nz = group.size(), last_nz = 0;
        for (std::size_t t = 0; t < group.size(); ++t) {
            if (lp.values[group[t]] > kIntTol) {
                if (first_nz == group.size()) first_nz = t;
                last_nz = t;
            }
        }
        std::size_t split = first_nz;
        double acc = 0.0;
        for (std::size_t t = 0; t < group.size(); ++t) {
            acc += lp.values[group[t]];
            if (acc >= mass / 2) {
                split = t;
                break;
            }
        }
        split = std::clamp(split, first_nz, last_nz - 1);

        double left_mass = 0.0;
        for (std::size_t t = 0; t <= split; ++t) left_mass += lp.values[group[t]];

        auto zero_slice = [&](std::size_t from, std::size_t to) {
            // a member already pinned to 1 makes this child empty
            for (std::size_t t = from; t < to; ++t) {
                if (lo[group[t]] > 0.5) return;
            }
            std::vector<double> keep;
            keep.reserve(to - from);
            for (std::size_t t = from; t < to; ++t) {
                keep.push_back(up[group[t]]);
                up[group[t]] = 0.0;
            }
            dive();
            for (std::size_t t = from; t < to; ++t) up[group[t]] = keep[t - from];
        };

        // descend first into the side holding more of the LP mass
        if (left_mass >= mass - left_mass) {
            zero_slice(split + 1, group.size());
            zero_slice(0, split + 1);
        } else {
            zero_slice(0, split + 1);
            zero_slice(split + 1, group.size());
        }
        return true;
    }

    void dive() {
        if (out_of_nodes || numerical_failure) return;
        if (++nodes > opts.node_limit) {
            out_of_nodes = true;
            return;
        }

        LpSolution lp = simplex.solve(lo, up);
        if (lp.status == LpStatus::Infeasible) return;
        if (lp.status != LpStatus::Optimal) {
            // CRIT/NCR/LW relaxations are bounded; anything else here is a
            // solver breakdown, not a model property.
            numerical_failure = true;
            return;
        }

        const double bound = sharpen(lp.objective);
        if (opts.cutoff && bound >= *opts.cutoff - kIntTol) return;
        if (best_value && bound >= *best_value) return;

        // A fractional exactly-one group is dichotomized as a whole: single
        // 0/1 branches on one member barely move the relaxation.
        for (const auto& group : model.sos1_groups) {
            if (branch_on_group(group, lp)) return;
        }

        int branch = -1;
        double best_frac = kIntTol;
        for (int j = 0; j < model.num_vars(); ++j) {
            if (model.var(j).kind != VarKind::Binary) continue;
            const double f = lp.values[j] - std::floor(lp.values[j]);
            const double dist = std::min(f, 1.0 - f);
            if (dist > best_frac) {
                best_frac = dist;
                branch = j;
            }
        }

        if (branch < 0) {
            // Integer leaf: round the binaries and re-evaluate the objective
            // so the reported value matches the reported vector.
            std::vector<double> vals = lp.values;
            for (int j = 0; j < model.num_vars(); ++j) {
                if (model.var(j).kind == VarKind::Binary) vals[j] = std::round(vals[j]);
            }
            double value = model.evaluate_objective(vals);
            if (model.objective_integral) value = std::llround(value);
            if (opts.cutoff && value >= *opts.cutoff - kIntTol) return;
            if (!best_value || value < *best_value) {
                best_value = value;
                best_values = std::move(vals);
            }
            return;
        }

        const double keep_lo = lo[branch], keep_up = up[branch];
        lo[branch] = up[branch] = 0.0;
        dive();
        lo[branch] = up[branch] = 1.0;
        dive();
        lo[branch] = keep_lo;
        up[branch] = keep_up;
    }
};

}  // namespace

MipResult solve_mip(const LinearModel& model, const MipOptions& options) {
    if (model.num_vars() == 0) throw std::invalid_argument("solve_mip: model has no variables");
    for (int j = 0; j < model.num_vars(); ++j) {
        if (model.var(j).kind == VarKind::Continuous && model.objective_coeff(j) < 0.0 &&
            !model.var(j).fixed) {
            // A negative-cost free continuous makes the relaxation unbounded;
            // nothing in this codebase builds such a model.
            throw std::invalid_argument("solve_mip: negative objective on unbounded continuous");
        }
    }

    Search search(model, options);
    search.dive();

    MipResult res;
    res.nodes = search.nodes;
    if (search.numerical_failure) {
        res.status = MipStatus::NumericalFailure;
    } else if (search.out_of_nodes) {
        res.status = MipStatus::ResourceExhausted;
    } else if (search.best_value) {
        res.status = MipStatus::Optimal;
        res.value = *search.best_value;
        res.values = std::move(search.best_values);
    } else {
        res.status = options.cutoff ? MipStatus::Cutoff : MipStatus::Infeasible;
    }
    return res;
}

}  // namespace bkp
