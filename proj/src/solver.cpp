#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "branch_and_bound.hpp"
#include "knapsack.hpp"

namespace bkp {

namespace {

constexpr double kIntTol = 1e-6;

// All CRIT/NCR optima are integral, so an LP bound can be rounded up.
std::int64_t rounded_bound(double lp_value) {
    return static_cast<std::int64_t>(std::ceil(lp_value - kIntTol));
}

[[noreturn]] void engine_failure(MipStatus status, const char* where) {
    const char* what = status == MipStatus::ResourceExhausted ? "node limit exhausted"
                                                              : "numerical failure";
    throw std::runtime_error(std::string("milp engine: ") + what + " in " + where);
}

std::vector<std::uint8_t> extract_x(const CritModel& crit, const MipResult& res) {
    std::vector<std::uint8_t> x(crit.x_vars.size(), 0);
    for (std::size_t i = 0; i < crit.x_vars.size(); ++i)
        x[i] = res.values[crit.x_vars[i]] > 0.5 ? 1 : 0;
    return x;
}

struct KpEval {
    std::int64_t value;
    std::vector<std::uint8_t> y;
};

KpEval follower_response(const Instance& sorted, const std::vector<std::uint8_t>& x) {
    KpResult kp = solve_kp(sorted, follower_set(sorted, x), sorted.cap_follower);
    KpEval eval{kp.value, std::vector<std::uint8_t>(sorted.n, 0)};
    for (int idx : kp.selection) eval.y[idx] = 1;
    return eval;
}

void take_incumbent(std::optional<Incumbent>& incumbent, std::vector<std::uint8_t> x,
                    std::vector<std::uint8_t> y, std::int64_t value,
                    const SolverParams& params) {
    incumbent = Incumbent{std::move(x), std::move(y), value};
    if (params.on_incumbent) params.on_incumbent(value);
}

std::optional<double> cutoff_of(const std::optional<Incumbent>& incumbent) {
    if (!incumbent) return std::nullopt;
    return static_cast<double>(incumbent->value);
}

Step1Result step1_impl(const Instance& sorted, const SolverParams& params,
                       const Deadline& deadline) {
    Step1Result out;

    MipResult ncr = solve_mip(build_ncr(sorted));
    if (ncr.status == MipStatus::Optimal) {
        std::vector<std::uint8_t> x(sorted.n), y(sorted.n);
        for (int i = 0; i < sorted.n; ++i) {
            x[i] = ncr.values[i] > 0.5 ? 1 : 0;
            y[i] = 1 - x[i];
        }
        take_incumbent(out.incumbent, std::move(x), std::move(y),
                       std::llround(ncr.value), params);
    } else if (ncr.status != MipStatus::Infeasible) {
        engine_failure(ncr.status, "NCR");
    }
    if ((out.timed_out = deadline.expired())) return out;

    MipResult lw = solve_mip(build_lw(sorted));
    if (lw.status != MipStatus::Optimal) engine_failure(lw.status, "LW");
    const std::int64_t z_lw = std::llround(-lw.value);
    if ((out.timed_out = deadline.expired())) return out;

    const auto [l, r] = critical_range(sorted, z_lw);
    for (int c = l; c <= r; ++c) {
        CritModel crit = build_crit2(sorted, c, compute_tuples(sorted, c, params.tuples));
        LpSolution lp = solve_lp(crit.model);
        if (lp.status == LpStatus::Infeasible) continue;  // c can never be critical
        if (lp.status != LpStatus::Optimal)
            throw std::runtime_error("lp engine: failure on CRIT_2 relaxation");
        SubproblemRecord rec;
        rec.critical = c;
        rec.lp_value = lp.objective;
        rec.crit = std::move(crit);
        rec.lp = std::move(lp);
        out.records.push_back(std::move(rec));
        if ((out.timed_out = deadline.expired())) return out;
    }
    std::stable_sort(out.records.begin(), out.records.end(),
                     [](const SubproblemRecord& a, const SubproblemRecord& b) {
                         return a.lp_value < b.lp_value;
                     });
    out.stats.candidates = static_cast<std::int64_t>(out.records.size());

    if (out.records.empty()) {
        out.certified = true;  // no item can be critical: NCR covered it
        return out;
    }
    if (out.incumbent && rounded_bound(out.records.front().lp_value) >= out.incumbent->value) {
        out.certified = true;
        out.records.clear();
        return out;
    }

    // Heuristic pass over the most promising subproblems.
    const int passes = std::min<int>(params.gamma, static_cast<int>(out.records.size()));
    for (int i = 0; i < passes; ++i) {
        SubproblemRecord& rec = out.records[i];
        if (out.incumbent && rounded_bound(rec.lp_value) >= out.incumbent->value) continue;
        MipResult res = solve_mip(rec.crit.model, MipOptions{cutoff_of(out.incumbent)});
        ++out.stats.crit2_solves;
        if (res.status == MipStatus::Optimal) {
            std::vector<std::uint8_t> x_hat = extract_x(rec.crit, res);
            KpEval eval = follower_response(sorted, x_hat);
            if (!out.incumbent || eval.value < out.incumbent->value)
                take_incumbent(out.incumbent, std::move(x_hat), std::move(eval.y),
                               eval.value, params);
        } else if (res.status != MipStatus::Cutoff && res.status != MipStatus::Infeasible) {
            engine_failure(res.status, "CRIT_2 heuristic pass");
        }
        if ((out.timed_out = deadline.expired())) return out;
    }
    return out;
}

}  // namespace

SolverParams small_preset() {
    SolverParams p;
    p.tuples = TupleGenParams{100, 100, 10, 150};
    p.gamma = 2;
    return p;
}

SolverParams large_preset() {
    SolverParams p;
    p.tuples = TupleGenParams{500, 500, 20, 1000};
    p.gamma = 5;
    return p;
}

Step1Result step1(const Instance& sorted, const SolverParams& params) {
    return step1_impl(sorted, params, Deadline{std::chrono::steady_clock::now(),
                                               params.time_limit_s});
}

int fix_by_reduced_costs(SubproblemRecord& record, std::int64_t z_star) {
    const LpSolution& lp = record.lp;
    const double gap = static_cast<double>(z_star) - record.lp_value;
    LinearModel& model = record.crit.model;
    int fixed = 0;
    for (int j = 0; j < model.num_vars(); ++j) {
        if (model.var(j).kind != VarKind::Binary || model.var(j).fixed) continue;
        if (lp.var_status[j] == VarStatus::Basic) continue;
        if (std::abs(lp.reduced_costs[j]) >= gap - 1e-9) {
            model.fix_variable(j, std::round(lp.values[j]));
            ++fixed;
        }
    }
    return fixed;
}

void add_cuts(CritModel& crit, const std::vector<std::uint8_t>& x_bar,
              const std::vector<std::uint8_t>& y_bar) {
    // No-good on x_bar: flip at least one coordinate.
    Row no_good{{}, Relation::GreaterEq, 1.0};
    for (std::size_t i = 0; i < x_bar.size(); ++i) {
        if (x_bar[i]) {
            no_good.terms.emplace_back(crit.x_vars[i], -1.0);
            no_good.rhs -= 1.0;
        } else {
            no_good.terms.emplace_back(crit.x_vars[i], 1.0);
        }
    }
    // Interdict at least one item the follower picked. Empty y_bar gives
    // 0 >= 1: the subproblem is closed, which is right, because an empty
    // best response means the incumbent already reached 0.
    Row interdict{{}, Relation::GreaterEq, 1.0};
    for (std::size_t i = 0; i < y_bar.size(); ++i) {
        if (y_bar[i]) interdict.terms.emplace_back(crit.x_vars[i], 1.0);
    }
    crit.model.add_row(std::move(no_good));
    crit.model.add_row(std::move(interdict));
}

bool solve_subproblem(const Instance& sorted, SubproblemRecord& record,
                      std::optional<Incumbent>& incumbent, const SolverParams& params,
                      SolveStats& stats, const Deadline& deadline) {
    std::int64_t rounds = 0;
    while (true) {
        if (deadline.expired()) return false;
        MipResult res = solve_mip(record.crit.model, MipOptions{cutoff_of(incumbent)});
        ++stats.crit2_solves;
        if (res.status == MipStatus::Cutoff || res.status == MipStatus::Infeasible) {
            record.status = SubproblemRecord::Status::Exhausted;
            break;
        }
        if (res.status != MipStatus::Optimal) engine_failure(res.status, "CRIT_2 step 2");

        std::vector<std::uint8_t> x_bar = extract_x(record.crit, res);
        KpEval eval = follower_response(sorted, x_bar);
        if (!incumbent || eval.value < incumbent->value)
            take_incumbent(incumbent, x_bar, eval.y, eval.value, params);
        add_cuts(record.crit, x_bar, eval.y);
        ++stats.cut_rounds;
        ++rounds;
    }
    stats.max_cut_rounds_single = std::max(stats.max_cut_rounds_single, rounds);
    return true;
}

BilevelSolution solve(const Instance& inst, const SolverParams& params) {
    const Deadline deadline{std::chrono::steady_clock::now(), params.time_limit_s};

    auto problems = validate_assumptions(inst);
    if (!problems.empty()) {
        std::string what = "invalid instance:";
        for (const auto& p : problems) what += " [" + p + "]";
        throw ValidationError(what);
    }
    auto [sorted, perm] = sort_by_efficiency(inst);

    Step1Result s1 = step1_impl(sorted, params, deadline);
    SolveStats stats = s1.stats;
    std::optional<Incumbent> incumbent = std::move(s1.incumbent);
    bool timed_out = s1.timed_out;
    bool proven = !timed_out;

    if (!s1.certified && !timed_out) {
        for (SubproblemRecord& rec : s1.records) {
            if (incumbent && rounded_bound(rec.lp_value) >= incumbent->value) {
                rec.status = SubproblemRecord::Status::Pruned;
                break;  // records are sorted: everything after is prunable too
            }
            ++stats.step2_subproblems;
            stats.entered_step2 = true;
            if (params.reduced_cost_fixing && incumbent)
                fix_by_reduced_costs(rec, incumbent->value);
            if (!solve_subproblem(sorted, rec, incumbent, params, stats, deadline)) {
                timed_out = true;
                break;
            }
            if (deadline.expired()) {
                timed_out = true;
                break;
            }
        }
        proven = !timed_out;
    }

    BilevelSolution out;
    out.stats = stats;
    out.stats.wall_time_s = deadline.elapsed_s();
    if (incumbent) {
        out.has_solution = true;
        out.value = incumbent->value;
        out.proven_optimal = proven;
        out.x.assign(inst.n, 0);
        out.y.assign(inst.n, 0);
        for (int orig = 0; orig < inst.n; ++orig) {
            out.x[orig] = incumbent->x[perm.to_sorted[orig]];
            out.y[orig] = incumbent->y[perm.to_sorted[orig]];
        }
    }
    return out;
}

}  // namespace bkp
