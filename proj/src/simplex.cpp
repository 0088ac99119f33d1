#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bkp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFeasTol = 1e-7;
constexpr double kDualTol = 1e-7;
constexpr double kPivotTol = 1e-8;

}  // namespace

DenseSimplex::DenseSimplex(const LinearModel& model) {
    m_ = model.num_rows();
    ns_ = model.num_vars();
    dense_.assign(static_cast<std::size_t>(m_) * ns_, 0.0);
    rel_.resize(m_);
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) {
        const Row& r = model.row(i);
        rel_[i] = r.rel;
        rhs_[i] = r.rhs;
        double* arow = dense_.data() + static_cast<std::size_t>(i) * ns_;
        for (const auto& [v, c] : r.terms) arow[v] += c;
        // equilibrate: unit max-abs rows keep the eliminations well scaled
        double amax = 0.0;
        for (int j = 0; j < ns_; ++j) amax = std::max(amax, std::abs(arow[j]));
        if (amax > 0.0) {
            const double s = 1.0 / amax;
            for (int j = 0; j < ns_; ++j) arow[j] *= s;
            rhs_[i] *= s;
        }
    }
    obj_.resize(ns_);
    for (int j = 0; j < ns_; ++j) obj_[j] = model.objective_coeff(j);
    offset_ = model.objective_offset();
}

LpSolution DenseSimplex::solve(const std::vector<double>& lower,
                               const std::vector<double>& upper) {
    LpSolution sol = run(lower, upper, false);
    if (sol.status == LpStatus::NumericalFailure) sol = run(lower, upper, true);
    return sol;
}

LpSolution DenseSimplex::run(const std::vector<double>& lower,
                             const std::vector<double>& upper, bool bland_from_start) {
    const int m = m_, ns = ns_;

    // First pass: initial nonbasic values for structurals, row activities,
    // and which rows need an artificial column.
    std::vector<double>& xval = xval_;
    xval.resize(ns);
    for (int j = 0; j < ns; ++j) xval[j] = std::isfinite(lower[j]) ? lower[j] : upper[j];

    std::vector<double>& act = act_;
    act.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        const double* arow = dense_.data() + static_cast<std::size_t>(i) * ns;
        double a = 0.0;
        for (int j = 0; j < ns; ++j) a += arow[j] * xval[j];
        act[i] = a;
    }

    auto slack_lo = [&](int i) { return rel_[i] == Relation::GreaterEq ? -kInf : 0.0; };
    auto slack_up = [&](int i) { return rel_[i] == Relation::LessEq ? kInf : 0.0; };

    std::vector<int>& art_of_row = art_of_row_;
    art_of_row.assign(m, -1);
    int nart = 0;
    for (int i = 0; i < m; ++i) {
        const double s = rhs_[i] - act[i];
        if (s < slack_lo(i) - kFeasTol || s > slack_up(i) + kFeasTol) art_of_row[i] = nart++;
    }

    const int ncols = ns + m + nart;
    std::vector<double>& tab = tab_;
    tab.assign(static_cast<std::size_t>(m) * ncols, 0.0);
    std::vector<double>& lo = lo_;
    std::vector<double>& up = up_;
    lo.resize(ncols);
    up.resize(ncols);
    std::vector<VarStatus>& vstat = vstat_;
    vstat.assign(ncols, VarStatus::NonbasicLower);
    std::vector<int>& basis = basis_;
    basis.resize(m);
    std::vector<double>& beta = beta_;
    beta.resize(m);

    for (int j = 0; j < ns; ++j) {
        lo[j] = lower[j];
        up[j] = upper[j];
        vstat[j] = std::isfinite(lower[j]) ? VarStatus::NonbasicLower : VarStatus::NonbasicUpper;
    }
    for (int i = 0; i < m; ++i) {
        double* trow = tab.data() + static_cast<std::size_t>(i) * ncols;
        const double* arow = dense_.data() + static_cast<std::size_t>(i) * ns;
        std::copy(arow, arow + ns, trow);
        const int scol = ns + i;
        trow[scol] = 1.0;
        lo[scol] = slack_lo(i);
        up[scol] = slack_up(i);
        vstat[scol] = rel_[i] == Relation::GreaterEq ? VarStatus::NonbasicUpper
                                                     : VarStatus::NonbasicLower;
        const double s = rhs_[i] - act[i];
        if (art_of_row[i] < 0) {
            basis[i] = scol;
            vstat[scol] = VarStatus::Basic;
            beta[i] = s;
        } else {
            const int acol = ns + m + art_of_row[i];
            if (s < 0) {
                // negate the row so the artificial column is +1 and the
                // tableau stays an identity on the basis
                for (int j = 0; j <= scol; ++j) trow[j] = -trow[j];
            }
            trow[acol] = 1.0;
            lo[acol] = 0.0;
            up[acol] = kInf;
            basis[i] = acol;
            vstat[acol] = VarStatus::Basic;
            beta[i] = std::abs(s);
        }
    }

    auto bound_value = [&](int j) {
        return vstat[j] == VarStatus::NonbasicUpper ? up[j] : lo[j];
    };

    std::vector<double>& cost = cost_;
    cost.assign(ncols, 0.0);
    std::vector<double>& dvec = dvec_;
    dvec.assign(ncols, 0.0);

    auto rebuild_dvec = [&]() {
        dvec = cost;
        for (int i = 0; i < m; ++i) {
            const double cb = cost[basis[i]];
            if (cb == 0.0) continue;
            const double* trow = tab.data() + static_cast<std::size_t>(i) * ncols;
            for (int j = 0; j < ncols; ++j) dvec[j] -= cb * trow[j];
        }
        for (int i = 0; i < m; ++i) dvec[basis[i]] = 0.0;
    };

    LpSolution sol;
    sol.status = LpStatus::NumericalFailure;

    bool bland = bland_from_start;
    int stall = 0;
    const int stall_limit = 200 + m;
    long iter = 0;
    const long iter_limit = 5000L + 40L * (static_cast<long>(m) + ns);

    // Runs the simplex loop for the current cost vector. Returns 0 on
    // optimality, 1 on unboundedness, 2 on iteration trouble.
    auto iterate = [&](bool phase1) -> int {
        while (true) {
            if (++iter > iter_limit) return 2;

            int q = -1, dir = 0;
            double best_viol = kDualTol;
            for (int j = 0; j < ncols; ++j) {
                if (vstat[j] == VarStatus::Basic || lo[j] == up[j]) continue;
                const double d = dvec[j];
                double viol = 0.0;
                int dj = 0;
                if (vstat[j] == VarStatus::NonbasicLower && d < -kDualTol) {
                    viol = -d;
                    dj = 1;
                } else if (vstat[j] == VarStatus::NonbasicUpper && d > kDualTol) {
                    viol = d;
                    dj = -1;
                } else {
                    continue;
                }
                if (bland) {
                    q = j;
                    dir = dj;
                    break;
                }
                if (viol > best_viol) {
                    best_viol = viol;
                    q = j;
                    dir = dj;
                }
            }
            if (q < 0) return 0;  // phase optimum

            // Ratio test: how far can x_q move off its bound.
            double delta = kInf;
            if (std::isfinite(lo[q]) && std::isfinite(up[q])) delta = up[q] - lo[q];
            int leave = -1;
            bool leave_to_lower = true;
            double leave_piv = 0.0;
            for (int i = 0; i < m; ++i) {
                const double y = tab[static_cast<std::size_t>(i) * ncols + q];
                if (std::abs(y) <= kPivotTol) continue;
                const double g = dir * y;
                const int B = basis[i];
                double room, step;
                bool to_lower;
                if (g > 0) {  // basic variable decreases
                    if (!std::isfinite(lo[B])) continue;
                    room = beta[i] - lo[B];
                    if (room < 0) room = 0;
                    step = room / g;
                    to_lower = true;
                } else {  // basic variable increases
                    if (!std::isfinite(up[B])) continue;
                    room = up[B] - beta[i];
                    if (room < 0) room = 0;
                    step = room / -g;
                    to_lower = false;
                }
                bool better;
                if (step < delta - 1e-12) {
                    better = true;
                } else if (step < delta + 1e-12 && leave >= 0) {
                    // tie: prefer a larger pivot for stability, or the lowest
                    // basis index under Bland's rule
                    better = bland ? basis[i] < basis[leave]
                                   : std::abs(y) > std::abs(leave_piv);
                } else {
                    better = false;
                }
                if (better) {
                    delta = step;
                    leave = i;
                    leave_to_lower = to_lower;
                    leave_piv = y;
                }
            }

            if (!std::isfinite(delta)) return phase1 ? 2 : 1;

            if (delta <= 1e-11) {
                if (++stall > stall_limit) bland = true;
            } else {
                stall = 0;
            }

            if (leave < 0) {
                // Bound flip: x_q crosses to its other bound, no basis change.
                for (int i = 0; i < m; ++i)
                    beta[i] -= dir * delta * tab[static_cast<std::size_t>(i) * ncols + q];
                vstat[q] = vstat[q] == VarStatus::NonbasicLower ? VarStatus::NonbasicUpper
                                                                : VarStatus::NonbasicLower;
                continue;
            }

            const double enter_val = bound_value(q) + dir * delta;
            for (int i = 0; i < m; ++i) {
                if (i == leave) continue;
                beta[i] -= dir * delta * tab[static_cast<std::size_t>(i) * ncols + q];
            }
            const int L = basis[leave];
            vstat[L] = leave_to_lower ? VarStatus::NonbasicLower : VarStatus::NonbasicUpper;
            if (phase1 && L >= ns + m) lo[L] = up[L] = 0.0;  // artificial never returns
            basis[leave] = q;
            vstat[q] = VarStatus::Basic;
            beta[leave] = enter_val;

            double* prow = tab.data() + static_cast<std::size_t>(leave) * ncols;
            const double piv = prow[q];
            const double inv = 1.0 / piv;
            for (int j = 0; j < ncols; ++j) prow[j] *= inv;
            prow[q] = 1.0;
            for (int i = 0; i < m; ++i) {
                if (i == leave) continue;
                double* trow = tab.data() + static_cast<std::size_t>(i) * ncols;
                const double f = trow[q];
                if (std::abs(f) <= 1e-13) {
                    trow[q] = 0.0;
                    continue;
                }
                for (int j = 0; j < ncols; ++j) trow[j] -= f * prow[j];
                trow[q] = 0.0;
            }
            const double dq = dvec[q];
            if (std::abs(dq) > 0.0) {
                for (int j = 0; j < ncols; ++j) dvec[j] -= dq * prow[j];
            }
            dvec[q] = 0.0;
        }
    };

    if (nart > 0) {
        for (int a = 0; a < nart; ++a) cost[ns + m + a] = 1.0;
        rebuild_dvec();
        const int rc = iterate(true);
        if (rc == 2) return sol;
        double infeas = 0.0, rhs_scale = 1.0;
        for (int i = 0; i < m; ++i) {
            if (basis[i] >= ns + m) infeas += beta[i];
            rhs_scale = std::max(rhs_scale, std::abs(rhs_[i]));
        }
        if (infeas > kFeasTol * rhs_scale) {
            sol.status = LpStatus::Infeasible;
            sol.iterations = static_cast<int>(iter);
            return sol;
        }
        // Pivot residual artificials out of the basis where a usable column
        // exists; otherwise the row is redundant and the artificial stays at 0.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < ns + m) continue;
            double* prow = tab.data() + static_cast<std::size_t>(i) * ncols;
            int q = -1;
            for (int j = 0; j < ns + m; ++j) {
                if (vstat[j] != VarStatus::Basic && std::abs(prow[j]) > 1e-6) {
                    q = j;
                    break;
                }
            }
            if (q < 0) continue;
            const int L = basis[i];
            lo[L] = up[L] = 0.0;
            vstat[L] = VarStatus::NonbasicLower;
            basis[i] = q;
            beta[i] = bound_value(q);
            vstat[q] = VarStatus::Basic;
            const double inv = 1.0 / prow[q];
            for (int j = 0; j < ncols; ++j) prow[j] *= inv;
            prow[q] = 1.0;
            for (int r = 0; r < m; ++r) {
                if (r == i) continue;
                double* trow = tab.data() + static_cast<std::size_t>(r) * ncols;
                const double f = trow[q];
                if (std::abs(f) <= 1e-13) {
                    trow[q] = 0.0;
                    continue;
                }
                for (int j = 0; j < ncols; ++j) trow[j] -= f * prow[j];
                trow[q] = 0.0;
            }
        }
        for (int a = 0; a < nart; ++a) {
            lo[ns + m + a] = up[ns + m + a] = 0.0;
            cost[ns + m + a] = 0.0;
        }
    }

    for (int j = 0; j < ns; ++j) cost[j] = obj_[j];
    for (int j = ns; j < ncols; ++j) cost[j] = 0.0;
    rebuild_dvec();
    stall = 0;
    const int rc = iterate(false);
    sol.iterations = static_cast<int>(iter);
    if (rc == 2) return sol;
    if (rc == 1) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    // Extract structural values and verify them against the original rows.
    std::vector<double> x(ns);
    for (int j = 0; j < ns; ++j) x[j] = bound_value(j);
    for (int i = 0; i < m; ++i) {
        if (basis[i] < ns) x[basis[i]] = beta[i];
    }
    for (int j = 0; j < ns; ++j) {
        const double pad = 1e-9 + 1e-9 * std::abs(x[j]);
        if (std::isfinite(lower[j]) && x[j] < lower[j] - kFeasTol - pad) return sol;
        if (std::isfinite(upper[j]) && x[j] > upper[j] + kFeasTol + pad) return sol;
    }
    for (int i = 0; i < m; ++i) {
        const double* arow = dense_.data() + static_cast<std::size_t>(i) * ns;
        double a = 0.0, scale = 1.0 + std::abs(rhs_[i]);
        for (int j = 0; j < ns; ++j) {
            a += arow[j] * x[j];
            scale += std::abs(arow[j] * x[j]);
        }
        const double viol = rel_[i] == Relation::LessEq      ? a - rhs_[i]
                            : rel_[i] == Relation::GreaterEq ? rhs_[i] - a
                                                             : std::abs(a - rhs_[i]);
        if (viol > kFeasTol * scale) return sol;
    }

    rebuild_dvec();

    sol.status = LpStatus::Optimal;
    sol.values = std::move(x);
    sol.objective = offset_;
    sol.reduced_costs.resize(ns);
    sol.var_status.resize(ns);
    for (int j = 0; j < ns; ++j) {
        sol.objective += obj_[j] * sol.values[j];
        sol.reduced_costs[j] = dvec[j];
        sol.var_status[j] = vstat[j];
    }
    return sol;
}

LpSolution solve_lp(const LinearModel& model) {
    if (model.num_vars() == 0) throw std::invalid_argument("solve_lp: model has no variables");
    DenseSimplex solver(model);
    std::vector<double> lo(model.num_vars()), up(model.num_vars());
    for (int j = 0; j < model.num_vars(); ++j) {
        lo[j] = model.lower_bound(j);
        up[j] = model.upper_bound(j);
    }
    return solver.solve(lo, up);
}

}  // namespace bkp
