#include "bound_models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bkp {

LinearModel build_ncr(const Instance& inst) {
    LinearModel m;
    m.objective_integral = true;
    Row cap{{}, Relation::LessEq, static_cast<double>(inst.cap_leader)};
    Row foll{{}, Relation::LessEq,
             static_cast<double>(inst.cap_follower - inst.total_weight())};
    double offset = 0.0;
    for (int i = 0; i < inst.n; ++i) {
        const int x = m.add_binary("x" + std::to_string(i + 1));
        m.set_objective(x, -static_cast<double>(inst.profit[i]));
        offset += static_cast<double>(inst.profit[i]);
        cap.terms.emplace_back(x, static_cast<double>(inst.leader_weight[i]));
        foll.terms.emplace_back(x, -static_cast<double>(inst.weight[i]));
    }
    m.set_objective_offset(offset);
    m.add_row(std::move(cap));
    m.add_row(std::move(foll));
    return m;
}

LinearModel build_lw(const Instance& inst) {
    LinearModel m;
    m.objective_integral = true;
    Row cap{{}, Relation::LessEq, static_cast<double>(inst.cap_leader)};
    for (int i = 0; i < inst.n; ++i) {
        const int x = m.add_binary("x" + std::to_string(i + 1));
        m.set_objective(x, -static_cast<double>(inst.weight[i]));
        cap.terms.emplace_back(x, static_cast<double>(inst.leader_weight[i]));
    }
    m.add_row(std::move(cap));
    return m;
}

std::pair<int, int> critical_range(const Instance& inst, std::int64_t lw_value) {
    int l = inst.n - 1, r = inst.n - 1;
    bool l_found = false, r_found = false;
    std::int64_t prefix = 0;
    for (int i = 0; i < inst.n; ++i) {
        prefix += inst.weight[i];
        if (!l_found && prefix >= inst.cap_follower) {
            l = i;
            l_found = true;
        }
        if (!r_found && prefix >= inst.cap_follower + lw_value) {
            r = i;
            r_found = true;
            break;
        }
    }
    return {l, r};
}

namespace {

CritModel build_crit_base(const Instance& inst, int c) {
    if (c < 0 || c >= inst.n) throw std::invalid_argument("critical item out of range");
    CritModel crit;
    crit.critical = c;
    LinearModel& m = crit.model;
    m.objective_integral = true;

    Row cap{{}, Relation::LessEq, static_cast<double>(inst.cap_leader)};
    std::int64_t prefix_w = 0, prefix_p = 0;
    Row weight_eq{{}, Relation::Eq, 0.0};
    for (int i = 0; i < inst.n; ++i) {
        const int x = m.add_binary("x" + std::to_string(i + 1));
        crit.x_vars.push_back(x);
        cap.terms.emplace_back(x, static_cast<double>(inst.leader_weight[i]));
        if (i < c) {
            m.set_objective(x, -static_cast<double>(inst.profit[i]));
            weight_eq.terms.emplace_back(x, -static_cast<double>(inst.weight[i]));
            prefix_w += inst.weight[i];
            prefix_p += inst.profit[i];
        }
    }
    m.set_objective_offset(static_cast<double>(prefix_p));

    const std::int64_t wc = inst.weight[c];
    Row sos{{}, Relation::Eq, 1.0};
    for (std::int64_t j = 1; j <= wc; ++j) {
        const int k = m.add_binary("k" + std::to_string(j));
        crit.k_vars.push_back(k);
        weight_eq.terms.emplace_back(k, static_cast<double>(j));
        sos.terms.emplace_back(k, 1.0);
    }
    weight_eq.rhs = static_cast<double>(inst.cap_follower - prefix_w);

    m.add_row(std::move(cap));
    m.add_row(std::move(weight_eq));
    m.add_row(std::move(sos));
    m.fix_variable(crit.x_vars[c], 0.0);
    m.sos1_groups.push_back(crit.k_vars);
    return crit;
}

// Subsets of `items` in increasing cardinality, lexicographic by list
// position within each cardinality, starting from the empty set. At most
// `cap` subsets are returned; subsets heavier than max_weight (when >= 0)
// are discarded without being counted or extended (weights are positive, so
// every superset is heavier too).
struct ItemSubset {
    std::vector<int> members;  // positions into the item list
    std::int64_t profit = 0;
    std::int64_t weight = 0;
};

std::vector<ItemSubset> enumerate_subsets(const Instance& inst,
                                          const std::vector<int>& items, int cap,
                                          std::int64_t max_weight) {
    std::vector<ItemSubset> kept;
    if (cap <= 0) return kept;
    kept.push_back(ItemSubset{});  // the empty set comes first
    std::size_t level_begin = 0;
    while (static_cast<int>(kept.size()) < cap) {
        const std::size_t level_end = kept.size();
        if (level_begin == level_end) break;  // previous level empty: done
        for (std::size_t s = level_begin; s < level_end; ++s) {
            const int next_pos = kept[s].members.empty() ? 0 : kept[s].members.back() + 1;
            for (int pos = next_pos; pos < static_cast<int>(items.size()); ++pos) {
                ItemSubset ext = kept[s];
                ext.members.push_back(pos);
                ext.profit += inst.profit[items[pos]];
                ext.weight += inst.weight[items[pos]];
                if (max_weight >= 0 && ext.weight > max_weight) continue;
                kept.push_back(std::move(ext));
                if (static_cast<int>(kept.size()) == cap) return kept;
            }
        }
        level_begin = level_end;
    }
    return kept;
}

}  // namespace

CritModel build_crit1(const Instance& inst, int critical) {
    return build_crit_base(inst, critical);
}

std::vector<TupleConstraint> compute_tuples(const Instance& inst, int critical,
                                            const TupleGenParams& params) {
    const int c = critical;
    const int a = std::max(0, c - params.delta);
    const int b = std::min(c + params.delta, inst.n - 1);

    std::vector<int> backward_items;  // c-1 down to a: nearest items first
    for (int i = c - 1; i >= a; --i) backward_items.push_back(i);
    std::vector<int> forward_items;  // c up to b
    for (int i = c; i <= b; ++i) forward_items.push_back(i);

    std::vector<ItemSubset> backward =
        enumerate_subsets(inst, backward_items, params.alpha, -1);
    std::int64_t w_max = 0;
    for (const auto& s : backward) w_max = std::max(w_max, s.weight);
    std::vector<ItemSubset> forward =
        enumerate_subsets(inst, forward_items, params.beta, w_max);

    std::stable_sort(backward.begin(), backward.end(),
                     [](const ItemSubset& x, const ItemSubset& y) { return x.profit < y.profit; });
    std::stable_sort(forward.begin(), forward.end(),
                     [](const ItemSubset& x, const ItemSubset& y) { return x.profit > y.profit; });

    const std::int64_t wc = inst.weight[c];
    std::vector<TupleConstraint> out;
    std::set<std::vector<int>> seen;
    bool full = false;
    for (const auto& back : backward) {
        if (full) break;
        for (const auto& fwd : forward) {
            if (static_cast<int>(out.size()) >= params.mu) {
                full = true;
                break;
            }
            const std::int64_t p_tau = fwd.profit - back.profit;
            const std::int64_t w_tau = fwd.weight - back.weight;
            if (p_tau <= 0 || w_tau > wc) continue;
            TupleConstraint t;
            t.profit_delta = p_tau;
            t.weight_delta = w_tau;
            for (int pos : back.members) t.members.push_back(backward_items[pos]);
            for (int pos : fwd.members) t.members.push_back(forward_items[pos]);
            std::sort(t.members.begin(), t.members.end());
            if (t.members.empty() || !seen.insert(t.members).second) continue;
            out.push_back(std::move(t));
        }
    }

    // The critical item alone covers the residual-equals-w_c case.
    if (!seen.count({c})) {
        out.push_back(TupleConstraint{{c}, inst.profit[c], wc});
    }
    return out;
}

CritModel build_crit2(const Instance& inst, int critical,
                      const std::vector<TupleConstraint>& tuples) {
    CritModel crit = build_crit_base(inst, critical);
    LinearModel& m = crit.model;
    const int pi = m.add_continuous("pi");
    crit.pi_var = pi;
    m.set_objective(pi, 1.0);

    const std::int64_t wc = inst.weight[critical];
    for (const auto& t : tuples) {
        // pi - p_tau * sum_{j = max(1, w_tau)}^{w_c} k_j + p_tau * sum_{i in tau} x_i >= 0
        Row row{{}, Relation::GreaterEq, 0.0};
        row.terms.emplace_back(pi, 1.0);
        const std::int64_t j_from = std::max<std::int64_t>(1, t.weight_delta);
        for (std::int64_t j = j_from; j <= wc; ++j)
            row.terms.emplace_back(crit.k_vars[j - 1], -static_cast<double>(t.profit_delta));
        for (int i : t.members)
            row.terms.emplace_back(crit.x_vars[i], static_cast<double>(t.profit_delta));
        m.add_row(std::move(row));
    }
    crit.tuples = tuples;
    return crit;
}

}  // namespace bkp
