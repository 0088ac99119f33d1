#include "knapsack.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkp {

std::vector<int> follower_set(const Instance& inst, const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != inst.n)
        throw std::invalid_argument("follower_set: x has wrong length");
    std::vector<int> items;
    for (int i = 0; i < inst.n; ++i) {
        if (!x[i]) items.push_back(i);
    }
    return items;
}

KpResult solve_kp(const Instance& inst, const std::vector<int>& items,
                  std::int64_t capacity) {
    if (capacity < 0) throw std::invalid_argument("solve_kp: negative capacity");
    KpResult res;
    if (items.empty() || capacity == 0) return res;

    const int m = static_cast<int>(items.size());
    const std::size_t ncap = static_cast<std::size_t>(capacity) + 1;
    std::vector<std::int64_t> best(ncap, 0);

    // One bit per (item, capacity): was the item taken to reach best[cap] at
    // its own stage. Keeps the traceback without an n*C table of values.
    const std::size_t words = (ncap + 63) / 64;
    std::vector<std::uint64_t> taken(static_cast<std::size_t>(m) * words, 0);

    for (int t = 0; t < m; ++t) {
        const std::int64_t w = inst.weight[items[t]];
        const std::int64_t p = inst.profit[items[t]];
        if (w > capacity) continue;
        std::uint64_t* row = taken.data() + static_cast<std::size_t>(t) * words;
        for (std::int64_t cap = capacity; cap >= w; --cap) {
            const std::int64_t cand = best[cap - w] + p;
            if (cand > best[cap]) {
                best[cap] = cand;
                row[cap >> 6] |= 1ULL << (cap & 63);
            }
        }
    }

    res.value = best[capacity];
    std::int64_t cap = capacity;
    for (int t = m - 1; t >= 0; --t) {
        const std::uint64_t* row = taken.data() + static_cast<std::size_t>(t) * words;
        if (row[cap >> 6] >> (cap & 63) & 1) {
            res.selection.push_back(items[t]);
            cap -= inst.weight[items[t]];
        }
    }
    std::reverse(res.selection.begin(), res.selection.end());
    return res;
}

SplitInfo split_info(const Instance& inst, const std::vector<int>& items,
                     std::int64_t capacity) {
    SplitInfo info;
    std::int64_t total = 0;
    for (int idx : items) total += inst.weight[idx];
    if (total <= capacity) {
        // everything fits: no critical item, the "split solution" is the set
        for (int idx : items) info.split_profit += inst.profit[idx];
        info.split_weight = total;
        info.residual = capacity - total;
        return info;
    }
    std::int64_t acc_w = 0, acc_p = 0;
    for (int idx : items) {
        if (acc_w + inst.weight[idx] >= capacity) {
            // the greedy fill cannot move past idx: it is the critical item
            info.has_critical = true;
            info.critical = idx;
            break;
        }
        acc_w += inst.weight[idx];
        acc_p += inst.profit[idx];
    }
    info.split_weight = acc_w;
    info.split_profit = acc_p;
    info.residual = capacity - acc_w;
    return info;
}

}  // namespace bkp
