#include "instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace bkp {

std::int64_t Instance::total_profit() const {
    return std::accumulate(profit.begin(), profit.end(), std::int64_t{0});
}

std::int64_t Instance::total_weight() const {
    return std::accumulate(weight.begin(), weight.end(), std::int64_t{0});
}

std::int64_t Instance::total_leader_weight() const {
    return std::accumulate(leader_weight.begin(), leader_weight.end(), std::int64_t{0});
}

std::vector<std::string> validate_assumptions(const Instance& inst) {
    std::vector<std::string> report;
    auto item = [](const char* what, int i) {
        return std::string(what) + "_" + std::to_string(i + 1);
    };
    if (inst.n <= 0 || static_cast<int>(inst.profit.size()) != inst.n ||
        static_cast<int>(inst.weight.size()) != inst.n ||
        static_cast<int>(inst.leader_weight.size()) != inst.n) {
        report.push_back("item arrays inconsistent with n");
        return report;
    }
    for (int i = 0; i < inst.n; ++i) {
        if (inst.profit[i] < 1) report.push_back(item("p", i) + " >= 1 violated");
        if (inst.weight[i] < 1) report.push_back(item("w", i) + " >= 1 violated");
        if (inst.leader_weight[i] < 1) report.push_back(item("v", i) + " >= 1 violated");
        if (inst.leader_weight[i] >= inst.cap_leader)
            report.push_back(item("v", i) + " < C_u violated");
        if (inst.weight[i] >= inst.cap_follower)
            report.push_back(item("w", i) + " < C_l violated");
    }
    if (inst.total_leader_weight() <= inst.cap_leader)
        report.push_back("sum(v_i) > C_u violated");
    if (inst.total_weight() <= inst.cap_follower)
        report.push_back("sum(w_i) > C_l violated");
    return report;
}

bool is_efficiency_sorted(const Instance& inst) {
    for (int i = 0; i + 1 < inst.n; ++i) {
        if (inst.profit[i] * inst.weight[i + 1] < inst.profit[i + 1] * inst.weight[i])
            return false;
    }
    return true;
}

std::vector<std::string> validate(const Instance& inst) {
    std::vector<std::string> report = validate_assumptions(inst);
    if (static_cast<int>(inst.profit.size()) == inst.n && !is_efficiency_sorted(inst))
        report.push_back("efficiency order violated");
    return report;
}

std::pair<Instance, Permutation> sort_by_efficiency(const Instance& inst) {
    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        // p_a/w_a > p_b/w_b without division; equal ratios keep input order.
        return inst.profit[a] * inst.weight[b] > inst.profit[b] * inst.weight[a];
    });

    Instance out = inst;
    Permutation perm;
    perm.to_original = order;
    perm.to_sorted.assign(inst.n, 0);
    for (int pos = 0; pos < inst.n; ++pos) {
        int src = order[pos];
        out.profit[pos] = inst.profit[src];
        out.weight[pos] = inst.weight[src];
        out.leader_weight[pos] = inst.leader_weight[src];
        perm.to_sorted[src] = pos;
    }
    return {std::move(out), std::move(perm)};
}

namespace {

std::vector<std::int64_t> parse_fields(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::int64_t> fields;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError("not an integer: '" + tok + "'");
        fields.push_back(v);
    }
    return fields;
}

}  // namespace

Instance read_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        }
        throw ParseError(std::string("unexpected end of input: missing ") + what);
    };

    Instance inst;
    next_line("item count");
    {
        auto f = parse_fields(line);
        if (f.size() != 1) throw ParseError("line 1: expected item count");
        if (f[0] < 1) throw ParseError("line 1: non-positive item count");
        inst.n = static_cast<int>(f[0]);
    }
    next_line("capacities");
    {
        auto f = parse_fields(line);
        if (f.size() != 2) throw ParseError("line 2: expected 'C_u C_l'");
        inst.cap_leader = f[0];
        inst.cap_follower = f[1];
    }
    for (int i = 0; i < inst.n; ++i) {
        std::string row = "row " + std::to_string(i + 1);
        try {
            next_line("item row");
        } catch (const ParseError&) {
            throw ParseError(row + ": missing (expected " + std::to_string(inst.n) +
                             " item rows)");
        }
        auto f = parse_fields(line);
        if (f.size() != 3) throw ParseError(row + ": expected 3 fields");
        if (f[0] < 1 || f[1] < 1 || f[2] < 1)
            throw ParseError(row + ": non-positive datum");
        inst.profit.push_back(f[0]);
        inst.weight.push_back(f[1]);
        inst.leader_weight.push_back(f[2]);
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw ParseError("trailing data after item rows");
    }
    return inst;
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.n << '\n' << inst.cap_leader << ' ' << inst.cap_follower << '\n';
    for (int i = 0; i < inst.n; ++i) {
        out << inst.profit[i] << ' ' << inst.weight[i] << ' ' << inst.leader_weight[i]
            << '\n';
    }
    return out.str();
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_instance(buf.str());
}

void write_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << write_instance(inst);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bkp
