// Command line front end: generate instances, solve them, cross-check with
// the exhaustive reference, and run benchmark sweeps. Talks to the solver
// exclusively through the public C interface.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkp/bkp.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kOracleLimit = 20;

struct ParamFlags {
    std::string preset = "small";
    std::optional<int> alpha, beta, delta, mu, gamma;
    std::optional<double> time_limit;

    bkp_params resolve() const {
        bkp_params p;
        if (preset == "large")
            bkp_params_large(&p);
        else
            bkp_params_small(&p);
        if (alpha) p.alpha = *alpha;
        if (beta) p.beta = *beta;
        if (delta) p.delta = *delta;
        if (mu) p.mu = *mu;
        if (gamma) p.gamma = *gamma;
        if (time_limit) p.time_limit_s = *time_limit;
        return p;
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
    cmd->add_option("--preset", flags.preset, "Parameter preset")
        ->check(CLI::IsMember({"small", "large"}))
        ->capture_default_str();
    cmd->add_option("--alpha", flags.alpha, "Max backward sets");
    cmd->add_option("--beta", flags.beta, "Max forward sets");
    cmd->add_option("--delta", flags.delta, "Core half-width");
    cmd->add_option("--mu", flags.mu, "Max tuple constraints");
    cmd->add_option("--gamma", flags.gamma, "Heuristic subproblem count");
    cmd->add_option("--time-limit", flags.time_limit, "Wall clock limit in seconds");
}

int complain(const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    return kExitUsage;
}

int complain_api(const char* what) {
    std::cerr << "error: " << what << ": " << bkp_last_error() << '\n';
    return kExitUsage;
}

struct SolutionView {
    bool has_value = false;
    std::int64_t value = 0;
    bool optimal = false;
    std::vector<int32_t> x, y;
    double wall_s = 0.0;
    std::int64_t step2 = 0, crit2 = 0, cuts = 0;
    bool entered_step2 = false;
};

SolutionView view_of(const bkp_solution* sol, int32_t n) {
    SolutionView v;
    v.has_value = bkp_solution_has_value(sol) != 0;
    if (v.has_value) {
        v.value = bkp_solution_value(sol);
        v.x.resize(n);
        v.y.resize(n);
        bkp_solution_vectors(sol, v.x.data(), v.y.data(), n);
    }
    v.optimal = bkp_solution_proven_optimal(sol) != 0;
    v.wall_s = bkp_solution_wall_time_s(sol);
    v.step2 = bkp_solution_step2_subproblems(sol);
    v.crit2 = bkp_solution_crit2_solves(sol);
    v.cuts = bkp_solution_cut_rounds(sol);
    v.entered_step2 = bkp_solution_entered_step2(sol) != 0;
    return v;
}

json to_json(const SolutionView& v) {
    json j;
    j["value"] = v.has_value ? json(v.value) : json(nullptr);
    j["optimal"] = v.optimal;
    j["x"] = v.x;
    j["y"] = v.y;
    j["stats"] = {{"wall_time_s", v.wall_s},
                  {"step2_subproblems", v.step2},
                  {"crit2_solved", v.crit2},
                  {"cut_rounds", v.cuts},
                  {"entered_step2", v.entered_step2}};
    return j;
}

void print_human(const SolutionView& v) {
    if (v.has_value)
        std::cout << "value: " << v.value << '\n';
    else
        std::cout << "value: none\n";
    std::cout << "optimal: " << (v.optimal ? "yes" : "no") << '\n';
    auto line = [](const char* name, const std::vector<int32_t>& vec) {
        std::cout << name << ":";
        for (int32_t b : vec) std::cout << ' ' << b;
        std::cout << '\n';
    };
    line("x", v.x);
    line("y", v.y);
    std::cout << "wall_time_s: " << v.wall_s << '\n'
              << "step2_subproblems: " << v.step2 << '\n'
              << "crit2_solved: " << v.crit2 << '\n'
              << "cut_rounds: " << v.cuts << '\n';
}

int cmd_generate(int n, int ins, std::uint64_t seed, std::string out_path) {
    bkp_instance* inst = nullptr;
    if (bkp_instance_generate(n, ins, seed, &inst) != BKP_OK)
        return complain_api("generate");
    if (out_path.empty())
        out_path = "bkp_n" + std::to_string(n) + "_ins" + std::to_string(ins) + "_s" +
                   std::to_string(seed) + ".txt";
    const int rc = bkp_instance_save(inst, out_path.c_str());
    bkp_instance_free(inst);
    if (rc != BKP_OK) return complain_api("save");
    std::cout << out_path << '\n';
    return kExitOk;
}

int cmd_solve(const std::string& path, const ParamFlags& flags, bool as_json) {
    bkp_instance* inst = nullptr;
    if (bkp_instance_load(path.c_str(), &inst) != BKP_OK) return complain_api("load");
    const bkp_params params = flags.resolve();
    bkp_solution* sol = nullptr;
    const int rc = bkp_solve(inst, &params, &sol);
    const int32_t n = bkp_instance_n(inst);
    bkp_instance_free(inst);
    if (rc != BKP_OK) return complain_api("solve");
    const SolutionView v = view_of(sol, n);
    bkp_solution_free(sol);
    if (as_json)
        std::cout << to_json(v).dump() << '\n';
    else
        print_human(v);
    return v.optimal ? kExitOk : kExitTimeLimit;
}

int cmd_oracle(const std::string& path, bool as_json) {
    bkp_instance* inst = nullptr;
    if (bkp_instance_load(path.c_str(), &inst) != BKP_OK) return complain_api("load");
    bkp_solution* sol = nullptr;
    const int rc = bkp_oracle(inst, kOracleLimit, &sol);
    const int32_t n = bkp_instance_n(inst);
    bkp_instance_free(inst);
    if (rc != BKP_OK) return complain_api("oracle");
    const SolutionView v = view_of(sol, n);
    bkp_solution_free(sol);
    if (as_json)
        std::cout << to_json(v).dump() << '\n';
    else
        print_human(v);
    return kExitOk;
}

struct BenchRow {
    std::string path;
    int64_t n = 0, ins = 0;
    std::uint64_t seed = 0;
    bool failed = false;
    SolutionView sol;
};

void parse_name_fields(const std::string& path, BenchRow& row) {
    static const std::regex pat(R"(bkp_n(\d+)_ins(\d+)_s(\d+)\.txt$)");
    std::smatch m;
    if (std::regex_search(path, m, pat)) {
        row.ins = std::stoll(m[2]);
        row.seed = std::stoull(m[3]);
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

int cmd_bench(const std::string& path, const ParamFlags& flags, const std::string& csv_path,
              int jobs) {
    std::vector<std::string> files;
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.path().extension() == ".txt") files.push_back(entry.path().string());
        }
    } else if (fs::exists(path, ec)) {
        files.push_back(path);
    } else {
        return complain("no such instance file or directory: " + path);
    }

    const bkp_params params = flags.resolve();
    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            BenchRow& row = rows[i];
            row.path = files[i];
            parse_name_fields(files[i], row);
            bkp_instance* inst = nullptr;
            if (bkp_instance_load(files[i].c_str(), &inst) != BKP_OK) {
                row.failed = true;
                std::cerr << "error: load " << files[i] << ": " << bkp_last_error() << '\n';
                continue;
            }
            row.n = bkp_instance_n(inst);
            bkp_solution* sol = nullptr;
            if (bkp_solve(inst, &params, &sol) != BKP_OK) {
                row.failed = true;
                std::cerr << "error: solve " << files[i] << ": " << bkp_last_error() << '\n';
                bkp_instance_free(inst);
                continue;
            }
            row.sol = view_of(sol, static_cast<int32_t>(row.n));
            bkp_solution_free(sol);
            bkp_instance_free(inst);
        }
    };
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.n, a.ins, a.seed, a.path) < std::tie(b.n, b.ins, b.seed, b.path);
    });

    std::ostringstream csv;
    csv << "kind,n,ins,seed,value,time_s,step2_subproblems,crit2_solved,optimal,"
           "count,count_optimal,avg_time_s,max_time_s,avg_step2,max_step2,avg_crit2,"
           "max_crit2\n";
    for (const BenchRow& r : rows) {
        csv << "row," << r.n << ',' << r.ins << ',' << r.seed << ',';
        if (!r.failed && r.sol.has_value) csv << r.sol.value;
        csv << ',' << (r.failed ? "" : fmt(r.sol.wall_s)) << ',';
        if (!r.failed) csv << r.sol.step2;
        csv << ',';
        if (!r.failed) csv << r.sol.crit2;
        csv << ',' << (!r.failed && r.sol.optimal ? 1 : 0) << ",,,,,,,,\n";
    }

    // Aggregates per (n, ins), in row order.
    for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i;
        long count = 0, optimal = 0;
        double sum_t = 0, max_t = 0, sum_s2 = 0, sum_c2 = 0;
        std::int64_t max_s2 = 0, max_c2 = 0;
        while (j < rows.size() && rows[j].n == rows[i].n && rows[j].ins == rows[i].ins) {
            const BenchRow& r = rows[j];
            ++count;
            if (!r.failed) {
                optimal += r.sol.optimal ? 1 : 0;
                sum_t += r.sol.wall_s;
                max_t = std::max(max_t, r.sol.wall_s);
                sum_s2 += static_cast<double>(r.sol.step2);
                max_s2 = std::max(max_s2, r.sol.step2);
                sum_c2 += static_cast<double>(r.sol.crit2);
                max_c2 = std::max(max_c2, r.sol.crit2);
            }
            ++j;
        }
        csv << "agg," << rows[i].n << ',' << rows[i].ins << ",,,,,,," << count << ','
            << optimal << ',' << fmt(count ? sum_t / count : 0) << ',' << fmt(max_t) << ','
            << fmt(count ? sum_s2 / count : 0) << ',' << max_s2 << ','
            << fmt(count ? sum_c2 / count : 0) << ',' << max_c2 << '\n';
        i = j;
    }

    if (csv_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) return complain("cannot write csv: " + csv_path);
        out << csv.str();
    }

    bool all_proven = true;
    for (const BenchRow& r : rows) all_proven = all_proven && !r.failed && r.sol.optimal;
    return all_proven ? kExitOk : kExitTimeLimit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for the bilevel interdiction knapsack problem"};
    app.require_subcommand(1);

    int n = 0, ins = 1;
    std::uint64_t seed = 0;
    std::string out_path, inst_path, csv_path;
    bool as_json = false;
    int jobs = 1;
    ParamFlags solve_flags, bench_flags;

    CLI::App* gen = app.add_subcommand("generate", "Write a reproducible random instance");
    gen->add_option("--n", n, "Item count")->required()->check(CLI::Range(2, 1000000));
    gen->add_option("--ins", ins, "Instance class")->required()->check(CLI::Range(1, 10));
    gen->add_option("--seed", seed, "Random seed")->required();
    gen->add_option("--out", out_path, "Output path (default: conventional name)");

    CLI::App* solve = app.add_subcommand("solve", "Solve an instance exactly");
    solve->add_option("path", inst_path, "Instance file")->required();
    add_param_flags(solve, solve_flags);
    solve->add_flag("--json", as_json, "Machine readable report");

    CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive reference solve (n <= 20)");
    oracle->add_option("path", inst_path, "Instance file")->required();
    oracle->add_flag("--json", as_json, "Machine readable report");

    CLI::App* bench = app.add_subcommand("bench", "Solve a directory of instances");
    bench->add_option("path", inst_path, "Instance file or directory")->required();
    add_param_flags(bench, bench_flags);
    bench->add_option("--csv", csv_path, "CSV output path (default: stdout)");
    bench->add_option("--jobs", jobs, "Parallel workers")
        ->envname("BKP_JOBS")
        ->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(n, ins, seed, out_path);
        if (solve->parsed()) return cmd_solve(inst_path, solve_flags, as_json);
        if (oracle->parsed()) return cmd_oracle(inst_path, as_json);
        if (bench->parsed()) return cmd_bench(inst_path, bench_flags, csv_path, jobs);
    } catch (const std::exception& e) {
        return complain(e.what());
    }
    return kExitUsage;
}
