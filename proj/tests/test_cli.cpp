// Drives the installed CLI binary end to end. argv[1] is the binary path.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                                      \
    do {                                                                          \
        if (!(cond)) {                                                            \
            ++g_failures;                                                         \
            std::cerr << "FAIL " << __LINE__ << ": " << msg << '\n';              \
        }                                                                         \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult res;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <bkp-binary>\n";
        return 2;
    }
    const std::string bkp = argv[1];
    const fs::path work = fs::temp_directory_path() / ("bkp_cli_test_" + std::to_string(getpid()));
    fs::create_directories(work);
    const std::string tiny = (work / "tiny.txt").string();
    std::ofstream(tiny) << "3\n3 6\n4 3 2\n5 4 2\n3 3 2\n";

    // generate: round trip and determinism
    const std::string gen1 = (work / "g1.txt").string(), gen2 = (work / "g2.txt").string();
    RunResult r = run(bkp + " generate --n 12 --ins 5 --seed 7 --out " + gen1);
    CHECK_MSG(r.exit_code == 0, "generate exits 0");
    CHECK_MSG(fs::exists(gen1), "generated file exists");
    run(bkp + " generate --n 12 --ins 5 --seed 7 --out " + gen2);
    CHECK_MSG(slurp(gen1) == slurp(gen2), "same flags give identical bytes");
    CHECK_MSG(run(bkp + " solve " + gen1).exit_code == 0, "generated file re-reads and solves");

    // usage errors exit 2
    CHECK_MSG(run(bkp + " generate --n 12 --ins 11 --seed 1").exit_code == 2, "ins=11 rejected");
    CHECK_MSG(run(bkp + " solve " + (work / "absent.txt").string()).exit_code == 2,
              "missing instance rejected");
    std::ofstream(work / "bad.txt") << "2\n3 6\n4 3\n";
    CHECK_MSG(run(bkp + " solve " + (work / "bad.txt").string()).exit_code == 2,
              "malformed instance rejected");

    // solve: human and machine output
    r = run(bkp + " solve " + tiny);
    CHECK_MSG(r.exit_code == 0, "solve exits 0 on proven optimum");
    CHECK_MSG(r.out.find("value: 5") != std::string::npos, "human output prints the value");
    r = run(bkp + " solve " + tiny + " --json");
    json j = json::parse(r.out, nullptr, false);
    CHECK_MSG(!j.is_discarded(), "json output parses");
    CHECK_MSG(j["value"] == 5, "json value field");
    CHECK_MSG(j["optimal"] == true, "json optimal flag");
    CHECK_MSG(j["x"].size() == 3 && j["y"].size() == 3, "json vectors sized n");
    CHECK_MSG(j["stats"].contains("crit2_solved"), "json stats present");

    // gamma has no effect on the optimum
    json j0 = json::parse(run(bkp + " solve " + tiny + " --json --gamma 0").out);
    json j2 = json::parse(run(bkp + " solve " + tiny + " --json --gamma 2").out);
    CHECK_MSG(j0["value"] == j2["value"], "gamma neutrality");

    // oracle agrees and guards its size limit
    r = run(bkp + " oracle " + tiny);
    CHECK_MSG(r.exit_code == 0, "oracle runs");
    CHECK_MSG(r.out.find("value: 5") != std::string::npos, "oracle value matches");
    const std::string big = (work / "big.txt").string();
    run(bkp + " generate --n 21 --ins 5 --seed 1 --out " + big);
    CHECK_MSG(run(bkp + " oracle " + big).exit_code == 2, "oracle refuses n=21");

    // bench over a directory
    const fs::path bench_dir = work / "bench";
    fs::create_directories(bench_dir);
    for (int seed = 1; seed <= 3; ++seed) {
        run(bkp + " generate --n 12 --ins 5 --seed " + std::to_string(seed) + " --out " +
            (bench_dir / ("bkp_n12_ins5_s" + std::to_string(seed) + ".txt")).string());
    }
    const std::string csv_path = (work / "bench.csv").string();
    r = run(bkp + " bench " + bench_dir.string() + " --csv " + csv_path);
    CHECK_MSG(r.exit_code == 0, "bench exits 0 when all optimal");
    {
        std::ifstream csv(csv_path);
        std::string line;
        int rows = 0, aggs = 0;
        std::getline(csv, line);
        CHECK_MSG(line.rfind("kind,n,ins,seed,value", 0) == 0, "csv header");
        while (std::getline(csv, line)) {
            if (line.rfind("row,", 0) == 0) ++rows;
            if (line.rfind("agg,", 0) == 0) {
                ++aggs;
                std::vector<std::string> f;
                std::istringstream ls(line);
                std::string field;
                while (std::getline(ls, field, ',')) f.push_back(field);
                CHECK_MSG(f.size() == 17, "aggregate row width");
                CHECK_MSG(std::stod(f[12]) >= std::stod(f[11]), "max time >= avg time");
                CHECK_MSG(std::stod(f[14]) >= std::stod(f[13]), "max step2 >= avg step2");
                CHECK_MSG(std::stod(f[16]) >= std::stod(f[15]), "max crit2 >= avg crit2");
            }
        }
        CHECK_MSG(rows == 3, "one row per instance");
        CHECK_MSG(aggs == 1, "one aggregate per (n, ins)");
    }

    // a broken file is recorded per-row and the run continues
    std::ofstream(bench_dir / "broken.txt") << "not an instance\n";
    r = run(bkp + " bench " + bench_dir.string() + " --csv " + csv_path);
    CHECK_MSG(r.exit_code == 3, "bench with a failed row exits 3");
    {
        std::ifstream csv(csv_path);
        std::string line;
        int rows = 0, failed_rows = 0;
        while (std::getline(csv, line)) {
            if (line.rfind("row,", 0) != 0) continue;
            ++rows;
            std::vector<std::string> f;
            std::istringstream ls(line);
            std::string field;
            while (std::getline(ls, field, ',')) f.push_back(field);
            if (f[4].empty() && f[8] == "0") ++failed_rows;
        }
        CHECK_MSG(rows == 4, "failed instance still gets a row");
        CHECK_MSG(failed_rows == 1, "exactly the broken file is marked failed");
        fs::remove(bench_dir / "broken.txt");
    }

    // empty directory: header only, exit 0
    const fs::path empty_dir = work / "empty";
    fs::create_directories(empty_dir);
    r = run(bkp + " bench " + empty_dir.string() + " --csv " + (work / "empty.csv").string());
    CHECK_MSG(r.exit_code == 0, "empty bench exits 0");
    {
        std::ifstream csv(work / "empty.csv");
        std::string line;
        int lines = 0;
        while (std::getline(csv, line)) ++lines;
        CHECK_MSG(lines == 1, "empty bench csv is header only");
    }

    // forced timeout reports the best known solution with exit 3
    const std::string slow = (work / "slow.txt").string();
    run(bkp + " generate --n 200 --ins 9 --seed 1 --out " + slow);
    r = run(bkp + " solve " + slow + " --time-limit 0.0001 --json");
    CHECK_MSG(r.exit_code == 3, "timeout exits 3");
    j = json::parse(r.out, nullptr, false);
    CHECK_MSG(!j.is_discarded() && j["optimal"] == false, "timeout marks unproven");
    CHECK_MSG(!j["value"].is_null(), "timeout still reports the best known value");

    fs::remove_all(work);
    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failures\n";
    return 1;
}
