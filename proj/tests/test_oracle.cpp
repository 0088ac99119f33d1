#include <doctest.h>

#include <cmath>

#include "bound_models.hpp"
#include "branch_and_bound.hpp"
#include "generator.hpp"
#include "oracle.hpp"

using namespace bkp;

namespace {

Instance tiny() {
    Instance inst;
    inst.n = 3;
    inst.profit = {4, 5, 3};
    inst.weight = {3, 4, 3};
    inst.leader_weight = {2, 2, 2};
    inst.cap_leader = 3;
    inst.cap_follower = 6;
    return inst;
}

}  // namespace

TEST_CASE("reference instance optimum and tie break") {
    OracleResult res = brute_force(tiny());
    CHECK(res.value == 5);
    // {1} and {3} both reach 5; the index-set order prefers {1}
    CHECK(res.x == std::vector<std::uint8_t>{1, 0, 0});
    CHECK(res.y == std::vector<std::uint8_t>{0, 1, 0});
    CHECK(res.leaders_enumerated == 4);  // {}, {1}, {2}, {3} fit C_u = 3
}

TEST_CASE("full interdiction when the leader has room") {
    Instance inst = tiny();
    inst.cap_leader = 100;
    OracleResult res = brute_force(inst);
    CHECK(res.value == 0);
    CHECK(res.x == std::vector<std::uint8_t>{1, 1, 1});
}

TEST_CASE("single item instances") {
    Instance inst;
    inst.n = 1;
    inst.profit = {9};
    inst.weight = {4};
    inst.leader_weight = {3};
    inst.cap_leader = 5;
    inst.cap_follower = 6;
    CHECK(brute_force(inst).value == 0);  // item interdictable

    inst.cap_leader = 2;  // not interdictable, fits the follower
    CHECK(brute_force(inst).value == 9);

    inst.cap_follower = 3;  // not interdictable, does not fit
    CHECK(brute_force(inst).value == 0);
}

TEST_CASE("oversized instances are refused") {
    Instance inst;
    inst.n = 21;
    inst.profit.assign(21, 1);
    inst.weight.assign(21, 1);
    inst.leader_weight.assign(21, 1);
    inst.cap_leader = 5;
    inst.cap_follower = 5;
    CHECK_THROWS_AS(brute_force(inst), std::invalid_argument);
    CHECK_NOTHROW(brute_force(inst, 21));
}

TEST_CASE("value is invariant under efficiency sorting") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance gen = generate(GenSpec{9, 7, seed});
        Instance shuffled = gen.instance;
        // desort: reverse the items
        for (int i = 0; i < shuffled.n / 2; ++i) {
            std::swap(shuffled.profit[i], shuffled.profit[shuffled.n - 1 - i]);
            std::swap(shuffled.weight[i], shuffled.weight[shuffled.n - 1 - i]);
            std::swap(shuffled.leader_weight[i], shuffled.leader_weight[shuffled.n - 1 - i]);
        }
        CHECK(brute_force(gen.instance).value == brute_force(shuffled).value);
    }
}

TEST_CASE("oracle never beats ncr from below") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance gen = generate(GenSpec{10, 8, seed});
        MipResult ncr = solve_mip(build_ncr(gen.instance));
        OracleResult oracle = brute_force(gen.instance);
        if (ncr.status == MipStatus::Optimal)
            CHECK(oracle.value <= std::llround(ncr.value));
    }
}

TEST_CASE("oracle solutions satisfy the bilevel constraints") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance gen = generate(GenSpec{8, 5, seed});
        const Instance& inst = gen.instance;
        OracleResult res = brute_force(inst);
        std::int64_t vx = 0, wy = 0, py = 0;
        for (int i = 0; i < inst.n; ++i) {
            vx += res.x[i] * inst.leader_weight[i];
            wy += res.y[i] * inst.weight[i];
            py += res.y[i] * inst.profit[i];
            CHECK(res.y[i] <= 1 - res.x[i]);
        }
        CHECK(vx <= inst.cap_leader);
        CHECK(wy <= inst.cap_follower);
        CHECK(py == res.value);
    }
}
