#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "generator.hpp"
#include "instance.hpp"

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

bool contains(const std::vector<std::string>& report, const std::string& needle) {
    return std::any_of(report.begin(), report.end(), [&](const std::string& s) {
        return s.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("validate accepts the reference instance") {
    CHECK(validate(tiny()).empty());
}

TEST_CASE("validate names the violated condition") {
    Instance inst = tiny();
    inst.leader_weight[1] = 9;  // v_2 = 9 >= C_u = 3
    CHECK(contains(validate(inst), "v_2 < C_u violated"));

    inst = tiny();
    inst.weight = {1, 1, 1};
    CHECK(contains(validate(inst), "sum(w_i) > C_l violated"));

    inst = tiny();
    inst.profit[0] = 0;
    CHECK(contains(validate(inst), "p_1 >= 1"));
}

TEST_CASE("sort_by_efficiency orders by profit over weight") {
    Instance inst;
    inst.n = 3;
    inst.profit = {5, 4, 3};
    inst.weight = {4, 3, 3};
    inst.leader_weight = {1, 1, 1};
    inst.cap_leader = 2;
    inst.cap_follower = 9;
    auto [sorted, perm] = sort_by_efficiency(inst);
    // ratios 4/3 > 5/4 > 1, decided by 4*4 = 16 > 5*3 = 15
    CHECK(perm.to_original == std::vector<int>{1, 0, 2});
    CHECK(sorted.profit == std::vector<std::int64_t>{4, 5, 3});
    CHECK(sorted.weight == std::vector<std::int64_t>{3, 4, 3});
    CHECK(is_efficiency_sorted(sorted));
}

TEST_CASE("sorting an already sorted instance is the identity") {
    auto [sorted, perm] = sort_by_efficiency(tiny());
    CHECK(perm.to_original == std::vector<int>{0, 1, 2});
    CHECK(sorted.profit == tiny().profit);
}

TEST_CASE("equal ratios keep the input order") {
    Instance inst;
    inst.n = 2;
    inst.profit = {2, 1};
    inst.weight = {2, 1};
    inst.leader_weight = {1, 1};
    inst.cap_leader = 3;
    inst.cap_follower = 2;
    auto [sorted, perm] = sort_by_efficiency(inst);
    CHECK(perm.to_original == std::vector<int>{0, 1});
    CHECK(sorted.profit == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("permutation is a bijection and sorting preserves the item multiset") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GeneratedInstance gen = generate(GenSpec{15, 3, seed});
        const Instance& inst = gen.instance;
        REQUIRE(is_efficiency_sorted(inst));

        // forward then backward is the identity
        for (int i = 0; i < inst.n; ++i)
            CHECK(gen.perm.to_sorted[gen.perm.to_original[i]] == i);

        auto [resorted, perm2] = sort_by_efficiency(inst);
        std::multiset<std::tuple<std::int64_t, std::int64_t, std::int64_t>> before, after;
        for (int i = 0; i < inst.n; ++i) {
            before.insert({inst.profit[i], inst.weight[i], inst.leader_weight[i]});
            after.insert({resorted.profit[i], resorted.weight[i], resorted.leader_weight[i]});
        }
        CHECK(before == after);
    }
}

TEST_CASE("instance text parses field by field") {
    const std::string text = "3\n3 6\n4 3 2\n5 4 2\n3 3 2\n";
    Instance inst = read_instance(text);
    CHECK(inst.n == 3);
    CHECK(inst.cap_leader == 3);
    CHECK(inst.cap_follower == 6);
    CHECK(inst.profit == std::vector<std::int64_t>{4, 5, 3});
    CHECK(inst.weight == std::vector<std::int64_t>{3, 4, 3});
    CHECK(inst.leader_weight == std::vector<std::int64_t>{2, 2, 2});
    CHECK(write_instance(inst) == text);
}

TEST_CASE("parse errors name the offending line") {
    CHECK_THROWS_WITH_AS(read_instance("2\n3 6\n4 3\n"), doctest::Contains("row 1: expected 3 fields"),
                         ParseError);
    CHECK_THROWS_AS(read_instance("2\n3 6\n4 3 2\n"), ParseError);   // missing row
    CHECK_THROWS_AS(read_instance("1\n3\n4 3 2\n"), ParseError);     // bad capacity line
    CHECK_THROWS_AS(read_instance("1\n3 6\n4 0 2\n"), ParseError);   // non-positive datum
    CHECK_THROWS_AS(read_instance("1\n3 6\n4 3 2\n9\n"), ParseError);  // trailing data
    CHECK_THROWS_AS(read_instance("x\n3 6\n"), ParseError);
}

TEST_CASE("file round trip is the identity on generated instances") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        GeneratedInstance gen = generate(GenSpec{12, 2 + static_cast<int>(seed % 9), seed});
        const std::string text = write_instance(gen.instance);
        Instance back = read_instance(text);
        CHECK(write_instance(back) == text);
        CHECK(back.profit == gen.instance.profit);
        CHECK(back.weight == gen.instance.weight);
        CHECK(back.leader_weight == gen.instance.leader_weight);
        CHECK(back.cap_leader == gen.instance.cap_leader);
        CHECK(back.cap_follower == gen.instance.cap_follower);
    }
}
