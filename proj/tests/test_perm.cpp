#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cmaps/perm.hpp"

using namespace cmaps;

TEST_CASE("construction and composition") {
    Permutation id = Permutation::identity(5);
    CHECK(id.is_identity());
    Permutation p = Permutation::from_cycles({{0, 1, 2}}, 5);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 3);
    Permutation q = Permutation::from_cycles({{2, 3}}, 5);
    // (p * q)(i) = p(q(i))
    CHECK((p * q)(2) == 3);
    CHECK((p * q)(3) == 0);
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.power(3).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK_THROWS(Permutation::from_cycles({{0, 1, 0}}, 5));
    CHECK_THROWS(Permutation::from_cycles({{0, 7}}, 5));
    CHECK_THROWS(Permutation::from_images({0, 0, 1}));
}

TEST_CASE("cycles, order, semiregularity") {
    Permutation p = Permutation::from_cycles({{1, 4}, {2, 3, 5}}, 6);
    auto cyc = p.cycles();
    REQUIRE(cyc.size() == 3);
    CHECK(cyc[0] == std::vector<uint32_t>{0});
    CHECK(cyc[1] == std::vector<uint32_t>{1, 4});
    CHECK(cyc[2] == std::vector<uint32_t>{2, 3, 5});
    CHECK(p.order() == 6);
    CHECK_FALSE(p.is_semi_regular());
    CHECK(Permutation::from_cycles({{0, 1}, {2, 3}}, 4).is_semi_regular());
    CHECK(Permutation::identity(4).is_semi_regular());
}

TEST_CASE("cycle types") {
    CycleType t({2, 1, 2});
    CHECK(t.parts() == std::vector<uint32_t>{1, 2, 2});
    CHECK(t.total() == 5);
    CHECK(t.to_string() == "[1,2,2]");
    CHECK(CycleType::parse("1,2,2", 5) == t);
    CHECK(CycleType::parse("[1,2,2]", 5) == t);
    CHECK_THROWS(CycleType::parse("1,2", 5));
    CHECK(CycleType::of(t.representative()) == t);
    CHECK(CycleType({2, 2}).conjugacy_class_size() == 3);
    CHECK(CycleType({1, 2, 2}).conjugacy_class_size() == 15);
    CHECK(CycleType({1, 3, 3}).conjugacy_class_size() == 280);
    CHECK(CycleType({1, 1, 1, 1}).conjugacy_class_size() == 1);
}

TEST_CASE("number theory helpers and partitions") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(7) == 6);
    CHECK(euler_phi(12) == 4);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(all_cycle_types(4).size() == 5);
    CHECK(all_cycle_types(5).size() == 7);
    auto types = all_cycle_types(5);
    for (const auto& t : types) CHECK(t.total() == 5);
    BigInt total = 0;
    for (const auto& t : types) total += t.conjugacy_class_size();
    CHECK(total == factorial(5));
}
