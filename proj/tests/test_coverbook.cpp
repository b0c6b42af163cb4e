#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3audit/coverbook.hpp"
#include "k3audit/delpezzo.hpp"
#include "k3audit/rational.hpp"

using namespace k3;

TEST_CASE("euler residual") {
    CHECK(euler_residual(CoverScenario(3, 0, 0, 10)) == 0);
    CHECK(euler_residual(CoverScenario(9, 0, 0, 4)) == 0);
    CHECK(euler_residual(CoverScenario(3, 0, 0, 9)) == 2);
    CHECK(euler_residual(CoverScenario(11, 0, 0, 2)) == 0);
    // no non-rational branch curve at all
    CHECK(euler_residual(CoverScenario(12, 0, 0, std::nullopt)) == 0);
    // every Del Pezzo degree closes the identity with m = n = 0
    for (int d = 1; d <= 9; ++d)
        CHECK(euler_residual(CoverScenario(euler_of_del_pezzo(d), 0, 0,
                                           genus_from_degree(d))) == 0);
}

TEST_CASE("scenario validation") {
    CHECK_THROWS_AS(CoverScenario(2, 0, 0, 3), k3::error);
    CHECK_THROWS_AS(CoverScenario(3, -1, 0, 3), k3::error);
    CHECK_THROWS_AS(CoverScenario(3, 0, 11, 3), k3::error);
    set_rational_branch_bound(19);
    CHECK(CoverScenario(3, 0, 11, 3).rational_branch == 11);
    CHECK_THROWS_AS(CoverScenario(3, 0, 20, 3), k3::error);
    set_rational_branch_bound(10);
    CHECK_THROWS_AS(set_rational_branch_bound(12), k3::error);
}

TEST_CASE("mori bound") {
    CHECK(mori_bound(0, 3) == 9);
    CHECK(mori_bound(10, 3) == 19);
    CHECK(mori_bound(4, 8) == 8);
    // monotone in n, antitone in e_min
    for (int n = 0; n < 10; ++n)
        for (int e = 3; e < 12; ++e) {
            CHECK(mori_bound(n + 1, e) > mori_bound(n, e));
            CHECK(mori_bound(n, e + 1) < mori_bound(n, e));
        }
}

TEST_CASE("intersection-count lower bound") {
    CHECK(ek_lower_bound(2, 10) == 10);
    CHECK(ek_lower_bound(5, 6) == 15);
    CHECK(ek_lower_bound(1, 0) == 0);
    CHECK(ek_lower_bound(3, 3) == 5);   // ceiling of 9/2
}

TEST_CASE("minimizing curve feasibility") {
    // N = 4 forces n <= 9
    CHECK(minimizing_feasible(4, 9, 3));
    CHECK(!minimizing_feasible(4, 10, 3));
    // N = 5 forces n <= 6
    CHECK(minimizing_feasible(5, 6, 3));
    CHECK(!minimizing_feasible(5, 7, 3));
    CHECK(minimizing_feasible(1, 0, 3));
}

TEST_CASE("fixed point counts") {
    std::vector<int> table{8, 6, 4, 4, 2, 3, 2};
    for (int o = 2; o <= 8; ++o) CHECK(nikulin_fix_count(o) == table[o - 2]);
    CHECK(nikulin_fix_count(7) == 3);
    CHECK(nikulin_fix_count(5) == 4);
    CHECK(nikulin_fix_count(2) == 8);
    CHECK_THROWS_AS(nikulin_fix_count(1), k3::error);
    CHECK_THROWS_AS(nikulin_fix_count(9), k3::error);
}

TEST_CASE("hurwitz cap") {
    CHECK(hurwitz_cap(3) == 168);
    CHECK(hurwitz_cap(12) == 924);
    CHECK(hurwitz_cap(2) == 84);
    CHECK(hurwitz_cap(12) < 960);
    CHECK_THROWS_AS(hurwitz_cap(1), k3::error);
}

TEST_CASE("branch contributions") {
    CHECK(rh_branch_contribution(16, -18, 2) == 50);
    CHECK(rh_branch_contribution(8, -18, 2) == 34);
    CHECK(rh_branch_contribution(2, -4, -2) == 0);   // unbranched double cover
}

TEST_CASE("mori fiber classification") {
    auto r1 = classify_mori_fiber(BranchMeeting::TwoPoints);
    CHECK(r1.self_intersection == -1);
    CHECK(r1.preimage_irreducible == true);
    auto r2 = classify_mori_fiber(BranchMeeting::Contained);
    CHECK(r2.self_intersection == -4);
    CHECK(!r2.preimage_irreducible.has_value());
    auto r3 = classify_mori_fiber(BranchMeeting::Disjoint);
    CHECK(r3.self_intersection == -2);
    CHECK(r3.preimage_irreducible == false);
    auto r4 = classify_mori_fiber(BranchMeeting::OnePoint);
    CHECK(r4.self_intersection == -1);
    CHECK(r4.preimage_irreducible == false);
}

TEST_CASE("ramification self-intersection") {
    CHECK(ramification_selfint(-2) == -4);
    CHECK(ramification_selfint(0) == 0);
    CHECK(ramification_selfint(1) == 2);
}

TEST_CASE("genus from degree and cross-module consistency") {
    CHECK(genus_from_degree(3) == 4);
    CHECK(genus_from_degree(9) == 10);
    CHECK(genus_from_degree(1) == 2);
    for (int d = 1; d <= 7; ++d) {
        auto l = PicardLattice::blowup(d);
        DivisorClass c{l.canonical_class()};
        for (auto& x : c.c) x *= -2;
        CHECK(genus_of_class(c, l) == genus_from_degree(d));
    }
}
