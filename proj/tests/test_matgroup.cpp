#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3audit/catalogue.hpp"
#include "k3audit/group.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace k3;

namespace {
Cyclo rat(long long p, long long q = 1) { return Cyclo(Rational(p) / q); }
Cyclo one() { return rat(1); }
Cyclo zeta(unsigned n, long long k = 1) { return Cyclo::root_of_unity(n, k); }

GMatrix quat_i() {
    return GMatrix(2, {{zeta(4), rat(0)}, {rat(0), -zeta(4)}});
}
GMatrix quat_j() {
    return GMatrix(2, {{rat(0), one()}, {rat(-1), rat(0)}});
}

// independent closure oracle: linear scan dedup, no hashing
int closure_order_oracle(const std::vector<GMatrix>& gens, int cap) {
    std::vector<GMatrix> els{GMatrix::identity(gens[0].size())};
    size_t head = 0;
    while (head < els.size()) {
        GMatrix cur = els[head++];
        for (const auto& g : gens) {
            GMatrix nx = cur * g;
            bool found = false;
            for (const auto& e : els)
                if (e == nx) { found = true; break; }
            if (!found) {
                els.push_back(nx);
                if ((int)els.size() > cap) return -1;
            }
        }
    }
    return (int)els.size();
}
}

TEST_CASE("closure") {
    // quaternion relations
    auto g = FiniteMatrixGroup::closure({quat_i(), quat_j()});
    CHECK(g.order() == 8);
    GMatrix I = quat_i(), J = quat_j(), K = I * J;
    GMatrix minus1 = GMatrix::identity(2).scaled(rat(-1));
    CHECK(I * I == minus1);
    CHECK(J * J == minus1);
    CHECK(K * K == minus1);
    CHECK(I * J * K == minus1);

    // Heisenberg-type closure, checked against the linear-scan oracle
    GMatrix d = GMatrix::diagonal({zeta(3), zeta(3, 2), one()});
    GMatrix c = GMatrix::permutation({1, 2, 0});
    auto h = FiniteMatrixGroup::closure({d, c});
    CHECK(h.order() == 27);
    CHECK(closure_order_oracle({d, c}, 100) == 27);

    auto t = FiniteMatrixGroup::closure({GMatrix::identity(3)});
    CHECK(t.order() == 1);

    // non-finite generators exceed the cap
    GMatrix shear(2, {{one(), one()}, {rat(0), one()}});
    CHECK_THROWS_AS(FiniteMatrixGroup::closure({shear}, 64), k3::error);
}

TEST_CASE("closure is independent of generator order") {
    GMatrix d = GMatrix::diagonal({zeta(3), zeta(3, 2), one()});
    GMatrix c = GMatrix::permutation({1, 2, 0});
    auto a = FiniteMatrixGroup::closure({d, c});
    auto b = FiniteMatrixGroup::closure({c, d});
    std::set<std::string> ka, kb;
    for (const auto& e : a.elements()) ka.insert(e.key());
    for (const auto& e : b.elements()) kb.insert(e.key());
    CHECK(ka == kb);
}

TEST_CASE("projectivize") {
    GMatrix w = GMatrix::identity(3).scaled(zeta(3));
    auto scalars = FiniteMatrixGroup::closure({w});
    CHECK(scalars.order() == 3);
    CHECK(scalars.projectivize().order() == 1);

    auto q8 = FiniteMatrixGroup::closure({quat_i(), quat_j()});
    auto pq8 = q8.projectivize();
    CHECK(pq8.order() == 4);   // the Klein four group
    CHECK(q8.order() % pq8.order() == 0);
    CHECK(q8.order() / pq8.order() == q8.scalar_subgroup_order());
}

TEST_CASE("structural profile") {
    auto t = FiniteMatrixGroup::closure({GMatrix::identity(2)});
    auto pt_prof = t.structural_profile();
    CHECK(pt_prof.order == 1);
    CHECK(pt_prof.center_order == 1);
    CHECK(pt_prof.derived_order == 1);
    CHECK(pt_prof.abelianization == std::vector<int>{1});

    const auto& l27 = catalogue_cached("l27");
    auto prof = l27.group.structural_profile();
    CHECK(prof.order == 168);
    std::set<int> orders;
    for (auto [o, cnt] : prof.element_orders) orders.insert(o);
    CHECK(orders == std::set<int>{1, 2, 3, 4, 7});
    CHECK(prof.derived_order == 168);   // simple, hence perfect

    const auto& m9 = catalogue_cached("m9");
    auto mprof = m9.projective.structural_profile();
    CHECK(mprof.order == 72);
    CHECK(mprof.derived_order == 18);
    CHECK(mprof.abelianization == std::vector<int>{2, 2});
}

TEST_CASE("linear characters") {
    const auto& l27 = catalogue_cached("l27");
    auto chars = l27.group.linear_characters();
    CHECK(chars.size() == 1);
    CHECK(chars[0].is_trivial());

    const auto& t48 = catalogue_cached("t48_2d");
    CHECK(t48.group.linear_characters().size() == 2);

    auto cyc = FiniteMatrixGroup::closure({GMatrix::diagonal({zeta(3), one()})});
    auto cchars = cyc.linear_characters();
    CHECK(cchars.size() == 3);
    // multiplicativity on all pairs
    for (const auto& chi : cchars)
        for (int i = 0; i < cyc.order(); ++i)
            for (int j = 0; j < cyc.order(); ++j) {
                int k = cyc.index_of(cyc.elements()[i] * cyc.elements()[j]);
                REQUIRE(k >= 0);
                CHECK(chi.values[k] == chi.values[i] * chi.values[j]);
            }

    // all pairs on the order-48 group as well (within the exhaustive range)
    for (const auto& chi : t48.group.linear_characters())
        for (int i = 0; i < t48.group.order(); ++i)
            for (int j = 0; j < t48.group.order(); ++j) {
                int k = t48.group.index_of(t48.group.elements()[i] *
                                           t48.group.elements()[j]);
                REQUIRE(k >= 0);
                CHECK(chi.values[k] == chi.values[i] * chi.values[j]);
            }
}

TEST_CASE("catalogue verification fails loudly") {
    // an entry whose recorded order is wrong must refuse to load
    std::string text =
        "group broken size 2 order 9 projorder 4\n"
        "gen\nz4, 0\n0, -z4\n"
        "gen\n0, 1\n-1, 0\n";
    CHECK_THROWS_WITH_AS(parse_catalogue_text(text, catalogue_directory()),
                         doctest::Contains("closure order"), k3::error);
    std::string bad_proj =
        "group broken size 2 order 8 projorder 8\n"
        "gen\nz4, 0\n0, -z4\n"
        "gen\n0, 1\n-1, 0\n";
    CHECK_THROWS_WITH_AS(parse_catalogue_text(bad_proj, catalogue_directory()),
                         doctest::Contains("projective order"), k3::error);
}

TEST_CASE("projective fixed points") {
    GMatrix d = GMatrix::diagonal({one(), zeta(3), zeta(3, 2)});
    auto fps = FiniteMatrixGroup::fixed_points_projective(d);
    CHECK(fps.size() == 3);
    for (const auto& fp : fps) {
        CHECK(!fp.positive_dimensional);
        CHECK(fp.eigenlines.size() == 1);
        // eigenlines are coordinate points
        int nonzero = 0;
        for (const auto& c : fp.eigenlines[0].coords)
            if (!c.is_zero()) ++nonzero;
        CHECK(nonzero == 1);
    }

    auto id_fps = FiniteMatrixGroup::fixed_points_projective(GMatrix::identity(3));
    REQUIRE(id_fps.size() == 1);
    CHECK(id_fps[0].positive_dimensional);
    CHECK(id_fps[0].eigenlines.size() == 3);

    // the order-4 generator of the order-72 plane action fixes [0:1:-1]
    const auto& m9 = catalogue_cached("m9");
    const GMatrix& it = m9.generators[2];
    auto itf = FiniteMatrixGroup::fixed_points_projective(it);
    bool found = false;
    ProjPoint target{{rat(0), one(), rat(-1)}};
    for (const auto& fp : itf)
        for (const auto& line : fp.eigenlines) {
            // compare projectively: line ~ target
            Cyclo lam;
            bool ok = true, set = false;
            for (int i = 0; i < 3; ++i) {
                if (target.coords[i].is_zero() != line.coords[i].is_zero()) ok = false;
                else if (!target.coords[i].is_zero() && !set) {
                    lam = line.coords[i] / target.coords[i];
                    set = true;
                }
            }
            if (ok && set) {
                for (int i = 0; i < 3; ++i)
                    if (!(line.coords[i] == lam * target.coords[i])) ok = false;
                if (ok && fp.eigenvalue == one()) found = true;
            }
        }
    CHECK(found);

    GMatrix shear(2, {{one(), one()}, {rat(0), one()}});
    CHECK_THROWS_AS(FiniteMatrixGroup::fixed_points_projective(shear), k3::error);
}

TEST_CASE("tangent determinant") {
    const auto& m9 = catalogue_cached("m9");
    const GMatrix& it = m9.generators[2];
    ProjPoint p{{rat(0), one(), rat(-1)}};
    CHECK(FiniteMatrixGroup::tangent_determinant(it, p) == one());

    GMatrix d = GMatrix::diagonal({one(), zeta(3), zeta(3, 2)});
    CHECK(FiniteMatrixGroup::tangent_determinant(
              d, ProjPoint{{one(), rat(0), rat(0)}}) == one());
    GMatrix d2 = GMatrix::diagonal({rat(-1), rat(-1), one()});
    CHECK(FiniteMatrixGroup::tangent_determinant(
              d2, ProjPoint{{rat(0), rat(0), one()}}) == one());
    CHECK_THROWS_AS(FiniteMatrixGroup::tangent_determinant(
                        d, ProjPoint{{one(), one(), rat(0)}}),
                    k3::error);

    // det(g)/lambda^n times lambda^n recovers det(g) on random elements
    std::mt19937 rng(3);
    const auto& n72 = catalogue_cached("n72");
    for (int t = 0; t < 40; ++t) {
        const GMatrix& g = n72.group.elements()[rng() % n72.group.order()];
        auto fps = FiniteMatrixGroup::fixed_points_projective(g);
        if (fps.empty()) continue;
        const auto& v = fps[0].eigenlines[0];
        Cyclo td = FiniteMatrixGroup::tangent_determinant(g, v);
        CHECK(td * fps[0].eigenvalue.pow(g.size()) == g.det());
    }
}

TEST_CASE("odd ambient dimension always has a projective fixed point") {
    std::mt19937 rng(14);
    const auto& l27 = catalogue_cached("l27");
    for (int t = 0; t < 60; ++t) {
        const GMatrix& g = l27.group.elements()[rng() % l27.group.order()];
        // g^m is exactly the identity for the computed order m
        int m = g.order();
        GMatrix p = GMatrix::identity(3);
        for (int k = 0; k < m; ++k) p = p * g;
        CHECK(p.is_identity());
        auto fps = FiniteMatrixGroup::fixed_points_projective(g);
        CHECK(!fps.empty());
    }
}

TEST_CASE("catalogue entries load and verify") {
    for (const auto& name : catalogue_names()) {
        const auto& e = catalogue_cached(name);
        CHECK(e.group.order() == e.expected_order);
        CHECK(e.projective.order() == e.expected_proj_order);
        // every element has finite order dividing the group order
        std::mt19937 rng(11);
        for (int t = 0; t < 10; ++t) {
            const auto& g = e.group.elements()[rng() % e.group.order()];
            int o = g.order();
            CHECK(e.group.order() % o == 0);
        }
    }
    CHECK_THROWS_WITH_AS(catalogue("nosuch"),
                         doctest::Contains("valid:"), k3::error);
}

TEST_CASE("catalogue round trip is byte exact") {
    namespace fs = std::filesystem;
    int checked = 0;
    for (const auto& entry : fs::directory_iterator(catalogue_directory())) {
        if (entry.path().extension() != ".grp") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        auto e = parse_catalogue_text(ss.str(), catalogue_directory(), false);
        CHECK(serialize_catalogue_text(e) == ss.str());
        ++checked;
    }
    CHECK(checked == 11);
}

TEST_CASE("symplectic order bound") {
    // projectivized element orders stay within 1..8 for the groups that act
    // symplectically on the covers
    for (const char* name : {"l27", "valentiner", "s5_perm5", "n72", "m9",
                             "t48_p2"}) {
        const auto& e = catalogue_cached(name);
        auto prof = e.projective.structural_profile();
        CHECK(prof.element_orders.rbegin()->first <= 8);
    }
}
