#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3audit/poly.hpp"
#include "k3audit/poly_io.hpp"
#include "k3audit/catalogue.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace k3;

namespace {

Cyclo rat(long long p, long long q = 1) { return Cyclo(Rational(p) / q); }
Cyclo one() { return rat(1); }

Poly klein_quartic() {
    Poly f(3);
    f.add_term({3, 1, 0}, one());
    f.add_term({0, 3, 1}, one());
    f.add_term({1, 0, 3}, one());
    return f;
}

Poly mukai_sextic() {
    Poly f(3);
    for (Monomial m : {Monomial{6, 0, 0}, {0, 6, 0}, {0, 0, 6}})
        f.add_term(m, one());
    for (Monomial m : {Monomial{3, 3, 0}, {0, 3, 3}, {3, 0, 3}})
        f.add_term(m, rat(-10));
    return f;
}

Poly random_poly(std::mt19937& rng, int nvars, int maxdeg, int terms) {
    Poly f(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars);
        int budget = rng() % (maxdeg + 1);
        for (int i = 0; i < nvars && budget > 0; ++i) {
            m[i] = rng() % (budget + 1);
            budget -= m[i];
        }
        f.add_term(m, rat((int)(rng() % 9) - 4, (int)(rng() % 3) + 1));
    }
    return f;
}

} // namespace

TEST_CASE("evaluate") {
    ProjPoint e1{{one(), rat(0), rat(0)}};
    CHECK(evaluate(klein_quartic(), e1).is_zero());

    // term-by-term oracle at [0:1:-1]: 0 + 1 + 1 - 10*(0 + (-1) + 0) = 12
    ProjPoint p{{rat(0), rat(1), rat(-1)}};
    Cyclo oracle = rat(1) + rat(1) - rat(-10);
    CHECK(oracle == rat(12));
    CHECK(evaluate(mukai_sextic(), p) == rat(12));

    CHECK_THROWS_AS(evaluate(klein_quartic(), ProjPoint{{one(), one()}}),
                    k3::error);
}

TEST_CASE("substitute_linear") {
    // cyclic substitution permutes the quartic's monomials
    std::vector<std::vector<Cyclo>> cyc{{rat(0), rat(0), one()},
                                        {one(), rat(0), rat(0)},
                                        {rat(0), one(), rat(0)}};
    CHECK(substitute_linear(klein_quartic(), cyc) == klein_quartic());
    // identity
    std::vector<std::vector<Cyclo>> id{{one(), rat(0), rat(0)},
                                       {rat(0), one(), rat(0)},
                                       {rat(0), rat(0), one()}};
    CHECK(substitute_linear(mukai_sextic(), id) == mukai_sextic());
    // restriction to the line x1 = x2: 3 -> 2 variables
    std::vector<std::vector<Cyclo>> line{{one(), rat(0)},
                                         {one(), rat(0)},
                                         {rat(0), one()}};
    Poly restricted = substitute_linear(klein_quartic(), line);
    CHECK(restricted.nvars() == 2);
    Poly expect(2);   // u^3 u + u^3 v + v^3 u = u^4 + u^3 v + u v^3
    expect.add_term({4, 0}, one());
    expect.add_term({3, 1}, one());
    expect.add_term({1, 3}, one());
    CHECK(restricted == expect);
}

TEST_CASE("substitution functoriality and evaluation compatibility") {
    std::mt19937 rng(42);
    auto random_matrix = [&](int n) {
        std::vector<std::vector<Cyclo>> m(n, std::vector<Cyclo>(n));
        for (auto& row : m)
            for (auto& x : row) x = rat((int)(rng() % 5) - 2);
        return m;
    };
    auto matmul = [](const std::vector<std::vector<Cyclo>>& a,
                     const std::vector<std::vector<Cyclo>>& b) {
        int n = (int)a.size();
        std::vector<std::vector<Cyclo>> r(n, std::vector<Cyclo>(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        return r;
    };
    for (int t = 0; t < 1000; ++t) {
        int n = 2 + (int)(rng() % 2);
        Poly f = random_poly(rng, n, 4, 4);
        auto a = random_matrix(n), b = random_matrix(n);
        CHECK(substitute_linear(substitute_linear(f, a), b) ==
              substitute_linear(f, matmul(a, b)));
        ProjPoint p;
        for (int i = 0; i < n; ++i) p.coords.push_back(rat((int)(rng() % 5) - 2));
        std::vector<Cyclo> mp(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) mp[i] += a[i][j] * p.coords[j];
        CHECK(evaluate(substitute_linear(f, a), p) ==
              evaluate(f, ProjPoint{mp}));
    }
}

TEST_CASE("weighted degree") {
    Poly f(4);   // x1 x2 (x1^4 - x2^4) + x3^3 + x4^2
    f.add_term({5, 1, 0, 0}, one());
    f.add_term({1, 5, 0, 0}, rat(-1));
    f.add_term({0, 0, 3, 0}, one());
    f.add_term({0, 0, 0, 2}, one());
    CHECK(weighted_degree(f, WeightSystem{{1, 1, 2, 3}}) == 6);
    Poly sextic(3);
    sextic.add_term({3, 3, 0}, rat(10));
    sextic.add_term({5, 0, 1}, rat(9));
    CHECK(weighted_degree(sextic, WeightSystem{{1, 1, 1}}) == 6);
    Poly inhom(2);
    inhom.add_term({1, 0}, one());
    inhom.add_term({0, 2}, one());
    CHECK(!weighted_degree(inhom, WeightSystem{{1, 1}}).has_value());
}

TEST_CASE("partials and the Euler relation") {
    Poly f(2);
    f.add_term({3, 1}, one());
    auto d = partials(f);
    Poly expect(2);
    expect.add_term({2, 1}, rat(3));
    CHECK(d[0] == expect);

    Poly c(2);
    c.add_term({0, 0}, rat(5));
    for (const auto& g : partials(c)) CHECK(g.is_zero());

    // gradient of the quartic at [1:0:0]: only the middle partial survives
    ProjPoint e1{{one(), rat(0), rat(0)}};
    auto grads = partials(klein_quartic());
    CHECK(evaluate(grads[0], e1).is_zero());
    CHECK(evaluate(grads[1], e1) == one());
    CHECK(evaluate(grads[2], e1).is_zero());

    std::mt19937 rng(5);
    for (int t = 0; t < 1000; ++t) {
        int n = 2 + (int)(rng() % 2);
        int deg = 1 + (int)(rng() % 4);
        // random homogeneous polynomial of exact degree deg
        Poly f2(n);
        auto mons = monomials_of_degree(n, deg);
        for (int k = 0; k < 4; ++k)
            f2.add_term(mons[rng() % mons.size()], rat((int)(rng() % 7) - 3));
        Poly acc(n);
        auto ds = partials(f2);
        for (int i = 0; i < n; ++i) acc = acc + Poly::variable(n, i) * ds[i];
        CHECK(acc == f2.scaled(rat(deg)));
    }
}

TEST_CASE("singularity at points") {
    // the classified nodal sextic is singular at its four nodes
    Poly cs5 = load_poly_file(catalogue_directory() + "/cs5_sextic.poly").poly;
    CHECK(is_singular_at(cs5, ProjPoint{{one(), rat(0), rat(0)}}));
    Poly sphere(3);
    for (int i = 0; i < 3; ++i) {
        Monomial m(3, 0);
        m[i] = 2;
        sphere.add_term(m, one());
    }
    CHECK(!is_singular_at(sphere, ProjPoint{{one(), rat(0), rat(0)}}));
    Poly xy = Poly::variable(3, 0) * Poly::variable(3, 1);
    CHECK(is_singular_at(xy, ProjPoint{{rat(0), rat(0), one()}}));
}

TEST_CASE("finite field scans") {
    // oracle: dense scan of the 31 points of P^2(F_5) for the quartic
    {
        auto pts = finite_field_singular_scan(klein_quartic(), 5);
        auto evalq = [](long long x, long long y, long long z) {
            auto pw = [](long long v, int e) {
                long long r = 1;
                for (int i = 0; i < e; ++i) r = r * v % 5;
                return r;
            };
            long long f = (pw(x,3)*y + pw(y,3)*z + pw(z,3)*x) % 5;
            long long fx = (3*pw(x,2)%5*y + pw(z,3)) % 5;
            long long fy = (pw(x,3) + 3*pw(y,2)%5*z) % 5;
            long long fz = (pw(y,3) + 3*pw(z,2)%5*x) % 5;
            return f == 0 && fx == 0 && fy == 0 && fz == 0;
        };
        int oracle = 0;
        for (long long y = 0; y < 5; ++y)
            for (long long z = 0; z < 5; ++z) oracle += evalq(1, y, z);
        for (long long z = 0; z < 5; ++z) oracle += evalq(0, 1, z);
        oracle += evalq(0, 0, 1);
        CHECK(oracle == 0);
        CHECK(pts.empty());
    }
    // a triangle of lines is singular exactly at the three corners
    Poly tri = Poly::variable(3, 0) * Poly::variable(3, 1) * Poly::variable(3, 2);
    for (long long p : {5, 7, 11}) {
        auto pts = finite_field_singular_scan(tri, p);
        CHECK(pts.size() == 3);
    }
    // the order-168 sextic is smooth mod 13
    Poly hess = load_poly_file(catalogue_directory() + "/hessian_sextic.poly").poly;
    CHECK(finite_field_singular_scan(hess, 13).empty());

    // agreement with a dense re-evaluation oracle on degree <= 3 inputs
    std::mt19937 rng(31);
    for (int t = 0; t < 60; ++t) {
        Poly f(3);
        auto mons = monomials_of_degree(3, 2 + (int)(rng() % 2));
        for (int k = 0; k < 3; ++k)
            f.add_term(mons[rng() % mons.size()], rat((int)(rng() % 7) - 3));
        if (f.is_zero()) continue;
        long long p = 5;
        auto got = finite_field_singular_scan(f, p);
        // oracle: evaluate f and partials at every normalized representative
        auto ds = partials(f);
        int count = 0;
        auto test_pt = [&](long long x, long long y, long long z) {
            auto ev = [&](const Poly& g) {
                long long acc = 0;
                for (const auto& [m, c] : g.terms()) {
                    long long term = mod_p(c.rational_part(), p);
                    for (int rep = 0; rep < m[0]; ++rep) term = term * x % p;
                    for (int rep = 0; rep < m[1]; ++rep) term = term * y % p;
                    for (int rep = 0; rep < m[2]; ++rep) term = term * z % p;
                    acc = (acc + term) % p;
                }
                return acc;
            };
            if (ev(f) == 0 && ev(ds[0]) == 0 && ev(ds[1]) == 0 && ev(ds[2]) == 0)
                ++count;
        };
        for (long long y = 0; y < p; ++y)
            for (long long z = 0; z < p; ++z) test_pt(1, y, z);
        for (long long z = 0; z < p; ++z) test_pt(0, 1, z);
        test_pt(0, 0, 1);
        CHECK((int)got.size() == count);
    }
    CHECK_THROWS_AS(finite_field_singular_scan(
                        Poly::monomial(3, {1, 0, 0}, rat(1, 5)), 5),
                    k3::error);
}

TEST_CASE("exact division") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    auto q = exact_divide(x1 * x1 - x2 * x2, x1 - x2);
    REQUIRE(q.has_value());
    CHECK(*q == x1 + x2);
    CHECK(!exact_divide(klein_quartic(), Poly::variable(3, 0)).has_value());
    CHECK_THROWS_AS(exact_divide(x1, Poly(2)), k3::error);

    std::mt19937 rng(17);
    for (int t = 0; t < 300; ++t) {
        Poly f = random_poly(rng, 2, 3, 3);
        Poly g = random_poly(rng, 2, 3, 3);
        if (g.is_zero()) continue;
        auto h = exact_divide(f * g, g);
        REQUIRE(h.has_value());
        CHECK(*h == f);
    }
}

TEST_CASE("common variable factor") {
    // the four admissible monomials of the twisted order-5 scenario
    std::vector<Monomial> ms{{1, 3, 4, 0}, {2, 2, 3, 1}, {3, 1, 2, 2}, {4, 0, 1, 3}};
    CHECK(common_variable_factor(ms) == Monomial{1, 0, 1, 0});
    CHECK(common_variable_factor({{2, 0}, {0, 2}}) == Monomial{0, 0});
    CHECK(common_variable_factor({{1, 1}}) == Monomial{1, 1});
    CHECK_THROWS_AS(common_variable_factor({}), k3::error);
}

TEST_CASE("poly file round trip is byte exact") {
    namespace fs = std::filesystem;
    int checked = 0;
    for (const auto& entry : fs::directory_iterator(catalogue_directory())) {
        if (entry.path().extension() != ".poly") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        auto pf = load_poly_file(entry.path().string());
        CHECK(serialize_poly_file(pf.poly, pf.weights) == ss.str());
        ++checked;
    }
    CHECK(checked >= 20);
}
