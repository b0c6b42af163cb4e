#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3audit/cyclo.hpp"
#include "k3audit/scalar_parser.hpp"

#include <random>

using namespace k3;

namespace {
Cyclo rat(long long p, long long q = 1) { return Cyclo(Rational(p) / q); }
Cyclo zeta(unsigned n, long long k = 1) { return Cyclo::root_of_unity(n, k); }
}

TEST_CASE("roots of unity") {
    CHECK(zeta(1, 0) == rat(1));
    CHECK(zeta(3, 1) + zeta(3, 2) == rat(-1));
    CHECK(zeta(4, 1) * zeta(4, 1) == rat(-1));
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 12u, 15u, 24u}) {
        CHECK(zeta(n).pow(n) == rat(1));
        // Phi_n(zeta_n) = 0
        const auto& phi = cyclotomic_polynomial(n);
        Cyclo acc;
        for (size_t i = 0; i < phi.size(); ++i)
            acc += Cyclo(phi[i]) * zeta(n).pow((long long)i);
        CHECK(acc.is_zero());
    }
    // negative exponents wrap
    CHECK(zeta(5, -1) == zeta(5, 4));
}

TEST_CASE("arithmetic") {
    CHECK(zeta(7, 3) * zeta(7, 4) == rat(1));
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(1) / zeta(5) == zeta(5, 4));
    CHECK_THROWS_AS(rat(1) / Cyclo(), k3::error);
    // canonical form: adding zero is bit-for-bit identical
    Cyclo a = zeta(15, 7) * rat(3, 5) + zeta(15, 2);
    Cyclo b = a + Cyclo();
    CHECK(a.order() == b.order());
    CHECK(a.coeffs() == b.coeffs());
}

TEST_CASE("common order embedding") {
    auto [a, b] = to_common_order(zeta(2), zeta(3));
    CHECK(a.order() == 6);
    CHECK(b.order() == 6);
    CHECK(a == zeta(6, 3));
    auto [c, d] = to_common_order(rat(1), zeta(7));
    CHECK(c.order() == 7);
    CHECK(d.order() == 7);
    auto [e, f] = to_common_order(zeta(3), zeta(3));
    CHECK(e.order() == 3);
    CHECK(f == zeta(3));
}

TEST_CASE("reduce mod prime") {
    CHECK(rat(1).reduce_mod_prime(13) == 1);
    // oracle: the smallest element of multiplicative order 3 in F_13
    long long expected = 0;
    for (long long r = 1; r < 13; ++r) {
        long long x = r % 13, o = 1;
        while (x != 1) { x = x * r % 13; ++o; }
        if (o == 3) { expected = r; break; }
    }
    CHECK(expected == 3);
    CHECK(zeta(3).reduce_mod_prime(13) == expected);
    CHECK(rat(1, 2).reduce_mod_prime(7) == 4);
    CHECK_THROWS_AS(zeta(3).reduce_mod_prime(5), k3::error);   // 5 != 1 mod 3
    CHECK_THROWS_AS(rat(1, 7).reduce_mod_prime(7), k3::error); // bad denominator
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20240811);
    std::vector<unsigned> orders{1, 3, 4, 5, 7, 8, 12, 15, 24};
    auto random_elem = [&](unsigned n) {
        std::vector<Rational> c(euler_phi(n));
        for (auto& x : c)
            x = Rational((int)(rng() % 7) - 3) / (int)(rng() % 3 + 1);
        return Cyclo(n, c);
    };
    for (int t = 0; t < 1000; ++t) {
        unsigned n = orders[rng() % orders.size()];
        Cyclo a = random_elem(n), b = random_elem(n), c = random_elem(n);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == rat(1));
        CHECK(a + (-a) == Cyclo());
    }
}

TEST_CASE("reduce_mod_prime is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int t = 0; t < 1000; ++t) {
        unsigned n = (t % 2 == 0) ? 3u : 4u;
        long long p = 13;   // 13 = 1 mod 3 and mod 4
        std::vector<Rational> ca(euler_phi(n)), cb(euler_phi(n));
        for (auto& x : ca) x = Rational((int)(rng() % 9) - 4);
        for (auto& x : cb) x = Rational((int)(rng() % 9) - 4);
        Cyclo a(n, ca), b(n, cb);
        long long pa = a.reduce_mod_prime(p), pb = b.reduce_mod_prime(p);
        CHECK((a + b).reduce_mod_prime(p) == (pa + pb) % p);
        CHECK((a * b).reduce_mod_prime(p) == pa * pb % p);
    }
}

TEST_CASE("scalar syntax") {
    CHECK(parse_scalar("5/6") == rat(5, 6));
    CHECK(parse_scalar("-2") == rat(-2));
    CHECK(parse_scalar("z7^3 * z7^4") == rat(1));
    CHECK(parse_scalar("(1 + z3 + z3^2)") == Cyclo());
    CHECK(parse_scalar("1/2 - 2/3*z15^4 + z15^7") ==
          rat(1, 2) - rat(2, 3) * zeta(15, 4) + zeta(15, 7));
    CHECK(parse_scalar("z8^-1") == zeta(8, 7));
    CHECK_THROWS_AS(parse_scalar("z"), k3::error);
    CHECK_THROWS_AS(parse_scalar("1 +"), k3::error);
    CHECK_THROWS_AS(parse_scalar("2 2"), k3::error);
    // round trip through the canonical textual form
    std::mt19937 rng(99);
    std::vector<unsigned> orders{1, 3, 8, 15};
    for (int t = 0; t < 200; ++t) {
        unsigned n = orders[rng() % 4];
        std::vector<Rational> c(euler_phi(n));
        for (auto& x : c)
            x = Rational((int)(rng() % 11) - 5) / (int)(rng() % 4 + 1);
        Cyclo v(n, c);
        CHECK(parse_scalar(v.str()) == v);
    }
}

TEST_CASE("order reduction") {
    Cyclo v = zeta(3).promoted(15);
    CHECK(v.order() == 15);
    CHECK(v.reduced_order().order() == 3);
    CHECK(zeta(15).reduced_order().order() == 15);
    CHECK(rat(7, 2).promoted(12).reduced_order().order() == 1);
}
