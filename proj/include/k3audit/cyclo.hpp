#pragma once

#include "k3audit/rational.hpp"

#include <vector>
#include <string>
#include <cstdint>

namespace k3 {

// Exact element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, z, ..., z^{phi(n)-1} of Q[x]/Phi_n(x).  Always kept reduced mod Phi_n,
// so equality over a common order is coefficient comparison.
class Cyclo {
public:
    Cyclo() : order_(1), coeffs_(1) {}
    explicit Cyclo(const Rational& q) : order_(1), coeffs_{q} {}
    Cyclo(unsigned order, std::vector<Rational> coeffs);

    static Cyclo root_of_unity(unsigned n, long long k);
    static Cyclo integer(long long v) { return Cyclo(Rational(v)); }
    static Cyclo fraction(long long p, long long q) { return Cyclo(Rational(p) / q); }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;          // lies in Q (all non-constant coords 0)
    Rational rational_part() const;    // valid when is_rational()

    Cyclo promoted(unsigned m) const;  // canonical embedding into Q(zeta_m)
    Cyclo reduced_order() const;       // smallest cyclotomic field containing the value

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo inverse() const;
    Cyclo pow(long long e) const;

    Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
    Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
    Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // image under the homomorphism zeta_n -> (smallest primitive n-th root
    // in F_p).  Requires p = 1 (mod n) and p dividing no denominator.
    long long reduce_mod_prime(long long p) const;

    std::string str() const;           // canonical textual form

private:
    unsigned order_;
    std::vector<Rational> coeffs_;     // length phi(order_)
};

unsigned euler_phi(unsigned n);
// Phi_n as dense coefficient vector, constant term first; cached, thread-safe.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);
// both arguments embedded into Q(zeta_lcm)
std::pair<Cyclo, Cyclo> to_common_order(const Cyclo& a, const Cyclo& b);
long long smallest_primitive_root_mod(unsigned n, long long p);

} // namespace k3
