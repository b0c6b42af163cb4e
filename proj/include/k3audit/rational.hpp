#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace k3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long long lcm_ll(long long a, long long b) {
    return a / gcd_ll(a, b) * b;
}

// q mod p for prime p not dividing den(q); result in [0, p)
inline long long mod_p(const Rational& q, long long p) {
    BigInt n = num(q) % p, d = den(q) % p;
    if (d == 0) throw error("mod_p: denominator divisible by " + std::to_string(p));
    long long ni = static_cast<long long>(n), di = static_cast<long long>(d);
    if (ni < 0) ni += p;
    // inverse of di mod p
    long long inv = 1, base = di, e = p - 2;
    while (e) {
        if (e & 1) inv = (__int128)inv * base % p;
        base = (__int128)base * base % p;
        e >>= 1;
    }
    return (__int128)ni * inv % p;
}

} // namespace k3
