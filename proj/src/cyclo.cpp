#include "k3audit/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace k3 {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// divides a by monic-leading b in Q[x]; exact, remainder must vanish
std::vector<Rational> poly_div_exact(std::vector<Rational> a,
                                     const std::vector<Rational>& b) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    std::vector<Rational> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1);
    while (a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t k = a.size() - b.size();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + k] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    if (!a.empty()) throw error("poly_div_exact: nonzero remainder");
    return q;
}

std::map<unsigned, std::vector<Rational>> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    // entries are immutable once inserted and std::map nodes are stable, so
    // each thread can keep plain pointers and skip the lock on the hot path
    thread_local std::map<unsigned, const std::vector<Rational>*> tl_cache;
    if (auto tl = tl_cache.find(n); tl != tl_cache.end()) return *tl->second;

    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) {
        tl_cache.emplace(n, &it->second);
        return it->second;
    }
    // compute without holding recursion over the lock: collect divisors first
    std::vector<unsigned> todo{n};
    while (!todo.empty()) {
        unsigned m = todo.back();
        if (g_phi_cache.count(m)) { todo.pop_back(); continue; }
        bool ready = true;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0 && !g_phi_cache.count(d)) { todo.push_back(d); ready = false; }
        if (!ready) continue;
        todo.pop_back();
        std::vector<Rational> num(m + 1);
        num[0] = -1; num[m] = 1;                       // x^m - 1
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), g_phi_cache.at(d));
        g_phi_cache.emplace(m, std::move(num));
    }
    const auto& ref = g_phi_cache.at(n);
    tl_cache.emplace(n, &ref);
    return ref;
}

namespace {

// reduce raw coefficient vector mod Phi_n, return exactly phi(n) coords
std::vector<Rational> reduce_mod_phi(std::vector<Rational> raw, unsigned n) {
    const auto& phi_poly = cyclotomic_polynomial(n);
    size_t d = phi_poly.size() - 1;   // = euler_phi(n)
    if (raw.size() < d) raw.resize(d);
    for (size_t i = raw.size(); i-- > d;) {
        Rational c = raw[i];
        if (c != 0) {
            for (size_t j = 0; j <= d; ++j) raw[i - d + j] -= c * phi_poly[j];
        }
    }
    raw.resize(d);
    return raw;
}

} // namespace

Cyclo::Cyclo(unsigned order, std::vector<Rational> coeffs) : order_(order) {
    if (order == 0) throw error("Cyclo: order must be positive");
    coeffs_ = reduce_mod_phi(std::move(coeffs), order);
}

Cyclo Cyclo::root_of_unity(unsigned n, long long k) {
    if (n == 0) throw error("root_of_unity: n must be positive");
    long long kk = ((k % (long long)n) + n) % n;
    std::vector<Rational> raw(kk + 1);
    raw[kk] = 1;
    return Cyclo(n, std::move(raw));
}

bool Cyclo::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclo::rational_part() const {
    if (!is_rational()) throw error("rational_part: value not rational");
    return coeffs_[0];
}

Cyclo Cyclo::promoted(unsigned m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw error("promoted: target order not a multiple");
    unsigned t = m / order_;
    std::vector<Rational> raw((coeffs_.size() - 1) * t + 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * t] = coeffs_[i];
    return Cyclo(m, std::move(raw));
}

Cyclo Cyclo::reduced_order() const {
    if (is_rational()) return Cyclo(coeffs_[0]);
    for (unsigned d = 1; d < order_; ++d) {
        if (order_ % d != 0) continue;
        // try to write *this in Q(zeta_d): invert the promotion
        unsigned t = order_ / d, pd = euler_phi(d);
        std::vector<Rational> cand(pd);
        // candidate with coords at multiples of t must reproduce this exactly
        bool ok = true;
        for (size_t i = 0; i < coeffs_.size() && ok; ++i)
            if (coeffs_[i] != 0 && (i % t != 0 || i / t >= pd)) ok = false;
        if (!ok) continue;
        for (size_t i = 0; i < pd; ++i)
            if (i * t < coeffs_.size()) cand[i] = coeffs_[i * t];
        Cyclo c(d, cand);
        if (c.promoted(order_) == *this) return c;
    }
    return *this;
}

std::pair<Cyclo, Cyclo> to_common_order(const Cyclo& a, const Cyclo& b) {
    unsigned m = (unsigned)lcm_ll(a.order(), b.order());
    return {a.promoted(m), b.promoted(m)};
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = to_common_order(a, b);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = to_common_order(a, b);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = to_common_order(a, b);
    std::vector<Rational> raw(2 * x.coeffs_.size());
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    return Cyclo(x.order_, std::move(raw));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw error("Cyclo: division by zero");
    if (is_rational()) return Cyclo(Rational(1) / coeffs_[0]);
    // extended Euclid in Q[x]: u*this + v*Phi_n = gcd = const
    const auto& phi_poly = cyclotomic_polynomial(order_);
    std::vector<Rational> r0 = phi_poly, r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{}, s1{Rational(1)};   // coeffs of *this in combo
    auto polysub = [](std::vector<Rational>& a, const std::vector<Rational>& b,
                      const Rational& c, size_t shift) {
        if (a.size() < b.size() + shift) a.resize(b.size() + shift);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    };
    while (true) {
        if (r1.empty()) throw error("Cyclo: inverse failed (not invertible?)");
        if (r1.size() == 1) break;     // nonzero constant remainder
        // r0 = q*r1 + r2 ; update (r0,s0) <- (r1,s1), (r1,s1) <- (r2, s0-q s1)
        std::vector<Rational> r2 = r0, s2 = s0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rational c = r2.back() / r1.back();
            size_t k = r2.size() - r1.size();
            polysub(r2, r1, c, k);
            polysub(s2, s1, c, k);
        }
        r0 = std::move(r1); s0 = std::move(s1);
        r1 = std::move(r2); s1 = std::move(s2);
    }
    Rational g = r1[0];
    std::vector<Rational> u = s1;
    for (auto& c : u) c /= g;
    return Cyclo(order_, std::move(u));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

Cyclo Cyclo::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result{Rational(1)}, base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    auto [x, y] = to_common_order(a, b);
    return x.coeffs_ == y.coeffs_;
}

long long smallest_primitive_root_mod(unsigned n, long long p) {
    if ((p - 1) % n != 0)
        throw error("reduce_mod_prime: p = " + std::to_string(p) +
                    " is not 1 mod " + std::to_string(n));
    for (long long r = 1; r < p; ++r) {
        long long x = 1;
        bool primitive = true;
        for (unsigned k = 1; k < n; ++k) {
            x = (__int128)x * r % p;
            if (x == 1) { primitive = false; break; }
        }
        x = (__int128)x * r % p;
        if (primitive && x == 1) return r;
    }
    throw error("no primitive root found (p not prime?)");
}

long long Cyclo::reduce_mod_prime(long long p) const {
    long long root = smallest_primitive_root_mod(order_, p);
    long long acc = 0, rp = 1;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        acc = (acc + (__int128)mod_p(coeffs_[i], p) * rp) % p;
        rp = (__int128)rp * root % p;
    }
    return acc;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << "z" << order_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace k3
