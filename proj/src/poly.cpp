#include "k3audit/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace k3 {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool DegLexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

Poly::Poly(int nvars, std::map<Monomial, Cyclo, DegLexLess> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if ((int)it->first.size() != nvars_)
            throw error("Poly: monomial length mismatch");
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

Poly Poly::monomial(int nvars, const Monomial& m, const Cyclo& c) {
    Poly f(nvars);
    f.add_term(m, c);
    return f;
}

Poly Poly::variable(int nvars, int i) {
    Monomial m(nvars, 0);
    m[i] = 1;
    return monomial(nvars, m, Cyclo(Rational(1)));
}

int Poly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return std::nullopt;
    return d;
}

void Poly::add_term(const Monomial& m, const Cyclo& c) {
    if ((int)m.size() != nvars_) throw error("Poly: monomial length mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Cyclo Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclo() : it->second;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw error("Poly: variable count mismatch");
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw error("Poly: variable count mismatch");
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::scaled(const Cyclo& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw error("Poly: variable count mismatch");
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    auto name = [&](int i) {
        if (i < (int)var_names.size()) return var_names[i];
        return "x" + std::to_string(i + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] > 0) {
                os << "*" << name(i);
                if (it->first[i] > 1) os << "^" << it->first[i];
            }
        }
    }
    return os.str();
}

Cyclo evaluate(const Poly& f, const ProjPoint& p) {
    if ((int)p.coords.size() != f.nvars())
        throw error("evaluate: dimension mismatch");
    // power cache per coordinate
    int maxd = std::max(0, f.degree());
    std::vector<std::vector<Cyclo>> pw(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        pw[i].resize(maxd + 1, Cyclo(Rational(1)));
        for (int e = 1; e <= maxd; ++e) pw[i][e] = pw[i][e - 1] * p.coords[i];
    }
    Cyclo acc;
    for (const auto& [m, c] : f.terms()) {
        Cyclo t = c;
        for (int i = 0; i < f.nvars(); ++i)
            if (m[i] > 0) t = t * pw[i][m[i]];
        acc += t;
    }
    return acc;
}

Poly substitute_linear(const Poly& f,
                       const std::vector<std::vector<Cyclo>>& m) {
    if ((int)m.size() != f.nvars())
        throw error("substitute_linear: row count mismatch");
    int k = m.empty() ? 0 : (int)m[0].size();
    for (const auto& row : m)
        if ((int)row.size() != k) throw error("substitute_linear: ragged matrix");
    // linear form for each original variable
    std::vector<Poly> rows;
    rows.reserve(f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        Poly li(k);
        for (int j = 0; j < k; ++j) {
            Monomial mm(k, 0);
            mm[j] = 1;
            li.add_term(mm, m[i][j]);
        }
        rows.push_back(std::move(li));
    }
    // cache of row powers
    std::map<std::pair<int, int>, Poly> pw;
    std::function<const Poly&(int, int)> row_pow = [&](int i, int e) -> const Poly& {
        auto key = std::make_pair(i, e);
        auto it = pw.find(key);
        if (it != pw.end()) return it->second;
        Poly r = (e == 0) ? Poly::monomial(k, Monomial(k, 0), Cyclo(Rational(1)))
                          : row_pow(i, e - 1) * rows[i];
        return pw.emplace(key, std::move(r)).first->second;
    };
    Poly out(k);
    for (const auto& [mon, c] : f.terms()) {
        Poly t = Poly::monomial(k, Monomial(k, 0), c);
        for (int i = 0; i < f.nvars(); ++i)
            if (mon[i] > 0) t = t * row_pow(i, mon[i]);
        out = out + t;
    }
    return out;
}

std::optional<int> weighted_degree(const Poly& f, const WeightSystem& w) {
    if ((int)w.weights.size() != f.nvars())
        throw error("weighted_degree: weight count mismatch");
    std::optional<int> d;
    for (const auto& [m, c] : f.terms()) {
        int wd = 0;
        for (int i = 0; i < f.nvars(); ++i) wd += m[i] * w.weights[i];
        if (!d) d = wd;
        else if (*d != wd) return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

std::vector<Poly> partials(const Poly& f) {
    std::vector<Poly> out;
    for (int i = 0; i < f.nvars(); ++i) {
        Poly di(f.nvars());
        for (const auto& [m, c] : f.terms()) {
            if (m[i] == 0) continue;
            Monomial m2 = m;
            m2[i] -= 1;
            di.add_term(m2, c * Cyclo(Rational(m[i])));
        }
        out.push_back(std::move(di));
    }
    return out;
}

bool is_singular_at(const Poly& f, const ProjPoint& p) {
    if ((int)p.coords.size() != f.nvars())
        throw error("is_singular_at: dimension mismatch");
    if (!evaluate(f, p).is_zero()) return false;
    for (const auto& d : partials(f))
        if (!evaluate(d, p).is_zero()) return false;
    return true;
}

std::vector<Fp_point> finite_field_singular_scan(const Poly& f, long long p) {
    if (f.nvars() != 3)
        throw error("finite_field_singular_scan: needs 3 variables");
    if (!f.homogeneous_degree())
        throw error("finite_field_singular_scan: needs homogeneous input");
    // reduce coefficients once; throws on bad prime
    struct Term { int e0, e1, e2; long long c; };
    auto reduce = [&](const Poly& g) {
        std::vector<Term> ts;
        for (const auto& [m, c] : g.terms()) {
            if (!c.is_rational())
                throw error("finite_field_singular_scan: rational coefficients required");
            ts.push_back({m[0], m[1], m[2], mod_p(c.rational_part(), p)});
        }
        return ts;
    };
    std::vector<std::vector<Term>> polys;
    polys.push_back(reduce(f));
    for (const auto& d : partials(f)) polys.push_back(reduce(d));

    std::vector<std::vector<long long>> pow_table(p);
    int maxd = f.degree();
    for (long long v = 0; v < p; ++v) {
        pow_table[v].resize(maxd + 1);
        pow_table[v][0] = 1;
        for (int e = 1; e <= maxd; ++e)
            pow_table[v][e] = pow_table[v][e - 1] * v % p;
    }
    auto eval = [&](const std::vector<Term>& ts, long long x, long long y,
                    long long z) {
        long long acc = 0;
        for (const auto& t : ts)
            acc = (acc + t.c * pow_table[x][t.e0] % p * pow_table[y][t.e1] % p *
                             pow_table[z][t.e2]) % p;
        return acc;
    };
    std::vector<Fp_point> found;
    auto check = [&](long long x, long long y, long long z) {
        for (const auto& ts : polys)
            if (eval(ts, x, y, z) != 0) return;
        found.push_back({x, y, z});
    };
    for (long long y = 0; y < p; ++y)
        for (long long z = 0; z < p; ++z) check(1, y, z);
    for (long long z = 0; z < p; ++z) check(0, 1, z);
    check(0, 0, 1);
    return found;
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw error("exact_divide: division by zero polynomial");
    if (f.nvars() != g.nvars()) throw error("exact_divide: variable count mismatch");
    Poly rem = f, quot(f.nvars());
    const auto& glead = *g.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        Monomial q(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) {
            q[i] = rlead.first[i] - glead.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        Cyclo c = rlead.second / glead.second;
        Poly t = Poly::monomial(f.nvars(), q, c);
        quot = quot + t;
        rem = rem - t * g;
    }
    return quot;
}

Poly compose(const Poly& f, const std::vector<Poly>& args) {
    if ((int)args.size() != f.nvars()) throw error("compose: argument count mismatch");
    int k = args.empty() ? 0 : args[0].nvars();
    for (const auto& a : args)
        if (a.nvars() != k) throw error("compose: argument variable mismatch");
    std::map<std::pair<int, int>, Poly> cache;
    std::function<const Poly&(int, int)> arg_pow = [&](int i, int e) -> const Poly& {
        auto key = std::make_pair(i, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Poly r = (e == 0) ? Poly::monomial(k, Monomial(k, 0), Cyclo(Rational(1)))
                          : arg_pow(i, e - 1) * args[i];
        return cache.emplace(key, std::move(r)).first->second;
    };
    Poly out(k);
    for (const auto& [mon, c] : f.terms()) {
        Poly t = Poly::monomial(k, Monomial(k, 0), c);
        for (int i = 0; i < f.nvars(); ++i)
            if (mon[i] > 0) t = t * arg_pow(i, mon[i]);
        out = out + t;
    }
    return out;
}

Monomial common_variable_factor(const std::vector<Monomial>& ms) {
    if (ms.empty()) throw error("common_variable_factor: empty set");
    Monomial out = ms[0];
    for (const auto& m : ms)
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = std::min(out[i], m[i]);
    return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == nvars - 1) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[i] = e;
            rec(i + 1, rem - e);
        }
    };
    if (nvars > 0) rec(0, d);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

} // namespace k3
