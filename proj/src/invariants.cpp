#include "k3audit/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace k3 {

Poly act(const GMatrix& g, const Poly& f) {
    if (g.size() != f.nvars()) throw error("act: dimension mismatch");
    return substitute_linear(f, g.rows());
}

namespace {

// multiplier c with f o g = c f, if any
std::optional<Cyclo> multiplier(const Poly& f, const GMatrix& g) {
    Poly fg = act(g, f);
    if (fg.term_count() != f.term_count()) return std::nullopt;
    auto it = f.terms().begin();
    Cyclo c = fg.coeff(it->first) / it->second;
    if (!(fg == f.scaled(c))) return std::nullopt;
    return c;
}

// a point where f does not vanish, with small integer coordinates
ProjPoint witness_point(const Poly& f) {
    int n = f.nvars();
    std::vector<int> v(n, 1);
    for (int trial = 0; trial < 4096; ++trial) {
        ProjPoint p;
        for (int i = 0; i < n; ++i) p.coords.push_back(Cyclo(Rational(v[i])));
        if (!evaluate(f, p).is_zero()) return p;
        // next tuple
        for (int i = 0; i < n; ++i) {
            if (v[i] < 7) { v[i]++; break; }
            v[i] = 1;
        }
    }
    throw error("curve_character: no non-vanishing witness point found");
}

} // namespace

std::optional<LinearCharacter> curve_character(const Poly& f,
                                               const FiniteMatrixGroup& g) {
    if (f.is_zero()) throw error("curve_character: zero polynomial");
    // full polynomial check on the generators; since
    // f o (ab) = (f o a) o b, semi-invariance extends to every product
    for (const auto& gen : g.generators())
        if (!multiplier(f, gen)) return std::nullopt;
    // pointwise certificate on all elements fixes the character values
    ProjPoint w = witness_point(f);
    Cyclo fw_inv = evaluate(f, w).inverse();
    LinearCharacter chi;
    chi.values.reserve(g.order());
    for (const auto& e : g.elements()) {
        ProjPoint ew{e.apply(w.coords)};
        chi.values.push_back(evaluate(f, ew) * fw_inv);
    }
    return chi;
}

Poly reynolds(const Poly& f, const FiniteMatrixGroup& g,
              const LinearCharacter& chi) {
    if ((int)chi.values.size() != g.order())
        throw error("reynolds: character/group mismatch");
    Poly acc(f.nvars());
    for (int i = 0; i < g.order(); ++i) {
        Poly fg = act(g.elements()[i], f);
        acc = acc + fg.scaled(chi.values[i].inverse());
    }
    return acc.scaled(Cyclo(Rational(1) / g.order()));
}

Cyclo degree_trace(const GMatrix& g, int degree) {
    // diagonal of the substitution matrix on degree-d monomials:
    // coefficient of x^alpha in prod_i (row_i . x)^{alpha_i}
    int n = g.size();
    auto mons = monomials_of_degree(n, degree);
    // cache row powers as polynomials
    std::map<std::pair<int, int>, Poly> cache;
    std::function<const Poly&(int, int)> row_pow = [&](int i, int e) -> const Poly& {
        auto key = std::make_pair(i, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Poly r(n);
        if (e == 0) {
            r.add_term(Monomial(n, 0), Cyclo(Rational(1)));
        } else {
            Poly li(n);
            for (int j = 0; j < n; ++j) {
                Monomial mm(n, 0);
                mm[j] = 1;
                li.add_term(mm, g.at(i, j));
            }
            r = row_pow(i, e - 1) * li;
        }
        return cache.emplace(key, std::move(r)).first->second;
    };
    Cyclo tr;
    for (const auto& alpha : mons) {
        Poly prod(n);
        prod.add_term(Monomial(n, 0), Cyclo(Rational(1)));
        for (int i = 0; i < n; ++i)
            if (alpha[i] > 0) prod = prod * row_pow(i, alpha[i]);
        tr += prod.coeff(alpha);
    }
    return tr;
}

namespace {
std::map<std::string, Cyclo> g_trace_cache;
std::mutex g_trace_mutex;
}

int invariant_dimension(const FiniteMatrixGroup& g, int degree,
                        const LinearCharacter& chi) {
    if ((int)chi.values.size() != g.order())
        throw error("invariant_dimension: character/group mismatch");
    // traces of powers determine the characteristic polynomial, which
    // determines the trace on degree-d forms; memoize across calls so that
    // conjugate elements (and repeated audits) share the expansion
    auto char_poly_key = [degree](const GMatrix& m) {
        int n = m.size();
        std::vector<Cyclo> pk;
        GMatrix p = m;
        for (int k = 1; k <= n; ++k) {
            Cyclo tr;
            for (int i = 0; i < n; ++i) tr += p.at(i, i);
            pk.push_back(tr);
            if (k < n) p = p * m;
        }
        std::string s = std::to_string(n) + "@" + std::to_string(degree) + "|";
        for (const auto& t : pk) s += t.str() + "|";
        return s;
    };
    Cyclo total;
    for (int i = 0; i < g.order(); ++i) {
        const auto& e = g.elements()[i];
        auto key = char_poly_key(e);
        Cyclo tr;
        bool have = false;
        {
            std::lock_guard<std::mutex> lock(g_trace_mutex);
            auto it = g_trace_cache.find(key);
            if (it != g_trace_cache.end()) { tr = it->second; have = true; }
        }
        if (!have) {
            tr = degree_trace(e, degree);
            std::lock_guard<std::mutex> lock(g_trace_mutex);
            g_trace_cache.emplace(std::move(key), tr);
        }
        total += chi.values[i].inverse() * tr;
    }
    Cyclo avg = total / Cyclo(Rational(g.order()));
    if (!avg.is_rational())
        throw error("invariant_dimension: non-rational average (bug)");
    Rational r = avg.rational_part();
    if (den(r) != 1 || r < 0)
        throw error("invariant_dimension: average " + to_string(r) +
                    " is not a nonnegative integer (bug)");
    return (int)num(r);
}

InvariantSpace invariant_basis(const FiniteMatrixGroup& g, int degree,
                               const LinearCharacter& chi,
                               size_t monomial_cap) {
    int n = g.matrix_size();
    auto mons = monomials_of_degree(n, degree);
    if (mons.size() > monomial_cap)
        throw error("invariant_basis: monomial count exceeds cap");
    std::map<Monomial, int, DegLexLess> idx;
    for (int i = 0; i < (int)mons.size(); ++i) idx.emplace(mons[i], i);
    // stack (rho_d(gen) - chi(gen) I) over all generators
    std::vector<std::vector<Cyclo>> stacked;
    for (int gi : g.generator_indices()) {
        const GMatrix& gen = g.elements()[gi];
        Cyclo cg = chi.values[gi];
        // columns are images of monomials
        std::vector<std::vector<Cyclo>> cols(mons.size());
        for (size_t c = 0; c < mons.size(); ++c) {
            Poly img = act(gen, Poly::monomial(n, mons[c], Cyclo(Rational(1))));
            std::vector<Cyclo> col(mons.size());
            for (const auto& [m, cc] : img.terms()) col[idx.at(m)] = cc;
            col[c] -= cg;
            cols[c] = std::move(col);
        }
        size_t base = stacked.size();
        stacked.resize(base + mons.size(), std::vector<Cyclo>(mons.size()));
        for (size_t r = 0; r < mons.size(); ++r)
            for (size_t c = 0; c < mons.size(); ++c)
                stacked[base + r][c] = cols[c][r];
    }
    auto ker = kernel_basis(std::move(stacked));
    InvariantSpace out;
    out.degree = degree;
    out.character = chi;
    for (const auto& v : ker) {
        Poly f(n);
        for (size_t i = 0; i < mons.size(); ++i)
            if (!v[i].is_zero()) f.add_term(mons[i], v[i]);
        out.basis.push_back(std::move(f));
    }
    int expected = invariant_dimension(g, degree, chi);
    if ((int)out.basis.size() != expected)
        throw error("invariant_basis: dimension " +
                    std::to_string(out.basis.size()) +
                    " disagrees with trace formula " + std::to_string(expected));
    return out;
}

std::vector<Monomial> torus_invariant_monomials(
    const std::vector<int>& weights, int modulus,
    const std::vector<std::pair<std::vector<int>, int>>& blocks) {
    int nvars = (int)weights.size();
    // enumerate block by block
    std::vector<Monomial> acc{Monomial(nvars, 0)};
    for (const auto& [vars, deg] : blocks) {
        std::vector<Monomial> next;
        std::vector<Monomial> block_mons = monomials_of_degree((int)vars.size(), deg);
        for (const auto& base : acc) {
            for (const auto& bm : block_mons) {
                Monomial m = base;
                for (size_t i = 0; i < vars.size(); ++i) m[vars[i]] += bm[i];
                next.push_back(std::move(m));
            }
        }
        acc = std::move(next);
    }
    std::vector<Monomial> out;
    for (const auto& m : acc) {
        long long w = 0;
        for (int i = 0; i < nvars; ++i) w += (long long)m[i] * weights[i];
        if (modulus > 0 && ((w % modulus) + modulus) % modulus != 0) continue;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

} // namespace k3
