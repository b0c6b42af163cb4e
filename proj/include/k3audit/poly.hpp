#pragma once

#include "k3audit/cyclo.hpp"

#include <map>
#include <optional>
#include <vector>

namespace k3 {

// Exponent vector; length = ambient variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// degree-lexicographic order, variable order as declared
struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct WeightSystem {
    std::vector<int> weights;   // all >= 1; plain projective space is all-ones
};

struct ProjPoint {
    std::vector<Cyclo> coords;  // not all zero
};

// Sparse multivariate polynomial over Cyclo.  No zero coefficients stored;
// iteration order is degree-lexicographic.
class Poly {
public:
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, std::map<Monomial, Cyclo, DegLexLess> terms);

    static Poly zero(int nvars) { return Poly(nvars); }
    static Poly monomial(int nvars, const Monomial& m, const Cyclo& c);
    static Poly variable(int nvars, int i);   // x_i

    int nvars() const { return nvars_; }
    const std::map<Monomial, Cyclo, DegLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int degree() const;                       // max total degree; -1 for zero
    std::optional<int> homogeneous_degree() const;

    void add_term(const Monomial& m, const Cyclo& c);
    Cyclo coeff(const Monomial& m) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Cyclo& c) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    std::map<Monomial, Cyclo, DegLexLess> terms_;
};

// --- operations -----------------------------------------------------------

Cyclo evaluate(const Poly& f, const ProjPoint& p);

// f o M where (f o M)(y) = f(M y); M given as rows x cols = nvars(f) x k.
// k < nvars restricts to a linear subspace.
Poly substitute_linear(const Poly& f,
                       const std::vector<std::vector<Cyclo>>& m);

// common weighted degree, or nullopt when terms disagree (inhomogeneous)
std::optional<int> weighted_degree(const Poly& f, const WeightSystem& w);

std::vector<Poly> partials(const Poly& f);

bool is_singular_at(const Poly& f, const ProjPoint& p);

// All points of P^2(F_p) where f and all partials vanish (3-variable f with
// p dividing no coefficient denominator).  Points as normalized triples.
struct Fp_point {
    long long x, y, z;
    bool operator==(const Fp_point&) const = default;
};
std::vector<Fp_point> finite_field_singular_scan(const Poly& f, long long p);

// h with f = g*h exactly, or nullopt
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

// componentwise minimum exponent vector of a nonempty set
Monomial common_variable_factor(const std::vector<Monomial>& ms);

// f(args[0], ..., args[nvars-1]) for polynomial arguments over shared vars
Poly compose(const Poly& f, const std::vector<Poly>& args);

// enumerate degree-d monomials in nvars variables, deg-lex order
std::vector<Monomial> monomials_of_degree(int nvars, int d);

} // namespace k3
