#pragma once

#include "k3audit/group.hpp"
#include "k3audit/poly.hpp"

#include <optional>
#include <vector>

namespace k3 {

// right action: (act(g, f))(x) = f(g x)
Poly act(const GMatrix& g, const Poly& f);

// the unique character chi with f o g = chi(g) f for all g, if it exists;
// full check on generators, pointwise certificate on every element
std::optional<LinearCharacter> curve_character(const Poly& f,
                                               const FiniteMatrixGroup& g);

// (1/|G|) sum_g chi(g)^-1 (f o g); projection onto chi-semi-invariants
Poly reynolds(const Poly& f, const FiniteMatrixGroup& g,
              const LinearCharacter& chi);

// dim of the chi-semi-invariant subspace of degree-d forms via the trace
// formula; hard failure when the average is not a nonnegative integer
int invariant_dimension(const FiniteMatrixGroup& g, int degree,
                        const LinearCharacter& chi);

struct InvariantSpace {
    int degree = 0;
    LinearCharacter character;
    std::vector<Poly> basis;     // reduced row echelon over the monomial basis
};

InvariantSpace invariant_basis(const FiniteMatrixGroup& g, int degree,
                               const LinearCharacter& chi,
                               size_t monomial_cap = 10000);

// all monomials of the given block-degrees whose weighted exponent sum is
// 0 mod r.  blocks: (variable index list, degree of that block); weights are
// per-variable residues mod r.  Deterministic (deg-lex) order.
std::vector<Monomial> torus_invariant_monomials(
    const std::vector<int>& weights, int modulus,
    const std::vector<std::pair<std::vector<int>, int>>& blocks);

// trace of g acting on degree-d forms (monomial-basis matrix diagonal)
Cyclo degree_trace(const GMatrix& g, int degree);

} // namespace k3
