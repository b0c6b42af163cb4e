#pragma once

#include "k3audit/audit.hpp"
#include "k3audit/catalogue.hpp"
#include "k3audit/group.hpp"
#include "k3audit/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace k3 {

// Configuration shared by the composite audits.
struct AuditConfig {
    std::vector<long long> scan_primes{7, 11, 13};
};

std::vector<std::string> case_ids();          // 1a,1b,2,3a,3b,9,10,11a,11b
std::vector<std::string> nonexistence_ids();  // M20,F384,A44,T192,H192

// one audit per classification case
AuditReport verify_case(const std::string& id, const AuditConfig& cfg = {});

// one audit per excluded group; a passing audit = contradiction established
AuditReport audit_nonexistence(const std::string& group,
                               const AuditConfig& cfg = {});

// Exact linear solve for the nodal-sextic coefficients a_3..a_7.
struct QuinticDPResult {
    std::vector<Rational> a;        // a_3..a_7, normalized so a_3 = 2
    Poly sextic{3};                 // assembled curve
    std::vector<std::string> constraint_log;
};
QuinticDPResult derive_quintic_dp_sextic();

// Degree-6 semi-invariant decomposition for the plane action of order 72.
struct M9Sextics {
    std::vector<Poly> by_character;     // one basis element per character
    std::vector<bool> character_trivial;
    Poly mukai{3};
    Poly f_a1{3}, f_a2{3};              // the two conjugate irreducible mates
    Poly reducible{3};                  // splits as a product of two cubics
    int irreducible_curve_count = 0;
};
M9Sextics derive_m9_sextics();

// f composed with the standard quadratic involution of the plane, stripped of
// exceptional line factors until degree 6; success = scalar multiple of f.
struct ProperTransformResult {
    bool invariant = false;
    Cyclo scalar;
    std::vector<std::string> stripped_factors;
};
ProperTransformResult proper_transform_invariance(const Poly& f);

// admissible orbit lengths |G| / |C| over the cyclic subgroups of G
std::vector<long long> orbit_length_menu(const FiniteMatrixGroup& g);

// Product-of-lines scenario on P1 x P1: monomial exponents are
// (z0, z1, w0, w1); the four torus fixed points correspond to the corner
// monomials.  Returns how many fixed points avoid every candidate curve.
int sigma_fixed_point_membership(const std::vector<Monomial>& monomials);

// good primes for a scan: the requested primes minus those dividing a
// coefficient denominator or the cyclotomic order of the group field
std::vector<long long> good_scan_primes(const Poly& f, unsigned group_field_order,
                                        const std::vector<long long>& requested);

} // namespace k3
