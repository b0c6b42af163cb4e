#pragma once

#include <optional>
#include <string>
#include <vector>

namespace k3 {

// Picard lattice of a Del Pezzo surface of degree d obtained from P2:
// basis H, E1..E_{9-d}; intersection form diag(+1, -1, ..., -1);
// K = -3H + sum E_i.  The quadric P1 x P1 (degree 8) is a separate rank-2
// lattice with form [[0,1],[1,0]] and K = (-2,-2).
struct PicardLattice {
    enum Kind { BlowUp, Quadric } kind = BlowUp;
    int degree = 9;

    static PicardLattice blowup(int degree);     // 1 <= d <= 9
    static PicardLattice quadric();              // P1 x P1

    int rank() const;
    std::vector<int> canonical_class() const;    // coefficient vector of K
};

// coefficient vector (a; b_1..b_{9-d}) meaning a H - sum b_i E_i, or
// (p, q) bidegree coordinates on the quadric lattice
struct DivisorClass {
    std::vector<int> c;
};

long long pairing(const DivisorClass& c1, const DivisorClass& c2,
                  const PicardLattice& l);

// all classes with C.C = -1 and C.K = -1, deterministic order
std::vector<DivisorClass> minus_one_classes(const PicardLattice& l);

struct Graph {
    int vertices = 0;
    // weighted adjacency; edge iff pairing >= 1, weight = pairing
    std::vector<std::vector<int>> weight;

    int edge_count() const;
    std::optional<int> regularity() const;       // common degree, if regular
    std::optional<int> girth() const;            // nullopt for forests
    long long automorphism_count(int max_vertices = 12) const;
    std::string dot() const;
};

Graph intersection_graph(const std::vector<DivisorClass>& classes,
                         const PicardLattice& l);

// g = 1 + (c.c + c.K)/2 ; throws when not an integer
int genus_of_class(const DivisorClass& c, const PicardLattice& l);

// orbit size of c under the Weyl group generated by simple reflections
// s_i(x) = x + (x.alpha_i) alpha_i for alpha_0 = H-E1-E2-E3, alpha_i = E_i-E_{i+1}
long long weyl_orbit(const DivisorClass& c, const PicardLattice& l,
                     long long cap = 100000);

// h^0(Y, O(-r K_Y)) = 1 + r(r+1) d / 2 on a Del Pezzo surface of degree d
long long anticanonical_dim(int r, int degree);

// blow-down of a (-1)-curve E: (b(B))^2 = B^2 + (E.B)^2
long long blowdown_selfint(long long b_sq, long long eb);

} // namespace k3
