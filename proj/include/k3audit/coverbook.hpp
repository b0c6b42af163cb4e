#pragma once

#include <optional>
#include <string>

namespace k3 {

// Globally configurable bound for the number of rational branch curves:
// 10 (Zhang) by default, 19 (lattice signature) for robustness reruns.
int rational_branch_bound();
void set_rational_branch_bound(int n);   // 10 or 19

// Euler / Mori-fiber bookkeeping for the double cover X -> Y with
// G-minimal model Y_min.
struct CoverScenario {
    int e_min;                 // Euler characteristic of Y_min
    int mori_fibers;           // m
    int rational_branch;       // n; must satisfy the active bound
    std::optional<int> genus;  // genus of the non-rational branch curve

    CoverScenario(int e_min, int m, int n, std::optional<int> g);
};

// 24 - [2 e(Y_min) + 2m - 2n + (2g-2 when a branch curve of genus g exists)];
// zero means the scenario satisfies the Euler characteristic identity
int euler_residual(const CoverScenario& s);

// upper bound for the number of Mori fibers: n + 12 - e(Y_min)
int mori_bound(int n, int e_min);

// |E_{>=k}| >= ceil(k r_k / 2)
long long ek_lower_bound(int k, int r_k);

// N-times-intersected minimizing-curve feasibility: N n / 2 <= n + 12 - e_min
bool minimizing_feasible(int big_n, int n, int e_min);

// fixed-point count of a symplectic automorphism of the given order
int nikulin_fix_count(int ord);

// 84(g-1) for g >= 2
long long hurwitz_cap(int g);

// cover_degree * e(Q) - e(total): the branch point contribution in
// Riemann-Hurwitz for B -> Q
long long rh_branch_contribution(int cover_degree, int e_total, int e_quotient);

enum class BranchMeeting { Contained, Disjoint, OnePoint, TwoPoints };

struct MoriFiberRecord {
    int self_intersection;
    BranchMeeting branch_meeting;
    std::optional<bool> preimage_irreducible;
};

MoriFiberRecord classify_mori_fiber(BranchMeeting meeting);

// image in the quotient of a ramification curve: 2 c^2
long long ramification_selfint(long long c_sq);

// g(B) = deg(Y) + 1 for B ~ -2K_Y on a Del Pezzo surface of degree d
int genus_from_degree(int d);

// e(Del Pezzo of degree d) = 12 - d (3 for P2, 4 for P1 x P1)
int euler_of_del_pezzo(int d);

} // namespace k3
