#include "k3audit/coverbook.hpp"
#include "k3audit/rational.hpp"

#include <atomic>

namespace k3 {

namespace {
std::atomic<int> g_branch_bound{10};
}

int rational_branch_bound() { return g_branch_bound.load(); }

void set_rational_branch_bound(int n) {
    if (n != 10 && n != 19)
        throw error("rational branch bound must be 10 (Zhang) or 19");
    g_branch_bound.store(n);
}

CoverScenario::CoverScenario(int e, int m, int n, std::optional<int> g)
    : e_min(e), mori_fibers(m), rational_branch(n), genus(g) {
    if (n < 0 || m < 0) throw error("CoverScenario: negative counts");
    if (n > rational_branch_bound())
        throw error("CoverScenario: n = " + std::to_string(n) +
                    " exceeds the rational-branch-curve bound " +
                    std::to_string(rational_branch_bound()));
    if (e_min < 3)
        throw error("CoverScenario: e(Y_min) < 3 is not a Del Pezzo value");
}

int euler_residual(const CoverScenario& s) {
    int rhs = 2 * s.e_min + 2 * s.mori_fibers - 2 * s.rational_branch;
    if (s.genus) rhs += 2 * *s.genus - 2;
    return 24 - rhs;
}

int mori_bound(int n, int e_min) { return n + 12 - e_min; }

long long ek_lower_bound(int k, int r_k) {
    if (k <= 0) throw error("ek_lower_bound: k must be positive");
    return ((long long)k * r_k + 1) / 2;
}

bool minimizing_feasible(int big_n, int n, int e_min) {
    if (big_n <= 0) throw error("minimizing_feasible: N must be positive");
    return (long long)big_n * n <= 2LL * (n + 12 - e_min);
}

int nikulin_fix_count(int ord) {
    switch (ord) {
        case 2: return 8;
        case 3: return 6;
        case 4: return 4;
        case 5: return 4;
        case 6: return 2;
        case 7: return 3;
        case 8: return 2;
    }
    throw error("nikulin_fix_count: order must be in 2..8");
}

long long hurwitz_cap(int g) {
    if (g < 2) throw error("hurwitz_cap: genus must be >= 2");
    return 84LL * (g - 1);
}

long long rh_branch_contribution(int cover_degree, int e_total,
                                 int e_quotient) {
    return (long long)cover_degree * e_quotient - e_total;
}

MoriFiberRecord classify_mori_fiber(BranchMeeting meeting) {
    switch (meeting) {
        case BranchMeeting::Contained:
            return {-4, meeting, std::nullopt};
        case BranchMeeting::Disjoint:
            return {-2, meeting, false};
        case BranchMeeting::OnePoint:
            return {-1, meeting, false};
        case BranchMeeting::TwoPoints:
            return {-1, meeting, true};
    }
    throw error("classify_mori_fiber: bad meeting kind");
}

long long ramification_selfint(long long c_sq) { return 2 * c_sq; }

int genus_from_degree(int d) {
    if (d < 1) throw error("genus_from_degree: degree must be >= 1");
    return d + 1;
}

int euler_of_del_pezzo(int d) {
    if (d < 1 || d > 9) throw error("euler_of_del_pezzo: degree must be 1..9");
    return 12 - d;
}

} // namespace k3
