#include "k3audit/delpezzo.hpp"
#include "k3audit/rational.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace k3 {

PicardLattice PicardLattice::blowup(int degree) {
    if (degree < 1 || degree > 9)
        throw error("PicardLattice: degree must be in 1..9");
    PicardLattice l;
    l.kind = BlowUp;
    l.degree = degree;
    return l;
}

PicardLattice PicardLattice::quadric() {
    PicardLattice l;
    l.kind = Quadric;
    l.degree = 8;
    return l;
}

int PicardLattice::rank() const {
    return kind == Quadric ? 2 : 10 - degree;
}

std::vector<int> PicardLattice::canonical_class() const {
    if (kind == Quadric) return {-2, -2};
    std::vector<int> k(rank(), -1);
    k[0] = -3;
    return k;
}

long long pairing(const DivisorClass& c1, const DivisorClass& c2,
                  const PicardLattice& l) {
    if ((int)c1.c.size() != l.rank() || (int)c2.c.size() != l.rank())
        throw error("pairing: rank mismatch");
    if (l.kind == PicardLattice::Quadric)
        return (long long)c1.c[0] * c2.c[1] + (long long)c1.c[1] * c2.c[0];
    long long s = (long long)c1.c[0] * c2.c[0];
    for (int i = 1; i < l.rank(); ++i) s -= (long long)c1.c[i] * c2.c[i];
    return s;
}

std::vector<DivisorClass> minus_one_classes(const PicardLattice& l) {
    std::vector<DivisorClass> out;
    if (l.kind == PicardLattice::Quadric) {
        // 2pq = -1 has no integer solutions
        return out;
    }
    int ne = l.rank() - 1;      // number of exceptional classes
    // C = aH - sum b_i E_i with a^2 - sum b^2 = -1, 3a - sum b = 1.
    // Cauchy-Schwarz: (3a-1)^2 = (sum b)^2 <= ne * (a^2+1) limits a;
    // a in [-1 .. 7] covers every degree, and a = -1 is vacuous.
    for (int a = -1; a <= 7; ++a) {
        long long rhs = (long long)(3 * a - 1) * (3 * a - 1);
        if (ne == 0) {
            if (rhs == 0 && (long long)a * a == -1) {}  // impossible
            continue;
        }
        if (rhs > (long long)ne * (a * a + 1)) continue;
        // enumerate b vectors with sum b = 3a-1, sum b^2 = a^2+1
        std::vector<int> b(ne, 0);
        int target_s = 3 * a - 1;
        long long target_q = (long long)a * a + 1;
        std::function<void(int, int, long long)> rec = [&](int i, int s, long long q) {
            if (q < 0) return;
            if (i == ne) {
                if (s == target_s && q == 0) {
                    DivisorClass c;
                    c.c.push_back(a);
                    for (int x : b) c.c.push_back(x);
                    out.push_back(std::move(c));
                }
                return;
            }
            int rem = ne - i;
            // bound each coordinate by remaining quadratic budget
            int lim = (int)std::min<long long>(7, (long long)std::sqrt((double)q) + 1);
            for (int v = -lim; v <= lim; ++v) {
                if ((long long)v * v > q) continue;
                // prune on achievable sum: |target_s - (s+v)| <= (rem-1)*lim'
                long long q2 = q - (long long)v * v;
                long long max_abs = 0;
                // remaining sum of squares q2 over rem-1 coords bounds sum
                // |sum| <= sqrt((rem-1) q2)
                max_abs = (long long)std::sqrt((double)(rem - 1) * q2) + 1;
                long long need = target_s - (s + v);
                if (rem - 1 == 0) {
                    if (need != 0) continue;
                } else if (need > max_abs || -need > max_abs) {
                    continue;
                }
                b[i] = v;
                rec(i + 1, s + v, q2);
                b[i] = 0;
            }
        };
        rec(0, 0, target_q);
    }
    std::sort(out.begin(), out.end(), [](const DivisorClass& x, const DivisorClass& y) {
        return x.c < y.c;
    });
    return out;
}

Graph intersection_graph(const std::vector<DivisorClass>& classes,
                         const PicardLattice& l) {
    Graph g;
    g.vertices = (int)classes.size();
    g.weight.assign(g.vertices, std::vector<int>(g.vertices, 0));
    for (int i = 0; i < g.vertices; ++i)
        for (int j = i + 1; j < g.vertices; ++j) {
            long long p = pairing(classes[i], classes[j], l);
            if (p >= 1) g.weight[i][j] = g.weight[j][i] = (int)p;
        }
    return g;
}

int Graph::edge_count() const {
    int c = 0;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j)
            if (weight[i][j] >= 1) ++c;
    return c;
}

std::optional<int> Graph::regularity() const {
    std::optional<int> deg;
    for (int i = 0; i < vertices; ++i) {
        int d = 0;
        for (int j = 0; j < vertices; ++j)
            if (j != i && weight[i][j] >= 1) ++d;
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

std::optional<int> Graph::girth() const {
    // shortest cycle via BFS from each vertex
    int best = -1;
    for (int s = 0; s < vertices; ++s) {
        std::vector<int> dist(vertices, -1), parent(vertices, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < vertices; ++v) {
                if (v == u || weight[u][v] < 1) continue;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if (parent[u] != v && v != u) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

long long Graph::automorphism_count(int max_vertices) const {
    if (vertices > max_vertices)
        throw error("automorphism_count: vertex cap exceeded");
    // backtracking over vertex images, degree-sequence pruning
    std::vector<int> deg(vertices, 0);
    for (int i = 0; i < vertices; ++i)
        for (int j = 0; j < vertices; ++j)
            if (j != i && weight[i][j] >= 1) deg[i]++;
    std::vector<int> img(vertices, -1);
    std::vector<bool> used(vertices, false);
    long long count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == vertices) {
            ++count;
            return;
        }
        for (int t = 0; t < vertices; ++t) {
            if (used[t] || deg[t] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (weight[t][img[u]] != weight[v][u]) ok = false;
            if (ok) {
                img[v] = t;
                used[t] = true;
                rec(v + 1);
                used[t] = false;
                img[v] = -1;
            }
        }
    };
    rec(0);
    return count;
}

std::string Graph::dot() const {
    std::ostringstream os;
    os << "graph g {\n";
    for (int i = 0; i < vertices; ++i) os << "  v" << i << ";\n";
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j)
            if (weight[i][j] >= 1) {
                os << "  v" << i << " -- v" << j;
                if (weight[i][j] > 1) os << " [label=" << weight[i][j] << "]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

int genus_of_class(const DivisorClass& c, const PicardLattice& l) {
    DivisorClass k{l.canonical_class()};
    long long cc = pairing(c, c, l), ck = pairing(c, k, l);
    long long twice = cc + ck;
    if (twice % 2 != 0)
        throw error("genus_of_class: half-integer genus for this class");
    return (int)(1 + twice / 2);
}

long long weyl_orbit(const DivisorClass& c, const PicardLattice& l,
                     long long cap) {
    if (l.kind == PicardLattice::Quadric)
        throw error("weyl_orbit: blow-up lattices only");
    int r = l.rank(), ne = r - 1;
    // simple roots in (a; b) coordinates (aH - sum b_i E_i):
    // alpha_0 = H - E1 - E2 - E3 -> (1; 1,1,1,0..), only for >= 3 points;
    // alpha_i = E_i - E_{i+1}   -> (0; .., b_i = -1, b_{i+1} = +1, ..)
    std::vector<std::vector<int>> roots;
    if (ne >= 3) {
        std::vector<int> a0(r, 0);
        a0[0] = 1; a0[1] = 1; a0[2] = 1; a0[3] = 1;
        roots.push_back(a0);
    }
    for (int i = 1; i < ne; ++i) {
        std::vector<int> ai(r, 0);
        ai[i] = -1; ai[i + 1] = 1;
        roots.push_back(ai);
    }
    if (roots.empty()) return 1;
    std::set<std::vector<int>> seen{c.c};
    std::deque<std::vector<int>> q{c.c};
    while (!q.empty()) {
        auto cur = q.front();
        q.pop_front();
        for (const auto& al : roots) {
            DivisorClass x{cur}, a{al};
            long long xa = pairing(x, a, l);
            std::vector<int> nx = cur;
            for (int i = 0; i < r; ++i) nx[i] += (int)xa * al[i];
            if (seen.insert(nx).second) {
                if ((long long)seen.size() > cap)
                    throw error("weyl_orbit: cap exceeded");
                q.push_back(std::move(nx));
            }
        }
    }
    return (long long)seen.size();
}

long long anticanonical_dim(int r, int degree) {
    return 1 + (long long)r * (r + 1) * degree / 2;
}

long long blowdown_selfint(long long b_sq, long long eb) {
    return b_sq + eb * eb;
}

} // namespace k3
