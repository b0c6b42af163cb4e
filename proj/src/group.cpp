#include "k3audit/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace k3 {

bool LinearCharacter::is_trivial() const {
    for (const auto& v : values)
        if (!(v == Cyclo(Rational(1)))) return false;
    return true;
}

void FiniteMatrixGroup::rebuild_index() {
    index_.clear();
    for (int i = 0; i < (int)elements_.size(); ++i)
        index_.emplace(elements_[i].key(), i);
}

FiniteMatrixGroup FiniteMatrixGroup::closure(const std::vector<GMatrix>& gens,
                                             int cap) {
    if (gens.empty()) throw error("closure: no generators");
    int n = gens[0].size();
    unsigned m = 1;
    for (const auto& g : gens) {
        if (g.size() != n) throw error("closure: generator size mismatch");
        m = (unsigned)lcm_ll(m, g.entry_order_lcm());
    }
    std::vector<GMatrix> pg;
    pg.reserve(gens.size());
    for (const auto& g : gens) {
        GMatrix p = g.promoted(m);
        if (p.det().is_zero()) throw error("closure: singular generator");
        pg.push_back(std::move(p));
    }
    FiniteMatrixGroup out;
    GMatrix id = GMatrix::identity(n).promoted(m);
    out.elements_.push_back(id);
    out.index_.emplace(id.key(), 0);
    std::deque<int> queue{0};
    for (const auto& g : pg) {
        auto k = g.key();
        if (!out.index_.count(k)) {
            out.index_.emplace(k, (int)out.elements_.size());
            out.gen_idx_.push_back((int)out.elements_.size());
            out.elements_.push_back(g);
            queue.push_back((int)out.elements_.size() - 1);
        } else {
            out.gen_idx_.push_back(out.index_.at(k));
        }
    }
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& g : pg) {
            GMatrix nx = out.elements_[cur] * g;
            auto k = nx.key();
            if (!out.index_.count(k)) {
                if ((int)out.elements_.size() >= cap)
                    throw error("closure: cap of " + std::to_string(cap) +
                                " elements exceeded");
                out.index_.emplace(k, (int)out.elements_.size());
                out.elements_.push_back(std::move(nx));
                queue.push_back((int)out.elements_.size() - 1);
            }
        }
    }
    return out;
}

std::vector<GMatrix> FiniteMatrixGroup::generators() const {
    std::vector<GMatrix> out;
    for (int i : gen_idx_) out.push_back(elements_[i]);
    if (out.empty() && !elements_.empty()) out.push_back(elements_[0]);
    return out;
}

int FiniteMatrixGroup::index_of(const GMatrix& g) const {
    unsigned m = elements_.empty() ? 1 : elements_[0].entry_order_lcm();
    GMatrix p = g;
    if (g.entry_order_lcm() != m) {
        unsigned t = (unsigned)lcm_ll(m, g.entry_order_lcm());
        if (t != m) {
            // g lives in a larger field than the group: compare directly
            for (int i = 0; i < (int)elements_.size(); ++i)
                if (elements_[i] == g) return i;
            return -1;
        }
        p = g.promoted(m);
    }
    auto it = index_.find(p.key());
    return it == index_.end() ? -1 : it->second;
}

FiniteMatrixGroup FiniteMatrixGroup::projectivize() const {
    FiniteMatrixGroup out;
    out.projective_ = true;
    for (const auto& e : elements_) {
        GMatrix p = e.projective_normal_form();
        auto k = p.key();
        if (!out.index_.count(k)) {
            out.index_.emplace(k, (int)out.elements_.size());
            out.elements_.push_back(std::move(p));
        }
    }
    // generator images
    for (int gi : gen_idx_) {
        GMatrix p = elements_[gi].projective_normal_form();
        out.gen_idx_.push_back(out.index_.at(p.key()));
    }
    return out;
}

int FiniteMatrixGroup::scalar_subgroup_order() const {
    int c = 0;
    for (const auto& e : elements_)
        if (e.is_scalar()) ++c;
    return c;
}

std::vector<int> FiniteMatrixGroup::derived_subgroup() const {
    // normal closure of generator commutators: close the commutator set
    // under conjugation by group generators, then take the subgroup it
    // generates (products against the generating set only)
    auto canon = [&](GMatrix g) {
        return projective_ ? g.projective_normal_form() : g;
    };
    auto idx = [&](const GMatrix& g) {
        int i = index_of(canon(g));
        if (i < 0) throw error("derived_subgroup: element not in group");
        return i;
    };
    auto gens = generators();
    std::vector<int> sub_gens;
    std::set<int> sub_gen_set;
    auto push_gen = [&](int i) {
        if (sub_gen_set.insert(i).second) sub_gens.push_back(i);
    };
    for (const auto& a : gens)
        for (const auto& b : gens)
            push_gen(idx(a * b * a.inverse() * b.inverse()));
    // generate, then enlarge the generating set until conjugation-stable;
    // conjugating the generators into the subgroup implies normality
    std::set<int> in;
    while (true) {
        in = {idx(GMatrix::identity(matrix_size()))};
        std::deque<int> queue(in.begin(), in.end());
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int s : sub_gens) {
                int i = idx(elements_[cur] * elements_[s]);
                if (in.insert(i).second) queue.push_back(i);
            }
        }
        bool stable = true;
        for (const auto& g : gens)
            for (int s : std::vector<int>(sub_gens)) {
                int i = idx(g * elements_[s] * g.inverse());
                if (!in.count(i)) {
                    push_gen(i);
                    stable = false;
                }
            }
        if (stable) break;
    }
    return std::vector<int>(in.begin(), in.end());
}

FiniteMatrixGroup::Profile FiniteMatrixGroup::structural_profile() const {
    Profile p;
    p.order = order();
    for (const auto& e : elements_) {
        if (projective_) {
            // projective order: smallest k with e^k scalar
            GMatrix pw = e;
            int k = 1;
            while (!pw.is_scalar()) {
                pw = pw * e;
                ++k;
                if (k > 4096) throw error("profile: projective order diverges");
            }
            p.element_orders[k]++;
        } else {
            p.element_orders[e.order()]++;
        }
    }
    // center: elements commuting with all generators
    auto gens = generators();
    auto commutes_projectively = [&](const GMatrix& a, const GMatrix& b) {
        GMatrix ab = a * b, ba = b * a;
        if (!projective_) return ab == ba;
        return ab.projective_normal_form() == ba.projective_normal_form();
    };
    for (const auto& e : elements_) {
        bool central = true;
        for (const auto& g : gens)
            if (!commutes_projectively(e, g)) { central = false; break; }
        if (central) p.center_order++;
    }
    auto der = derived_subgroup();
    p.derived_order = (int)der.size();

    // abelianization: quotient by derived subgroup
    std::set<int> derived(der.begin(), der.end());
    std::vector<int> coset_of(order(), -1);
    std::vector<int> reps;
    for (int i = 0; i < order(); ++i) {
        if (coset_of[i] != -1) continue;
        int c = (int)reps.size();
        reps.push_back(i);
        for (int d : der) {
            GMatrix x = elements_[i] * elements_[d];
            if (projective_) x = x.projective_normal_form();
            int j = index_of(x);
            if (j >= 0) coset_of[j] = c;
        }
        coset_of[i] = c;
    }
    int q = (int)reps.size();
    // multiplication table of the (abelian) quotient
    auto qmul = [&](int a, int b) {
        GMatrix x = elements_[reps[a]] * elements_[reps[b]];
        if (projective_) x = x.projective_normal_form();
        return coset_of[index_of(x)];
    };
    // invariant factors by repeatedly splitting off a maximal-order cyclic part
    std::vector<int> elems(q);
    for (int i = 0; i < q; ++i) elems[i] = i;
    // subgroup generated by a set, inside the quotient
    auto gen_subgroup = [&](std::vector<int> gens_q) {
        std::set<int> sub{0};
        std::deque<int> work{0};
        while (!work.empty()) {
            int cur = work.front();
            work.pop_front();
            for (int g : gens_q) {
                int nx = qmul(cur, g);
                if (sub.insert(nx).second) work.push_back(nx);
            }
        }
        return sub;
    };
    std::vector<int> chosen;
    while ((int)gen_subgroup(chosen).size() < q) {
        auto cur = gen_subgroup(chosen);
        int best = -1, best_ord = 0;
        for (int e : elems) {
            if (cur.count(e)) continue;
            // order of e in quotient
            int o = 1, x = e;
            while (x != 0) { x = qmul(x, e); ++o; }
            if (o > best_ord) { best_ord = o; best = e; }
        }
        chosen.push_back(best);
        p.abelianization.push_back(best_ord);
    }
    if (p.abelianization.empty()) p.abelianization.push_back(1);
    return p;
}

std::vector<LinearCharacter> FiniteMatrixGroup::linear_characters() const {
    // characters factor through the abelianization
    auto der = derived_subgroup();
    std::set<int> derived(der.begin(), der.end());
    std::vector<int> coset_of(order(), -1);
    std::vector<int> reps;
    for (int i = 0; i < order(); ++i) {
        if (coset_of[i] != -1) continue;
        int c = (int)reps.size();
        reps.push_back(i);
        for (int d : der) {
            GMatrix x = elements_[i] * elements_[d];
            if (projective_) x = x.projective_normal_form();
            coset_of[index_of(x)] = c;
        }
        coset_of[i] = c;
    }
    int q = (int)reps.size();
    auto qmul = [&](int a, int b) {
        GMatrix x = elements_[reps[a]] * elements_[reps[b]];
        if (projective_) x = x.projective_normal_form();
        return coset_of[index_of(x)];
    };
    // find an independent generating set with orders
    std::vector<int> gens_q, orders_q;
    {
        auto subgroup = [&](const std::vector<int>& gg) {
            std::set<int> sub{0};
            std::deque<int> work{0};
            while (!work.empty()) {
                int cur = work.front();
                work.pop_front();
                for (int g : gg) {
                    int nx = qmul(cur, g);
                    if (sub.insert(nx).second) work.push_back(nx);
                }
            }
            return sub;
        };
        while ((int)subgroup(gens_q).size() < q) {
            auto cur = subgroup(gens_q);
            int best = -1, best_ord = 0;
            for (int e = 0; e < q; ++e) {
                if (cur.count(e)) continue;
                int o = 1, x = e;
                while (x != 0) { x = qmul(x, e); ++o; }
                if (o > best_ord) { best_ord = o; best = e; }
            }
            gens_q.push_back(best);
            orders_q.push_back(best_ord);
        }
    }
    // enumerate root-of-unity assignments consistent with the quotient table
    std::vector<LinearCharacter> out;
    std::vector<int> assign(gens_q.size(), 0);
    auto build_and_check = [&]() -> std::optional<std::vector<Cyclo>> {
        // express every coset as product of generator powers via BFS
        std::vector<std::optional<Cyclo>> val(q);
        val[0] = Cyclo(Rational(1));
        std::deque<int> work{0};
        while (!work.empty()) {
            int cur = work.front();
            work.pop_front();
            for (size_t t = 0; t < gens_q.size(); ++t) {
                int nx = qmul(cur, gens_q[t]);
                Cyclo v = *val[cur] * Cyclo::root_of_unity(orders_q[t], assign[t]);
                if (!val[nx]) {
                    val[nx] = v;
                    work.push_back(nx);
                } else if (!(*val[nx] == v)) {
                    return std::nullopt;
                }
            }
        }
        // verify multiplicativity on the whole quotient table
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                if (!(*val[qmul(a, b)] == *val[a] * *val[b])) return std::nullopt;
        std::vector<Cyclo> full;
        full.reserve(order());
        for (int i = 0; i < order(); ++i) full.push_back(*val[coset_of[i]]);
        return full;
    };
    std::function<void(size_t)> rec = [&](size_t t) {
        if (t == gens_q.size()) {
            if (auto full = build_and_check())
                out.push_back(LinearCharacter{std::move(*full)});
            return;
        }
        for (int k = 0; k < orders_q[t]; ++k) {
            assign[t] = k;
            rec(t + 1);
        }
    };
    rec(0);
    if ((int)out.size() != q)
        throw error("linear_characters: expected " + std::to_string(q) +
                    " characters, found " + std::to_string(out.size()));
    // deterministic order: trivial first, then by value list key
    std::sort(out.begin(), out.end(), [](const LinearCharacter& a,
                                         const LinearCharacter& b) {
        auto keyof = [](const LinearCharacter& c) {
            std::string s;
            for (const auto& v : c.values) s += v.str() + "|";
            return s;
        };
        bool ta = a.is_trivial(), tb = b.is_trivial();
        if (ta != tb) return ta;
        return keyof(a) < keyof(b);
    });
    return out;
}

std::vector<std::vector<Cyclo>> kernel_basis(std::vector<std::vector<Cyclo>> a) {
    if (a.empty()) return {};
    int rows = (int)a.size(), cols = (int)a[0].size();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { piv = i; break; }
        if (piv == -1) continue;
        std::swap(a[piv], a[r]);
        Cyclo inv = a[r][c].inverse();
        for (int j = 0; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Cyclo f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Cyclo>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Cyclo> v(cols);
        v[c] = Cyclo(Rational(1));
        for (int i = 0; i < (int)pivot_col.size(); ++i)
            v[pivot_col[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FiniteMatrixGroup::FixedPoint>
FiniteMatrixGroup::fixed_points_projective(const GMatrix& g) {
    int m = g.order();   // throws for non-finite-order input
    int n = g.size();
    std::vector<FixedPoint> out;
    for (int j = 0; j < m; ++j) {
        Cyclo lambda = Cyclo::root_of_unity(m, j);
        // kernel of (g - lambda I)
        std::vector<std::vector<Cyclo>> a(n, std::vector<Cyclo>(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                a[i][k] = g.at(i, k);
                if (i == k) a[i][k] -= lambda;
            }
        auto ker = kernel_basis(std::move(a));
        if (ker.empty()) continue;
        FixedPoint fp;
        fp.eigenvalue = lambda;
        fp.positive_dimensional = ker.size() > 1;
        for (auto& v : ker) fp.eigenlines.push_back(ProjPoint{std::move(v)});
        out.push_back(std::move(fp));
    }
    return out;
}

Cyclo FiniteMatrixGroup::tangent_determinant(const GMatrix& g, const ProjPoint& v) {
    // v must be an eigenline: g v = lambda v
    auto gv = g.apply(v.coords);
    Cyclo lambda;
    bool found = false;
    for (size_t i = 0; i < v.coords.size(); ++i) {
        if (!v.coords[i].is_zero()) {
            lambda = gv[i] / v.coords[i];
            found = true;
            break;
        }
    }
    if (!found) throw error("tangent_determinant: zero vector");
    for (size_t i = 0; i < v.coords.size(); ++i)
        if (!(gv[i] == lambda * v.coords[i]))
            throw error("tangent_determinant: v is not an eigenline of g");
    return g.det() / lambda.pow(g.size());
}

} // namespace k3
