#pragma once

#include "k3audit/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace k3 {

// Degree-1 character: group element -> root of unity, indexed by the
// element's position in the group's canonical element list.
struct LinearCharacter {
    std::vector<Cyclo> values;   // values[i] = chi(elements[i])
    bool is_trivial() const;
};

// Closed set of invertible matrices over a cyclotomic field, with identity,
// closed under products and inverses.  Element list order is the
// breadth-first discovery order from the generators (deterministic).
class FiniteMatrixGroup {
public:
    // full multiplicative closure; throws when cap is exceeded
    static FiniteMatrixGroup closure(const std::vector<GMatrix>& gens,
                                     int cap = 12000);

    const std::vector<GMatrix>& elements() const { return elements_; }
    const std::vector<int>& generator_indices() const { return gen_idx_; }
    std::vector<GMatrix> generators() const;
    int order() const { return (int)elements_.size(); }
    int matrix_size() const { return elements_.empty() ? 0 : elements_[0].size(); }
    bool projective() const { return projective_; }

    int index_of(const GMatrix& g) const;   // -1 when not an element

    // elements normalized modulo scalars, duplicates merged
    FiniteMatrixGroup projectivize() const;

    // order of the scalar subgroup { c I } contained in the group
    int scalar_subgroup_order() const;

    struct Profile {
        int order = 0;
        std::map<int, int> element_orders;   // order -> count
        int center_order = 0;
        int derived_order = 0;
        std::vector<int> abelianization;     // invariant factors, descending
    };
    Profile structural_profile() const;

    // derived subgroup as element indices into this group
    std::vector<int> derived_subgroup() const;

    std::vector<LinearCharacter> linear_characters() const;

    struct FixedPoint {
        Cyclo eigenvalue;
        std::vector<ProjPoint> eigenlines;   // basis of the eigenspace
        bool positive_dimensional = false;   // eigenspace dim > 1
    };
    static std::vector<FixedPoint> fixed_points_projective(const GMatrix& g);

    // determinant of the induced action on the tangent space of P^{n-1}
    // at the eigenline v of g:  det(g) / lambda_v^n
    static Cyclo tangent_determinant(const GMatrix& g, const ProjPoint& v);

private:
    std::vector<GMatrix> elements_;
    std::vector<int> gen_idx_;
    std::map<std::string, int> index_;
    bool projective_ = false;

    void rebuild_index();
};

// kernel basis of an n x m matrix over Cyclo (exact Gauss); each kernel
// vector is reduced (pivot-normalized), deterministic order
std::vector<std::vector<Cyclo>> kernel_basis(std::vector<std::vector<Cyclo>> a);

} // namespace k3
