#pragma once

#include "k3audit/cyclo.hpp"
#include "k3audit/poly.hpp"

#include <string>
#include <vector>

namespace k3 {

// Square matrix over a cyclotomic field.  Group elements must be exactly
// invertible; det() is computed exactly.
class GMatrix {
public:
    GMatrix() = default;
    GMatrix(int n, std::vector<std::vector<Cyclo>> entries, std::string label = "");
    static GMatrix identity(int n);
    static GMatrix diagonal(const std::vector<Cyclo>& d);
    static GMatrix permutation(const std::vector<int>& img);  // e_i -> e_img[i]

    int size() const { return n_; }
    const Cyclo& at(int i, int j) const { return e_[i][j]; }
    Cyclo& at(int i, int j) { return e_[i][j]; }
    const std::vector<std::vector<Cyclo>>& rows() const { return e_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    GMatrix operator*(const GMatrix& o) const;
    GMatrix scaled(const Cyclo& c) const;
    Cyclo det() const;
    GMatrix inverse() const;
    bool is_identity() const;
    bool is_scalar() const;
    bool operator==(const GMatrix& o) const;

    std::vector<Cyclo> apply(const std::vector<Cyclo>& v) const;  // M v

    // normalize so the first nonzero entry (row-major) equals 1
    GMatrix projective_normal_form() const;
    // canonical key for hashing/dedup after promotion to a common order
    std::string key() const;
    // promote all entries into Q(zeta_m)
    GMatrix promoted(unsigned m) const;
    unsigned entry_order_lcm() const;

    // multiplicative order; throws if it exceeds the cap
    int order(int cap = 4096) const;

private:
    int n_ = 0;
    std::vector<std::vector<Cyclo>> e_;
    std::string label_;
};

} // namespace k3
