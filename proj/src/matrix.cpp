#include "k3audit/matrix.hpp"

#include <sstream>

namespace k3 {

GMatrix::GMatrix(int n, std::vector<std::vector<Cyclo>> entries, std::string label)
    : n_(n), e_(std::move(entries)), label_(std::move(label)) {
    if ((int)e_.size() != n) throw error("GMatrix: row count mismatch");
    for (const auto& row : e_)
        if ((int)row.size() != n) throw error("GMatrix: column count mismatch");
}

GMatrix GMatrix::identity(int n) {
    std::vector<std::vector<Cyclo>> e(n, std::vector<Cyclo>(n));
    for (int i = 0; i < n; ++i) e[i][i] = Cyclo(Rational(1));
    return GMatrix(n, std::move(e));
}

GMatrix GMatrix::diagonal(const std::vector<Cyclo>& d) {
    int n = (int)d.size();
    std::vector<std::vector<Cyclo>> e(n, std::vector<Cyclo>(n));
    for (int i = 0; i < n; ++i) e[i][i] = d[i];
    return GMatrix(n, std::move(e));
}

GMatrix GMatrix::permutation(const std::vector<int>& img) {
    int n = (int)img.size();
    std::vector<std::vector<Cyclo>> e(n, std::vector<Cyclo>(n));
    for (int i = 0; i < n; ++i) e[img[i]][i] = Cyclo(Rational(1));
    return GMatrix(n, std::move(e));
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
    if (n_ != o.n_) throw error("GMatrix: size mismatch in product");
    std::vector<std::vector<Cyclo>> r(n_, std::vector<Cyclo>(n_));
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            if (e_[i][k].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (o.e_[k][j].is_zero()) continue;
                r[i][j] += e_[i][k] * o.e_[k][j];
            }
        }
    return GMatrix(n_, std::move(r));
}

GMatrix GMatrix::scaled(const Cyclo& c) const {
    auto r = e_;
    for (auto& row : r)
        for (auto& x : row) x = x * c;
    return GMatrix(n_, std::move(r), label_);
}

Cyclo GMatrix::det() const {
    // Gaussian elimination over the field
    auto a = e_;
    Cyclo d{Rational(1)};
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == -1) return Cyclo();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d = d * a[col][col];
        Cyclo inv = a[col][col].inverse();
        for (int r = col + 1; r < n_; ++r) {
            if (a[r][col].is_zero()) continue;
            Cyclo f = a[r][col] * inv;
            for (int j = col; j < n_; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return d;
}

GMatrix GMatrix::inverse() const {
    auto a = e_;
    auto b = identity(n_).e_;
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == -1) throw error("GMatrix: singular matrix has no inverse");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Cyclo inv = a[col][col].inverse();
        for (int j = 0; j < n_; ++j) {
            a[col][j] = a[col][j] * inv;
            b[col][j] = b[col][j] * inv;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Cyclo f = a[r][col];
            for (int j = 0; j < n_; ++j) {
                a[r][j] -= f * a[col][j];
                b[r][j] -= f * b[col][j];
            }
        }
    }
    return GMatrix(n_, std::move(b));
}

bool GMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !(e_[i][j] == Cyclo(Rational(1)))) return false;
            if (i != j && !e_[i][j].is_zero()) return false;
        }
    return true;
}

bool GMatrix::is_scalar() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !e_[i][j].is_zero()) return false;
    for (int i = 1; i < n_; ++i)
        if (!(e_[i][i] == e_[0][0])) return false;
    return true;
}

bool GMatrix::operator==(const GMatrix& o) const {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!(e_[i][j] == o.e_[i][j])) return false;
    return true;
}

std::vector<Cyclo> GMatrix::apply(const std::vector<Cyclo>& v) const {
    if ((int)v.size() != n_) throw error("GMatrix: vector size mismatch");
    std::vector<Cyclo> r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!e_[i][j].is_zero()) r[i] += e_[i][j] * v[j];
    return r;
}

GMatrix GMatrix::projective_normal_form() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!e_[i][j].is_zero())
                return scaled(e_[i][j].inverse());
    throw error("GMatrix: zero matrix cannot be normalized");
}

std::string GMatrix::key() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) os << e_[i][j].str() << "|";
    return os.str();
}

GMatrix GMatrix::promoted(unsigned m) const {
    auto r = e_;
    for (auto& row : r)
        for (auto& x : row) x = x.promoted(m);
    return GMatrix(n_, std::move(r), label_);
}

unsigned GMatrix::entry_order_lcm() const {
    long long m = 1;
    for (const auto& row : e_)
        for (const auto& x : row) m = lcm_ll(m, x.order());
    return (unsigned)m;
}

int GMatrix::order(int cap) const {
    GMatrix p = *this;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * *this;
    }
    throw error("GMatrix: order exceeds cap (non-finite-order input?)");
}

} // namespace k3
