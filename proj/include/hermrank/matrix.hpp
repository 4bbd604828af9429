#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace hermrank {

/// Dense matrix over Q(i).  Row-major storage, 0-based indices.
class GQMatrix {
public:
    GQMatrix() : rows_(0), cols_(0) {}
    GQMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    GQMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> flat)
        : rows_(rows), cols_(cols), a_(std::move(flat)) {
        if (a_.size() != rows_ * cols_) throw shape_mismatch("flat size != rows*cols");
    }

    static GQMatrix identity(std::size_t n) {
        GQMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// diag(+1 x r, -1 x s, 0 x t): the Gram matrix of the standard weighted form.
    static GQMatrix signature_gram(int r, int s, int t) {
        if (r < 0 || s < 0 || t < 0) throw invalid_signature();
        std::size_t n = std::size_t(r) + std::size_t(s) + std::size_t(t);
        GQMatrix m(n, n);
        for (int i = 0; i < r; ++i) m(i, i) = 1;
        for (int i = 0; i < s; ++i) m(std::size_t(r) + i, std::size_t(r) + i) = -1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    GQMatrix transpose() const {
        GQMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    GQMatrix conj() const {
        GQMatrix r(*this);
        for (auto& x : r.a_) x = x.conj();
        return r;
    }

    /// Conjugate transpose A^dagger.
    GQMatrix conj_transpose() const { return conj().transpose(); }

    GQMatrix operator-() const {
        GQMatrix r(*this);
        for (auto& x : r.a_) x = -x;
        return r;
    }

    GQMatrix& operator+=(const GQMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    GQMatrix& operator-=(const GQMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }

    friend GQMatrix operator+(GQMatrix a, const GQMatrix& b) { return a += b; }
    friend GQMatrix operator-(GQMatrix a, const GQMatrix& b) { return a -= b; }

    friend GQMatrix operator*(const GQMatrix& a, const GQMatrix& b) {
        if (a.cols_ != b.rows_) throw shape_mismatch("matrix product shapes");
        GQMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }

    friend GQMatrix operator*(const GaussianRational& c, GQMatrix m) {
        for (auto& x : m.a_) x = c * x;
        return m;
    }

    friend bool operator==(const GQMatrix& a, const GQMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const GQMatrix& a, const GQMatrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<GaussianRational> row(std::size_t i) const {
        std::vector<GaussianRational> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<GaussianRational> col(std::size_t j) const {
        std::vector<GaussianRational> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const std::vector<GaussianRational>& c) {
        if (c.size() != rows_) throw shape_mismatch("column length");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    /// Matrix * vector.
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const {
        if (v.size() != cols_) throw shape_mismatch("matrix-vector shapes");
        std::vector<GaussianRational> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

private:
    void check_same_shape(const GQMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw shape_mismatch();
    }

    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

namespace detail {

/// Clears denominators row by row so every entry has integer re/im parts.
/// Row scaling by positive integers changes neither rank nor solution sets
/// of [A|b]; it keeps the Bareiss recurrence division-exact over Z[i].
inline void scale_rows_integral(GQMatrix& m, std::vector<mpz_class>* scales = nullptr) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class dr = m(i, j).re.den(), di = m(i, j).im.den();
            mpz_class t;
            mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), dr.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), t.get_mpz_t(), di.get_mpz_t());
        }
        if (l != 1) {
            GaussianRational c{Rational(l)};
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = c * m(i, j);
        }
        if (scales) scales->push_back(l);
    }
}

/// Fraction-free (Bareiss) forward elimination in place.  Returns the pivot
/// columns in order; `row_swaps` (optional) counts the row exchanges.
/// After the call, rows 0..pivots-1 are in echelon form.
inline std::vector<std::size_t> bareiss_forward(GQMatrix& m, std::size_t limit_cols,
                                                std::size_t* row_swaps = nullptr) {
    std::vector<std::size_t> pivot_cols;
    GaussianRational prev{1};
    std::size_t pr = 0;  // next pivot row
    if (row_swaps) *row_swaps = 0;
    for (std::size_t pc = 0; pc < limit_cols && pr < m.rows(); ++pc) {
        // Find a nonzero pivot in column pc at or below row pr.
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, pc).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(sel, j));
            if (row_swaps) ++*row_swaps;
        }
        const GaussianRational piv = m(pr, pc);
        for (std::size_t i = pr + 1; i < m.rows(); ++i) {
            const GaussianRational lead = m(i, pc);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                // Bareiss step: exact division by the previous pivot.
                m(i, j) = (piv * m(i, j) - lead * m(pr, j)) / prev;
            }
        }
        prev = piv;
        pivot_cols.push_back(pc);
        ++pr;
    }
    return pivot_cols;
}

}  // namespace detail

/// Exact rank via fraction-free elimination.
inline std::size_t mat_rank(GQMatrix m) {
    detail::scale_rows_integral(m);
    return detail::bareiss_forward(m, m.cols()).size();
}

/// Exact determinant (square matrices).
inline GaussianRational determinant(GQMatrix m) {
    if (m.rows() != m.cols()) throw shape_mismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return GaussianRational{1};
    std::vector<mpz_class> scales;
    detail::scale_rows_integral(m, &scales);
    std::size_t swaps = 0;
    auto pivots = detail::bareiss_forward(m, n, &swaps);
    if (pivots.size() < n) return GaussianRational{0};
    // Bareiss leaves det(scaled) in the last pivot position.
    GaussianRational det = m(n - 1, n - 1);
    if (swaps % 2 == 1) det = -det;
    mpz_class prod = 1;
    for (const auto& s : scales) prod *= s;
    return det / GaussianRational{Rational(prod)};
}

/// Result of solving A x = b over Q(i).
struct SolveResult {
    bool solvable = false;
    std::vector<GaussianRational> particular;               // one solution (empty if none)
    std::vector<std::vector<GaussianRational>> nullspace;  // basis of ker A
};

/// Solves A x = b exactly; always reports a nullspace basis of A.
inline SolveResult mat_solve(const GQMatrix& a, const std::vector<GaussianRational>& b) {
    if (b.size() != a.rows()) throw shape_mismatch("rhs length != row count");
    const std::size_t n = a.cols();
    GQMatrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    detail::scale_rows_integral(aug);
    auto pivots = detail::bareiss_forward(aug, n);  // never pivot on the rhs column

    SolveResult res;
    // Inconsistent iff some zeroed-out row keeps a nonzero rhs.
    res.solvable = true;
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        if (!aug(i, n).is_zero()) res.solvable = false;
    if (res.solvable) {
        // Back-substitute with free variables set to 0.
        res.particular.assign(n, GaussianRational{0});
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            GaussianRational acc = aug(k, n);
            for (std::size_t j = pc + 1; j < n; ++j)
                if (!aug(k, j).is_zero()) acc -= aug(k, j) * res.particular[j];
            res.particular[pc] = acc / aug(k, pc);
        }
    }
    // One basis vector per free column.
    std::vector<bool> is_pivot(n, false);
    for (auto pc : pivots) is_pivot[pc] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<GaussianRational> v(n, GaussianRational{0});
        v[f] = 1;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            GaussianRational acc{0};
            for (std::size_t j = pc + 1; j < n; ++j)
                if (!aug(k, j).is_zero()) acc -= aug(k, j) * v[j];
            v[pc] = acc / aug(k, pc);
        }
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

/// Exact inverse; nullopt when singular.
inline std::optional<GQMatrix> inverse(const GQMatrix& a) {
    if (a.rows() != a.cols()) throw shape_mismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    // Gauss-Jordan on [A | I]; rational arithmetic is exact, so this is safe.
    GQMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && aug(sel, c).is_zero()) ++sel;
        if (sel == n) return std::nullopt;
        if (sel != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(c, j), aug(sel, j));
        const GaussianRational piv = aug(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c).is_zero()) continue;
            const GaussianRational f = aug(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    GQMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Result of diagonalizing a hermitian matrix by congruence: P^dagger M P = diag(d).
struct CongruenceResult {
    GQMatrix p;
    std::vector<Rational> diagonal;
    int positives = 0;
    int negatives = 0;
};

/// Sylvester-style diagonalization of a hermitian matrix by an invertible
/// congruence over Q(i).  Throws not_hermitian if M != M^dagger.
inline CongruenceResult congruence_diagonalize(const GQMatrix& m0) {
    if (m0.rows() != m0.cols()) throw shape_mismatch("congruence of non-square matrix");
    const std::size_t n = m0.rows();
    if (m0 != m0.conj_transpose()) throw not_hermitian();
    GQMatrix a = m0;
    GQMatrix p = GQMatrix::identity(n);

    // Column operation col_i += c * col_j applied as a congruence:
    // A <- E^dagger A E with E = I + c e_j e_i^T, tracked in P <- P E.
    auto col_op = [&](std::size_t i, std::size_t j, const GaussianRational& c) {
        for (std::size_t k = 0; k < n; ++k) a(k, i) += c * a(k, j);          // A E
        for (std::size_t k = 0; k < n; ++k) a(i, k) += c.conj() * a(j, k);   // E^dagger (A E)
        for (std::size_t k = 0; k < n; ++k) p(k, i) += c * p(k, j);
    };
    auto swap_op = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(p(k, i), p(k, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k).is_zero()) {
            // Prefer a nonzero diagonal entry further down.
            std::size_t d = k + 1;
            while (d < n && a(d, d).is_zero()) ++d;
            if (d < n) {
                swap_op(k, d);
            } else {
                // All remaining diagonal entries vanish; look for any nonzero
                // off-diagonal a(i,j) and fold it onto the diagonal:
                // col_i += conj(a(i,j)) * col_j turns a(i,i) into 2|a(i,j)|^2.
                std::size_t bi = n, bj = n;
                for (std::size_t i = k; i < n && bi == n; ++i)
                    for (std::size_t j = k; j < n; ++j)
                        if (i != j && !a(i, j).is_zero()) { bi = i; bj = j; break; }
                if (bi == n) break;  // remaining block is identically zero
                col_op(bi, bj, a(bi, bj).conj());
                if (bi != k) swap_op(k, bi);
            }
        }
        // Clear row/column k against the (now nonzero, real) pivot.
        const GaussianRational piv = a(k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a(k, j).is_zero()) continue;
            col_op(j, k, -(a(k, j) / piv));
        }
    }

    CongruenceResult res;
    res.p = std::move(p);
    res.diagonal.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const GaussianRational& d = a(k, k);
        if (!d.is_real()) throw not_hermitian();  // cannot happen for hermitian input
        res.diagonal.push_back(d.re);
        if (d.re.sign() > 0) ++res.positives;
        if (d.re.sign() < 0) ++res.negatives;
    }
    return res;
}

}  // namespace hermrank
