#pragma once

// Exact linear algebra over Q. Matrices are dense; elimination skips zero
// entries, which is what keeps the (very sparse) differential matrices cheap.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudo/errors.hpp"
#include "pseudo/poly.hpp"

namespace pseudo {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Rows given explicitly; all rows must share a length.
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols) {
        QMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows) {
        QMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ShapeError("ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QVector row(std::size_t i) const { return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    QVector column(std::size_t j) const {
        QVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QVector operator*(const QVector& x) const {
        if (x.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
        QVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational s = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (sgn(x[j]) != 0 && sgn((*this)(i, j)) != 0) s += (*this)(i, j) * x[j];
            }
            y[i] = s;
        }
        return y;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

struct RrefResult {
    QMatrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. Only the first
/// `pivot_limit` columns are eligible as pivots (the rest ride along, as in an
/// augmented system).
inline RrefResult rref(QMatrix m, std::optional<std::size_t> pivot_limit = std::nullopt) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t limit = pivot_limit ? std::min(*pivot_limit, cols) : cols;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < limit && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        }
        Rational inv = 1 / m(r, c);
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (sgn(m(r, j)) != 0) {
                m(r, j) *= inv;
                support.push_back(j);
            }
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j : support) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

/// A subspace of Q^n held as the nonzero rows of a reduced echelon matrix, so
/// equal subspaces compare equal structurally.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

    static SubspaceBasis span(std::size_t ambient, const std::vector<QVector>& vectors) {
        SubspaceBasis s(ambient);
        if (vectors.empty()) return s;
        auto red = rref(QMatrix::from_rows(vectors, ambient));
        for (std::size_t i = 0; i < red.rank(); ++i) s.vectors_.push_back(red.matrix.row(i));
        s.pivots_ = std::move(red.pivots);
        return s;
    }

    static SubspaceBasis full(std::size_t ambient) {
        std::vector<QVector> e;
        for (std::size_t i = 0; i < ambient; ++i) {
            QVector v(ambient);
            v[i] = 1;
            e.push_back(std::move(v));
        }
        return span(ambient, e);
    }

    std::size_t ambient_dimension() const { return ambient_; }
    std::size_t dimension() const { return vectors_.size(); }
    const std::vector<QVector>& vectors() const { return vectors_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Membership by reduction against the echelon basis.
    bool contains(const QVector& v) const {
        if (v.size() != ambient_) throw ShapeError("membership test with wrong ambient dimension");
        QVector w = v;
        for (std::size_t k = 0; k < vectors_.size(); ++k) {
            const Rational f = w[pivots_[k]];
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j) {
                if (sgn(vectors_[k][j]) != 0) w[j] -= f * vectors_[k][j];
            }
        }
        return pseudo::is_zero(w);
    }

    bool contains(const SubspaceBasis& other) const {
        if (other.ambient_ != ambient_) throw ShapeError("ambient dimension mismatch");
        for (const auto& v : other.vectors_)
            if (!contains(v)) return false;
        return true;
    }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<QVector> vectors_;
    std::vector<std::size_t> pivots_;
};

/// Null space basis; dimension = cols - rank.
inline SubspaceBasis kernel_basis(const QMatrix& m) {
    auto red = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : red.pivots) is_pivot[p] = true;
    std::vector<QVector> vecs;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < red.pivots.size(); ++k) v[red.pivots[k]] = -red.matrix(k, f);
        vecs.push_back(std::move(v));
    }
    return SubspaceBasis::span(cols, vecs);
}

/// Basis vector of an image together with a preimage certificate: vector == m * preimage.
struct ImageVector {
    QVector vector;
    QVector preimage;
};

/// Column-space basis (echelon form) with preimages, from eliminating [mᵀ | I].
inline std::vector<ImageVector> image_with_certificates(const QMatrix& m) {
    const std::size_t n = m.rows();
    const std::size_t k = m.cols();
    QMatrix aug(k, n + k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) aug(j, i) = m(i, j);
        aug(j, n + j) = 1;
    }
    auto red = rref(std::move(aug), n);
    std::vector<ImageVector> out;
    for (std::size_t r = 0; r < red.rank(); ++r) {
        ImageVector iv;
        iv.vector.assign(n, 0);
        iv.preimage.assign(k, 0);
        for (std::size_t i = 0; i < n; ++i) iv.vector[i] = red.matrix(r, i);
        for (std::size_t j = 0; j < k; ++j) iv.preimage[j] = red.matrix(r, n + j);
        out.push_back(std::move(iv));
    }
    return out;
}

inline SubspaceBasis image_basis(const QMatrix& m) {
    std::vector<QVector> vecs;
    for (std::size_t j = 0; j < m.cols(); ++j) vecs.push_back(m.column(j));
    return SubspaceBasis::span(m.rows(), vecs);
}

/// a ∩ b via the kernel of [a-vectors | -b-vectors].
inline SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dimension() != b.ambient_dimension()) throw ShapeError("intersect: ambient dimension mismatch");
    const std::size_t n = a.ambient_dimension();
    const std::size_t da = a.dimension();
    const std::size_t db = b.dimension();
    if (da == 0 || db == 0) return SubspaceBasis(n);
    QMatrix stacked(n, da + db);
    for (std::size_t j = 0; j < da; ++j)
        for (std::size_t i = 0; i < n; ++i) stacked(i, j) = a.vectors()[j][i];
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t i = 0; i < n; ++i) stacked(i, da + j) = -b.vectors()[j][i];
    auto ker = kernel_basis(stacked);
    std::vector<QVector> out;
    for (const auto& x : ker.vectors()) {
        QVector v(n);
        for (std::size_t j = 0; j < da; ++j) {
            if (sgn(x[j]) == 0) continue;
            for (std::size_t i = 0; i < n; ++i) v[i] += x[j] * a.vectors()[j][i];
        }
        out.push_back(std::move(v));
    }
    return SubspaceBasis::span(n, out);
}

/// dim big - dim small; throws InconsistencyError unless small ⊆ big.
inline std::size_t quotient_dimension(const SubspaceBasis& big, const SubspaceBasis& small) {
    if (big.ambient_dimension() != small.ambient_dimension()) throw ShapeError("quotient: ambient dimension mismatch");
    if (!big.contains(small)) throw InconsistencyError("quotient: subspace is not contained in the ambient space");
    return big.dimension() - small.dimension();
}

/// Some x with m x = b, or nullopt when b is outside the column space.
inline std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
    if (b.size() != m.rows()) throw ShapeError("solve: right-hand side has wrong length");
    QMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto red = rref(std::move(aug), m.cols());
    for (std::size_t i = red.rank(); i < m.rows(); ++i) {
        if (sgn(red.matrix(i, m.cols())) != 0) return std::nullopt;
    }
    QVector x(m.cols());
    for (std::size_t k = 0; k < red.rank(); ++k) x[red.pivots[k]] = red.matrix(k, m.cols());
    return x;
}

} // namespace pseudo
