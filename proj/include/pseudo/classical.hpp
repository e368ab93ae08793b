#pragma once

// Hochschild cohomology of finite-dimensional associative Q-algebras through the
// plain bar complex. Shares only exact linear algebra with the conformal code,
// so agreement between the two is independent evidence.

#include <optional>
#include <string>
#include <vector>

#include "pseudo/conformal.hpp"
#include "pseudo/exactla.hpp"

namespace pseudo {

/// e_i e_j = Σ_k c_ijk e_k.
struct FDAlgebra {
    std::vector<std::string> names;
    std::vector<Rational> constants; // m³, index (i * m + j) * m + k
    std::optional<QVector> unit;

    FDAlgebra() = default;
    explicit FDAlgebra(std::vector<std::string> n)
        : names(std::move(n)), constants(names.size() * names.size() * names.size()) {}

    std::size_t dimension() const { return names.size(); }
    Rational& c(std::size_t i, std::size_t j, std::size_t k) { return constants[(i * dimension() + j) * dimension() + k]; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
        return constants[(i * dimension() + j) * dimension() + k];
    }
};

/// e_i u_j = Σ_k left(i, j, k) u_k and u_j e_i = Σ_k right(j, i, k) u_k.
struct FDBimodule {
    std::vector<std::string> names;
    std::size_t algebra_dimension = 0;
    std::vector<Rational> left_constants;
    std::vector<Rational> right_constants;

    FDBimodule() = default;
    FDBimodule(std::size_t m, std::vector<std::string> n)
        : names(std::move(n)), algebra_dimension(m), left_constants(m * names.size() * names.size()),
          right_constants(m * names.size() * names.size()) {}

    std::size_t dimension() const { return names.size(); }
    Rational& left(std::size_t i, std::size_t j, std::size_t k) {
        return left_constants[(i * dimension() + j) * dimension() + k];
    }
    const Rational& left(std::size_t i, std::size_t j, std::size_t k) const {
        return left_constants[(i * dimension() + j) * dimension() + k];
    }
    Rational& right(std::size_t j, std::size_t i, std::size_t k) {
        return right_constants[(j * algebra_dimension + i) * dimension() + k];
    }
    const Rational& right(std::size_t j, std::size_t i, std::size_t k) const {
        return right_constants[(j * algebra_dimension + i) * dimension() + k];
    }
};

inline FDBimodule regular_fd_bimodule(const FDAlgebra& A) {
    const auto m = A.dimension();
    FDBimodule M(m, A.names);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                M.left(i, j, k) = A.c(i, j, k);
                M.right(j, i, k) = A.c(j, i, k);
            }
    return M;
}

inline bool is_associative(const FDAlgebra& A) {
    const auto m = A.dimension();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t out = 0; out < m; ++out) {
                    Rational l = 0, r = 0;
                    for (std::size_t p = 0; p < m; ++p) {
                        l += A.c(i, j, p) * A.c(p, k, out);
                        r += A.c(j, k, p) * A.c(i, p, out);
                    }
                    if (l != r) return false;
                }
    return true;
}

inline bool is_bimodule(const FDAlgebra& A, const FDBimodule& M) {
    const auto m = A.dimension();
    const auto r = M.dimension();
    if (M.algebra_dimension != m) return false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t u = 0; u < r; ++u)
                for (std::size_t out = 0; out < r; ++out) {
                    Rational l = 0, rr = 0;
                    // (e_i e_j) u = e_i (e_j u)
                    for (std::size_t p = 0; p < m; ++p) l += A.c(i, j, p) * M.left(p, u, out);
                    for (std::size_t p = 0; p < r; ++p) rr += M.left(j, u, p) * M.left(i, p, out);
                    if (l != rr) return false;
                    // u (e_i e_j) = (u e_i) e_j
                    l = 0, rr = 0;
                    for (std::size_t p = 0; p < m; ++p) l += A.c(i, j, p) * M.right(u, p, out);
                    for (std::size_t p = 0; p < r; ++p) rr += M.right(u, i, p) * M.right(p, j, out);
                    if (l != rr) return false;
                    // (e_i u) e_j = e_i (u e_j)
                    l = 0, rr = 0;
                    for (std::size_t p = 0; p < r; ++p) {
                        l += M.left(i, u, p) * M.right(p, j, out);
                        rr += M.right(u, j, p) * M.left(i, p, out);
                    }
                    if (l != rr) return false;
                }
    return true;
}

/// Bar-complex differential Cⁿ -> Cⁿ⁺¹ with Cⁿ = Hom(A^{⊗n}, M); coordinates (tuple, module index).
inline QMatrix bar_differential(const FDAlgebra& A, const FDBimodule& M, int n) {
    const std::size_t m = A.dimension();
    const std::size_t r = M.dimension();
    auto pow = [&](int k) {
        std::size_t p = 1;
        for (int i = 0; i < k; ++i) p *= m;
        return p;
    };
    const std::size_t in_tuples = pow(n), out_tuples = pow(n + 1);
    QMatrix d(out_tuples * r, in_tuples * r);
    std::vector<std::size_t> a(n + 1);
    for (std::size_t sigma = 0; sigma < out_tuples; ++sigma) {
        std::size_t x = sigma;
        for (int s = n; s >= 0; --s) {
            a[s] = x % m;
            x /= m;
        }
        auto encode = [&](auto first, auto last) {
            std::size_t idx = 0;
            for (auto it = first; it != last; ++it) idx = idx * m + *it;
            return idx;
        };
        for (std::size_t w = 0; w < r; ++w) {
            const std::size_t row = sigma * r + w;
            // a1 · φ(a2, ..., a(n+1))
            const std::size_t tail = encode(a.begin() + 1, a.end());
            for (std::size_t k = 0; k < r; ++k) d(row, tail * r + k) += M.left(a[0], k, w);
            // Σ (−1)^i φ(..., a_i a_(i+1), ...)
            for (int i = 1; i <= n; ++i) {
                for (std::size_t c = 0; c < m; ++c) {
                    const Rational& coef = A.c(a[i - 1], a[i], c);
                    if (sgn(coef) == 0) continue;
                    std::vector<std::size_t> t;
                    for (int s = 0; s < i - 1; ++s) t.push_back(a[s]);
                    t.push_back(c);
                    for (int s = i + 1; s <= n; ++s) t.push_back(a[s]);
                    const std::size_t col = encode(t.begin(), t.end()) * r + w;
                    if (i % 2) {
                        d(row, col) -= coef;
                    } else {
                        d(row, col) += coef;
                    }
                }
            }
            // (−1)^(n+1) φ(a1, ..., an) · a(n+1)
            const std::size_t head = encode(a.begin(), a.begin() + n);
            for (std::size_t k = 0; k < r; ++k) {
                if ((n + 1) % 2) {
                    d(row, head * r + k) -= M.right(k, a[n], w);
                } else {
                    d(row, head * r + k) += M.right(k, a[n], w);
                }
            }
        }
    }
    return d;
}

/// dim HHⁿ(A, M), exact. n is capped (default 3) to bound the m^(n+1)-sized spaces.
inline std::size_t hochschild_dim(const FDAlgebra& A, const FDBimodule& M, int n, int max_n = 3) {
    if (n < 0 || n > max_n) throw ShapeError("classical cohomology degree out of range [0, " + std::to_string(max_n) + "]");
    if (!is_associative(A)) throw AxiomError("structure constants are not associative");
    if (!is_bimodule(A, M)) throw AxiomError("module fails the bimodule axioms");
    const QMatrix dn = bar_differential(A, M, n);
    const std::size_t dim_z = dn.cols() - rank(dn);
    if (n == 0) return dim_z;
    return dim_z - rank(bar_differential(A, M, n - 1));
}

/// dim {u | e_i u = u e_i for all i}, solved directly from the structure constants.
inline std::size_t center_dim(const FDAlgebra& A) {
    const auto m = A.dimension();
    QMatrix eq(m * m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < m; ++j) eq(i * m + k, j) = A.c(i, j, k) - A.c(j, i, k);
    return m - rank(eq);
}

/// Cur A: a_i λ a_j = Σ c_ijk a_k with constant structure polynomials.
inline ConformalAlgebra current_algebra(const FDAlgebra& A) {
    ConformalAlgebra C(A.names);
    const auto m = A.dimension();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (sgn(A.c(i, j, k)) != 0) C.set_structure(i, j, k, Poly::constant(structure_vars(), A.c(i, j, k)));
    return C;
}

/// Mat_n(Q) in the matrix-unit basis e_ij, ordered row-major.
inline FDAlgebra matrix_algebra(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
    FDAlgebra A(names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) A.c(i * n + j, j * n + l, i * n + l) = 1;
    QVector unit(n * n);
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
    A.unit = unit;
    return A;
}

/// Q[x]/(x^k) in the basis 1, x, ..., x^(k-1).
inline FDAlgebra truncated_polynomial_algebra(std::size_t k) {
    std::vector<std::string> names{"one"};
    for (std::size_t i = 1; i < k; ++i) names.push_back(i == 1 ? "x" : "x" + std::to_string(i));
    FDAlgebra A(names);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) A.c(i, j, i + j) = 1;
    QVector unit(k);
    unit[0] = 1;
    A.unit = unit;
    return A;
}

} // namespace pseudo
