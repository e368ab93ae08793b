#pragma once

#include <random>
#include <string>
#include <vector>

#include "pseudo/pseudo.hpp"

namespace pseudo::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(20261016u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng()); }

/// Small nonzero-biased rationals with numerator in [-4, 4] and denominator in [1, 3].
inline Rational random_rational() { return rational(uniform(-4, 4), uniform(1, 3)); }

/// Random polynomial over `vars` with total degree <= D; each monomial present with probability `density`.
inline Poly random_poly(const VarSet& vars, int D, double density = 0.5) {
    Poly p(vars);
    for (const auto& e : CochainSlice::monomials(vars.size(), D))
        if (coin(density)) p += Poly::monomial(vars, e, random_rational());
    return p;
}

inline QVector random_qvector(std::size_t n, double density = 0.7) {
    QVector v(n);
    for (auto& x : v)
        if (coin(density)) x = random_rational();
    return v;
}

inline QMatrix random_qmatrix(std::size_t rows, std::size_t cols, double density = 0.6) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (coin(density)) m(i, j) = random_rational();
    return m;
}

/// Random matrix of prescribed rank <= min(rows, cols): product of random rows x r and r x cols factors.
inline QMatrix random_rank_matrix(std::size_t rows, std::size_t cols, std::size_t r) {
    QMatrix a = random_qmatrix(rows, r, 1.0), b = random_qmatrix(r, cols, 1.0);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k) m(i, j) += a(i, k) * b(k, j);
    return m;
}

inline QVector random_combination(const SubspaceBasis& B) {
    QVector x(B.ambient_dimension());
    for (const auto& v : B.vectors()) {
        Rational c = random_rational();
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * v[i];
    }
    return x;
}

inline Cochain random_cochain(std::size_t m, std::size_t r, int n, int D, double density = 0.5) {
    Cochain c = Cochain::zero(n, m, r);
    if (n == 0) {
        c.constant = random_qvector(r);
        return c;
    }
    for (auto& v : c.values)
        for (auto& p : v) p = random_poly(cochain_vars(n), D, density);
    return c;
}

inline CElement random_element(std::size_t rank, int D) {
    CElement a;
    for (std::size_t i = 0; i < rank; ++i) a.coords.push_back(random_poly(VarSet{Var::del()}, D, 0.6));
    return a;
}

inline CLinearMap random_linear_map(std::size_t source, std::size_t target, int D) {
    CLinearMap f(source, target);
    for (auto& p : f.entries) p = random_poly(structure_vars(), D);
    return f;
}

inline HLinearMap random_h_map(std::size_t source, std::size_t target, int D) {
    HLinearMap b(source, target);
    for (auto& p : b.entries) p = random_poly(VarSet{Var::del()}, D, 0.7);
    return b;
}

// ---------------------------------------------------------------------------
// Example algebras and modules

inline FDAlgebra field() {
    FDAlgebra A({"e"});
    A.c(0, 0, 0) = 1;
    A.unit = QVector{1};
    return A;
}

inline ConformalAlgebra cur1() { return current_algebra(field()); }

inline ConformalAlgebra one_generator(const std::string& product) {
    ConformalAlgebra A({"e"});
    A.set_structure(0, 0, 0, parse_poly(product, structure_vars()));
    return A;
}

inline ConformalAlgebra zero_algebra(std::size_t rank) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) names.push_back("z" + std::to_string(i));
    return ConformalAlgebra(names);
}

inline ConformalAlgebra cur_mat2() { return current_algebra(matrix_algebra(2)); }

/// Rank-one bimodule over a one-generator algebra from polynomial strings ("" leaves a side zero).
inline BimoduleStructure rank_one_module(const std::string& left, const std::string& right) {
    BimoduleStructure M(1, {"u"}, true, true);
    if (!left.empty()) M.left().set(0, 0, 0, parse_poly(left, structure_vars()));
    if (!right.empty()) M.right().set(0, 0, 0, parse_poly(right, structure_vars()));
    return M;
}

/// Inverse of an invertible matrix by solving against the identity.
inline QMatrix inverse(const QMatrix& P) {
    const std::size_t n = P.rows();
    std::vector<QVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
        QVector e(n);
        e[j] = 1;
        auto x = solve(P, e);
        if (!x) throw std::runtime_error("matrix not invertible");
        cols.push_back(*x);
    }
    return QMatrix::from_columns(cols, n);
}

/// Structure constants rewritten in the basis f_a = Σ_b P(a, b) e_b.
inline FDAlgebra change_basis(const FDAlgebra& A, const QMatrix& P) {
    const std::size_t m = A.dimension();
    const QMatrix Q = inverse(P);
    FDAlgebra B(A.names);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    const Rational w = P(a, c) * P(b, d);
                    if (sgn(w) == 0) continue;
                    for (std::size_t k = 0; k < m; ++k) {
                        if (sgn(A.c(c, d, k)) == 0) continue;
                        for (std::size_t l = 0; l < m; ++l) B.c(a, b, l) += w * A.c(c, d, k) * Q(k, l);
                    }
                }
    return B;
}

inline QMatrix random_invertible(std::size_t n) {
    for (;;) {
        QMatrix P = random_qmatrix(n, n, 0.8);
        if (rank(P) == n) return P;
    }
}

/// Upper triangular 2x2 matrices in the basis e11, e12, e22.
inline FDAlgebra upper_triangular2() {
    FDAlgebra A({"e11", "e12", "e22"});
    A.c(0, 0, 0) = 1;
    A.c(0, 1, 1) = 1;
    A.c(1, 2, 1) = 1;
    A.c(2, 2, 2) = 1;
    return A;
}

/// Q ⊕ Q.
inline FDAlgebra split_pair() {
    FDAlgebra A({"p", "q"});
    A.c(0, 0, 0) = 1;
    A.c(1, 1, 1) = 1;
    return A;
}

inline FDAlgebra random_associative_fd() {
    switch (uniform(0, 3)) {
    case 0: return change_basis(matrix_algebra(2), random_invertible(4));
    case 1: return change_basis(upper_triangular2(), random_invertible(3));
    case 2: return change_basis(truncated_polynomial_algebra(3), random_invertible(3));
    default: return change_basis(split_pair(), random_invertible(2));
    }
}

/// Associative algebra with polynomial structure: Cur1 ⊕ Cur1 twisted by the coboundary d1 ψ.
inline ConformalAlgebra twisted_cur1(int D) {
    ConformalAlgebra A = cur1();
    auto M = regular_bimodule(A);
    Cochain psi = random_cochain(1, 1, 1, D, 0.8);
    auto r = build_abelian_extension(AbelianExtensionDatum{A, M, apply_dn(A, M, psi)});
    return r.algebra;
}

} // namespace pseudo::testing
