#pragma once

#include "pseudo/pseudo.hpp"

namespace pseudo::testing {

/// Brute force over all linear maps A -> A: Der = {D | D(xy) = D(x)y + xD(y)}, Inner = span{[·, u]}.
struct DerivationCount {
    std::size_t derivations = 0;
    std::size_t inner = 0;
};

inline DerivationCount brute_force_derivations(const FDAlgebra& A) {
    const std::size_t m = A.dimension();
    // Unknown D(e_a) = Σ_b x[a*m + b] e_b.
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t out = 0; out < m; ++out) {
                QVector row(m * m);
                for (std::size_t k = 0; k < m; ++k) row[k * m + out] += A.c(i, j, k);
                for (std::size_t b = 0; b < m; ++b) {
                    row[i * m + b] -= A.c(b, j, out);
                    row[j * m + b] -= A.c(i, b, out);
                }
                rows.push_back(row);
            }
    DerivationCount c;
    c.derivations = m * m - rank(QMatrix::from_rows(rows, m * m));
    std::vector<QVector> ads;
    for (std::size_t u = 0; u < m; ++u) {
        QVector ad(m * m);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) ad[a * m + b] = A.c(a, u, b) - A.c(u, a, b);
        ads.push_back(ad);
    }
    c.inner = rank(QMatrix::from_rows(ads, m * m));
    return c;
}

inline std::size_t brute_force_center(const FDAlgebra& A) {
    const std::size_t m = A.dimension();
    std::size_t central = 0;
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            QVector row(m);
            for (std::size_t u = 0; u < m; ++u) row[u] = A.c(i, u, k) - A.c(u, i, k);
            rows.push_back(row);
        }
    central = m - rank(QMatrix::from_rows(rows, m));
    return central;
}

} // namespace pseudo::testing
