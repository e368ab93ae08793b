#pragma once

// Bridges polynomial-valued linear maps and QMatrix: a family of PolyVec values
// (images of basis elements) becomes the columns of a matrix whose rows are the
// (component, monomial) pairs that occur.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pseudo/exactla.hpp"
#include "pseudo/poly.hpp"

namespace pseudo {

class MonomialCoordinates {
public:
    using Key = std::pair<std::size_t, Poly::Exponents>;

    void add(const PolyVec& v) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            for (const auto& [e, coef] : v[c].terms()) {
                Key k{c, e};
                if (!index_.count(k)) {
                    index_.emplace(k, keys_.size());
                    keys_.push_back(std::move(k));
                }
            }
        }
    }

    std::size_t size() const { return keys_.size(); }

    QVector coordinates(const PolyVec& v) const {
        QVector x(keys_.size());
        for (std::size_t c = 0; c < v.size(); ++c) {
            for (const auto& [e, coef] : v[c].terms()) {
                auto it = index_.find(Key{c, e});
                if (it == index_.end()) throw ShapeError("monomial outside the coordinate system");
                x[it->second] = coef;
            }
        }
        return x;
    }

private:
    std::map<Key, std::size_t> index_;
    std::vector<Key> keys_;
};

/// Matrix whose j-th column is the coefficient vector of columns[j].
inline QMatrix family_matrix(const std::vector<PolyVec>& columns, const MonomialCoordinates& coords) {
    std::vector<QVector> cols;
    cols.reserve(columns.size());
    for (const auto& c : columns) cols.push_back(coords.coordinates(c));
    return QMatrix::from_columns(cols, coords.size());
}

/// Coefficients x with Σ x_j columns[j] = target, if any exist.
inline std::optional<QVector> solve_in_span(const std::vector<PolyVec>& columns, const PolyVec& target) {
    MonomialCoordinates coords;
    for (const auto& c : columns) coords.add(c);
    coords.add(target);
    if (columns.empty()) {
        if (is_zero(target)) return QVector{};
        return std::nullopt;
    }
    return solve(family_matrix(columns, coords), coords.coordinates(target));
}

/// Coefficient vectors x with Σ x_j columns[j] = 0.
inline SubspaceBasis relations(const std::vector<PolyVec>& columns) {
    MonomialCoordinates coords;
    for (const auto& c : columns) coords.add(c);
    if (coords.size() == 0) return SubspaceBasis::full(columns.size());
    return kernel_basis(family_matrix(columns, coords));
}

} // namespace pseudo
