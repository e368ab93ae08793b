#pragma once

// The Hochschild cochain complex of an associative conformal algebra A with
// coefficients in a bimodule M, on degree-truncated slices.
//
// An n-cochain (n >= 1) is stored by its values on generator n-tuples:
//   φ_{λ1..λ(n-1)}(a_i1, ..., a_in) = Σ_k Φ_k(λ1, ..., λ(n-1), ∂) u_k.
// Everything else follows from sesquilinearity: ∂ in slot s < n becomes −λ_s,
// ∂ in the last slot becomes ∂ + λ1 + ... + λ(n-1) acting on the value.
// A 0-cochain is a class in M/∂M, represented by rational coordinates.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pseudo/cfmodule.hpp"
#include "pseudo/exactla.hpp"

namespace pseudo {

/// {∂, λ1, ..., λ(n-1)}
inline VarSet cochain_vars(int n) { return del_and_lams(n > 0 ? n - 1 : 0); }

inline std::size_t tuple_count(std::size_t m, int n) {
    std::size_t c = 1;
    for (int i = 0; i < n; ++i) c *= m;
    return c;
}

/// Generator indices of the tuple with the given lexicographic position.
inline std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t m, int n) {
    std::vector<std::size_t> t(static_cast<std::size_t>(n));
    for (int s = n - 1; s >= 0; --s) {
        t[static_cast<std::size_t>(s)] = index % m;
        index /= m;
    }
    return t;
}

inline std::size_t encode_tuple(const std::vector<std::size_t>& t, std::size_t m) {
    std::size_t idx = 0;
    for (auto i : t) idx = idx * m + i;
    return idx;
}

struct Cochain {
    int degree = 0;
    std::size_t algebra_rank = 0;
    std::size_t module_rank = 0;
    std::vector<PolyVec> values; // degree >= 1: one PolyVec (over module generators) per tuple
    QVector constant;            // degree == 0

    static Cochain zero(int n, std::size_t m, std::size_t r) {
        Cochain c{n, m, r, {}, {}};
        if (n == 0) {
            c.constant.assign(r, 0);
        } else {
            c.values.assign(tuple_count(m, n), zero_vec(r, cochain_vars(n)));
        }
        return c;
    }

    const PolyVec& value(const std::vector<std::size_t>& tuple) const { return values[encode_tuple(tuple, algebra_rank)]; }
    PolyVec& value(const std::vector<std::size_t>& tuple) { return values[encode_tuple(tuple, algebra_rank)]; }

    bool is_zero() const {
        if (degree == 0) return pseudo::is_zero(constant);
        for (const auto& v : values)
            if (!pseudo::is_zero(v)) return false;
        return true;
    }

    /// Largest total degree among the values (0 for the zero cochain or degree 0).
    int max_degree() const {
        int d = 0;
        for (const auto& v : values)
            if (auto dv = total_degree(v)) d = std::max(d, *dv);
        return d;
    }

    Cochain& operator+=(const Cochain& o) {
        check_shape(o);
        if (degree == 0) {
            for (std::size_t i = 0; i < constant.size(); ++i) constant[i] += o.constant[i];
        } else {
            for (std::size_t t = 0; t < values.size(); ++t) values[t] += o.values[t];
        }
        return *this;
    }

    Cochain& operator-=(const Cochain& o) {
        check_shape(o);
        if (degree == 0) {
            for (std::size_t i = 0; i < constant.size(); ++i) constant[i] -= o.constant[i];
        } else {
            for (std::size_t t = 0; t < values.size(); ++t) values[t] -= o.values[t];
        }
        return *this;
    }

    Cochain& operator*=(const Rational& c) {
        for (auto& x : constant) x *= c;
        for (auto& v : values)
            for (auto& p : v) p *= c;
        return *this;
    }

    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        if (a.degree != b.degree || a.algebra_rank != b.algebra_rank || a.module_rank != b.module_rank) return false;
        return (a - b).is_zero();
    }

private:
    void check_shape(const Cochain& o) const {
        if (degree != o.degree || algebra_rank != o.algebra_rank || module_rank != o.module_rank) {
            throw ShapeError("cochains of different shape");
        }
    }
};

/// Max total degree of the structure polynomials of A and M: dₙ raises degree by at most this.
inline int growth_bound(const ConformalAlgebra& A, const BimoduleStructure& M) {
    return std::max(A.product().max_degree(), M.max_degree());
}

/// φ evaluated at λ_s = lambdas[s] on arguments args[s] = Σ_i p_si(∂) a_i, everything over ctx.
inline PolyVec evaluate_cochain(const Cochain& phi, const std::vector<Poly>& lambdas, const std::vector<PolyVec>& args,
                                const VarSet& ctx) {
    const int n = phi.degree;
    if (n < 1) throw ShapeError("evaluate_cochain: degree-0 cochains take no arguments");
    if (args.size() != static_cast<std::size_t>(n)) throw ShapeError("evaluate_cochain: arity mismatch");
    if (lambdas.size() != static_cast<std::size_t>(n - 1)) throw ShapeError("evaluate_cochain: wrong number of λ's");
    const std::size_t m = phi.algebra_rank;
    for (const auto& a : args)
        if (a.size() != m) throw ShapeError("evaluate_cochain: argument of wrong rank");

    const Poly del = Poly::variable(ctx, Var::del());
    Poly lam_sum(ctx);
    std::vector<Poly> lams;
    for (const auto& l : lambdas) {
        if (l.mentions(Var::del())) throw AlignmentError("evaluate_cochain: λ values must not involve ∂");
        lams.push_back(l.embed(ctx));
        lam_sum += lams.back();
    }

    // Coefficients of each argument after the slot's sesquilinearity rule.
    std::vector<std::vector<Poly>> coeff(n);
    for (int s = 0; s < n; ++s) {
        const Bindings rule = s + 1 < n ? Bindings{{Var::del(), -lams[s]}} : Bindings{{Var::del(), del + lam_sum}};
        for (std::size_t i = 0; i < m; ++i) {
            const Poly& p = args[s][i];
            coeff[s].push_back(p.is_zero() ? Poly(ctx) : p.embed(ctx).substitute(rule, ctx));
        }
    }

    Bindings value_rule{{Var::del(), del}};
    for (int s = 1; s < n; ++s) value_rule.emplace(Var::lam_n(s), lams[s - 1]);

    PolyVec out = zero_vec(phi.module_rank, ctx);
    std::vector<std::size_t> tuple(n, 0);
    // Walk only tuples whose argument coefficients are all nonzero.
    std::vector<std::vector<std::size_t>> support(n);
    for (int s = 0; s < n; ++s)
        for (std::size_t i = 0; i < m; ++i)
            if (!coeff[s][i].is_zero()) support[s].push_back(i);
    for (const auto& s : support)
        if (s.empty()) return out;
    std::vector<std::size_t> pos(n, 0);
    while (true) {
        Poly c = Poly::constant(ctx, 1);
        for (int s = 0; s < n; ++s) {
            tuple[s] = support[s][pos[s]];
            c *= coeff[s][tuple[s]];
        }
        if (!c.is_zero()) {
            const PolyVec& val = phi.value(tuple);
            for (std::size_t k = 0; k < phi.module_rank; ++k) {
                if (!val[k].is_zero()) out[k] += c * val[k].substitute(value_rule, ctx);
            }
        }
        int s = n - 1;
        while (s >= 0 && ++pos[s] == support[s].size()) pos[s--] = 0;
        if (s < 0) break;
    }
    return out;
}

/// φ at its own variables λ1..λ(n-1); argument coefficients may also use them.
inline PolyVec evaluate_cochain(const Cochain& phi, const std::vector<PolyVec>& args) {
    VarSet ctx = cochain_vars(phi.degree);
    for (const auto& a : args)
        for (const auto& p : a) ctx = ctx.united(p.vars());
    std::vector<Poly> lams;
    for (int s = 1; s < phi.degree; ++s) lams.push_back(Poly::variable(ctx, Var::lam_n(s)));
    return evaluate_cochain(phi, lams, args, ctx);
}

/// (d₀u)(a) = a_{−∂}u − u₀a: expand a_λ u, then set λ = −∂; right action at λ = 0.
inline Cochain apply_d0(const ConformalAlgebra& A, const BimoduleStructure& M, const Cochain& phi) {
    check_compatible(A, M);
    if (phi.degree != 0) throw ShapeError("apply_d0 expects a 0-cochain");
    if (!M.has_left() || !M.has_right()) throw ShapeError("d0 needs a bimodule (both actions)");
    if (phi.module_rank != M.rank()) throw ShapeError("cochain/module rank mismatch");
    const VarSet ctx{Var::del()};
    const Poly del = Poly::variable(ctx, Var::del());
    const Bindings at_minus_del{{Var::lam(), -del}, {Var::del(), del}};
    const Bindings at_zero{{Var::lam(), Poly(ctx)}, {Var::del(), del}};
    Cochain out = Cochain::zero(1, A.rank(), M.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) {
        PolyVec& v = out.values[i];
        for (std::size_t j = 0; j < M.rank(); ++j) {
            const Rational& c = phi.constant[j];
            if (sgn(c) == 0) continue;
            for (std::size_t k = 0; k < M.rank(); ++k) {
                v[k] += c * M.left().at(i, j, k).substitute(at_minus_del, ctx);
                v[k] -= c * M.right().at(j, i, k).substitute(at_zero, ctx);
            }
        }
    }
    return out;
}

/// dₙφ for n >= 1:
///   (a1)_{λ1} φ_{λ2..λn}(a2..a(n+1))
///   + Σ_i (−1)^i φ_{.., λi+λ(i+1), ..}(.., (ai)_{λi} a(i+1), ..)
///   + (−1)^(n+1) φ_{λ1..λ(n-1)}(a1..an)_{λ1+..+λn} a(n+1)
/// The i = n merge keeps λ1..λ(n-1) and lets the cochain's last-slot rule absorb the merged argument.
inline Cochain apply_dn(const ConformalAlgebra& A, const BimoduleStructure& M, const Cochain& phi) {
    check_compatible(A, M);
    const int n = phi.degree;
    if (n < 1) throw ShapeError("apply_dn expects degree >= 1");
    if (phi.algebra_rank != A.rank() || phi.module_rank != M.rank()) throw ShapeError("cochain shape mismatch");
    if (!M.has_left() || !M.has_right()) throw ShapeError("the differential needs a bimodule (both actions)");
    const std::size_t m = A.rank();
    const std::size_t r = M.rank();
    const VarSet ctx = del_and_lams(n);
    std::vector<Poly> lam;
    for (int i = 1; i <= n; ++i) lam.push_back(Poly::variable(ctx, Var::lam_n(i)));
    Poly lam_total(ctx);
    for (const auto& l : lam) lam_total += l;

    Cochain out = Cochain::zero(n + 1, m, r);
    const std::size_t count = tuple_count(m, n + 1);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto t = decode_tuple(idx, m, n + 1);
        std::vector<PolyVec> e;
        for (auto g : t) e.push_back(unit_vec(m, g, ctx));
        PolyVec acc = zero_vec(r, ctx);

        {
            std::vector<PolyVec> args(e.begin() + 1, e.end());
            std::vector<Poly> lams(lam.begin() + 1, lam.end());
            acc += act(M.left(), e[0], evaluate_cochain(phi, lams, args, ctx), lam[0], ctx);
        }
        for (int i = 1; i <= n; ++i) {
            std::vector<PolyVec> args;
            for (int s = 0; s < i - 1; ++s) args.push_back(e[s]);
            args.push_back(act(A.product(), e[i - 1], e[i], lam[i - 1], ctx));
            for (int s = i + 1; s <= n; ++s) args.push_back(e[s]);
            std::vector<Poly> lams;
            if (i < n) {
                for (int s = 0; s < i - 1; ++s) lams.push_back(lam[s]);
                lams.push_back(lam[i - 1] + lam[i]);
                for (int s = i + 1; s < n; ++s) lams.push_back(lam[s]);
            } else {
                lams.assign(lam.begin(), lam.begin() + (n - 1));
            }
            PolyVec term = evaluate_cochain(phi, lams, args, ctx);
            if (i % 2) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        {
            std::vector<PolyVec> args(e.begin(), e.begin() + n);
            std::vector<Poly> lams(lam.begin(), lam.begin() + (n - 1));
            PolyVec last = act(M.right(), evaluate_cochain(phi, lams, args, ctx), e[n], lam_total, ctx);
            if ((n + 1) % 2) {
                acc -= last;
            } else {
                acc += last;
            }
        }
        out.values[idx] = std::move(acc);
    }
    return out;
}

inline Cochain apply_differential(const ConformalAlgebra& A, const BimoduleStructure& M, const Cochain& phi) {
    return phi.degree == 0 ? apply_d0(A, M, phi) : apply_dn(A, M, phi);
}

/// The finite-dimensional slice of Cⁿ(A, M) spanned by values of total degree <= D.
/// Basis order: generator tuple (lex), module generator, monomial (degree, then exponents descending).
class CochainSlice {
public:
    struct Key {
        std::size_t tuple = 0;
        std::size_t module_generator = 0;
        Poly::Exponents exponents;
        auto operator<=>(const Key&) const = default;
    };

    CochainSlice(std::size_t algebra_rank, std::size_t module_rank, int n, int D)
        : m_(algebra_rank), r_(module_rank), n_(n), D_(D) {
        if (n < 0 || D < 0) throw ShapeError("cochain slice needs n >= 0 and D >= 0");
        if (n == 0) {
            for (std::size_t k = 0; k < r_; ++k) push({0, k, {}});
            return;
        }
        const auto monos = monomials(static_cast<std::size_t>(n), D);
        const std::size_t count = tuple_count(m_, n);
        for (std::size_t t = 0; t < count; ++t)
            for (std::size_t k = 0; k < r_; ++k)
                for (const auto& e : monos) push({t, k, e});
    }

    /// Exponent vectors in `vars` variables of total degree <= D, ordered by degree then descending lex.
    static std::vector<Poly::Exponents> monomials(std::size_t vars, int D) {
        std::vector<Poly::Exponents> out;
        for (int d = 0; d <= D; ++d) {
            std::vector<Poly::Exponents> layer;
            Poly::Exponents e(vars, 0);
            enumerate(layer, e, 0, d);
            std::sort(layer.begin(), layer.end(), std::greater<>());
            out.insert(out.end(), layer.begin(), layer.end());
        }
        return out;
    }

    int degree() const { return n_; }
    int degree_bound() const { return D_; }
    std::size_t algebra_rank() const { return m_; }
    std::size_t module_rank() const { return r_; }
    std::size_t dimension() const { return keys_.size(); }
    const Key& key(std::size_t i) const { return keys_[i]; }

    int key_degree(std::size_t i) const {
        int s = 0;
        for (int x : keys_[i].exponents) s += x;
        return s;
    }

    std::optional<std::size_t> index_of(const Key& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Cochain basis_element(std::size_t i) const {
        QVector x(dimension());
        x[i] = 1;
        return from_coordinates(x);
    }

    std::vector<Cochain> basis() const {
        std::vector<Cochain> out;
        out.reserve(dimension());
        for (std::size_t i = 0; i < dimension(); ++i) out.push_back(basis_element(i));
        return out;
    }

    /// Coordinates of φ, or nullopt if φ has a term outside the slice.
    std::optional<QVector> try_coordinates(const Cochain& phi) const {
        check(phi);
        QVector x(dimension());
        if (n_ == 0) {
            for (std::size_t k = 0; k < r_; ++k) x[k] = phi.constant[k];
            return x;
        }
        const VarSet vars = cochain_vars(n_);
        for (std::size_t t = 0; t < phi.values.size(); ++t) {
            for (std::size_t k = 0; k < r_; ++k) {
                const Poly p = phi.values[t][k].embed(vars);
                for (const auto& [e, c] : p.terms()) {
                    auto idx = index_of(Key{t, k, e});
                    if (!idx) return std::nullopt;
                    x[*idx] = c;
                }
            }
        }
        return x;
    }

    QVector coordinates(const Cochain& phi) const {
        auto x = try_coordinates(phi);
        if (!x) throw ShapeError("cochain has terms above the slice degree bound " + std::to_string(D_));
        return *x;
    }

    Cochain from_coordinates(const QVector& x) const {
        if (x.size() != dimension()) throw ShapeError("coordinate vector has wrong length");
        Cochain c = Cochain::zero(n_, m_, r_);
        const VarSet vars = cochain_vars(n_);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (sgn(x[i]) == 0) continue;
            const Key& k = keys_[i];
            if (n_ == 0) {
                c.constant[k.module_generator] = x[i];
            } else {
                c.values[k.tuple][k.module_generator] += Poly::monomial(vars, k.exponents, x[i]);
            }
        }
        return c;
    }

private:
    static void enumerate(std::vector<Poly::Exponents>& out, Poly::Exponents& e, std::size_t at, int left) {
        if (at + 1 == e.size()) {
            e[at] = left;
            out.push_back(e);
            e[at] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[at] = k;
            enumerate(out, e, at + 1, left - k);
        }
        e[at] = 0;
    }

    void push(Key k) {
        index_.emplace(k, keys_.size());
        keys_.push_back(std::move(k));
    }

    void check(const Cochain& phi) const {
        if (phi.degree != n_ || phi.algebra_rank != m_ || phi.module_rank != r_) {
            throw ShapeError("cochain does not belong to this slice");
        }
    }

    std::size_t m_;
    std::size_t r_;
    int n_;
    int D_;
    std::vector<Key> keys_;
    std::map<Key, std::size_t> index_;
};

inline std::vector<Cochain> cochain_basis(const ConformalAlgebra& A, const BimoduleStructure& M, int n, int D) {
    check_compatible(A, M);
    return CochainSlice(A.rank(), M.rank(), n, D).basis();
}

/// Matrix of dₙ from the degree-<=D_in slice of Cⁿ to the degree-<=D_out slice of Cⁿ⁺¹.
inline QMatrix differential_matrix(const ConformalAlgebra& A, const BimoduleStructure& M, int n, int D_in, int D_out) {
    check_compatible(A, M);
    const CochainSlice src(A.rank(), M.rank(), n, D_in);
    const CochainSlice dst(A.rank(), M.rank(), n + 1, D_out);
    std::vector<QVector> cols;
    cols.reserve(src.dimension());
    for (std::size_t i = 0; i < src.dimension(); ++i) {
        auto image = dst.try_coordinates(apply_differential(A, M, src.basis_element(i)));
        if (!image) {
            throw InconsistencyError("differential image exceeds degree " + std::to_string(D_out) +
                                     " (growth bound violated)");
        }
        cols.push_back(std::move(*image));
    }
    return QMatrix::from_columns(cols, dst.dimension());
}

struct TruncationWindow {
    int degree_bound = 0;        // D
    int stabilization_margin = 1; // K
};

/// Number of margin steps the coboundary search may take: PSEUDO_MAX_MARGIN or 4.
inline int default_max_margin_steps() {
    if (const char* s = std::getenv("PSEUDO_MAX_MARGIN")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
    }
    return 4;
}

struct CohomologyReport {
    int degree = 0;
    TruncationWindow window;
    std::size_t dim_cochains = 0; // dimension of the degree-<=D slice of Cⁿ
    std::size_t dim_Z = 0;
    std::size_t dim_B = 0;
    std::size_t dim_H = 0;
    bool stabilized = false;
    int margin_steps = 0; // k of the last coboundary source degree D + kK
    SubspaceBasis Z;      // coordinates in CochainSlice(n, D)
    SubspaceBasis B;
};

namespace detail {

/// Image of the matrix restricted to vectors whose coordinates above degree D vanish,
/// re-expressed in the coordinates of `slice` (degree <= D).
inline SubspaceBasis image_in_slice(const QMatrix& mat, const CochainSlice& big, const CochainSlice& slice) {
    const int D = slice.degree_bound();
    std::vector<std::size_t> low, high;
    for (std::size_t i = 0; i < big.dimension(); ++i) (big.key_degree(i) <= D ? low : high).push_back(i);
    std::vector<std::size_t> low_target;
    for (auto i : low) {
        auto idx = slice.index_of(big.key(i));
        if (!idx) throw InconsistencyError("slice keys do not nest");
        low_target.push_back(*idx);
    }
    SubspaceBasis combos = SubspaceBasis::full(mat.cols());
    if (!high.empty()) {
        QMatrix mh(high.size(), mat.cols());
        for (std::size_t a = 0; a < high.size(); ++a)
            for (std::size_t j = 0; j < mat.cols(); ++j) mh(a, j) = mat(high[a], j);
        combos = kernel_basis(mh);
    }
    std::vector<QVector> out;
    for (const auto& x : combos.vectors()) {
        QVector v(slice.dimension());
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            if (sgn(x[j]) == 0) continue;
            for (std::size_t a = 0; a < low.size(); ++a) {
                const Rational& e = mat(low[a], j);
                if (sgn(e) != 0) v[low_target[a]] += x[j] * e;
            }
        }
        out.push_back(std::move(v));
    }
    return SubspaceBasis::span(slice.dimension(), out);
}

} // namespace detail

/// Z = exact kernel on the degree-<=D slice; B = coboundaries landing in the slice,
/// from sources of degree D, D+K, D+2K, ... until two consecutive steps agree.
inline CohomologyReport cohomology_dimensions(const ConformalAlgebra& A, const BimoduleStructure& M, int n,
                                              TruncationWindow window,
                                              int max_steps = default_max_margin_steps()) {
    check_compatible(A, M);
    if (n < 0 || window.degree_bound < 0) throw ShapeError("cohomology needs n >= 0 and D >= 0");
    if (window.stabilization_margin < 1) throw ShapeError("stabilization margin must be >= 1");
    const int D = window.degree_bound;
    const int s = growth_bound(A, M);
    const CochainSlice slice(A.rank(), M.rank(), n, D);

    CohomologyReport rep;
    rep.degree = n;
    rep.window = window;
    rep.dim_cochains = slice.dimension();
    rep.Z = kernel_basis(differential_matrix(A, M, n, D, D + s));
    rep.B = SubspaceBasis(slice.dimension());
    rep.stabilized = true;

    if (n == 1) {
        const int out_deg = std::max(D, s);
        const CochainSlice big(A.rank(), M.rank(), 1, out_deg);
        rep.B = detail::image_in_slice(differential_matrix(A, M, 0, 0, out_deg), big, slice);
    } else if (n >= 2) {
        std::optional<std::size_t> previous;
        rep.stabilized = false;
        for (int k = 0; k <= max_steps; ++k) {
            const int src = D + k * window.stabilization_margin;
            const int out_deg = std::max(src + s, D);
            const CochainSlice big(A.rank(), M.rank(), n, out_deg);
            rep.B = detail::image_in_slice(differential_matrix(A, M, n - 1, src, out_deg), big, slice);
            rep.margin_steps = k;
            if (previous && *previous == rep.B.dimension()) {
                rep.stabilized = true;
                break;
            }
            previous = rep.B.dimension();
        }
    }

    if (!rep.Z.contains(rep.B)) throw InconsistencyError("coboundaries are not cocycles: d∘d ≠ 0");
    rep.dim_Z = rep.Z.dimension();
    rep.dim_B = rep.B.dimension();
    rep.dim_H = quotient_dimension(rep.Z, rep.B);
    return rep;
}

/// Der(A, M) on the degree-<=D slice of C¹ (kernel of d₁).
inline SubspaceBasis derivation_basis(const ConformalAlgebra& A, const BimoduleStructure& M, int D) {
    return kernel_basis(differential_matrix(A, M, 1, D, D + growth_bound(A, M)));
}

/// Inner derivations lying in the degree-<=D slice of C¹ (image of d₀ intersected with the slice).
inline SubspaceBasis inner_derivation_basis(const ConformalAlgebra& A, const BimoduleStructure& M, int D) {
    const int out_deg = std::max(D, growth_bound(A, M));
    const CochainSlice big(A.rank(), M.rank(), 1, out_deg);
    const CochainSlice slice(A.rank(), M.rank(), 1, D);
    return detail::image_in_slice(differential_matrix(A, M, 0, 0, out_deg), big, slice);
}

/// g_u(a) = a_{−∂}u − u₀a; d₁(g_u) = 0 is asserted.
inline Cochain inner_derivation(const ConformalAlgebra& A, const BimoduleStructure& M, const QVector& u) {
    if (u.size() != M.rank()) throw ShapeError("inner_derivation: element of wrong rank");
    Cochain c = Cochain::zero(0, A.rank(), M.rank());
    c.constant = u;
    Cochain g = apply_d0(A, M, c);
    if (!apply_dn(A, M, g).is_zero()) throw InconsistencyError("d1 of an inner derivation is nonzero");
    return g;
}

/// Direct check of a_{−∂}u = u₀a for every generator a, through the general λ-action
/// evaluator rather than the d₀ table lookup.
inline bool satisfies_h0_condition(const ConformalAlgebra& A, const BimoduleStructure& M, const QVector& u) {
    const VarSet& ctx = structure_vars();
    const Poly lam = Poly::variable(ctx, Var::lam());
    const Poly del = Poly::variable(ctx, Var::del());
    PolyVec uv;
    for (const auto& c : u) uv.push_back(Poly::constant(ctx, c));
    for (std::size_t i = 0; i < A.rank(); ++i) {
        auto e = unit_vec(A.rank(), i, ctx);
        auto left = substitute(act(M.left(), e, uv, lam, ctx), {{Var::lam(), -del}}, ctx);
        auto right = act(M.right(), uv, e, Poly(ctx), ctx);
        if (!is_zero(left - right)) return false;
    }
    return true;
}

} // namespace pseudo
