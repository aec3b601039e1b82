#pragma once

#include "pbw.hpp"

#include <optional>

namespace liecg {

struct DegreeTooSmall : std::runtime_error {
    DegreeTooSmall() : std::runtime_error("truncation degree below the ideals' known degree") {}
};

/// Degree-truncated slice of a two-sided ideal of U(g): an echelonized basis
/// of (ideal ∩ U_{<=d}) over graded-lex monomial coordinates. `certified`
/// records whether the probe level provably captured the whole slice.
struct TruncatedIdeal {
    int degree = 0;
    int probe_level = 0;
    bool certified = false;
    Mat echelon;  // rows over filtration_basis(dim, degree) coordinates

    std::size_t rank() const { return echelon.size(); }
};

inline TruncatedIdeal ideal_from_elements(const UAlgebra& ua, const std::vector<UElement>& els,
                                          int d, int probe_level, bool certified) {
    MonoIndex ix(filtration_basis(ua.dim(), d));
    Mat rows;
    for (const auto& u : els)
        if (!u.is_zero()) rows.push_back(element_coords(u, ix));
    rref(rows);
    return TruncatedIdeal{d, probe_level, certified, std::move(rows)};
}

inline std::vector<UElement> ideal_members(const UAlgebra& ua, const TruncatedIdeal& v) {
    MonoIndex ix(filtration_basis(ua.dim(), v.degree));
    std::vector<UElement> out;
    for (const auto& row : v.echelon) out.push_back(element_from_coords(row, ix));
    return out;
}

inline bool ideal_contains(const UAlgebra& ua, const TruncatedIdeal& v, const UElement& u) {
    if (u.is_zero()) return true;
    if (u.degree() > v.degree) return false;
    MonoIndex ix(filtration_basis(ua.dim(), v.degree));
    return in_row_space(v.echelon, element_coords(u, ix));
}

/// Subset test at a common truncation degree.
inline bool ideal_includes(const UAlgebra& ua, const TruncatedIdeal& big,
                           const TruncatedIdeal& small) {
    for (const auto& u : ideal_members(ua, small))
        if (!ideal_contains(ua, big, u)) return false;
    return true;
}

inline bool ideal_equal(const TruncatedIdeal& a, const TruncatedIdeal& b) {
    return a.degree == b.degree && a.echelon == b.echelon;
}

/// First basis element of `small` missing from `big`, as a witness.
inline std::optional<UElement> inclusion_witness(const UAlgebra& ua, const TruncatedIdeal& big,
                                                 const TruncatedIdeal& small) {
    for (const auto& u : ideal_members(ua, small))
        if (!ideal_contains(ua, big, u)) return u;
    return std::nullopt;
}

/// (ideal ∩ U_{<=d}) for d <= ideal.degree, by intersecting the row space
/// with the coordinate subspace of low-degree monomials.
inline TruncatedIdeal ideal_slice(const UAlgebra& ua, const TruncatedIdeal& v, int d) {
    if (d > v.degree) throw DegreeTooSmall();
    if (d == v.degree) return v;
    MonoIndex big(filtration_basis(ua.dim(), v.degree));
    MonoIndex small(filtration_basis(ua.dim(), d));
    std::size_t keep = small.size();
    // coefficients c with (c^T . rows) supported on the first `keep` coords
    Mat late;
    for (std::size_t j = keep; j < big.size(); ++j) {
        Vec row = zero_vec(v.echelon.size());
        for (std::size_t r = 0; r < v.echelon.size(); ++r) row[r] = v.echelon[r][j];
        late.push_back(std::move(row));
    }
    Mat coeffs = nullspace(std::move(late), v.echelon.size());
    Mat rows;
    for (const auto& c : coeffs) {
        Vec x = zero_vec(keep);
        for (std::size_t r = 0; r < c.size(); ++r)
            if (c[r] != 0)
                for (std::size_t j = 0; j < keep; ++j) x[j] += c[r] * v.echelon[r][j];
        rows.push_back(std::move(x));
    }
    rref(rows);
    return TruncatedIdeal{d, v.probe_level, v.certified, std::move(rows)};
}

/// Antipode image S(V) at the same truncation (S preserves degree).
inline TruncatedIdeal ideal_antipode(const UAlgebra& ua, const TruncatedIdeal& v) {
    std::vector<UElement> imgs;
    for (const auto& u : ideal_members(ua, v)) imgs.push_back(ua.antipode(u));
    return ideal_from_elements(ua, imgs, v.degree, v.probe_level, v.certified);
}

namespace detail {

/// Projection data for U_{<=d} / (slice of V): reduce against the echelon
/// rows, then read off non-pivot coordinates.
struct QuotientProj {
    const Mat* echelon;
    std::vector<std::size_t> free_cols;
    std::size_t total;

    QuotientProj(const Mat& ech, std::size_t n) : echelon(&ech), total(n) {
        std::vector<bool> pivot(n, false);
        for (const auto& row : ech) {
            std::size_t lead = 0;
            while (lead < n && row[lead] == 0) ++lead;
            if (lead < n) pivot[lead] = true;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!pivot[i]) free_cols.push_back(i);
    }

    Vec apply(Vec x) const {
        for (const auto& row : *echelon) {
            std::size_t lead = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            if (lead < row.size() && x[lead] != 0) add_scaled(x, row, -x[lead]);
        }
        Vec q = zero_vec(free_cols.size());
        for (std::size_t a = 0; a < free_cols.size(); ++a) q[a] = x[free_cols[a]];
        return q;
    }
};

}  // namespace detail

/// Wedge product at truncation: kernel of
///   U_{<=d} --Delta--> U (x) U --> (U/V) (x) (U/W),
/// by exact nullspace computation. Both legs are coordinatized through the
/// degree-d slices, which embed exactly.
inline TruncatedIdeal wedge_truncated(const UAlgebra& ua, const TruncatedIdeal& v,
                                      const TruncatedIdeal& w, int d) {
    if (v.degree < d || w.degree < d) throw DegreeTooSmall();
    TruncatedIdeal vs = ideal_slice(ua, v, d);
    TruncatedIdeal ws = ideal_slice(ua, w, d);
    MonoIndex ix(filtration_basis(ua.dim(), d));
    std::size_t n = ix.size();
    detail::QuotientProj pv(vs.echelon, n), pw(ws.echelon, n);
    std::size_t qa = pv.free_cols.size(), qb = pw.free_cols.size();
    Mat sys(qa * qb, zero_vec(n));
    for (std::size_t j = 0; j < n; ++j) {
        UElement u;
        u.add_term(ix.basis[j], Rational(1));
        TensorElement delta = coproduct(ua, u);
        for (const auto& [legs, c] : delta) {
            Vec la = pv.apply(element_coords(UElement().add_term(legs.first, Rational(1)), ix));
            Vec lb = pw.apply(element_coords(UElement().add_term(legs.second, Rational(1)), ix));
            for (std::size_t a = 0; a < qa; ++a) {
                if (la[a] == 0) continue;
                for (std::size_t b = 0; b < qb; ++b)
                    if (lb[b] != 0) sys[a * qb + b][j] += c * la[a] * lb[b];
            }
        }
    }
    Mat ker = nullspace(std::move(sys), n);
    rref(ker);
    bool cert = vs.certified && ws.certified;
    return TruncatedIdeal{d, std::min(vs.probe_level, ws.probe_level), cert, std::move(ker)};
}

}  // namespace liecg
