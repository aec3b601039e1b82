#pragma once

#include "linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liecg {

struct AntisymmetryError : std::runtime_error {
    std::size_t i, j;
    AntisymmetryError(std::size_t i_, std::size_t j_)
        : std::runtime_error("antisymmetry violated at basis pair (" + std::to_string(i_) +
                             "," + std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct JacobiError : std::runtime_error {
    std::size_t i, j, k;
    Vec defect;
    JacobiError(std::size_t i_, std::size_t j_, std::size_t k_, Vec d)
        : std::runtime_error("Jacobi identity violated at basis triple (" + std::to_string(i_) +
                             "," + std::to_string(j_) + "," + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_), defect(std::move(d)) {}
};

struct NotAnIdeal : std::runtime_error {
    NotAnIdeal() : std::runtime_error("subspace is not an ideal") {}
};
struct NotASubalgebra : std::runtime_error {
    NotASubalgebra() : std::runtime_error("subspace is not a subalgebra") {}
};
struct NotSolvable : std::runtime_error {
    NotSolvable() : std::runtime_error("operation requires a solvable Lie algebra") {}
};

/// Finite-dimensional Lie algebra over Q, given by structure constants on a
/// fixed ordered basis. Immutable after construction via validate().
struct LieAlgebra {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> table;  // table[i][j] = [b_i, b_j] in basis coordinates

    std::size_t dim() const { return labels.size(); }

    const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table[i][j]; }

    Vec bracket(const Vec& x, const Vec& y) const {
        Vec r = zero_vec(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (y[j] == 0) continue;
                add_scaled(r, table[i][j], x[i] * y[j]);
            }
        }
        return r;
    }

    /// Matrix of ad(x) acting on coordinate vectors.
    Mat ad(const Vec& x) const {
        Mat m(dim(), zero_vec(dim()));
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec col = bracket(x, unit_vec(dim(), j));
            for (std::size_t i = 0; i < dim(); ++i) m[i][j] = col[i];
        }
        return m;
    }

    std::optional<std::size_t> label_index(const std::string& l) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        return std::nullopt;
    }
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Checks antisymmetry and the Jacobi identity on every basis triple.
inline AlgebraPtr validate(std::string name, std::vector<std::string> labels,
                           std::vector<std::vector<Vec>> table) {
    std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[i][j][k] != -table[j][i][k]) throw AntisymmetryError(i, j);
    LieAlgebra g{std::move(name), std::move(labels), std::move(table)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec d = g.bracket(unit_vec(n, i), g.bracket_basis(j, k));
                add_scaled(d, g.bracket(unit_vec(n, j), g.bracket_basis(k, i)), Rational(1));
                add_scaled(d, g.bracket(unit_vec(n, k), g.bracket_basis(i, j)), Rational(1));
                if (!is_zero(d)) throw JacobiError(i, j, k, std::move(d));
            }
    return std::make_shared<const LieAlgebra>(std::move(g));
}

/// Subspace of a Lie algebra, basis rows kept in reduced echelon form so that
/// equality and inclusion are canonical.
struct Subspace {
    Mat basis;  // rref rows

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vec& v) const { return in_row_space(basis, v); }
    bool includes(const Subspace& o) const {
        for (const auto& r : o.basis)
            if (!contains(r)) return false;
        return true;
    }
    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

inline Subspace span(Mat rows) { return Subspace{row_space(std::move(rows))}; }

inline Subspace full_space(const LieAlgebra& g) { return Subspace{mat_identity(g.dim())}; }

inline Subspace zero_space() { return Subspace{{}}; }

inline Subspace span_sum(const Subspace& a, const Subspace& b) {
    Mat rows = a.basis;
    rows.insert(rows.end(), b.basis.begin(), b.basis.end());
    return span(std::move(rows));
}

inline Subspace span_intersect(const Subspace& a, const Subspace& b) {
    if (a.basis.empty() || b.basis.empty()) return Subspace{{}};
    std::size_t n = a.basis[0].size();
    // c . a.basis = d . b.basis  <=>  (c, d) in the nullspace of [a^T | -b^T]
    Mat sys(n, zero_vec(a.dim() + b.dim()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < a.dim(); ++r) sys[i][r] = a.basis[r][i];
        for (std::size_t r = 0; r < b.dim(); ++r) sys[i][a.dim() + r] = -b.basis[r][i];
    }
    Mat null = nullspace(std::move(sys), a.dim() + b.dim());
    Mat rows;
    for (const auto& c : null) {
        Vec v = zero_vec(n);
        for (std::size_t r = 0; r < a.dim(); ++r)
            if (c[r] != 0) add_scaled(v, a.basis[r], c[r]);
        rows.push_back(std::move(v));
    }
    return span(std::move(rows));
}

/// Linear functional, coordinates over the ambient basis of its domain.
struct Functional {
    Vec coords;

    Rational operator()(const Vec& v) const { return dot(coords, v); }
    bool operator==(const Functional& o) const { return coords == o.coords; }
};

inline bool is_subalgebra(const LieAlgebra& g, const Subspace& h) {
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = a + 1; b < h.dim(); ++b)
            if (!h.contains(g.bracket(h.basis[a], h.basis[b]))) return false;
    return true;
}

inline bool is_ideal(const LieAlgebra& g, const Subspace& k) {
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t a = 0; a < k.dim(); ++a)
            if (!k.contains(g.bracket(unit_vec(g.dim(), i), k.basis[a]))) return false;
    return true;
}

/// Span of [A, B].
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    Mat rows;
    for (const auto& x : a.basis)
        for (const auto& y : b.basis) rows.push_back(g.bracket(x, y));
    return span(std::move(rows));
}

/// {x : [x, g] = 0}, the nullspace of the stacked adjoint maps.
inline Subspace center(const LieAlgebra& g) {
    std::size_t n = g.dim();
    Mat sys;  // rows indexed by (j, k): sum_i x_i c[i][j][k] = 0
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vec row = zero_vec(n);
            for (std::size_t i = 0; i < n; ++i) row[i] = g.bracket_basis(i, j)[k];
            sys.push_back(std::move(row));
        }
    return span(nullspace(std::move(sys), n));
}

enum class SeriesKind { derived, lower_central };

/// Strictly decreasing series until stable; the final (stable) term is kept.
inline std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind) {
    std::vector<Subspace> out{full_space(g)};
    for (;;) {
        const Subspace& prev = out.back();
        Subspace next = (kind == SeriesKind::derived) ? bracket_span(g, prev, prev)
                                                      : bracket_span(g, full_space(g), prev);
        if (next == prev) break;
        out.push_back(std::move(next));
        if (out.back().dim() == 0) break;
    }
    return out;
}

inline bool is_solvable(const LieAlgebra& g) {
    return series(g, SeriesKind::derived).back().dim() == 0;
}
inline bool is_nilpotent(const LieAlgebra& g) {
    return series(g, SeriesKind::lower_central).back().dim() == 0;
}

inline bool is_nilpotent_op(const Mat& m) {
    Mat p = m;
    for (std::size_t k = 1; k < m.size(); ++k) p = mat_mul(p, m);
    for (const auto& row : p)
        if (!is_zero(row)) return false;
    return true;
}

/// Nilradical of a solvable algebra: the ad-nilpotent locus. Computed as the
/// trace-form radical against the associative envelope of ad(g) (exact over Q
/// in characteristic 0), then re-verified as an ideal containing [g,g] whose
/// basis is ad-nilpotent.
inline Subspace nilradical(const LieAlgebra& g) {
    if (!is_solvable(g)) throw NotSolvable();
    std::size_t n = g.dim();
    // associative envelope of {ad b_i}
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(g.ad(unit_vec(n, i)));
    auto flatten = [n](const Mat& m) {
        Vec v;
        v.reserve(n * n);
        for (const auto& r : m) v.insert(v.end(), r.begin(), r.end());
        return v;
    };
    std::vector<Mat> envelope;
    Mat flat;  // echelon of flattened envelope elements
    auto push = [&](const Mat& m) {
        Vec f = flatten(m);
        if (in_row_space(flat, f)) return false;
        envelope.push_back(m);
        flat.push_back(std::move(f));
        rref(flat);
        return true;
    };
    for (const auto& m : gens) push(m);
    for (std::size_t i = 0; i < envelope.size(); ++i)
        for (const auto& gmat : gens) push(mat_mul(envelope[i], gmat));
    // x in nilradical  iff  tr(ad x * b) = 0 for every envelope element b
    Mat sys;
    for (const auto& b : envelope) {
        Vec row = zero_vec(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational tr = 0;
            const Mat adi = gens[i];
            for (std::size_t r = 0; r < n; ++r) tr += dot(adi[r], mat_transpose(b)[r]);
            row[i] = tr;
        }
        sys.push_back(std::move(row));
    }
    Subspace nr = span(nullspace(std::move(sys), n));
    for (const auto& x : nr.basis)
        if (!is_nilpotent_op(g.ad(x))) throw std::logic_error("nilradical basis not ad-nilpotent");
    if (!is_ideal(g, nr)) throw std::logic_error("nilradical is not an ideal");
    Subspace der = bracket_span(g, full_space(g), full_space(g));
    if (!nr.includes(der)) throw std::logic_error("nilradical does not contain [g,g]");
    return nr;
}

/// Complement coordinates: the non-pivot columns of the subspace's echelon
/// basis, in ascending order.
inline std::vector<std::size_t> complement_indices(const LieAlgebra& g, const Subspace& h) {
    std::vector<bool> pivot(g.dim(), false);
    for (const auto& row : h.basis) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        pivot[lead] = true;
    }
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!pivot[i]) comp.push_back(i);
    return comp;
}

/// Coordinates of v in the row basis of s (v must lie in s).
inline Vec coords_in(const Subspace& s, const Vec& v) {
    Mat sys = mat_transpose(s.basis);
    auto sol = solve(sys, v);
    if (sol.empty()) throw std::logic_error("vector not in subspace");
    return sol[0];
}

struct QuotientResult {
    AlgebraPtr algebra;
    Mat projection;  // (dim g/k) x (dim g)
};

/// g/k on the complement-coordinate basis, with the projection map.
inline QuotientResult quotient(const LieAlgebra& g, const Subspace& k,
                               const std::string& qname = "") {
    if (!is_ideal(g, k)) throw NotAnIdeal();
    auto comp = complement_indices(g, k);
    std::size_t m = comp.size(), n = g.dim();
    auto project = [&](Vec x) {
        for (const auto& row : k.basis) {
            std::size_t lead = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            if (x[lead] != 0) add_scaled(x, row, -x[lead]);
        }
        Vec q = zero_vec(m);
        for (std::size_t a = 0; a < m; ++a) q[a] = x[comp[a]];
        return q;
    };
    Mat proj(m, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        Vec q = project(unit_vec(n, i));
        for (std::size_t a = 0; a < m; ++a) proj[a][i] = q[a];
    }
    std::vector<std::string> labels;
    for (auto c : comp) labels.push_back(g.labels[c]);
    std::vector<std::vector<Vec>> table(m, std::vector<Vec>(m, zero_vec(m)));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            table[a][b] = project(g.bracket_basis(comp[a], comp[b]));
    return {validate(qname.empty() ? g.name + "/ideal" : qname, std::move(labels),
                     std::move(table)),
            std::move(proj)};
}

struct DirectSumResult {
    AlgebraPtr algebra;
    Mat diagonal;  // (dim g + dim g') x (dim g), defined when both summands equal
};

inline DirectSumResult direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
    std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
    std::vector<std::string> labels;
    for (const auto& l : g1.labels) labels.push_back(l + ".1");
    for (const auto& l : g2.labels) labels.push_back(l + ".2");
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) table[i][j][k] = g1.bracket_basis(i, j)[k];
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < n2; ++k)
                table[n1 + i][n1 + j][n1 + k] = g2.bracket_basis(i, j)[k];
    Mat diag;
    if (n1 == n2) {
        diag.assign(n, zero_vec(n1));
        for (std::size_t i = 0; i < n1; ++i) {
            diag[i][i] = 1;
            diag[n1 + i][i] = 1;
        }
    }
    return {validate(g1.name + "+" + g2.name, std::move(labels), std::move(table)),
            std::move(diag)};
}

/// Half-trace character theta(x) = (1/2) tr_{g/h} ad(x) on a subalgebra h.
/// Returns coordinates over h's echelon basis.
inline Functional theta(const LieAlgebra& g, const Subspace& h) {
    if (!is_subalgebra(g, h)) throw NotASubalgebra();
    auto comp = complement_indices(g, h);
    auto reduce_mod_h = [&](Vec x) {
        for (const auto& row : h.basis) {
            std::size_t lead = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            if (x[lead] != 0) add_scaled(x, row, -x[lead]);
        }
        return x;
    };
    Vec coords = zero_vec(h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a) {
        Rational tr = 0;
        for (std::size_t c = 0; c < comp.size(); ++c) {
            Vec img = reduce_mod_h(g.bracket(h.basis[a], unit_vec(g.dim(), comp[c])));
            tr += img[comp[c]];
        }
        coords[a] = tr / 2;
    }
    return Functional{std::move(coords)};
}

/// Structure constants rewritten on a new basis (rows of `rows`, which must
/// be invertible).
inline AlgebraPtr change_of_basis(const LieAlgebra& g, const Mat& rows,
                                  std::vector<std::string> labels, const std::string& name) {
    std::size_t n = g.dim();
    Mat cols = mat_transpose(rows);  // old coords of new basis vectors as columns
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec br = g.bracket(rows[a], rows[b]);
            auto sol = solve(cols, br);
            if (sol.empty()) throw std::logic_error("change_of_basis: rows not a basis");
            table[a][b] = sol[0];
        }
    return validate(name, std::move(labels), std::move(table));
}

/// The subalgebra h as a Lie algebra in its own echelon basis.
inline AlgebraPtr subalgebra_algebra(const LieAlgebra& g, const Subspace& h,
                                     const std::string& name) {
    if (!is_subalgebra(g, h)) throw NotASubalgebra();
    std::size_t k = h.dim();
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < k; ++a) labels.push_back(name + "_" + std::to_string(a));
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, zero_vec(k)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            table[a][b] = coords_in(h, g.bracket(h.basis[a], h.basis[b]));
    return validate(name, std::move(labels), std::move(table));
}

/// Pretty form "span{z}" when the echelon rows are plain basis vectors,
/// otherwise coordinate rows.
inline std::string subspace_str(const LieAlgebra& g, const Subspace& s) {
    if (s.dim() == 0) return "0";
    if (s.dim() == g.dim()) return "g (whole algebra)";
    std::string out = "span{";
    for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) out += ", ";
        const Vec& row = s.basis[r];
        std::size_t nz = 0;
        for (const auto& x : row)
            if (x != 0) ++nz;
        std::string term;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0) continue;
            if (!term.empty()) term += " + ";
            if (row[i] != 1) term += rational_str(row[i]) + "*";
            term += g.labels[i];
        }
        out += nz ? term : "0";
    }
    return out + "}";
}

}  // namespace liecg
