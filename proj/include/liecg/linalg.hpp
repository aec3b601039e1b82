#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace liecg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline Vec& add_scaled(Vec& dst, const Vec& src, const Rational& c) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return dst;
}

inline Vec scaled(const Vec& v, const Rational& c) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r = zero_vec(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, zero_vec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (std::size_t c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
    return r;
}

inline Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), zero_vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

inline Mat mat_identity(std::size_t n) {
    Mat r(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

/// In-place reduced row echelon form (leading entries 1, pivot columns
/// cleared). Zero rows are dropped. Returns the pivot columns in order.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != row && m[r][col] != 0) {
                Rational c = m[r][col];
                for (std::size_t c2 = col; c2 < cols; ++c2) m[r][c2] -= c * m[row][c2];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row, zero_vec(cols));
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Canonical basis of {x : m x = 0}: one row per free column, 1 in that
/// coordinate, pivot coordinates filled by back-substitution.
inline Mat nullspace(Mat m, std::size_t cols) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v = zero_vec(cols);
        v[j] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row span in canonical (reduced echelon) form.
inline Mat row_space(Mat m) {
    rref(m);
    return m;
}

inline bool in_row_space(const Mat& echelon, Vec v) {
    // echelon must be in rref form
    for (const auto& row : echelon) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead < row.size() && v[lead] != 0) add_scaled(v, row, -v[lead]);
    }
    return is_zero(v);
}

/// Solves a x = b; returns empty when inconsistent.
inline std::vector<Vec> solve(const Mat& a, const Vec& b) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    Mat aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    for (const auto& row : aug) {
        bool all0 = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (row[j] != 0) { all0 = false; break; }
        if (all0 && row[cols] != 0) return {};
    }
    Vec x = zero_vec(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] < cols) x[pivots[r]] = aug[r][cols];
    return {x};
}

}  // namespace liecg
