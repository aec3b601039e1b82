#pragma once

#include "modules.hpp"

#include <functional>

namespace liecg {

struct UnknownAlgebra : std::runtime_error {
    explicit UnknownAlgebra(const std::string& name)
        : std::runtime_error("unknown catalog algebra '" + name + "'") {}
};

namespace detail {

/// Builds structure constants from a faithful matrix realization: the span of
/// the given matrices must be closed under commutators.
inline AlgebraPtr algebra_from_matrices(const std::string& name,
                                        std::vector<std::string> labels,
                                        const std::vector<Mat>& mats) {
    std::size_t n = mats.size();
    std::size_t sz = mats[0].size();
    auto flatten = [sz](const Mat& m) {
        Vec v;
        v.reserve(sz * sz);
        for (const auto& r : m) v.insert(v.end(), r.begin(), r.end());
        return v;
    };
    Mat basis_cols;
    for (const auto& m : mats) basis_cols.push_back(flatten(m));
    Mat solver = mat_transpose(basis_cols);
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat ab = mat_mul(mats[i], mats[j]);
            Mat ba = mat_mul(mats[j], mats[i]);
            for (std::size_t r = 0; r < sz; ++r) add_scaled(ab[r], ba[r], Rational(-1));
            auto sol = solve(solver, flatten(ab));
            if (sol.empty()) throw std::logic_error("matrix span not closed under commutator");
            table[i][j] = sol[0];
        }
    return validate(name, std::move(labels), std::move(table));
}

inline Mat unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
    Mat m(n, zero_vec(n));
    m[r][c] = 1;
    return m;
}

}  // namespace detail

/// Heisenberg algebra on k symplectic pairs: [x_i, y_i] = z.
inline AlgebraPtr heisenberg(std::size_t pairs) {
    std::size_t n = 2 * pairs + 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < pairs; ++i) {
        std::string s = pairs == 1 ? "" : std::to_string(i + 1);
        labels.push_back("x" + s);
        labels.push_back("y" + s);
    }
    labels.push_back("z");
    std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n, zero_vec(n)));
    for (std::size_t i = 0; i < pairs; ++i) {
        t[2 * i][2 * i + 1][n - 1] = 1;
        t[2 * i + 1][2 * i][n - 1] = -1;
    }
    return validate("heisenberg" + std::to_string(n), std::move(labels), std::move(t));
}

inline AlgebraPtr abelian(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i + 1));
    std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n, zero_vec(n)));
    return validate("abelian" + std::to_string(n), std::move(labels), std::move(t));
}

/// Non-abelian 2-dimensional algebra, [a,b] = b.
inline AlgebraPtr aff1() {
    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, zero_vec(2)));
    t[0][1][1] = 1;
    t[1][0][1] = -1;
    return validate("aff1", {"a", "b"}, std::move(t));
}

/// Oscillator algebra (split form): [a,x] = x, [a,y] = -y, [x,y] = z,
/// z central. Solvable, not nilpotent; nilradical is the Heisenberg part.
inline AlgebraPtr oscillator() {
    std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, zero_vec(4)));
    auto setbr = [&](std::size_t i, std::size_t j, std::size_t k, int c) {
        t[i][j][k] = c;
        t[j][i][k] = -c;
    };
    setbr(0, 1, 1, 1);   // [a,x] = x
    setbr(0, 2, 2, -1);  // [a,y] = -y
    setbr(1, 2, 3, 1);   // [x,y] = z
    return validate("oscillator", {"a", "x", "y", "z"}, std::move(t));
}

/// sl2 with basis order e < h < f: [h,e]=2e, [h,f]=-2f, [e,f]=h.
inline AlgebraPtr sl2() {
    using detail::unit_matrix;
    Mat e = unit_matrix(2, 0, 1), f = unit_matrix(2, 1, 0);
    Mat h(2, zero_vec(2));
    h[0][0] = 1;
    h[1][1] = -1;
    return detail::algebra_from_matrices("sl2", {"e", "h", "f"}, {e, h, f});
}

/// sl3 in the Chevalley basis computed from the defining 3x3 matrices,
/// ordered e1,e2,e12,h1,h2,f1,f2,f12.
inline AlgebraPtr sl3() {
    using detail::unit_matrix;
    Mat e1 = unit_matrix(3, 0, 1), e2 = unit_matrix(3, 1, 2), e12 = unit_matrix(3, 0, 2);
    Mat f1 = unit_matrix(3, 1, 0), f2 = unit_matrix(3, 2, 1), f12 = unit_matrix(3, 2, 0);
    Mat h1(3, zero_vec(3)), h2(3, zero_vec(3));
    h1[0][0] = 1;
    h1[1][1] = -1;
    h2[1][1] = 1;
    h2[2][2] = -1;
    return detail::algebra_from_matrices("sl3", {"e1", "e2", "e12", "h1", "h2", "f1", "f2", "f12"},
                                         {e1, e2, e12, h1, h2, f1, f2, f12});
}

inline std::vector<std::string> catalog_names() {
    return {"abelian1", "abelian2", "abelian3", "heisenberg3", "heisenberg5",
            "aff1",     "oscillator", "sl2",    "sl3"};
}

inline AlgebraPtr catalog_algebra(const std::string& name) {
    if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
        std::size_t n = std::stoul(name.substr(7));
        if (n == 0 || n > 16) throw UnknownAlgebra(name);
        return abelian(n);
    }
    if (name == "heisenberg3") return heisenberg(1);
    if (name == "heisenberg5") return heisenberg(2);
    if (name == "aff1") return aff1();
    if (name == "oscillator") return oscillator();
    if (name == "sl2") return sl2();
    if (name == "sl3") return sl3();
    throw UnknownAlgebra(name);
}

/// Defining matrix representations for the algebras built from matrices.
inline MatrixRep defining_rep(const std::string& name) {
    using detail::unit_matrix;
    if (name == "sl2") {
        Mat e = unit_matrix(2, 0, 1), f = unit_matrix(2, 1, 0);
        Mat h(2, zero_vec(2));
        h[0][0] = 1;
        h[1][1] = -1;
        return make_rep(sl2(), {e, h, f});
    }
    if (name == "sl3") {
        Mat e1 = unit_matrix(3, 0, 1), e2 = unit_matrix(3, 1, 2), e12 = unit_matrix(3, 0, 2);
        Mat f1 = unit_matrix(3, 1, 0), f2 = unit_matrix(3, 2, 1), f12 = unit_matrix(3, 2, 0);
        Mat h1(3, zero_vec(3)), h2(3, zero_vec(3));
        h1[0][0] = 1;
        h1[1][1] = -1;
        h2[1][1] = 1;
        h2[2][2] = -1;
        return make_rep(sl3(), {e1, e2, e12, h1, h2, f1, f2, f12});
    }
    if (name == "aff1") {
        Mat a(2, zero_vec(2)), b(2, zero_vec(2));
        a[1][1] = 1;
        b[1][0] = 1;
        return make_rep(aff1(), {a, b});
    }
    throw UnknownAlgebra(name);
}

inline MatrixRep adjoint_rep(AlgebraPtr g) {
    std::vector<Mat> images;
    for (std::size_t i = 0; i < g->dim(); ++i) images.push_back(g->ad(unit_vec(g->dim(), i)));
    return make_rep(std::move(g), std::move(images));
}

struct CatalogInclusion {
    std::string name;
    AlgebraPtr g;
    Subspace h;
};

/// Subalgebra inclusions h <= g used by the permanence and restriction
/// checks.
inline std::vector<CatalogInclusion> catalog_inclusions() {
    std::vector<CatalogInclusion> out;
    {
        auto g = heisenberg(1);
        out.push_back({"span{y,z} <= heisenberg3", g,
                       span({unit_vec(3, 1), unit_vec(3, 2)})});
        out.push_back({"span{z} <= heisenberg3", g, span({unit_vec(3, 2)})});
    }
    {
        auto g = heisenberg(2);
        out.push_back({"heisenberg3 <= heisenberg5", g,
                       span({unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 4)})});
    }
    {
        auto g = oscillator();
        out.push_back({"heisenberg3 <= oscillator", g,
                       span({unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)})});
        out.push_back({"span{a,x,z} <= oscillator", g,
                       span({unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 3)})});
    }
    {
        auto g = aff1();
        out.push_back({"span{a} <= aff1", g, span({unit_vec(2, 0)})});
        out.push_back({"span{b} <= aff1", g, span({unit_vec(2, 1)})});
    }
    return out;
}

}  // namespace liecg
