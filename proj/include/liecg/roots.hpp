#pragma once

#include "catalog.hpp"
#include "smith.hpp"

#include <set>

namespace liecg {

struct UnsupportedType : std::runtime_error {
    explicit UnsupportedType(const std::string& t)
        : std::runtime_error("unsupported root system type '" + t + "'") {}
};

/// Weight in fundamental-weight coordinates.
using Weight = Vec;

using WeylElement = std::vector<std::vector<Int>>;  // integer matrix on weight coords

inline Weight weyl_act(const WeylElement& w, const Weight& l) {
    Weight r = zero_vec(l.size());
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j) r[i] += Rational(w[i][j]) * l[j];
    return r;
}

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
    std::size_t n = a.size();
    WeylElement r(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// Rank <= 2 root system data, exact: Cartan matrix, positive roots in
/// simple-root coordinates, delta, and the full Weyl group as integer
/// matrices on the fundamental-weight lattice.
struct RootSystem {
    std::string type;
    std::size_t rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<std::vector<int>> positive_roots;  // simple-root coordinates
    Weight delta;                                  // = (1,...,1)
    std::vector<WeylElement> weyl;                 // closed group, identity first

    /// Simple root alpha_j in fundamental coordinates (Cartan column j).
    Weight simple_root(std::size_t j) const {
        Weight a = zero_vec(rank);
        for (std::size_t i = 0; i < rank; ++i) a[i] = cartan[i][j];
        return a;
    }

    const WeylElement& longest_element() const { return weyl.back(); }
};

inline RootSystem root_system(const std::string& type) {
    RootSystem rs;
    rs.type = type;
    if (type == "A1") {
        rs.rank = 1;
        rs.cartan = {{2}};
        rs.positive_roots = {{1}};
    } else if (type == "A2") {
        rs.rank = 2;
        rs.cartan = {{2, -1}, {-1, 2}};
        rs.positive_roots = {{1, 0}, {0, 1}, {1, 1}};
    } else {
        throw UnsupportedType(type);
    }
    rs.delta = Vec(rs.rank, Rational(1));
    // simple reflection s_i on fundamental coords: lambda - lambda_i * alpha_i
    std::vector<WeylElement> gens;
    for (std::size_t i = 0; i < rs.rank; ++i) {
        WeylElement m(rs.rank, IVec(rs.rank, 0));
        for (std::size_t r = 0; r < rs.rank; ++r) m[r][r] = 1;
        for (std::size_t r = 0; r < rs.rank; ++r) m[r][i] -= rs.cartan[r][i];
        gens.push_back(std::move(m));
    }
    // close under multiplication; order by word length so the longest
    // element comes last
    std::vector<WeylElement> group;
    WeylElement id(rs.rank, IVec(rs.rank, 0));
    for (std::size_t r = 0; r < rs.rank; ++r) id[r][r] = 1;
    group.push_back(id);
    std::set<WeylElement> seen{id};
    std::size_t head = 0;
    while (head < group.size()) {
        for (const auto& s : gens) {
            WeylElement next = weyl_mul(s, group[head]);
            if (seen.insert(next).second) group.push_back(std::move(next));
        }
        ++head;
    }
    rs.weyl = std::move(group);
    return rs;
}

/// Catalog realization behind a root system: the Chevalley generators inside
/// sl2/sl3, the Borel subalgebra, and the Casimir element of the trace form.
struct ChevalleyContext {
    RootSystem rs;
    AlgebraPtr g;
    std::vector<std::size_t> e_idx, h_idx, f_idx;  // simple triples
    std::vector<std::size_t> neg_idx;              // all negative root vectors
    std::vector<std::size_t> pos_idx;              // transpose partners of neg_idx
    Subspace borel;

    std::size_t rank() const { return rs.rank; }
};

inline ChevalleyContext chevalley_context(const std::string& type) {
    ChevalleyContext ctx;
    ctx.rs = root_system(type);
    if (type == "A1") {
        ctx.g = sl2();  // basis e,h,f
        ctx.e_idx = {0};
        ctx.h_idx = {1};
        ctx.f_idx = {2};
        ctx.neg_idx = {2};
        ctx.pos_idx = {0};
        ctx.borel = span({unit_vec(3, 0), unit_vec(3, 1)});
    } else {
        ctx.g = sl3();  // basis e1,e2,e12,h1,h2,f1,f2,f12
        ctx.e_idx = {0, 1};
        ctx.h_idx = {3, 4};
        ctx.f_idx = {5, 6};
        ctx.neg_idx = {5, 6, 7};
        ctx.pos_idx = {0, 1, 2};
        ctx.borel = span({unit_vec(8, 0), unit_vec(8, 1), unit_vec(8, 2), unit_vec(8, 3),
                          unit_vec(8, 4)});
    }
    return ctx;
}

/// Casimir element of the trace form of the defining representation:
/// Omega = sum_i b_i b^i with (b^i) the dual basis. For A1 this is
/// ef + fe + h^2/2.
inline UElement casimir(const UAlgebra& ua, const ChevalleyContext& ctx) {
    MatrixRep def = defining_rep(ctx.rs.type == "A1" ? "sl2" : "sl3");
    std::size_t n = ctx.g->dim();
    Mat gram(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational tr = 0;
            Mat prod = mat_mul(def.images[i], def.images[j]);
            for (std::size_t r = 0; r < prod.size(); ++r) tr += prod[r][r];
            gram[i][j] = tr;
        }
    // invert the Gram matrix
    Mat aug = gram;
    for (std::size_t i = 0; i < n; ++i) {
        Vec id = zero_vec(n);
        id[i] = 1;
        aug[i].insert(aug[i].end(), id.begin(), id.end());
    }
    rref(aug);
    Mat ginv(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ginv[i][j] = aug[i][n + j];
    UElement omega;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (ginv[i][j] != 0) omega += ua.normalize({i, j}, ginv[i][j]);
    return omega;
}

}  // namespace liecg
