#pragma once

#include "rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace liecg {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

namespace detail {

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

/// Smith normal form over Z. Returns the diagonal entries d1 | d2 | ...
/// (nonnegative, zeros dropped). Only the invariant factors are tracked.
inline IVec smith_diagonal(IMat a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    IVec diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero pivot of minimal absolute value
        std::size_t pr = t, pc = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!found || detail::iabs(a[i][j]) < best)) {
                    best = detail::iabs(a[i][j]);
                    pr = i;
                    pc = j;
                    found = true;
                }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // divisibility fix-up: pivot must divide the rest
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
                            clean = false;
                        }
            }
        }
        diag.push_back(detail::iabs(a[t][t]));
        ++t;
    }
    IVec out;
    for (auto& d : diag)
        if (d != 0) out.push_back(d);
    return out;
}

/// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    std::size_t free_rank = 0;
    IVec torsion;  // factors >= 2, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }

    std::string str() const {
        if (trivial()) return "trivial group";
        std::string s;
        if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
        for (const auto& d : torsion) {
            if (!s.empty()) s += " ⊕ ";
            s += "Z/" + d.str();
        }
        return s;
    }
};

/// Cokernel of Z^generators / row-span(relations).
inline AbelianGroup cokernel(const IMat& relations, std::size_t generators) {
    if (relations.empty()) return AbelianGroup{generators, {}};
    IVec d = smith_diagonal(relations);
    AbelianGroup g;
    g.free_rank = generators - d.size();
    for (auto& x : d)
        if (x > 1) g.torsion.push_back(x);
    return g;
}

}  // namespace liecg
