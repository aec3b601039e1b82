#pragma once

#include "roots.hpp"
#include "smith.hpp"

#include <map>
#include <numeric>

namespace liecg {

struct UnknownGenerator : std::runtime_error {
    explicit UnknownGenerator(const std::string& id)
        : std::runtime_error("relation references undeclared generator '" + id + "'") {}
};

struct RelationNotRespected : std::runtime_error {
    std::size_t relation_index;
    Vec defect;
    RelationNotRespected(std::size_t idx, Vec d)
        : std::runtime_error("relation " + std::to_string(idx) +
                             " is not respected by the central characters"),
          relation_index(idx), defect(std::move(d)) {}
};

struct ChainGenerator {
    std::string id;
    std::optional<Vec> character;  // functional on the center, when annotated
};

/// product: g_a = g_b g_c; unit: g_a = 1; inverse: g_b = g_a^{-1}.
struct ChainRelation {
    enum class Type { product, unit, inverse };
    Type type;
    std::string a, b, c;
};

/// Finitely presented chain group: one generator per primitive-ideal handle,
/// relations harvested from verified weak-containment instances.
struct ChainPresentation {
    std::vector<ChainGenerator> generators;
    std::vector<ChainRelation> relations;

    std::map<std::string, std::size_t> index() const {
        std::map<std::string, std::size_t> ix;
        for (std::size_t i = 0; i < generators.size(); ++i) ix.emplace(generators[i].id, i);
        return ix;
    }
};

inline ChainPresentation build(std::vector<ChainGenerator> gens,
                               std::vector<ChainRelation> rels) {
    ChainPresentation p{std::move(gens), std::move(rels)};
    auto ix = p.index();
    for (const auto& r : p.relations) {
        if (!ix.count(r.a)) throw UnknownGenerator(r.a);
        if (r.type != ChainRelation::Type::unit) {
            if (!ix.count(r.b)) throw UnknownGenerator(r.b);
            if (r.type == ChainRelation::Type::product && !ix.count(r.c))
                throw UnknownGenerator(r.c);
        }
    }
    return p;
}

/// Identifies generators along verified ideal inclusions (g_J = g_{J'}).
/// Union-find with the lexicographically smallest id as representative, so
/// the merge is idempotent and order-independent.
inline ChainPresentation merge_by_inclusion(
    const ChainPresentation& p, const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto ix = p.index();
    std::vector<std::size_t> parent(p.generators.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // smaller id wins
        if (p.generators[b].id < p.generators[a].id) std::swap(a, b);
        parent[b] = a;
    };
    for (const auto& [a, b] : pairs) {
        if (!ix.count(a)) throw UnknownGenerator(a);
        if (!ix.count(b)) throw UnknownGenerator(b);
        unite(ix.at(a), ix.at(b));
    }
    ChainPresentation out;
    std::map<std::size_t, std::size_t> rep_slot;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        std::size_t r = find(i);
        if (!rep_slot.count(r)) {
            rep_slot.emplace(r, out.generators.size());
            out.generators.push_back(p.generators[r]);
        }
        if (p.generators[i].character && !out.generators[rep_slot.at(r)].character)
            out.generators[rep_slot.at(r)].character = p.generators[i].character;
    }
    auto rep_id = [&](const std::string& id) {
        return p.generators[find(ix.at(id))].id;
    };
    for (const auto& r : p.relations) {
        ChainRelation nr = r;
        nr.a = rep_id(r.a);
        if (r.type != ChainRelation::Type::unit) nr.b = rep_id(r.b);
        if (r.type == ChainRelation::Type::product) nr.c = rep_id(r.c);
        out.relations.push_back(std::move(nr));
    }
    return out;
}

/// Integer relation matrix of the abelianized presentation: product rows
/// a - b - c, unit rows a, inverse rows a + b.
inline IMat relation_matrix(const ChainPresentation& p) {
    auto ix = p.index();
    IMat rows;
    for (const auto& r : p.relations) {
        IVec row(p.generators.size(), 0);
        switch (r.type) {
            case ChainRelation::Type::product:
                row[ix.at(r.a)] += 1;
                row[ix.at(r.b)] -= 1;
                row[ix.at(r.c)] -= 1;
                break;
            case ChainRelation::Type::unit:
                row[ix.at(r.a)] += 1;
                break;
            case ChainRelation::Type::inverse:
                row[ix.at(r.a)] += 1;
                row[ix.at(r.b)] += 1;
                break;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Invariant factors of the abelianized chain group, by integer Smith
/// normal form.
inline AbelianGroup abelian_invariants(const ChainPresentation& p) {
    return cokernel(relation_matrix(p), p.generators.size());
}

/// Coinvariants of the Weyl action: cokernel of the stacked (w - id) over
/// the weight lattice (integer SNF), or the rational rank computation.
inline AbelianGroup weyl_coinvariants(const RootSystem& rs, bool over_lattice) {
    std::size_t r = rs.rank;
    if (over_lattice) {
        IMat rows;
        for (const auto& w : rs.weyl) {
            for (std::size_t j = 0; j < r; ++j) {
                IVec row(r, 0);
                for (std::size_t i = 0; i < r; ++i) row[i] = w[i][j] - (i == j ? 1 : 0);
                rows.push_back(std::move(row));
            }
        }
        return cokernel(rows, r);
    }
    Mat rows;
    for (const auto& w : rs.weyl)
        for (std::size_t j = 0; j < r; ++j) {
            Vec row = zero_vec(r);
            for (std::size_t i = 0; i < r; ++i)
                row[i] = Rational(w[i][j]) - (i == j ? Rational(1) : Rational(0));
            rows.push_back(std::move(row));
        }
    return AbelianGroup{r - rank(std::move(rows)), {}};
}

struct CanReport {
    bool well_defined = false;
    AbelianGroup presented;
    std::size_t image_rank = 0;
    bool isomorphic = false;
};

/// The canonical map to the dual of the center: checks every relation is
/// character-respecting (throws RelationNotRespected otherwise), computes
/// the subgroup of z* generated by the characters, and compares it with the
/// presented abelianization.
inline CanReport can_check(const ChainPresentation& p) {
    auto ix = p.index();
    std::size_t zdim = 0;
    for (const auto& g : p.generators) {
        if (!g.character) throw UnknownGenerator(g.id + " (no character annotation)");
        zdim = g.character->size();
    }
    auto chi = [&](const std::string& id) -> const Vec& { return *p.generators[ix.at(id)].character; };
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const auto& r = p.relations[i];
        Vec defect = zero_vec(zdim);
        switch (r.type) {
            case ChainRelation::Type::product:
                defect = chi(r.b);
                add_scaled(defect, chi(r.c), Rational(1));
                add_scaled(defect, chi(r.a), Rational(-1));
                break;
            case ChainRelation::Type::unit:
                defect = chi(r.a);
                break;
            case ChainRelation::Type::inverse:
                defect = chi(r.a);
                add_scaled(defect, chi(r.b), Rational(1));
                break;
        }
        if (!is_zero(defect)) throw RelationNotRespected(i, std::move(defect));
    }
    CanReport rep;
    rep.well_defined = true;
    rep.presented = abelian_invariants(p);
    // image lattice: clear denominators, integer SNF rank
    Int den = 1;
    for (const auto& g : p.generators)
        for (const auto& x : *g.character) den = lcm(den, denominator(x));
    IMat rows;
    for (const auto& g : p.generators) {
        IVec row(zdim, 0);
        for (std::size_t j = 0; j < zdim; ++j)
            row[j] = numerator((*g.character)[j] * Rational(den));
        rows.push_back(std::move(row));
    }
    rep.image_rank = rows.empty() ? 0 : smith_diagonal(rows).size();
    rep.isomorphic = rep.presented.torsion.empty() && rep.presented.free_rank == rep.image_rank;
    return rep;
}

}  // namespace liecg
