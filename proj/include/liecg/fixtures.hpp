#pragma once

#include "chain.hpp"
#include "orbit.hpp"
#include "verma.hpp"

#include <set>

namespace liecg {

struct UnknownFixture : std::runtime_error {
    explicit UnknownFixture(const std::string& n)
        : std::runtime_error("unknown fixture '" + n + "'") {}
};

struct FixtureResult {
    std::string name;
    std::string description;
    int degree = 0;  // truncation the instance verifications ran at
    ChainPresentation presentation;  // merged
    AbelianGroup group;
    std::optional<CanReport> can;
    std::vector<std::string> notes;
    bool instances_verified = true;  // every harvested relation was engine-checked
};

namespace detail {

inline std::string rstr(const Rational& r) { return rational_str(r); }

inline void require(bool ok, const std::string& what, FixtureResult& out) {
    if (!ok) {
        out.instances_verified = false;
        out.notes.push_back("FAILED: " + what);
    }
}

}  // namespace detail

/// Dixmier-ideal grid for the 3-dimensional Heisenberg algebra: generators
/// I(f) for f(z) in {1,-1,2,-2,3} plus the sums the relations need, product
/// relations from tensor-kernel inclusions, inverse relations from antipode
/// duality, the unit at f = 0.
inline FixtureResult fixture_h3_central_grid() {
    FixtureResult out;
    out.name = "h3-central-grid";
    out.description =
        "heisenberg3 Dixmier ideals I(f), f(z) in {1,-1,2,-2,3}; product relations from "
        "tensor kernels, inverses from antipode duality, unit at f=0; abelianizes onto the "
        "character lattice Z";
    auto g = heisenberg(1);
    UAlgebra ua(g);
    out.degree = 1;
    std::vector<Rational> samples{1, -1, 2, -2, 3};
    std::set<Rational> needed{0};
    for (const auto& c : samples) {
        needed.insert(c);
        needed.insert(-c);
        for (const auto& cp : samples) needed.insert(c + cp);
    }
    const int d = 1;
    std::map<Rational, DixmierIdeal> ideals;
    auto id_of = [&](const Rational& c) { return "h3:I(z=" + detail::rstr(c) + ")"; };
    std::vector<ChainGenerator> gens;
    for (const auto& c : needed) {
        Functional f{Vec{Rational(0), Rational(0), c}};
        DixmierIdeal D = dixmier_ideal(ua, f, d);
        detail::require(D.ideal.certified, "I(f) certified for c=" + detail::rstr(c), out);
        Functional cc = central_character(*D.module);
        detail::require(cc.coords == Vec{c}, "central character of I(f) module", out);
        gens.push_back({id_of(c), Vec{c}});
        ideals.emplace(c, std::move(D));
    }
    std::vector<ChainRelation> rels;
    // unit: I(0) is the kernel of the trivial representation
    {
        auto ktriv = kernel_truncated(ua, *as_module(trivial_rep(g)), d);
        detail::require(ideal_equal(ktriv, ideals.at(0).ideal),
                        "I(0) equals the trivial representation's kernel", out);
        rels.push_back({ChainRelation::Type::unit, id_of(0), "", ""});
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i; j < samples.size(); ++j) {
            const Rational &c = samples[i], &cp = samples[j];
            TruncatedIdeal tker = wedge_truncated(ua, ideals.at(c).ideal, ideals.at(cp).ideal, d);
            bool ok = ideal_includes(ua, ideals.at(c + cp).ideal, tker);
            detail::require(ok, "tensor kernel inside I(f+f') for (" + detail::rstr(c) + "," +
                                    detail::rstr(cp) + ")",
                            out);
            if (ok)
                rels.push_back({ChainRelation::Type::product, id_of(c + cp), id_of(c), id_of(cp)});
        }
    for (const auto& c : samples) {
        TruncatedIdeal s = ideal_antipode(ua, ideals.at(c).ideal);
        bool ok = ideal_equal(s, ideals.at(-c).ideal);
        detail::require(ok, "S(I(f)) = I(-f) for c=" + detail::rstr(c), out);
        if (ok) rels.push_back({ChainRelation::Type::inverse, id_of(c), id_of(-c), ""});
    }
    out.presentation = build(std::move(gens), std::move(rels));
    out.group = abelian_invariants(out.presentation);
    out.can = can_check(out.presentation);
    return out;
}

/// The non-abelian 2-dimensional algebra with its faithful simple shift
/// module: the zero ideal merges every generator, so the presentation
/// collapses to the trivial group.
inline FixtureResult fixture_aff1_faithful() {
    FixtureResult out;
    out.name = "aff1-faithful";
    out.description =
        "aff1 with the faithful simple shift module (a: multiplication, b: unit shift); the "
        "zero kernel merges all generators, collapsing the presentation";
    auto g = aff1();
    UAlgebra ua(g);
    const int d = 2;
    out.degree = d;
    auto sm = std::make_shared<ShiftModule>(g, 10);
    TruncatedIdeal zero_ideal = kernel_truncated(ua, *sm, d);
    detail::require(zero_ideal.rank() == 0 && zero_ideal.certified,
                    "shift module faithful at degree 2 (certified)", out);
    // the same handle arises from the Dixmier ideal of f(b)=1
    DixmierIdeal D = dixmier_ideal(ua, Functional{Vec{Rational(0), Rational(1)}}, d);
    detail::require(ideal_equal(D.ideal, zero_ideal), "I(f(b)=1) is the zero ideal", out);

    std::vector<ChainGenerator> gens;
    std::vector<ChainRelation> rels;
    std::vector<std::pair<std::string, std::string>> merges;
    gens.push_back({"aff1:I(0)", Vec{}});
    for (int s = 0; s <= 2; ++s) {
        Functional lam{Vec{Rational(s), Rational(0)}};
        auto k = kernel_truncated(ua, *as_module(character_rep(g, lam)), d);
        std::string id = "aff1:ker(a=" + std::to_string(s) + ")";
        gens.push_back({id, Vec{}});
        detail::require(ideal_includes(ua, k, zero_ideal),
                        "zero ideal included in ker(a=" + std::to_string(s) + ")", out);
        merges.push_back({"aff1:I(0)", id});
    }
    rels.push_back({ChainRelation::Type::unit, "aff1:ker(a=0)", "", ""});
    auto p = build(std::move(gens), std::move(rels));
    out.presentation = merge_by_inclusion(p, merges);
    out.group = abelian_invariants(out.presentation);
    out.can = can_check(out.presentation);
    return out;
}

namespace detail {

struct WeightLess {
    bool operator()(const Weight& a, const Weight& b) const { return a < b; }
};

inline std::string weight_id(const std::string& prefix, const Weight& l) {
    std::string s = prefix + ":J(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) s += ",";
        s += rstr(l[i]);
    }
    return s + ")";
}

/// Shared builder for the delta-shift grids over A1/A2: generators J_lambda
/// for lambda in the grid closed under lambda+mu-delta, product relations
/// verified through the tensor highest-weight vector, Weyl identifications
/// and antipode inverses verified through equality of the truncated minimal
/// primitive ideals.
inline FixtureResult delta_grid_fixture(const std::string& type,
                                        const std::vector<Weight>& grid) {
    FixtureResult out;
    out.name = (type == "A1" ? "a1-delta-grid" : "a2-delta-grid");
    out.description = type +
                      " delta-shift grid: minimal primitive ideals J(lambda) with relations "
                      "g_l g_m = g_{l+m-delta} from tensor highest-weight vectors, Weyl "
                      "identifications, antipode inverses, unit at lambda = delta";
    ChevalleyContext ctx = chevalley_context(type);
    UAlgebra ua(ctx.g);
    const int d = 2;
    out.degree = d;
    std::set<Weight, WeightLess> closure(grid.begin(), grid.end());
    for (const auto& la : grid)
        for (const auto& mu : grid) {
            Weight s = la;
            add_scaled(s, mu, Rational(1));
            add_scaled(s, ctx.rs.delta, Rational(-1));
            closure.insert(s);
        }
    // negatives are needed for the inverse relations
    {
        std::set<Weight, WeightLess> with_neg = closure;
        for (const auto& l : closure) with_neg.insert(scaled(l, Rational(-1)));
        closure = std::move(with_neg);
    }

    std::map<Weight, TruncatedIdeal, WeightLess> slices;
    for (const auto& l : closure) {
        TruncatedIdeal J = minimal_primitive_truncated(ua, ctx, l, d);
        detail::require(J.certified, "J(lambda) certified at " + weight_id(type, l), out);
        slices.emplace(l, std::move(J));
    }

    std::vector<ChainGenerator> gens;
    for (const auto& l : closure) gens.push_back({weight_id(type, l), Vec{}});
    std::string triv_id = type + ":ker(trivial)";
    gens.push_back({triv_id, Vec{}});

    std::vector<ChainRelation> rels;
    std::vector<std::pair<std::string, std::string>> merges;

    // product relations from the delta-shift highest-weight witness
    for (const auto& la : grid)
        for (const auto& mu : grid) {
            if (WeightLess{}(mu, la)) continue;
            auto wit = tensor_hw_vector(ctx, la, mu);
            detail::require(wit.ok(), "tensor h.w. vector for " + weight_id(type, la) + " x " +
                                          weight_id(type, mu),
                            out);
            Weight s = la;
            add_scaled(s, mu, Rational(1));
            add_scaled(s, ctx.rs.delta, Rational(-1));
            if (wit.ok())
                rels.push_back({ChainRelation::Type::product, weight_id(type, s),
                                weight_id(type, la), weight_id(type, mu)});
        }

    // Weyl identifications J(w lambda) = J(lambda), verified on the slices
    for (const auto& l : closure)
        for (const auto& w : ctx.rs.weyl) {
            Weight wl = weyl_act(w, l);
            if (!closure.count(wl) || !WeightLess{}(l, wl)) continue;
            bool ok = ideal_equal(slices.at(l), slices.at(wl));
            detail::require(ok, "J(w lambda) = J(lambda) at " + weight_id(type, l), out);
            if (ok) merges.push_back({weight_id(type, l), weight_id(type, wl)});
        }

    // unit: the trivial representation's kernel contains J(delta)
    {
        auto ktriv = kernel_truncated(ua, *as_module(trivial_rep(ctx.g)), d);
        bool ok = ideal_includes(ua, ktriv, slices.at(ctx.rs.delta));
        detail::require(ok, "J(delta) inside the trivial representation's kernel", out);
        if (ok) merges.push_back({weight_id(type, ctx.rs.delta), triv_id});
        rels.push_back({ChainRelation::Type::unit, triv_id, "", ""});
    }

    // inverse relations: S(J(lambda)) = J(-lambda)
    for (const auto& l : closure) {
        Weight neg = scaled(l, Rational(-1));
        if (!closure.count(neg)) continue;
        TruncatedIdeal s = ideal_antipode(ua, slices.at(l));
        bool ok = ideal_equal(s, slices.at(neg));
        detail::require(ok, "S(J(lambda)) = J(-lambda) at " + weight_id(type, l), out);
        if (ok)
            rels.push_back(
                {ChainRelation::Type::inverse, weight_id(type, l), weight_id(type, neg), ""});
    }

    auto p = build(std::move(gens), std::move(rels));
    out.presentation = merge_by_inclusion(p, merges);
    out.group = abelian_invariants(out.presentation);
    out.can = can_check(out.presentation);
    return out;
}

/// Lattice-level contrast model: plain additivity (no delta shift) with Weyl
/// identifications, the analogue of the compact-group chain group. Not
/// harvested from kernels; documents the torsion that survives on any
/// lattice sample.
inline FixtureResult compact_grid_fixture(const std::string& type, int radius) {
    FixtureResult out;
    out.name = (type == "A1" ? "a1-compact-grid" : "a2-compact-grid");
    out.description = type +
                      " compact-analogue lattice model: additive relations without the delta "
                      "shift plus Weyl identifications; torsion = weight lattice mod root "
                      "lattice";
    RootSystem rs = root_system(type);
    std::set<Weight, WeightLess> gridset;
    std::function<void(Weight, std::size_t)> rec = [&](Weight cur, std::size_t pos) {
        if (pos == rs.rank) {
            gridset.insert(cur);
            return;
        }
        for (int t = -radius; t <= radius; ++t) {
            cur[pos] = t;
            rec(cur, pos + 1);
        }
    };
    rec(zero_vec(rs.rank), 0);
    auto id_of = [&](const Weight& l) { return weight_id(type + "c", l); };
    std::vector<ChainGenerator> gens;
    for (const auto& l : gridset) gens.push_back({id_of(l), Vec{}});
    std::vector<ChainRelation> rels;
    std::vector<std::pair<std::string, std::string>> merges;
    for (const auto& la : gridset)
        for (const auto& mu : gridset) {
            if (WeightLess{}(mu, la)) continue;
            Weight s = la;
            add_scaled(s, mu, Rational(1));
            if (gridset.count(s))
                rels.push_back({ChainRelation::Type::product, id_of(s), id_of(la), id_of(mu)});
        }
    for (const auto& l : gridset)
        for (const auto& w : rs.weyl) {
            Weight wl = weyl_act(w, l);
            if (gridset.count(wl) && WeightLess{}(l, wl)) merges.push_back({id_of(l), id_of(wl)});
        }
    rels.push_back({ChainRelation::Type::unit, id_of(zero_vec(rs.rank)), "", ""});
    auto p = build(std::move(gens), std::move(rels));
    out.presentation = merge_by_inclusion(p, merges);
    out.group = abelian_invariants(out.presentation);
    out.can = can_check(out.presentation);
    return out;
}

}  // namespace detail

inline std::vector<std::pair<std::string, std::string>> fixture_catalog() {
    return {
        {"h3-central-grid",
         "heisenberg3 I(f) grid, f(z) in {1,-1,2,-2,3}; abelianization Z = character lattice"},
        {"aff1-faithful", "aff1 faithful simple shift module; merged presentation is trivial"},
        {"a1-delta-grid", "A1 delta-shift grid, lambda in -2..3, Weyl identifications"},
        {"a2-delta-grid", "A2 delta-shift grid, lambda in {-1..2}^2, Weyl identifications"},
        {"a1-compact-grid", "A1 lattice contrast model (no delta shift); torsion Z/2"},
        {"a2-compact-grid", "A2 lattice contrast model (no delta shift); torsion Z/3"},
    };
}

/// Delta-shift fixture over a custom coordinate range (the same range on
/// every fundamental coordinate for A2). Guarded against oversized grids.
inline FixtureResult delta_grid_over_range(const std::string& type, const Rational& lo,
                                           const Rational& hi, const Rational& step) {
    if (step <= 0 || hi < lo) throw std::invalid_argument("bad weight range");
    std::vector<Rational> values;
    for (Rational v = lo; v <= hi; v += step) values.push_back(v);
    std::vector<Weight> grid;
    if (type == "A1") {
        for (const auto& v : values) grid.push_back(Weight{v});
    } else if (type == "A2") {
        for (const auto& a : values)
            for (const auto& b : values) grid.push_back(Weight{a, b});
    } else {
        throw UnsupportedType(type);
    }
    if (grid.size() > 36) throw std::invalid_argument("weight grid too large (max 36 weights)");
    return detail::delta_grid_fixture(type, grid);
}

inline FixtureResult run_fixture(const std::string& name) {
    if (name == "h3-central-grid") return fixture_h3_central_grid();
    if (name == "aff1-faithful") return fixture_aff1_faithful();
    if (name == "a1-delta-grid")
        return delta_grid_over_range("A1", Rational(-2), Rational(3), Rational(1));
    if (name == "a2-delta-grid")
        return delta_grid_over_range("A2", Rational(-1), Rational(2), Rational(1));
    if (name == "a1-compact-grid") return detail::compact_grid_fixture("A1", 3);
    if (name == "a2-compact-grid") return detail::compact_grid_fixture("A2", 2);
    throw UnknownFixture(name);
}

}  // namespace liecg
