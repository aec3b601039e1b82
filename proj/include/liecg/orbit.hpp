#pragma once

#include "catalog.hpp"

#include <sstream>

namespace liecg {

struct NoIdealFlag : std::runtime_error {
    NoIdealFlag() : std::runtime_error("no full flag of ideals (solvable input required)") {}
};

/// Radical of the alternating form B_f(x,y) = f([x,y]), inside the subspace
/// spanned by `amb` (defaults to all of g).
inline Subspace stabilizer(const LieAlgebra& g, const Functional& f) {
    std::size_t n = g.dim();
    Mat gram(n, zero_vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram[i][j] = f(g.bracket_basis(i, j));
    return span(nullspace(std::move(gram), n));
}

/// Same form restricted to a subalgebra; result lives in the ambient
/// coordinates.
inline Subspace stabilizer_in(const LieAlgebra& g, const Subspace& sub, const Functional& f) {
    std::size_t k = sub.dim();
    if (k == 0) return zero_space();
    Mat gram(k, zero_vec(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) gram[a][b] = f(g.bracket(sub.basis[a], sub.basis[b]));
    Mat null = nullspace(std::move(gram), k);
    Mat rows;
    for (const auto& c : null) {
        Vec v = zero_vec(g.dim());
        for (std::size_t a = 0; a < k; ++a)
            if (c[a] != 0) add_scaled(v, sub.basis[a], c[a]);
        rows.push_back(std::move(v));
    }
    return span(std::move(rows));
}

/// Full flag of ideals 0 = g_0 < g_1 < ... < g_n = g, refining the derived
/// (solvable) or lower-central (nilpotent) series. Refinement vectors are
/// chosen greedily: basis rows of the larger term, in basis order
/// (reversed when `reverse` is set, which yields a second flag for
/// independence checks), then pairwise sums.
inline std::vector<Subspace> ideal_flag(const LieAlgebra& g, bool reverse = false) {
    if (!is_solvable(g)) throw NoIdealFlag();
    auto chain = series(g, is_nilpotent(g) ? SeriesKind::lower_central : SeriesKind::derived);
    // ascending, endpoints included
    std::vector<Subspace> asc;
    if (chain.back().dim() != 0) throw NoIdealFlag();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) asc.push_back(*it);
    std::vector<Subspace> flag;
    flag.push_back(asc.front());
    for (std::size_t step = 0; step + 1 < asc.size(); ++step) {
        Subspace lower = flag.back();
        const Subspace& upper = asc[step + 1];
        while (lower.dim() < upper.dim()) {
            Mat candidates = upper.basis;
            if (reverse) std::reverse(candidates.begin(), candidates.end());
            for (std::size_t a = 0; a < upper.dim(); ++a)
                for (std::size_t b = a + 1; b < upper.dim(); ++b) {
                    Vec s = upper.basis[a];
                    add_scaled(s, upper.basis[b], Rational(1));
                    candidates.push_back(std::move(s));
                }
            bool found = false;
            for (const auto& v : candidates) {
                if (lower.contains(v)) continue;
                Subspace cand = span_sum(lower, span({v}));
                if (cand.dim() != lower.dim() + 1) continue;
                if (is_ideal(g, cand)) {
                    lower = std::move(cand);
                    found = true;
                    break;
                }
            }
            if (!found) throw NoIdealFlag();
            flag.push_back(lower);
        }
    }
    return flag;
}

struct Polarization {
    Subspace h;
    std::vector<Subspace> flag;  // the flag of ideals used as witness
};

struct PolarizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Verifies the three defining conditions independently of how h was built.
inline void verify_polarization(const LieAlgebra& g, const Functional& f, const Subspace& h) {
    if (!is_subalgebra(g, h)) throw PolarizationError("polarization is not a subalgebra");
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = a + 1; b < h.dim(); ++b)
            if (f(g.bracket(h.basis[a], h.basis[b])) != 0)
                throw PolarizationError("polarization not subordinate to f");
    std::size_t stab_dim = stabilizer(g, f).dim();
    if (2 * h.dim() != g.dim() + stab_dim)
        throw PolarizationError("polarization dimension is not (dim g + dim g^f)/2");
}

/// Vergne polarization h = sum of the stabilizers of f restricted along a
/// full flag of ideals.
inline Polarization vergne_polarization(const LieAlgebra& g, const Functional& f,
                                        std::vector<Subspace> flag = {}) {
    if (flag.empty()) flag = ideal_flag(g);
    Subspace h = zero_space();
    for (const auto& gi : flag) h = span_sum(h, stabilizer_in(g, gi, f));
    verify_polarization(g, f, h);
    return Polarization{std::move(h), std::move(flag)};
}

struct DixmierIdeal {
    Functional f;
    Polarization polarization;
    std::shared_ptr<const InducedModule> module;
    TruncatedIdeal ideal;
};

/// I(f): degree-d slice of the kernel of the twisted induction of f from a
/// Vergne polarization. The level defaults to the strict certification bound.
inline DixmierIdeal dixmier_ideal(const UAlgebra& ua, const Functional& f, int d, int level = -1,
                                  std::vector<Subspace> flag = {}) {
    AlgebraPtr g = ua.algebra_ptr();
    if (level < 0) level = d * static_cast<int>(g->dim()) + d;
    Polarization pol = vergne_polarization(*g, f, std::move(flag));
    Vec fh = zero_vec(pol.h.dim());
    for (std::size_t a = 0; a < pol.h.dim(); ++a) fh[a] = f(pol.h.basis[a]);
    auto mod = std::make_shared<InducedModule>(g, pol.h, Functional{fh}, true, level);
    TruncatedIdeal k = kernel_truncated(ua, *mod, d, false);
    return DixmierIdeal{f, std::move(pol), std::move(mod), std::move(k)};
}

/// The canonical surjectivity witness: a module with prescribed central
/// character, induced from the center (the trivial module when the center is
/// zero).
inline ModulePtr can_surjectivity_witness(AlgebraPtr g, const Functional& f0, int level = 6) {
    Subspace z = center(*g);
    if (z.dim() == 0) return as_module(trivial_rep(std::move(g)));
    return std::make_shared<InducedModule>(g, z, f0, true, level);
}

// ---- relation checks -------------------------------------------------------

struct RelationReport {
    std::string kind;
    bool holds = false;
    bool certified = false;
    int degree = 0;
    int level = 0;
    std::string instance;
    std::optional<UElement> witness;       // failure witness
    std::optional<Functional> twist;       // indrestw witness functional
    std::string note;
};

inline std::string functional_str(const Functional& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
        if (i) s += ",";
        s += rational_str(f.coords[i]);
    }
    return s + ")";
}

/// ker(Ind(f) (x) Ind(f')) <= I(f+f') for nilpotent g. The tensor kernel is
/// computed as the wedge of the factor kernels; `probe_route` additionally
/// recomputes it from the action on tensor probe vectors and cross-checks.
inline RelationReport check_tensnil(const UAlgebra& ua, const Functional& f,
                                    const Functional& fp, int d, int level = -1,
                                    bool probe_route = false) {
    const LieAlgebra& g = ua.algebra();
    if (!is_nilpotent(g)) throw std::invalid_argument("tensnil requires a nilpotent algebra");
    DixmierIdeal df = dixmier_ideal(ua, f, d, level);
    DixmierIdeal dfp = dixmier_ideal(ua, fp, d, level);
    Functional sum{f.coords};
    add_scaled(sum.coords, fp.coords, Rational(1));
    DixmierIdeal dsum = dixmier_ideal(ua, sum, d, level);
    TruncatedIdeal tker = wedge_truncated(ua, df.ideal, dfp.ideal, d);
    RelationReport rep;
    rep.kind = "tensnil";
    rep.degree = d;
    rep.level = df.module->max_level();
    rep.instance = "f=" + functional_str(f) + " f'=" + functional_str(fp);
    rep.certified = tker.certified && dsum.ideal.certified;
    rep.holds = ideal_includes(ua, dsum.ideal, tker);
    if (!rep.holds) rep.witness = inclusion_witness(ua, dsum.ideal, tker);
    if (probe_route) {
        auto tens = tensor_modules(df.module, dfp.module);
        TruncatedIdeal probed = kernel_truncated(ua, *tens, d, false);
        if (!ideal_equal(probed, tker)) {
            rep.holds = false;
            rep.note = "wedge and probe kernels disagree";
            return rep;
        }
        rep.note = "probe route cross-checked";
    }
    // central-character additivity rides along
    auto tens = tensor_modules(df.module, dfp.module);
    Functional cc = central_character(*tens);
    Subspace z = center(g);
    for (std::size_t a = 0; a < z.dim(); ++a)
        if (cc.coords[a] != f(z.basis[a]) + fp(z.basis[a])) {
            rep.holds = false;
            rep.note = "central character not additive";
        }
    return rep;
}

/// Adapted copy of g listing the subalgebra coordinates first, so U(g') sits
/// inside U(g) as the monomials supported on the leading block.
struct AdaptedPair {
    AlgebraPtr big;            // g in the adapted basis
    AlgebraPtr small;          // g' as its own algebra (leading block)
    Mat rows;                  // adapted basis rows in original coordinates
    std::size_t small_dim = 0;
};

inline AdaptedPair adapt_to_subalgebra(const LieAlgebra& g, const Subspace& gp) {
    if (!is_subalgebra(g, gp)) throw NotASubalgebra();
    Mat rows = gp.basis;
    auto comp = complement_indices(g, gp);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < gp.dim(); ++a) labels.push_back("s" + std::to_string(a));
    for (auto c : comp) {
        rows.push_back(unit_vec(g.dim(), c));
        labels.push_back(g.labels[c]);
    }
    AlgebraPtr big = change_of_basis(g, rows, labels, g.name + ".adapted");
    std::size_t k = gp.dim();
    std::vector<std::string> slabels(labels.begin(), labels.begin() + static_cast<long>(k));
    std::vector<std::vector<Vec>> stable(k, std::vector<Vec>(k, zero_vec(k)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const Vec& br = big->bracket_basis(a, b);
            for (std::size_t c = k; c < g.dim(); ++c)
                if (br[c] != 0) throw NotASubalgebra();
            stable[a][b] = Vec(br.begin(), br.begin() + static_cast<long>(k));
        }
    AlgebraPtr small = validate(g.name + ".sub", std::move(slabels), std::move(stable));
    return AdaptedPair{std::move(big), std::move(small), std::move(rows), k};
}

/// Section of a truncated ideal of U(g) to U(g') (adapted coordinates):
/// intersect with the span of monomials supported on the leading block and
/// reindex to the subalgebra's own filtration.
inline TruncatedIdeal ideal_section(const UAlgebra& ua_big, const UAlgebra& ua_small,
                                    std::size_t small_dim, const TruncatedIdeal& v) {
    MonoIndex big(filtration_basis(ua_big.dim(), v.degree));
    MonoIndex small(filtration_basis(ua_small.dim(), v.degree));
    std::vector<long> to_small(big.size(), -1);
    for (std::size_t j = 0; j < big.size(); ++j) {
        const auto& e = big.basis[j].e;
        bool inside = true;
        for (std::size_t c = small_dim; c < e.size(); ++c)
            if (e[c] != 0) inside = false;
        if (inside) {
            Monomial m{std::vector<int>(e.begin(), e.begin() + static_cast<long>(small_dim))};
            to_small[j] = static_cast<long>(small.index.at(m));
        }
    }
    // rowspace vectors vanishing on the outside coordinates
    Mat outside;
    for (std::size_t j = 0; j < big.size(); ++j) {
        if (to_small[j] >= 0) continue;
        Vec row = zero_vec(v.echelon.size());
        for (std::size_t r = 0; r < v.echelon.size(); ++r) row[r] = v.echelon[r][j];
        outside.push_back(std::move(row));
    }
    Mat coeffs = nullspace(std::move(outside), v.echelon.size());
    Mat rows;
    for (const auto& c : coeffs) {
        Vec x = zero_vec(small.size());
        for (std::size_t r = 0; r < c.size(); ++r) {
            if (c[r] == 0) continue;
            for (std::size_t j = 0; j < big.size(); ++j)
                if (to_small[j] >= 0 && v.echelon[r][j] != 0)
                    x[static_cast<std::size_t>(to_small[j])] += c[r] * v.echelon[r][j];
        }
        rows.push_back(std::move(x));
    }
    rref(rows);
    return TruncatedIdeal{v.degree, v.probe_level, v.certified, std::move(rows)};
}

/// I(f) ∩ U(g') <= I(f|_{g'}) for nilpotent g and a subalgebra g'.
inline RelationReport check_resnil(const LieAlgebra& g, const Subspace& gp, const Functional& f,
                                   int d, int level = -1) {
    if (!is_nilpotent(g)) throw std::invalid_argument("resnil requires a nilpotent algebra");
    AdaptedPair ad = adapt_to_subalgebra(g, gp);
    UAlgebra ua_big(ad.big), ua_small(ad.small);
    Vec fhat = zero_vec(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) fhat[j] = f(ad.rows[j]);
    DixmierIdeal big = dixmier_ideal(ua_big, Functional{fhat}, d, level);
    TruncatedIdeal section = ideal_section(ua_big, ua_small, ad.small_dim, big.ideal);
    Vec fsmall(fhat.begin(), fhat.begin() + static_cast<long>(ad.small_dim));
    DixmierIdeal small = dixmier_ideal(ua_small, Functional{fsmall}, d, level);
    RelationReport rep;
    rep.kind = "resnil";
    rep.degree = d;
    rep.level = big.module->max_level();
    rep.instance = "f=" + functional_str(f) + " dim g'=" + std::to_string(gp.dim());
    rep.certified = big.ideal.certified && small.ideal.certified;
    rep.holds = ideal_includes(ua_small, small.ideal, section);
    if (!rep.holds) rep.witness = inclusion_witness(ua_small, small.ideal, section);
    return rep;
}

/// I(-f) = S(I(f)) at truncation, for nilpotent g.
inline RelationReport check_antipode(const UAlgebra& ua, const Functional& f, int d,
                                     int level = -1) {
    if (!is_nilpotent(ua.algebra()))
        throw std::invalid_argument("antipode duality requires a nilpotent algebra");
    DixmierIdeal df = dixmier_ideal(ua, f, d, level);
    Functional neg{scaled(f.coords, Rational(-1))};
    DixmierIdeal dneg = dixmier_ideal(ua, neg, d, level);
    TruncatedIdeal s = ideal_antipode(ua, df.ideal);
    RelationReport rep;
    rep.kind = "antipode";
    rep.degree = d;
    rep.level = df.module->max_level();
    rep.instance = "f=" + functional_str(f);
    rep.certified = df.ideal.certified && dneg.ideal.certified;
    rep.holds = ideal_equal(s, dneg.ideal);
    if (!rep.holds) rep.witness = inclusion_witness(ua, dneg.ideal, s);
    return rep;
}

/// rho_{f+lambda} weakly contained in rho_f (x) lambda, for solvable g and
/// lambda killing [g,g]: ker(rho_f (x) lambda) <= I(f+lambda).
inline RelationReport check_shift(const UAlgebra& ua, const Functional& f,
                                  const Functional& lambda, int d, int level = -1) {
    const LieAlgebra& g = ua.algebra();
    if (!is_solvable(g)) throw std::invalid_argument("shift requires a solvable algebra");
    DixmierIdeal df = dixmier_ideal(ua, f, d, level);
    auto lam = as_module(character_rep(ua.algebra_ptr(), lambda));
    auto tens = tensor_modules(df.module, lam);
    TruncatedIdeal tker = kernel_truncated(ua, *tens, d, false);
    Functional sum{f.coords};
    add_scaled(sum.coords, lambda.coords, Rational(1));
    DixmierIdeal dsum = dixmier_ideal(ua, sum, d, level);
    RelationReport rep;
    rep.kind = "shift";
    rep.degree = d;
    rep.level = df.module->max_level();
    rep.instance = "f=" + functional_str(f) + " lambda=" + functional_str(lambda);
    rep.certified = tker.certified && dsum.ideal.certified;
    rep.holds = ideal_includes(ua, dsum.ideal, tker);
    if (!rep.holds) rep.witness = inclusion_witness(ua, dsum.ideal, tker);
    return rep;
}

/// I(f) ∩ U(g') <= ker(rho_{f|g'} (x) lambda) for some 1-dimensional lambda
/// on g' killing [g',g'] + (g' ∩ nilradical(g)). The constructive candidate
/// extends the half-trace defect of the two inductions; a small deterministic
/// grid over the admissible functionals is searched when it fails.
inline RelationReport check_indrestw(const LieAlgebra& g, const Subspace& gp,
                                     const Functional& f, int d, int level = -1) {
    if (!is_solvable(g)) throw std::invalid_argument("indrestw requires a solvable algebra");
    AdaptedPair ad = adapt_to_subalgebra(g, gp);
    UAlgebra ua_big(ad.big), ua_small(ad.small);
    std::size_t k = ad.small_dim;
    Vec fhat = zero_vec(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) fhat[j] = f(ad.rows[j]);
    DixmierIdeal big = dixmier_ideal(ua_big, Functional{fhat}, d, level);
    TruncatedIdeal section = ideal_section(ua_big, ua_small, k, big.ideal);
    Vec fsmall(fhat.begin(), fhat.begin() + static_cast<long>(k));
    DixmierIdeal small = dixmier_ideal(ua_small, Functional{fsmall}, d, level);

    // admissible twists: lambda vanishing on [g',g'] + (g' ∩ n(g))
    const LieAlgebra& gs = *ad.small;
    Subspace der = bracket_span(gs, full_space(gs), full_space(gs));
    Subspace nil_big = nilradical(*ad.big);
    Mat first_block;  // g' inside the adapted big algebra = leading coordinates
    for (std::size_t a = 0; a < k; ++a) first_block.push_back(unit_vec(g.dim(), a));
    Subspace inter = span_intersect(span(first_block), nil_big);
    Mat constraints = der.basis;
    for (const auto& row : inter.basis)
        constraints.push_back(Vec(row.begin(), row.begin() + static_cast<long>(k)));
    Mat lambda_basis = nullspace(std::move(constraints), k);

    // constructive candidate: theta_{g,h}|_{h ∩ g'} - theta_{g',h ∩ g'},
    // extended by zero where admissible
    std::vector<Functional> candidates;
    {
        Subspace h_big = big.polarization.h;
        Subspace hcap = span_intersect(h_big, span(first_block));
        if (hcap.dim() > 0) {
            Functional th_big = theta(*ad.big, h_big);
            Subspace hcap_small;
            for (const auto& row : hcap.basis)
                hcap_small.basis.push_back(Vec(row.begin(), row.begin() + static_cast<long>(k)));
            Functional th_small = theta(gs, hcap_small);
            // solve lambda . hcap_small[a] = th_big(hcap[a]) - th_small[a]
            Mat sys;
            Vec rhs;
            for (std::size_t a = 0; a < hcap.dim(); ++a) {
                sys.push_back(hcap_small.basis[a]);
                Vec coords = coords_in(h_big, hcap.basis[a]);
                rhs.push_back(dot(th_big.coords, coords) - th_small.coords[a]);
            }
            for (const auto& row : der.basis) {
                sys.push_back(row);
                rhs.push_back(Rational(0));
            }
            for (const auto& row : inter.basis) {
                sys.push_back(Vec(row.begin(), row.begin() + static_cast<long>(k)));
                rhs.push_back(Rational(0));
            }
            auto sol = solve(sys, rhs);
            if (!sol.empty()) candidates.push_back(Functional{sol[0]});
        }
    }
    candidates.push_back(Functional{zero_vec(k)});
    if (lambda_basis.size() <= 2) {
        std::vector<Vec> grid;
        std::function<void(std::size_t, Vec)> rec = [&](std::size_t i, Vec cur) {
            if (i == lambda_basis.size()) {
                grid.push_back(cur);
                return;
            }
            for (int t = -2; t <= 2; ++t) {
                Vec next = cur;
                add_scaled(next, lambda_basis[i], Rational(t));
                rec(i + 1, next);
            }
        };
        rec(0, zero_vec(k));
        for (auto& v : grid) candidates.push_back(Functional{v});
    }

    RelationReport rep;
    rep.kind = "indrestw";
    rep.degree = d;
    rep.level = big.module->max_level();
    rep.instance = "f=" + functional_str(f) + " dim g'=" + std::to_string(k);
    for (const auto& lam : candidates) {
        bool admissible = true;
        for (const auto& row : der.basis)
            if (lam(row) != 0) admissible = false;
        for (const auto& row : inter.basis)
            if (dot(lam.coords, Vec(row.begin(), row.begin() + static_cast<long>(k))) != 0)
                admissible = false;
        if (!admissible) continue;
        auto lmod = as_module(character_rep(ad.small, lam));
        auto tens = tensor_modules(small.module, lmod);
        TruncatedIdeal tker = kernel_truncated(ua_small, *tens, d, false);
        if (ideal_includes(ua_small, tker, section)) {
            rep.holds = true;
            rep.certified = big.ideal.certified && tker.certified;
            rep.twist = lam;
            return rep;
        }
    }
    rep.holds = false;
    rep.note = "NoWitness: no admissible twist realizes the inclusion at this truncation";
    return rep;
}

}  // namespace liecg
