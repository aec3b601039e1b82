#include "liecg/orbit.hpp"
#include "liecg/rng.hpp"

#include <catch_amalgamated.hpp>

using namespace liecg;

namespace {

Functional z_functional(const Rational& c) { return Functional{Vec{Rational(0), Rational(0), c}}; }

std::shared_ptr<InducedModule> h3_induced(AlgebraPtr h3, const Rational& c, int level = 8) {
    Subspace h = span({unit_vec(3, 1), unit_vec(3, 2)});
    return std::make_shared<InducedModule>(h3, h, Functional{Vec{Rational(0), c}}, true, level);
}

}  // namespace

TEST_CASE("matrix representation validation and the zero-rep guard") {
    auto s = sl2();
    REQUIRE_NOTHROW(defining_rep("sl2"));
    REQUIRE_NOTHROW(adjoint_rep(s));
    REQUIRE_THROWS_AS(make_rep(s, std::vector<Mat>{Mat{}, Mat{}, Mat{}}), InvalidModule);
    // a rep of h3 with z acting as the identity contradicts the trace of a
    // commutator, so the bracket check rejects it
    auto h3 = heisenberg(1);
    Mat id1{{Rational(1)}};
    Mat zero1{{Rational(0)}};
    REQUIRE_THROWS_AS(make_rep(h3, {zero1, zero1, id1}), InvalidModule);
}

TEST_CASE("dual representation") {
    auto h3 = heisenberg(1);
    Functional lam{Vec{Rational(2), Rational(-1), Rational(0)}};
    MatrixRep r = character_rep(h3, lam);
    MatrixRep d = dual(r);
    REQUIRE(d.images[0][0][0] == -2);
    // involution
    MatrixRep dd = dual(d);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(dd.images[i] == r.images[i]);

    // sl2 adjoint is self-dual: equal kernels at degree 2
    auto s = sl2();
    UAlgebra us(s);
    MatrixRep ad = adjoint_rep(s);
    TruncatedIdeal k1 = kernel_truncated(us, *as_module(ad), 2);
    TruncatedIdeal k2 = kernel_truncated(us, *as_module(dual(ad)), 2);
    REQUIRE(ideal_equal(k1, k2));
}

TEST_CASE("tensor and restriction of matrix reps") {
    auto h3 = heisenberg(1);
    Functional lam{Vec{Rational(1), Rational(0), Rational(0)}};
    Functional mu{Vec{Rational(0), Rational(3), Rational(0)}};
    MatrixRep t = tensor(character_rep(h3, lam), character_rep(h3, mu));
    REQUIRE(t.n == 1);
    REQUIRE(t.images[0][0][0] == 1);
    REQUIRE(t.images[1][0][0] == 3);

    // trivial tensor rho is weakly equivalent to rho
    auto s = sl2();
    UAlgebra us(s);
    MatrixRep def = defining_rep("sl2");
    MatrixRep tt = tensor(trivial_rep(s), def);
    REQUIRE(ideal_equal(kernel_truncated(us, *as_module(tt), 2),
                        kernel_truncated(us, *as_module(def), 2)));

    // restriction of the h3 module induced from f(z)=1 to span{z}: scalar 1
    auto mod = h3_induced(h3, Rational(1));
    auto sub = subalgebra_context(*h3, span({unit_vec(3, 2)}), "z_line");
    RestrictedModule rm(mod, sub);
    SparseVec img = rm.apply_gen(0, SparseVec{{0, Rational(1)}});
    REQUIRE(img == SparseVec{{0, Rational(1)}});
}

TEST_CASE("induced modules: straightening action and center induction") {
    auto h3 = heisenberg(1);
    auto mod = h3_induced(h3, Rational(1), 6);
    REQUIRE(mod->size() == 7);
    // y . x^n = -n x^{n-1} (f(y)=0, f(z)=1)
    for (int n = 1; n <= 4; ++n) {
        std::size_t xn = mod->slot(std::vector<int>{n}, 0);
        std::size_t xn1 = mod->slot(std::vector<int>{n - 1}, 0);
        SparseVec img = mod->apply_gen(1, SparseVec{{xn, Rational(1)}});
        REQUIRE(img == SparseVec{{xn1, Rational(-n)}});
    }
    // z acts as 1 everywhere
    for (std::size_t j = 0; j < mod->size(); ++j)
        REQUIRE(mod->apply_gen(2, SparseVec{{j, Rational(1)}}) == SparseVec{{j, Rational(1)}});
    // x raises the level; the top escapes
    REQUIRE_THROWS_AS(mod->apply_gen(0, SparseVec{{mod->slot({6}, 0), Rational(1)}}),
                      LevelExceeded);

    // induction from the center: z acts by the prescribed scalar
    Subspace zline = span({unit_vec(3, 2)});
    InducedModule zc(h3, zline, Functional{Vec{Rational(5)}}, true, 3);
    for (std::size_t j = 0; j < zc.size(); ++j)
        REQUIRE(zc.apply_gen(2, SparseVec{{j, Rational(1)}}) == SparseVec{{j, Rational(5)}});

    // non-subordinate functional rejected
    Subspace notsub = span({unit_vec(3, 0), unit_vec(3, 1), unit_vec(3, 2)});
    REQUIRE_THROWS_AS(
        InducedModule(h3, notsub, Functional{Vec{Rational(0), Rational(0), Rational(1)}}, true, 3),
        NotSubordinate);
}

TEST_CASE("twisted and plain induction coincide on nilpotent algebras") {
    auto h3 = heisenberg(1);
    Subspace h = span({unit_vec(3, 1), unit_vec(3, 2)});
    Functional f{Vec{Rational(1, 2), Rational(1)}};
    InducedModule plain(h3, h, f, false, 6);
    InducedModule twisted(h3, h, f, true, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < plain.size(); ++j) {
            if (plain.level_of(j) >= 6) continue;
            REQUIRE(plain.apply_gen(i, SparseVec{{j, Rational(1)}}) ==
                    twisted.apply_gen(i, SparseVec{{j, Rational(1)}}));
        }
}

TEST_CASE("truncated kernels: characters, induced modules, the shift module") {
    auto h3 = heisenberg(1);
    UAlgebra ua(h3);
    // 1-dim lambda: kernel at d=1 is span{b_i - lambda(b_i)}
    Functional lam{Vec{Rational(1), Rational(-1), Rational(0)}};
    TruncatedIdeal k = kernel_truncated(ua, *as_module(character_rep(h3, lam)), 1);
    REQUIRE(k.rank() == 3);
    UElement xm1 = u_gen(3, 0);
    xm1.add_term(one_mono(3), Rational(-1));
    REQUIRE(ideal_contains(ua, k, xm1));

    // h3 induced from f(z)=1: kernel at d=1 is span{z-1}
    auto mod = h3_induced(h3, Rational(1));
    TruncatedIdeal k1 = kernel_truncated(ua, *mod, 1);
    REQUIRE(k1.rank() == 1);
    REQUIRE(k1.certified);
    UElement zm1 = u_gen(3, 2);
    zm1.add_term(one_mono(3), Rational(-1));
    REQUIRE(ideal_contains(ua, k1, zm1));

    // shift module is faithful to degree 2, with full certification
    auto a1 = aff1();
    UAlgebra ua1(a1);
    ShiftModule sm(a1, 8);
    TruncatedIdeal ks = kernel_truncated(ua1, sm, 2);
    REQUIRE(ks.rank() == 0);
    REQUIRE(ks.certified);

    // strict mode rejects an uncertifiable level; lax mode reports an
    // uncertified (over-)estimate that still contains the true kernel
    ShiftModule small(a1, 3);
    REQUIRE_THROWS_AS(kernel_truncated(ua1, small, 2, true), InsufficientLevel);
    TruncatedIdeal lax = kernel_truncated(ua1, small, 2, false);
    REQUIRE(!lax.certified);
    REQUIRE(lax.rank() > 0);  // too few probes: a strict superset of {0}
}

TEST_CASE("shift module bracket relation and simplicity probe") {
    auto a1 = aff1();
    ShiftModule sm(a1, 10);
    // (a b - b a) p = b p on all basis polynomials below the top
    for (std::size_t k = 0; k + 1 < sm.size(); ++k) {
        SparseVec p{{k, Rational(1)}};
        SparseVec ab = sm.apply_gen(0, sm.apply_gen(1, p));
        SparseVec ba = sm.apply_gen(1, sm.apply_gen(0, p));
        SparseVec diff = ab;
        for (const auto& [i, c] : ba) sparse_add(diff, i, -c);
        REQUIRE(diff == sm.apply_gen(1, p));
    }
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        SparseVec p;
        int deg = rng.uniform(1, 4);
        for (int k = 0; k <= deg; ++k) sparse_add(p, static_cast<std::size_t>(k), rng.rational());
        sparse_add(p, static_cast<std::size_t>(deg), Rational(0));
        if (p.find(static_cast<std::size_t>(deg)) == p.end())
            p[static_cast<std::size_t>(deg)] = 1;
        REQUIRE(shift_simplicity_probe(sm, p));
    }
}

TEST_CASE("weak containment: reflexivity, the trivial rep, incomparable inductions") {
    auto h3 = heisenberg(1);
    UAlgebra ua(h3);
    auto m1 = h3_induced(h3, Rational(1));
    auto m2 = h3_induced(h3, Rational(2));
    REQUIRE(weakly_contains(ua, *m1, *m1, 1).holds);
    REQUIRE(!weakly_contains(ua, *m1, *m2, 1).holds);
    REQUIRE(!weakly_contains(ua, *m2, *m1, 1).holds);
    auto bad = weakly_contains(ua, *m1, *m2, 1);
    REQUIRE(bad.witness_element.has_value());

    // trivial <= lambda (x) (-lambda)
    Functional lam{Vec{Rational(2), Rational(1), Rational(0)}};
    auto t = tensor(character_rep(h3, lam),
                    character_rep(h3, Functional{scaled(lam.coords, Rational(-1))}));
    REQUIRE(weakly_contains(ua, *as_module(trivial_rep(h3)), *as_module(t), 2).holds);
}

TEST_CASE("central characters of modules") {
    auto h3 = heisenberg(1);
    auto mc = h3_induced(h3, Rational(3, 2));
    REQUIRE(central_character(*mc).coords == Vec{Rational(3, 2)});

    auto s = sl2();
    REQUIRE(central_character(*as_module(defining_rep("sl2"))).coords.empty());

    auto bad = direct_sum_modules({h3_induced(h3, Rational(1)), h3_induced(h3, Rational(2))});
    REQUIRE_THROWS_AS(central_character(*bad), NotScalarAction);
}

TEST_CASE("direct sums: kernel intersection law and the empty-sum guard") {
    auto h3 = heisenberg(1);
    UAlgebra ua(h3);
    Functional lam{Vec{Rational(1), Rational(0), Rational(0)}};
    Functional mu{Vec{Rational(0), Rational(1), Rational(0)}};
    auto ml = as_module(character_rep(h3, lam));
    auto mm = as_module(character_rep(h3, mu));
    TruncatedIdeal ksum = kernel_truncated(ua, *direct_sum_modules({ml, mm}), 1);
    // intersection of the echelons
    TruncatedIdeal kl = kernel_truncated(ua, *ml, 1);
    TruncatedIdeal km = kernel_truncated(ua, *mm, 1);
    Subspace inter = span_intersect(Subspace{kl.echelon}, Subspace{km.echelon});
    REQUIRE(Subspace{ksum.echelon} == inter);

    // a faithful summand forces the zero kernel
    auto a1 = aff1();
    UAlgebra ua1(a1);
    auto sm = std::make_shared<ShiftModule>(a1, 8);
    auto lam1 = as_module(character_rep(a1, Functional{Vec{Rational(1), Rational(0)}}));
    TruncatedIdeal kf = kernel_truncated(ua1, *direct_sum_modules({sm, lam1}), 2);
    REQUIRE(kf.rank() == 0);

    REQUIRE_THROWS_AS(direct_sum_modules({}), InvalidModule);
}

TEST_CASE("matrix coefficients: the perp equals the truncated kernel") {
    auto s = sl2();
    UAlgebra us(s);
    auto h3 = heisenberg(1);
    UAlgebra uh(h3);
    std::vector<std::pair<UAlgebra*, MatrixRep>> reps;
    reps.push_back({&us, defining_rep("sl2")});
    reps.push_back({&us, adjoint_rep(s)});
    reps.push_back({&us, tensor(defining_rep("sl2"), defining_rep("sl2"))});
    reps.push_back({&uh, adjoint_rep(h3)});
    reps.push_back({&uh, character_rep(h3, Functional{Vec{Rational(1), Rational(2), Rational(0)}})});
    for (auto& [ua, rep] : reps)
        for (int d = 1; d <= 3; ++d) {
            TruncatedIdeal mc = matrix_coefficients_perp(*ua, rep, d);
            TruncatedIdeal k = kernel_truncated(*ua, *as_module(rep), d);
            REQUIRE(ideal_equal(mc, k));
        }
    // 1-dim lambda: the perp is the kernel of the extended character
    Functional lam{Vec{Rational(1), Rational(2), Rational(0)}};
    TruncatedIdeal mc = matrix_coefficients_perp(uh, character_rep(h3, lam), 2);
    REQUIRE(mc.rank() == 9);  // codimension 1 in U_{<=2}
}

TEST_CASE("dual kernels are antipodal images") {
    Rng rng(17);
    for (const std::string name : {"sl2", "heisenberg3"}) {
        AlgebraPtr g = catalog_algebra(name);
        UAlgebra ua(g);
        std::vector<MatrixRep> reps{adjoint_rep(g)};
        Subspace der = bracket_span(*g, full_space(*g), full_space(*g));
        reps.push_back(character_rep(g, rng.functional_killing(der.basis, g->dim())));
        if (name == "sl2") reps.push_back(defining_rep("sl2"));
        for (const auto& r : reps) {
            TruncatedIdeal k = kernel_truncated(ua, *as_module(r), 2);
            TruncatedIdeal kd = kernel_truncated(ua, *as_module(dual(r)), 2);
            REQUIRE(ideal_equal(kd, ideal_antipode(ua, k)));
        }
    }
}

TEST_CASE("permanence: sums, tensors, induction, twisted induction") {
    Rng rng(41);
    const int d = 2;
    for (const auto& inc : catalog_inclusions()) {
        AlgebraPtr g = inc.g;
        UAlgebra ua(g);
        auto sub = subalgebra_context(*g, inc.h, "h");
        UAlgebra uh(sub.algebra);
        Subspace der_h = bracket_span(*sub.algebra, full_space(*sub.algebra),
                                      full_space(*sub.algebra));
        for (int t = 0; t < 3; ++t) {
            // pi <= rho := pi (+) sigma gives a certified containment pair
            MatrixRep pi = character_rep(sub.algebra,
                                         rng.functional_killing(der_h.basis, sub.algebra->dim()));
            MatrixRep sigma = character_rep(
                sub.algebra, rng.functional_killing(der_h.basis, sub.algebra->dim()));
            MatrixRep rho = direct_sum(pi, sigma);
            REQUIRE(weakly_contains(uh, *as_module(pi), *as_module(rho), d).holds);

            // (a) sums
            REQUIRE(weakly_contains(uh, *as_module(direct_sum(pi, pi)),
                                    *as_module(direct_sum(rho, rho)), d)
                        .holds);
            // (b) tensors
            REQUIRE(weakly_contains(uh, *as_module(tensor(pi, pi)),
                                    *as_module(tensor(rho, rho)), d)
                        .holds);
            // (d) induction along the catalog inclusion, certified level
            int L = d * static_cast<int>(g->dim()) + d;
            auto ind_pi = std::make_shared<InducedModule>(g, inc.h, pi, false, L);
            auto ind_rho = std::make_shared<InducedModule>(g, inc.h, rho, false, L);
            auto rep_ind = weakly_contains(ua, *ind_pi, *ind_rho, d);
            REQUIRE(rep_ind.holds);
            REQUIRE(rep_ind.certified);
            // (e) twisted induction
            auto tind_pi = std::make_shared<InducedModule>(g, inc.h, pi, true, L);
            auto tind_rho = std::make_shared<InducedModule>(g, inc.h, rho, true, L);
            auto rep_tind = weakly_contains(ua, *tind_pi, *tind_rho, d);
            REQUIRE(rep_tind.holds);
            REQUIRE(rep_tind.certified);
        }
    }
}

TEST_CASE("push-pull: the two displayed maps are mutually inverse intertwiners") {
    // H (x)_{H'} (W (x) V)  <->  (H (x)_{H'} W) (x) V for 1-dimensional
    // V = lambda restricted from g:
    //   phi(m (x) w) = sum  m_1 (x) w . lambda-hat(m_2),
    //   psi uses lambda-hat(S(m_2)) instead.
    Rng rng(59);
    for (const auto& inc : catalog_inclusions()) {
        AlgebraPtr g = inc.g;
        UAlgebra ua(g);
        Subspace der = bracket_span(*g, full_space(*g), full_space(*g));
        Functional lam = rng.functional_killing(der.basis, g->dim());
        Vec lam_h = zero_vec(inc.h.dim());
        for (std::size_t a = 0; a < inc.h.dim(); ++a) lam_h[a] = dot(lam.coords, inc.h.basis[a]);
        // a subordinate functional on h
        Mat hbr;
        for (std::size_t a = 0; a < inc.h.dim(); ++a)
            for (std::size_t b = a + 1; b < inc.h.dim(); ++b)
                hbr.push_back(coords_in(inc.h, g->bracket(inc.h.basis[a], inc.h.basis[b])));
        Functional w = rng.functional_killing(hbr, inc.h.dim());

        const int L = 6;
        Vec wl = w.coords;
        add_scaled(wl, lam_h, Rational(1));
        auto lhs = std::make_shared<InducedModule>(g, inc.h, Functional{wl}, false, L);
        auto rhs_ind = std::make_shared<InducedModule>(g, inc.h, w, false, L);
        auto rhs = tensor_modules(rhs_ind, as_module(character_rep(g, lam)));

        MonoIndex cix(filtration_basis(lhs->complement_dim(), L));
        auto comp = complement_indices(*g, inc.h);
        auto lam_hat = [&](const Monomial& m) {
            Rational r = 1;
            for (std::size_t k = 0; k < m.e.size(); ++k)
                for (int t2 = 0; t2 < m.e[k]; ++t2) r *= lam.coords[comp[k]];
            return r;
        };
        REQUIRE(lhs->complement_dim() >= 1);
        UAlgebra uac(abelian(lhs->complement_dim()));
        auto map_with = [&](std::size_t j, bool antipode) {
            SparseVec out;
            UElement um;
            um.add_term(cix.basis[j], Rational(1));
            for (const auto& [legs, c] : coproduct(uac, um)) {
                Rational coef = c * lam_hat(legs.second);
                if (antipode && legs.second.degree() % 2 == 1) coef = -coef;
                sparse_add(out, rhs_ind->slot(legs.first.e, 0), coef);
            }
            return out;
        };
        for (std::size_t j = 0; j < cix.size(); ++j) {
            SparseVec phi = map_with(j, false);
            // psi o phi = id
            SparseVec back;
            for (const auto& [idx, c] : phi) {
                SparseVec p = map_with(idx, true);
                sparse_axpy(back, c, p);
            }
            REQUIRE(back == SparseVec{{j, Rational(1)}});
            // intertwining on safe levels
            if (cix.basis[j].degree() + 1 >= L) continue;
            for (std::size_t i = 0; i < g->dim(); ++i) {
                SparseVec left = lhs->apply_gen(i, SparseVec{{j, Rational(1)}});
                SparseVec expect;
                for (const auto& [idx, c] : left) sparse_axpy(expect, c, map_with(idx, false));
                SparseVec right = rhs->apply_gen(i, phi);
                REQUIRE(right == expect);
            }
        }
    }
}

TEST_CASE("lemma-shift instances on the solvable catalog") {
    Rng rng(71);
    for (const std::string name : {"heisenberg3", "oscillator", "aff1", "heisenberg5"}) {
        AlgebraPtr g = catalog_algebra(name);
        UAlgebra ua(g);
        Subspace der = bracket_span(*g, full_space(*g), full_space(*g));
        for (int t = 0; t < 2; ++t) {
            Functional f = rng.functional(g->dim());
            Functional lam = rng.functional_killing(der.basis, g->dim());
            auto rep = check_shift(ua, f, lam, 2);
            REQUIRE(rep.holds);
        }
    }
}
