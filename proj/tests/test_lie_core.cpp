#include "liecg/catalog.hpp"
#include "liecg/json_io.hpp"
#include "liecg/rng.hpp"

#include <catch_amalgamated.hpp>

using namespace liecg;

namespace {

std::vector<AlgebraPtr> catalog_all() {
    std::vector<AlgebraPtr> out;
    for (const auto& n : catalog_names()) out.push_back(catalog_algebra(n));
    return out;
}

std::vector<std::vector<Vec>> empty_table(std::size_t n) {
    return std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, zero_vec(n)));
}

}  // namespace

TEST_CASE("validate accepts the standard bracket tables") {
    auto h3 = heisenberg(1);
    REQUIRE(h3->dim() == 3);
    auto s = sl2();
    REQUIRE(s->bracket_basis(1, 0) == Vec{Rational(2), Rational(0), Rational(0)});  // [h,e]=2e
    REQUIRE(s->bracket_basis(0, 2) == Vec{Rational(0), Rational(1), Rational(0)});  // [e,f]=h
    REQUIRE(s->bracket_basis(1, 2) == Vec{Rational(0), Rational(0), Rational(-2)});
}

TEST_CASE("validate rejects sign and Jacobi defects") {
    auto t = empty_table(3);
    t[0][1][2] = 1;
    t[1][0][2] = 1;  // [x,y] = [y,x] = z
    REQUIRE_THROWS_AS(validate("bad", {"x", "y", "z"}, t), AntisymmetryError);

    auto t2 = empty_table(3);
    auto setbr = [&](std::size_t i, std::size_t j, std::size_t k) {
        t2[i][j][k] = 1;
        t2[j][i][k] = -1;
    };
    setbr(0, 1, 2);  // [x,y] = z
    setbr(1, 2, 0);  // [y,z] = x
    setbr(0, 2, 0);  // [x,z] = x
    try {
        validate("bad2", {"x", "y", "z"}, t2);
        FAIL("expected JacobiError");
    } catch (const JacobiError& e) {
        REQUIRE(!is_zero(e.defect));
    }
}

TEST_CASE("center of the catalog algebras") {
    REQUIRE(subspace_str(*heisenberg(1), center(*heisenberg(1))) == "span{z}");
    REQUIRE(center(*sl2()).dim() == 0);
    REQUIRE(center(*abelian(2)).dim() == 2);
    REQUIRE(subspace_str(*oscillator(), center(*oscillator())) == "span{z}");
}

TEST_CASE("derived and lower central series with predicates") {
    auto h3 = heisenberg(1);
    auto lcs = series(*h3, SeriesKind::lower_central);
    REQUIRE(lcs.size() == 3);
    REQUIRE(lcs[1] == span({unit_vec(3, 2)}));
    REQUIRE(lcs[2].dim() == 0);
    REQUIRE(is_nilpotent(*h3));

    auto a1 = aff1();
    auto der = series(*a1, SeriesKind::derived);
    REQUIRE(der.size() == 3);
    REQUIRE(der[1] == span({unit_vec(2, 1)}));
    REQUIRE(is_solvable(*a1));
    REQUIRE(!is_nilpotent(*a1));

    auto s = sl2();
    auto sder = series(*s, SeriesKind::derived);
    REQUIRE(sder.size() == 1);  // [g,g] = g, constant
    REQUIRE(!is_solvable(*s));
}

TEST_CASE("nilradical is the ad-nilpotent locus of solvable algebras") {
    REQUIRE(nilradical(*heisenberg(1)).dim() == 3);
    REQUIRE(nilradical(*aff1()) == span({unit_vec(2, 1)}));
    auto ds = direct_sum(*abelian(1), *aff1());
    Subspace nr = nilradical(*ds.algebra);
    REQUIRE(nr.dim() == 2);  // the central generator and b
    REQUIRE(nr.contains(unit_vec(3, 0)));
    REQUIRE(nr.contains(unit_vec(3, 2)));
    REQUIRE_THROWS_AS(nilradical(*sl2()), NotSolvable);
}

TEST_CASE("quotients and direct sums") {
    auto h3 = heisenberg(1);
    auto q = quotient(*h3, span({unit_vec(3, 2)}));
    REQUIRE(q.algebra->dim() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) REQUIRE(is_zero(q.algebra->bracket_basis(i, j)));

    auto ds = direct_sum(*aff1(), *aff1());
    REQUIRE(ds.algebra->dim() == 4);
    REQUIRE(is_zero(ds.algebra->bracket_basis(0, 2)));
    REQUIRE(is_zero(ds.algebra->bracket_basis(1, 3)));
    REQUIRE(ds.algebra->bracket_basis(0, 1)[1] == 1);
    REQUIRE(ds.algebra->bracket_basis(2, 3)[3] == 1);
    // diagonal embedding respects brackets
    Vec a = mat_apply(ds.diagonal, unit_vec(2, 0));
    Vec b = mat_apply(ds.diagonal, unit_vec(2, 1));
    REQUIRE(ds.algebra->bracket(a, b) == mat_apply(ds.diagonal, aff1()->bracket_basis(0, 1)));

    REQUIRE_THROWS_AS(quotient(*h3, span({unit_vec(3, 0)})), NotAnIdeal);
}

TEST_CASE("theta: half trace on the quotient") {
    auto a1 = aff1();
    REQUIRE(theta(*a1, span({unit_vec(2, 1)})).coords == Vec{Rational(0)});
    REQUIRE(theta(*a1, span({unit_vec(2, 0)})).coords == Vec{Rational(1, 2)});
    REQUIRE_THROWS_AS(theta(*oscillator(), span({unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)})),
                      NotASubalgebra);
}

TEST_CASE("theta vanishes identically on nilpotent algebras") {
    for (const auto& g : catalog_all()) {
        if (!is_nilpotent(*g)) continue;
        // every 2-generated subalgebra candidate from basis vectors
        for (std::size_t i = 0; i < g->dim(); ++i)
            for (std::size_t j = i + 1; j < g->dim(); ++j) {
                Subspace h = span({unit_vec(g->dim(), i), unit_vec(g->dim(), j)});
                if (!is_subalgebra(*g, h)) continue;
                REQUIRE(is_zero(theta(*g, h).coords));
            }
    }
}

TEST_CASE("structural inclusions on the solvable catalog") {
    for (const auto& g : catalog_all()) {
        if (!is_solvable(*g)) continue;
        Subspace nr = nilradical(*g);
        REQUIRE(nr.includes(center(*g)));
        REQUIRE(nr.includes(bracket_span(*g, full_space(*g), full_space(*g))));
    }
}

TEST_CASE("quotient and derived series commute on random catalog pairs") {
    Rng rng(2024);
    std::vector<std::pair<AlgebraPtr, Subspace>> pool;
    for (const auto& g : catalog_all()) {
        for (const auto& s : series(*g, SeriesKind::derived))
            if (s.dim() > 0 && s.dim() < g->dim() && is_ideal(*g, s)) pool.push_back({g, s});
        Subspace z = center(*g);
        if (z.dim() > 0 && z.dim() < g->dim()) pool.push_back({g, z});
    }
    REQUIRE(pool.size() >= 4);
    for (int t = 0; t < 20; ++t) {
        auto& [g, k] = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))];
        auto q = quotient(*g, k);
        auto qser = series(*q.algebra, SeriesKind::derived);
        auto gser = series(*g, SeriesKind::derived);
        // image of the derived series equals the derived series of the image
        for (std::size_t i = 0; i < qser.size(); ++i) {
            Mat rows;
            if (i < gser.size())
                for (const auto& r : gser[i].basis) rows.push_back(mat_apply(q.projection, r));
            Subspace img = span(std::move(rows));
            REQUIRE(img == qser[i]);
        }
    }
}

TEST_CASE("export and validate round-trip bit-exactly") {
    for (const auto& g : catalog_all()) {
        Json j = algebra_to_json(*g);
        auto g2 = algebra_from_json(j);
        REQUIRE(algebra_to_json(*g2).dump(2) == j.dump(2));
        REQUIRE(g2->table == g->table);
    }
}

TEST_CASE("half-stated bracket files are mirrored, contradictions rejected") {
    Json j;
    j["name"] = "h3";
    j["basis"] = Json::array({"x", "y", "z"});
    j["brackets"] = Json::array({Json{{"i", "x"}, {"j", "y"}, {"value", Json{{"z", "1"}}}}});
    auto g = algebra_from_json(j);
    REQUIRE(g->bracket_basis(1, 0)[2] == -1);

    j["brackets"].push_back(Json{{"i", "y"}, {"j", "x"}, {"value", Json{{"z", "1"}}}});
    REQUIRE_THROWS_AS(algebra_from_json(j), AntisymmetryError);
}
