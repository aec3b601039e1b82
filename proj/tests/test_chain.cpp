#include "liecg/fixtures.hpp"
#include "liecg/json_io.hpp"

#include <catch_amalgamated.hpp>

using namespace liecg;

namespace {

ChainGenerator gen(const std::string& id, Vec chi) { return {id, std::move(chi)}; }

}  // namespace

TEST_CASE("Smith normal form basics") {
    REQUIRE(smith_diagonal({{2}}) == IVec{2});
    REQUIRE(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}) == IVec{2, 2, 156});
    REQUIRE(cokernel({}, 3).str() == "Z^3");
    AbelianGroup g = cokernel({{2, 0}, {0, 3}}, 2);
    REQUIRE(g.free_rank == 0);
    REQUIRE(g.torsion == IVec{6});  // invariant factors: (1, 6)
    REQUIRE(cokernel({{1, 0}, {0, 1}}, 2).trivial());
}

TEST_CASE("presentations: build, unknown generators, free ranks") {
    auto p = build({gen("a", {}), gen("b", {}), gen("c", {})}, {});
    REQUIRE(abelian_invariants(p).str() == "Z^3");
    REQUIRE_THROWS_AS(build({gen("a", {})}, {{ChainRelation::Type::unit, "x", "", ""}}),
                      UnknownGenerator);
}

TEST_CASE("merge by inclusion: collapse, idempotence, order independence") {
    auto p = build({gen("a", {}), gen("b", {}), gen("c", {})},
                   {{ChainRelation::Type::product, "c", "a", "b"}});
    // chain a ~ b ~ c collapses transitively to one class
    std::vector<std::pair<std::string, std::string>> pairs{{"a", "b"}, {"b", "c"}};
    auto m1 = merge_by_inclusion(p, pairs);
    REQUIRE(m1.generators.size() == 1);
    REQUIRE(abelian_invariants(m1).trivial());  // x = x + x forces x = 0

    // empty pair set: identity transform
    auto m0 = merge_by_inclusion(p, {});
    REQUIRE(m0.generators.size() == 3);
    REQUIRE(m0.relations.size() == 1);

    // merging an already-merged presentation is a no-op
    auto m2 = merge_by_inclusion(m1, {{"a", "a"}});
    REQUIRE(m2.generators.size() == m1.generators.size());
    REQUIRE(abelian_invariants(m2) == abelian_invariants(m1));
}

TEST_CASE("merge determinism") {
    auto p = build({gen("a", {}), gen("b", {}), gen("c", {})}, {});
    auto fwd = merge_by_inclusion(p, {{"a", "b"}, {"b", "c"}});
    auto rev = merge_by_inclusion(p, {{"b", "c"}, {"a", "b"}});
    REQUIRE(fwd.generators.size() == rev.generators.size());
    REQUIRE(fwd.generators[0].id == rev.generators[0].id);
    auto again = merge_by_inclusion(fwd, {{"a", "a"}});
    REQUIRE(again.generators.size() == fwd.generators.size());
}

TEST_CASE("abelian invariants of small product-grid presentations") {
    // no relations, 3 generators: free of rank 3  (covered above)
    // h3-style product grid: a_c + a_c' = a_{c+c'} over c in {1,2,3}
    std::vector<ChainGenerator> gens;
    for (int c = 1; c <= 6; ++c) gens.push_back(gen("a" + std::to_string(c), {}));
    std::vector<ChainRelation> rels;
    for (int c = 1; c <= 3; ++c)
        for (int cp = c; cp <= 3; ++cp)
            rels.push_back({ChainRelation::Type::product, "a" + std::to_string(c + cp),
                            "a" + std::to_string(c), "a" + std::to_string(cp)});
    auto p = build(gens, rels);
    // every a_c is forced to c * a_1 and the two routes to a_4 agree
    REQUIRE(abelian_invariants(p).str() == "Z^1");
}

TEST_CASE("weyl coinvariants over the lattice and the rationals") {
    auto a1 = root_system("A1");
    auto a2 = root_system("A2");
    REQUIRE(weyl_coinvariants(a1, true).str() == "Z/2");
    REQUIRE(weyl_coinvariants(a2, true).str() == "Z/3");
    REQUIRE(weyl_coinvariants(a1, false).trivial());
    REQUIRE(weyl_coinvariants(a2, false).trivial());
}

TEST_CASE("can_check: the h3 sample, both sides of the comparison") {
    // f(z) in {1,2,3} with product and duality relations: abelianization Z,
    // image lattice Z . 1 inside z*
    std::vector<ChainGenerator> gens;
    for (int c : {-3, -2, -1, 0, 1, 2, 3, 4, 5, 6})
        gens.push_back(gen("c" + std::to_string(c), Vec{Rational(c)}));
    auto id_of = [](int c) { return "c" + std::to_string(c); };
    std::vector<ChainRelation> rels;
    for (int c = 1; c <= 3; ++c)
        for (int cp = c; cp <= 3; ++cp)
            rels.push_back({ChainRelation::Type::product, id_of(c + cp), id_of(c), id_of(cp)});
    for (int c = 1; c <= 3; ++c)
        rels.push_back({ChainRelation::Type::inverse, id_of(c), id_of(-c), ""});
    rels.push_back({ChainRelation::Type::unit, id_of(0), "", ""});
    auto p = build(gens, rels);
    auto rep = can_check(p);
    REQUIRE(rep.well_defined);
    REQUIRE(rep.presented.str() == "Z^1");
    REQUIRE(rep.image_rank == 1);
    REQUIRE(rep.isomorphic);
}

TEST_CASE("can_check rejects a corrupted instance with the defect") {
    auto p = build({gen("g1", Vec{Rational(1)}), gen("g3", Vec{Rational(3)})},
                   {{ChainRelation::Type::product, "g3", "g1", "g1"}});
    try {
        can_check(p);
        FAIL("expected RelationNotRespected");
    } catch (const RelationNotRespected& e) {
        REQUIRE(e.defect == Vec{Rational(-1)});
    }
}

TEST_CASE("swapped product instances never change the invariants") {
    // cocommutativity: whenever Product(a,b,c) was harvested from a tensor,
    // Product(a,c,b) holds as well and adding it changes nothing
    std::vector<ChainGenerator> gens{gen("a", {}), gen("b", {}), gen("c", {}), gen("d", {})};
    std::vector<ChainRelation> rels{{ChainRelation::Type::product, "c", "a", "b"},
                                    {ChainRelation::Type::product, "d", "c", "c"}};
    auto p = build(gens, rels);
    auto base = abelian_invariants(p);
    auto rels2 = rels;
    rels2.push_back({ChainRelation::Type::product, "c", "b", "a"});
    rels2.push_back({ChainRelation::Type::product, "d", "c", "c"});
    auto p2 = build(gens, rels2);
    REQUIRE(abelian_invariants(p2) == base);
}

TEST_CASE("generator identity depends only on the ideal handle") {
    // two weakly equivalent modules produce the same truncated ideal and
    // hence the same presentation
    auto a1 = aff1();
    UAlgebra ua(a1);
    auto sm = std::make_shared<ShiftModule>(a1, 10);
    TruncatedIdeal k1 = kernel_truncated(ua, *sm, 2);
    DixmierIdeal D = dixmier_ideal(ua, Functional{Vec{Rational(0), Rational(1)}}, 2);
    REQUIRE(ideal_equal(k1, D.ideal));  // same handle key for both routes
}

TEST_CASE("fixtures: engine-verified presentations and their invariants") {
    auto h3fix = run_fixture("h3-central-grid");
    REQUIRE(h3fix.instances_verified);
    REQUIRE(h3fix.group.str() == "Z^1");
    REQUIRE(h3fix.can->isomorphic);

    auto afix = run_fixture("aff1-faithful");
    REQUIRE(afix.instances_verified);
    REQUIRE(afix.group.trivial());
    REQUIRE(afix.can->isomorphic);
    REQUIRE(afix.presentation.generators.size() == 1);

    // the delta-shift grids retain the finite-sample torsion: the class of
    // lambda - delta in (weight lattice)/(root lattice) is invariant under
    // every verified relation, so the lattice sample presents Z/2 resp. Z/3
    // rather than the continuum's trivial group
    auto a1fix = run_fixture("a1-delta-grid");
    REQUIRE(a1fix.instances_verified);
    REQUIRE(a1fix.group.str() == "Z/2");
    REQUIRE(a1fix.can->well_defined);
    REQUIRE(!a1fix.can->isomorphic);

    auto a1c = run_fixture("a1-compact-grid");
    REQUIRE(a1c.group.str() == "Z/2");  // matches the lattice coinvariants

    auto a2c = run_fixture("a2-compact-grid");
    REQUIRE(a2c.group.str() == "Z/3");

    REQUIRE_THROWS_AS(run_fixture("no-such-fixture"), UnknownFixture);
}

TEST_CASE("presentation JSON round trip") {
    auto h3fix = run_fixture("h3-central-grid");
    Json j = presentation_to_json(h3fix.presentation);
    auto p2 = presentation_from_json(j);
    REQUIRE(presentation_to_json(p2).dump(2) == j.dump(2));
    REQUIRE(abelian_invariants(p2) == h3fix.group);
}
