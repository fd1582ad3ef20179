#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "arcx/rigidity.hpp"
#include "arcx/symmetry.hpp"

using namespace arcx;

namespace {

// Oracle: count facet-preserving bijections by enumerating all of them.
long long brute_force_aut_order(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    REQUIRE(n <= 8);
    Perm p = identity_perm(n);
    long long count = 0;
    do {
        if (is_simplicial(p, c)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

}  // namespace

TEST_CASE("permutation algebra") {
    Perm a{1, 2, 0}, b{0, 2, 1};
    CHECK(compose(a, b) == Perm{1, 0, 2});
    CHECK(compose(b, a) == Perm{2, 1, 0});
    CHECK(inverse(a) == Perm{2, 0, 1});
    CHECK(compose(a, inverse(a)) == identity_perm(3));
}

TEST_CASE("automorphism groups of small complexes match brute force") {
    std::vector<std::pair<CiliatedSurface, std::optional<int>>> cases = {
        {CiliatedSurface::polygon(4), std::nullopt},   // 2 isolated vertices
        {CiliatedSurface::polygon(5), std::nullopt},   // 5-cycle
        {CiliatedSurface(0, 1, 1, {1}), std::nullopt}, // single vertex
        {CiliatedSurface(0, 1, 1, {2}), std::nullopt}, // 4-path
        {CiliatedSurface::annulus_one_one(), 3},       // 7-path window
    };
    for (const auto& [s, bound] : cases) {
        CAPTURE(s.descriptor());
        auto c = build_arc_complex(s, bound);
        auto g = automorphisms(c);
        CHECK(g.order() == brute_force_aut_order(c));
        CHECK(g.is_closed());
    }
}

TEST_CASE("automorphism orders of the desk complexes") {
    auto order_of = [](const CiliatedSurface& s) {
        return automorphisms(build_arc_complex(s)).order();
    };
    CHECK(order_of(CiliatedSurface::polygon(4)) == 2);
    CHECK(order_of(CiliatedSurface::polygon(5)) == 10);
    CHECK(order_of(CiliatedSurface::polygon(6)) == 12);
    CHECK(order_of(CiliatedSurface::polygon(7)) == 14);
    CHECK(order_of(CiliatedSurface::polygon(8)) == 16);
    CHECK(order_of(CiliatedSurface(0, 1, 1, {1})) == 1);
    CHECK(order_of(CiliatedSurface(0, 1, 1, {2})) == 2);
    CHECK(order_of(CiliatedSurface(0, 1, 1, {3})) == 6);
    CHECK(order_of(CiliatedSurface(0, 1, 1, {4})) == 8);
}

TEST_CASE("size bound is enforced") {
    auto c = build_arc_complex(CiliatedSurface::polygon(9));  // 27 vertices
    CHECK_THROWS_MATCHES(automorphisms(c, 20), Error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::StartsWith("TooLarge")));
    CHECK(automorphisms(c, 64).order() == 18);
}

TEST_CASE("flip graph automorphisms") {
    CHECK(graph_automorphisms(build_flip_graph(CiliatedSurface::polygon(5))).order() == 10);
    CHECK(graph_automorphisms(build_flip_graph(CiliatedSurface::polygon(6))).order() == 12);
    CHECK(graph_automorphisms(build_flip_graph(CiliatedSurface(0, 1, 1, {2}))).order() == 2);
    CHECK(graph_automorphisms(build_flip_graph(CiliatedSurface(0, 1, 1, {3}))).order() == 6);
}

TEST_CASE("mapping class action on polygons") {
    // image orders: dihedral 2n once the action is faithful
    CHECK(mcg_action(CiliatedSurface::polygon(6)).order() == 12);
    CHECK(mcg_action(CiliatedSurface::polygon(5)).order() == 10);
    CHECK(mcg_action(CiliatedSurface(0, 1, 1, {3})).order() == 6);
    // low-dimensional cases factor through a smaller image
    CHECK(mcg_action(CiliatedSurface::polygon(4)).order() == 2);
    CHECK(mcg_action(CiliatedSurface(0, 1, 1, {1})).order() == 1);
    CHECK_THROWS_AS(mcg_action(CiliatedSurface::annulus_one_one()), Error);
}

TEST_CASE("mapping class action details") {
    auto complex = build_arc_complex(CiliatedSurface::polygon(4));
    auto action = mcg_action_full(CiliatedSurface::polygon(4), complex);
    CHECK(action.label_group_order == 8);
    CHECK(action.image.order() == 2);
    CHECK(action.kernel_order == 4);  // half turn and both diagonal reflections act trivially

    auto digon_complex = build_arc_complex(CiliatedSurface(0, 1, 1, {2}));
    auto digon_action = mcg_action_full(CiliatedSurface(0, 1, 1, {2}), digon_complex);
    CHECK(digon_action.label_group_order == 4);
    CHECK(digon_action.image.order() == 2);
    CHECK(digon_action.kernel_order == 2);

    // every induced permutation is simplicial by construction; closure holds
    CHECK(digon_action.image.is_closed());
}

TEST_CASE("mapping class image is a subgroup of the automorphism group") {
    for (int n = 4; n <= 8; ++n) {
        auto s = CiliatedSurface::polygon(n);
        auto complex = build_arc_complex(s);
        auto aut = automorphisms(complex);
        auto mcg = mcg_action_full(s, complex);
        CAPTURE(n);
        CHECK(mcg.image.is_subgroup_of(aut));
        CHECK(aut.order() % mcg.image.order() == 0);
    }
}

TEST_CASE("rigidity reports at desk scale") {
    for (const auto& s : {CiliatedSurface::polygon(6), CiliatedSurface::polygon(7),
                          CiliatedSurface(0, 1, 1, {3}), CiliatedSurface(0, 1, 1, {4})}) {
        auto r = rigidity_report(s);
        CAPTURE(s.descriptor());
        CHECK(r.in_theorem_scope);
        CHECK(r.equal);
        CHECK(r.kernel_trivial);
        CHECK(r.mod_subgroup_of_aut);
        CHECK(r.aut_order == 2 * s.marked_points[0]);
    }

    // pentagon: dimension 1, outside the theorem, but the orders still agree
    auto pent = rigidity_report(CiliatedSurface::polygon(5));
    CHECK_FALSE(pent.in_theorem_scope);
    CHECK(pent.aut_order == 10);
    CHECK(pent.mod_image_order == 10);
    CHECK(pent.equal);

    // square: dimension 0, kernel is not trivial there
    auto sq = rigidity_report(CiliatedSurface::polygon(4));
    CHECK_FALSE(sq.in_theorem_scope);
    CHECK(sq.aut_order == 2);
    CHECK(sq.mod_image_order == 2);
    CHECK(sq.equal);
    CHECK_FALSE(sq.kernel_trivial);

    CHECK_THROWS_AS(rigidity_report(CiliatedSurface::polygon(3)), Error);
}

TEST_CASE("flip graph and arc complex have matching symmetry") {
    for (const auto& s : {CiliatedSurface::polygon(5), CiliatedSurface::polygon(6),
                          CiliatedSurface(0, 1, 1, {2}), CiliatedSurface(0, 1, 1, {3})}) {
        auto r = flipgraph_aut_check(s);
        CAPTURE(s.descriptor());
        CHECK(r.equal);
    }
    CHECK_THROWS_AS(flipgraph_aut_check(CiliatedSurface::polygon(4)), Error);  // dim 0
}

TEST_CASE("distinguishing non-homeomorphic surfaces") {
    // the sharp instance: both 9 vertices, both dimension 2
    auto r = distinguish(CiliatedSurface::polygon(6), CiliatedSurface(0, 1, 1, {3}));
    CHECK_FALSE(r.same_homeo);
    CHECK_FALSE(r.isomorphic);
    CHECK(r.invariants_a.vertices == 9);
    CHECK(r.invariants_b.vertices == 9);
    CHECK(r.certificate != "isomorphism_found");

    auto trivial = distinguish(CiliatedSurface::polygon(4), CiliatedSurface(0, 1, 1, {1}));
    CHECK(trivial.certificate == "vertex_count");

    auto same = distinguish(CiliatedSurface::polygon(5), CiliatedSurface::polygon(5));
    CHECK(same.same_homeo);
    CHECK(same.isomorphic);
    REQUIRE(same.witness.has_value());
    CHECK(*same.witness == identity_perm(5));
}

TEST_CASE("exhaustive search certifies the sharp pair") {
    // force the search path by ignoring the invariant shortcut
    auto ca = build_arc_complex(CiliatedSurface::polygon(6));
    auto cb = build_arc_complex(CiliatedSurface(0, 1, 1, {3}));
    CHECK_FALSE(find_isomorphism(ca, cb).has_value());
    CHECK(find_isomorphism(ca, ca).has_value());
}
