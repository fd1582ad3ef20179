#include <catch2/catch_amalgamated.hpp>

#include "arcx/complex.hpp"
#include "arcx/flipgraph.hpp"

using namespace arcx;

namespace {

// Independent oracle for small universes: every maximal pairwise-compatible
// subset, found by scanning all 2^m subsets.
std::vector<std::vector<int>> brute_force_facets(const ArcUniverse& u) {
    const int m = static_cast<int>(u.arcs.size());
    REQUIRE(m <= 20);
    std::vector<unsigned> cliques;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            if (mask & (1u << i))
                for (int j = i + 1; j < m && ok; ++j)
                    if ((mask & (1u << j)) && !u.compat[i][j]) ok = false;
        if (ok) cliques.push_back(mask);
    }
    std::vector<std::vector<int>> maximal;
    for (unsigned a : cliques) {
        bool dominated = false;
        for (unsigned b : cliques)
            if (a != b && (a & b) == a) {
                dominated = true;
                break;
            }
        if (!dominated && a != 0) {
            std::vector<int> f;
            for (int i = 0; i < m; ++i)
                if (a & (1u << i)) f.push_back(i);
            maximal.push_back(f);
        }
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

}  // namespace

TEST_CASE("facets agree with the subset-scan oracle") {
    std::vector<std::pair<CiliatedSurface, std::optional<int>>> cases = {
        {CiliatedSurface::polygon(4), std::nullopt},
        {CiliatedSurface::polygon(5), std::nullopt},
        {CiliatedSurface::polygon(6), std::nullopt},
        {CiliatedSurface(0, 1, 1, {1}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {2}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {3}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {4}), std::nullopt},
        {CiliatedSurface::annulus_one_one(), 3},
    };
    for (const auto& [s, bound] : cases) {
        CAPTURE(s.descriptor());
        auto u = make_universe(s, bound);
        auto c = build_arc_complex(u);
        CHECK(c.facets == brute_force_facets(u));
    }
}

TEST_CASE("low-dimensional complexes") {
    // square: two isolated vertices
    auto square = build_arc_complex(CiliatedSurface::polygon(4));
    CHECK(square.vertex_count() == 2);
    CHECK(square.edges.empty());
    CHECK(square.facets.size() == 2);

    // pentagon: 5-cycle of diameter 2
    auto pentagon = build_arc_complex(CiliatedSurface::polygon(5));
    auto pst = stats(pentagon);
    CHECK(pst.vertices == 5);
    CHECK(pst.edges == 5);
    CHECK(pst.facets == 5);
    CHECK(pst.dimension == 1);
    CHECK(pst.euler_characteristic == 0);
    CHECK(pst.diameter == 2);
    CHECK(pst.degree_sequence == std::vector<int>{2, 2, 2, 2, 2});

    // once-punctured monogon: a single vertex
    auto monogon = build_arc_complex(CiliatedSurface(0, 1, 1, {1}));
    CHECK(monogon.vertex_count() == 1);
    CHECK(monogon.facets == std::vector<std::vector<int>>{{0}});

    // once-punctured digon: the oracle yields a 4-vertex path of diameter 3
    auto digon = build_arc_complex(CiliatedSurface(0, 1, 1, {2}));
    auto dst = stats(digon);
    CHECK(dst.vertices == 4);
    CHECK(dst.edges == 3);
    CHECK(dst.diameter == 3);
    CHECK(dst.connected);
    CHECK(dst.degree_sequence == std::vector<int>{1, 1, 2, 2});

    // empty complexes for degenerate polygons
    for (int p = 1; p <= 3; ++p) {
        auto empty = build_arc_complex(CiliatedSurface::polygon(p));
        CHECK(empty.vertex_count() == 0);
        CHECK(empty.facets.empty());
        CHECK_THROWS_AS(stats(empty), Error);
    }
}

TEST_CASE("annulus window is a path") {
    for (int bound : {2, 3, 5}) {
        auto c = build_arc_complex(CiliatedSurface::annulus_one_one(), bound);
        CHECK(c.vertex_count() == 2 * bound + 1);
        CHECK(static_cast<int>(c.facets.size()) == 2 * bound);
        auto deg = c.degrees();
        for (int v = 0; v < c.vertex_count(); ++v)
            CHECK(deg[v] == (c.frontier[v] ? 1 : 2));
        // exactly the two window ends are flagged
        CHECK(std::count(c.frontier.begin(), c.frontier.end(), 1) == 2);
    }
}

TEST_CASE("hexagon complex is the boundary of a 2-sphere") {
    auto c = build_arc_complex(CiliatedSurface::polygon(6));
    auto st = stats(c);
    CHECK(st.vertices == 9);
    CHECK(st.edges == 21);
    CHECK(st.facets == 14);
    CHECK(st.dimension == 2);
    CHECK(st.euler_characteristic == 2);
    CHECK(st.f_vector == std::vector<long long>{9, 21, 14});
    CHECK(st.diameter == 2);
}

TEST_CASE("sphere Euler characteristics for polygons") {
    const std::vector<std::vector<long long>> expected_f = {
        {5, 5},                            // n = 5
        {9, 21, 14},                       // n = 6
        {14, 56, 84, 42},                  // n = 7
        {20, 120, 300, 330, 132},          // n = 8
        {27, 225, 825, 1485, 1287, 429},   // n = 9
    };
    for (int n = 5; n <= 9; ++n) {
        auto st = stats(build_arc_complex(CiliatedSurface::polygon(n)));
        CAPTURE(n);
        CHECK(st.dimension == n - 4);
        CHECK(st.euler_characteristic == 1 + (n % 2 == 0 ? 1 : -1));
        CHECK(st.f_vector == expected_f[n - 5]);
    }
}

TEST_CASE("punctured polygon complexes are contractible-sized") {
    // once-punctured n-gon: n^2 arcs, C(2n-1, n-1) triangulations, chi = 1
    const std::vector<long long> facet_counts = {1, 3, 10, 35, 126};
    for (int n = 1; n <= 5; ++n) {
        auto c = build_arc_complex(CiliatedSurface(0, 1, 1, {n}));
        CAPTURE(n);
        CHECK(c.vertex_count() == n * n);
        CHECK(static_cast<long long>(c.facets.size()) == facet_counts[n - 1]);
        auto st = stats(c);
        CHECK(st.euler_characteristic == 1);
        CHECK(st.dimension == n - 1);
    }
}

TEST_CASE("once-punctured triangle complex in detail") {
    auto st = stats(build_arc_complex(CiliatedSurface(0, 1, 1, {3})));
    CHECK(st.vertices == 9);
    CHECK(st.edges == 18);
    CHECK(st.facets == 10);
    CHECK(st.f_vector == std::vector<long long>{9, 18, 10});
    CHECK(st.degree_sequence == std::vector<int>{3, 3, 3, 4, 4, 4, 5, 5, 5});
}

TEST_CASE("purity and codimension-1 incidence") {
    std::vector<std::pair<CiliatedSurface, std::optional<int>>> cases = {
        {CiliatedSurface::polygon(5), std::nullopt},
        {CiliatedSurface::polygon(6), std::nullopt},
        {CiliatedSurface::polygon(7), std::nullopt},
        {CiliatedSurface(0, 1, 1, {2}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {3}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {4}), std::nullopt},
        {CiliatedSurface::annulus_one_one(), 3},
    };
    for (const auto& [s, bound] : cases) {
        CAPTURE(s.descriptor());
        auto u = make_universe(s, bound);
        auto c = build_arc_complex(u);
        const int expected = arc_count(s);
        std::set<std::vector<int>> facet_set(c.facets.begin(), c.facets.end());
        for (const auto& f : c.facets) {
            CHECK(static_cast<int>(f.size()) == expected);
            // codimension-1 faces lie in one or two facets; exactly one iff
            // the dropped arc is not flippable
            for (int drop : f) {
                int count = 0;
                for (const auto& g : c.facets) {
                    std::vector<int> inter;
                    std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                                          std::back_inserter(inter));
                    if (static_cast<int>(inter.size()) == expected - 1 &&
                        !std::binary_search(inter.begin(), inter.end(), drop) &&
                        std::includes(g.begin(), g.end(), inter.begin(), inter.end()))
                        ++count;
                }
                std::vector<Arc> arcs;
                for (int idx : f) arcs.push_back(u.arcs[idx]);
                auto t = make_triangulation(s, arcs);
                const bool can_flip = flippable(u, t, u.arcs[drop]);
                CHECK(count <= 2);
                CHECK((count == 2) == can_flip);
            }
        }
    }
}

TEST_CASE("every compatible pair extends to a facet") {
    for (int n : {5, 6, 7}) {
        auto u = make_universe(CiliatedSurface::polygon(n));
        auto c = build_arc_complex(u);
        for (auto [i, j] : c.edges) {
            bool contained = false;
            for (const auto& f : c.facets)
                if (std::binary_search(f.begin(), f.end(), i) &&
                    std::binary_search(f.begin(), f.end(), j)) {
                    contained = true;
                    break;
                }
            CHECK(contained);
        }
    }
}

TEST_CASE("flip graphs of small surfaces") {
    auto square = build_flip_graph(CiliatedSurface::polygon(4));
    CHECK(square.vertex_count() == 2);
    CHECK(square.edges.size() == 1);
    CHECK(square.vertex_keys == std::vector<std::string>{"C(0,2)", "C(1,3)"});

    auto pentagon = build_flip_graph(CiliatedSurface::polygon(5));
    CHECK(pentagon.vertex_count() == 5);
    CHECK(pentagon.edges.size() == 5);
    CHECK(pentagon.degrees() == std::vector<int>(5, 2));

    auto hexagon = build_flip_graph(CiliatedSurface::polygon(6));
    CHECK(hexagon.vertex_count() == 14);
    CHECK(hexagon.edges.size() == 21);
    CHECK(hexagon.degrees() == std::vector<int>(14, 3));
    CHECK(hexagon.connected());

    auto digon = build_flip_graph(CiliatedSurface(0, 1, 1, {2}));
    CHECK(digon.vertex_count() == 3);
    CHECK(digon.edges.size() == 2);
    auto dd = digon.degrees();
    std::sort(dd.begin(), dd.end());
    CHECK(dd == std::vector<int>{1, 1, 2});

    auto ptriangle = build_flip_graph(CiliatedSurface(0, 1, 1, {3}));
    CHECK(ptriangle.vertex_count() == 10);
    CHECK(ptriangle.edges.size() == 12);
    auto pd = ptriangle.degrees();
    std::sort(pd.begin(), pd.end());
    CHECK(pd == std::vector<int>{2, 2, 2, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("flip graph connectivity across the desk instances") {
    std::vector<std::pair<CiliatedSurface, std::optional<int>>> cases = {
        {CiliatedSurface::polygon(5), std::nullopt},
        {CiliatedSurface::polygon(6), std::nullopt},
        {CiliatedSurface::polygon(7), std::nullopt},
        {CiliatedSurface::polygon(8), std::nullopt},
        {CiliatedSurface::polygon(9), std::nullopt},
        {CiliatedSurface(0, 1, 1, {3}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {4}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {5}), std::nullopt},
        {CiliatedSurface::annulus_one_one(), 4},
    };
    for (const auto& [s, bound] : cases) {
        CAPTURE(s.descriptor());
        CHECK(build_flip_graph(s, bound).connected());
    }
}

TEST_CASE("flip graph is dual to the arc complex") {
    std::vector<std::pair<CiliatedSurface, std::optional<int>>> cases = {
        {CiliatedSurface::polygon(5), std::nullopt},
        {CiliatedSurface::polygon(6), std::nullopt},
        {CiliatedSurface(0, 1, 1, {3}), std::nullopt},
        {CiliatedSurface(0, 1, 1, {4}), std::nullopt},
        {CiliatedSurface::annulus_one_one(), 3},
    };
    for (const auto& [s, bound] : cases) {
        CAPTURE(s.descriptor());
        auto u = make_universe(s, bound);
        CHECK(dual_consistent(build_arc_complex(u), build_flip_graph(s, bound), u));
    }
}

TEST_CASE("explicit balls") {
    // radius 0 is a single vertex
    auto u6 = make_universe(CiliatedSurface::polygon(6));
    auto b0 = ball(u6, fan(CiliatedSurface::polygon(6)), 0);
    CHECK(b0.vertex_count() == 1);
    CHECK(b0.frontier == std::vector<char>{1});

    // large radius saturates the finite graph
    auto b10 = ball(u6, fan(CiliatedSurface::polygon(6)), 10);
    CHECK(b10.vertex_count() == 14);
    CHECK(b10.edges.size() == 21);

    // distances are BFS distances
    auto b1 = ball(u6, fan(CiliatedSurface::polygon(6)), 1);
    CHECK(b1.vertex_count() == 4);  // fan has three flippable arcs
    int zero_count = 0, one_count = 0;
    for (int d : b1.distance) (d == 0 ? zero_count : one_count)++;
    CHECK(zero_count == 1);
    CHECK(one_count == 3);
}

TEST_CASE("graph stats of the pentagon flip graph") {
    auto st = graph_stats(build_flip_graph(CiliatedSurface::polygon(5)));
    CHECK(st.vertices == 5);
    CHECK(st.edges == 5);
    CHECK(st.connected);
    CHECK(st.diameter == 2);
}
