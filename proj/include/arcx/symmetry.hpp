#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "arcx/complex.hpp"
#include "arcx/error.hpp"
#include "arcx/flipgraph.hpp"

namespace arcx {

// Vertex permutation as an image table: perm[v] = image of v.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm compose(const Perm& f, const Perm& g) {  // (f∘g)(v) = f[g[v]]
    Perm out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) out[v] = f[g[v]];
    return out;
}

inline Perm inverse(const Perm& f) {
    Perm out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[f[v]] = static_cast<int>(v);
    return out;
}

// Does the vertex bijection map the facet family onto itself (equivalently,
// is it a simplicial automorphism of the pure complex)?
inline bool is_simplicial(const Perm& p, const SimplicialComplex& c) {
    std::set<std::vector<int>> facet_set(c.facets.begin(), c.facets.end());
    for (const auto& f : c.facets) {
        std::vector<int> image;
        image.reserve(f.size());
        for (int v : f) image.push_back(p[v]);
        std::sort(image.begin(), image.end());
        if (!facet_set.count(image)) return false;
    }
    return true;
}

// Small permutation group stored as an explicit, sorted element list.
struct PermutationGroup {
    std::vector<Perm> elements;    // sorted, unique, closed
    std::vector<Perm> generators;  // some subset generating the elements

    long long order() const { return static_cast<long long>(elements.size()); }

    bool contains(const Perm& p) const {
        return std::binary_search(elements.begin(), elements.end(), p);
    }

    bool is_closed() const {
        for (const auto& a : elements) {
            if (!contains(inverse(a))) return false;
            for (const auto& b : elements)
                if (!contains(compose(a, b))) return false;
        }
        return true;
    }

    bool is_subgroup_of(const PermutationGroup& other) const {
        for (const auto& e : elements)
            if (!other.contains(e)) return false;
        return true;
    }
};

inline PermutationGroup close_under_composition(int n, std::vector<Perm> generators) {
    std::set<Perm> elems;
    elems.insert(identity_perm(n));
    for (const auto& g : generators) elems.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> snapshot(elems.begin(), elems.end());
        for (const auto& a : snapshot) {
            if (elems.insert(inverse(a)).second) grew = true;
            for (const auto& b : snapshot)
                if (elems.insert(compose(a, b)).second) grew = true;
        }
    }
    PermutationGroup g;
    g.elements.assign(elems.begin(), elems.end());
    g.generators = std::move(generators);
    return g;
}

// ---------------------------------------------------------------------------
// backtracking search for adjacency- and facet-preserving bijections
// ---------------------------------------------------------------------------

namespace detail {

struct MapSearch {
    int n = 0;
    std::vector<std::vector<char>> adjA, adjB;
    std::vector<std::vector<int>> facetsA;            // sorted index sets
    std::set<std::vector<int>> facetsB;               // lookup
    std::vector<std::vector<int>> facets_at_vertex;   // vertex -> facet indices (in A)
    std::vector<long long> invariantA, invariantB;    // per-vertex invariant class
    std::vector<int> order;                           // vertex assignment order
    std::vector<int> image, preimage;                 // partial bijection
    std::vector<int> facet_placed;                    // per facet: #vertices already mapped
    std::vector<Perm> found;
    bool first_only = false;
    bool done = false;

    // degree, facet membership count and sorted neighbor degrees pin down a
    // vertex class; only like classes can correspond
    static std::vector<long long> vertex_invariants(const std::vector<std::vector<char>>& adj,
                                                    const std::vector<std::vector<int>>& facets) {
        const int n = static_cast<int>(adj.size());
        std::vector<int> degree(n, 0), facet_count(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (v != w && adj[v][w]) ++degree[v];
        for (const auto& f : facets)
            for (int v : f) ++facet_count[v];
        std::map<std::vector<int>, long long> classes;
        std::vector<long long> inv(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> profile{degree[v], facet_count[v]};
            std::vector<int> nbr_degrees;
            for (int w = 0; w < n; ++w)
                if (v != w && adj[v][w]) nbr_degrees.push_back(degree[w]);
            std::sort(nbr_degrees.begin(), nbr_degrees.end());
            profile.insert(profile.end(), nbr_degrees.begin(), nbr_degrees.end());
            auto [it, unused] = classes.emplace(profile, static_cast<long long>(classes.size()));
            inv[v] = it->second;
        }
        return inv;
    }

    void setup_order() {
        // most-constrained first: rare invariant class, then high degree;
        // after that prefer vertices adjacent to already-ordered ones
        std::map<long long, int> class_size;
        for (long long c : invariantA) ++class_size[c];
        std::vector<int> degree(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (v != w && adjA[v][w]) ++degree[v];
        std::vector<char> placed(n, 0);
        order.clear();
        while (static_cast<int>(order.size()) < n) {
            int best = -1;
            long long best_score = 0;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                long long anchored = 0;
                for (int w : order) anchored += adjA[v][w] ? 1 : 0;
                // lexicographic priority: anchored desc, class rarity, degree desc
                long long score = anchored * 1000000LL - class_size[invariantA[v]] * 1000LL +
                                  degree[v];
                if (best < 0 || score > best_score) {  // ties keep the lowest vertex
                    best = v;
                    best_score = score;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool consistent(int v, int w) const {
        if (invariantA[v] != invariantB[w]) return false;
        for (int u = 0; u < n; ++u) {
            if (image[u] < 0 || u == v) continue;
            if (adjA[v][u] != adjB[w][image[u]]) return false;
        }
        return true;
    }

    // incremental facet check: once every vertex of an A-facet is mapped, its
    // image must be a B-facet
    bool facets_ok_after(int v) {
        for (int fi : facets_at_vertex[v]) {
            if (++facet_placed[fi] != static_cast<int>(facetsA[fi].size())) continue;
            std::vector<int> img;
            img.reserve(facetsA[fi].size());
            for (int u : facetsA[fi]) img.push_back(image[u]);
            std::sort(img.begin(), img.end());
            if (!facetsB.count(img)) return false;
        }
        return true;
    }

    void undo_facets(int v) {
        for (int fi : facets_at_vertex[v]) --facet_placed[fi];
    }

    void recurse(std::size_t depth) {
        if (done) return;
        if (depth == order.size()) {
            found.push_back(image);
            if (first_only) done = true;
            return;
        }
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (preimage[w] >= 0) continue;
            if (!consistent(v, w)) continue;
            image[v] = w;
            preimage[w] = v;
            if (facets_ok_after(v)) recurse(depth + 1);
            undo_facets(v);
            image[v] = -1;
            preimage[w] = -1;
            if (done) return;
        }
    }

    std::vector<Perm> run() {
        image.assign(n, -1);
        preimage.assign(n, -1);
        facet_placed.assign(facetsA.size(), 0);
        facets_at_vertex.assign(n, {});
        for (std::size_t fi = 0; fi < facetsA.size(); ++fi)
            for (int v : facetsA[fi]) facets_at_vertex[v].push_back(static_cast<int>(fi));
        setup_order();
        recurse(0);
        std::sort(found.begin(), found.end());
        return found;
    }
};

inline std::vector<Perm> search_maps(const std::vector<std::vector<char>>& adjA,
                                     const std::vector<std::vector<int>>& facetsA,
                                     const std::vector<std::vector<char>>& adjB,
                                     const std::vector<std::vector<int>>& facetsB,
                                     bool first_only) {
    if (adjA.size() != adjB.size()) return {};
    if (facetsA.size() != facetsB.size()) return {};
    MapSearch s;
    s.n = static_cast<int>(adjA.size());
    s.adjA = adjA;
    s.adjB = adjB;
    s.facetsA = facetsA;
    s.facetsB = std::set<std::vector<int>>(facetsB.begin(), facetsB.end());
    s.invariantA = MapSearch::vertex_invariants(adjA, facetsA);
    s.invariantB = MapSearch::vertex_invariants(adjB, facetsB);
    {
        // invariant class populations must agree, otherwise no bijection exists
        std::map<long long, int> ca, cb;
        for (auto c : s.invariantA) ++ca[c];
        for (auto c : s.invariantB) ++cb[c];
        if (ca != cb) return {};
    }
    s.first_only = first_only;
    return s.run();
}

}  // namespace detail

inline constexpr int kDefaultAutBound = 64;

// Full automorphism group of a complex: every vertex bijection mapping
// maximal simplices onto maximal simplices.
inline PermutationGroup automorphisms(const SimplicialComplex& c,
                                      int max_vertices = kDefaultAutBound) {
    if (c.vertex_count() > max_vertices)
        fail(ErrorCode::TooLarge, "complex has " + std::to_string(c.vertex_count()) +
                                      " vertices, bound is " + std::to_string(max_vertices));
    if (c.vertex_count() == 0) return close_under_composition(0, {});
    auto adj = c.adjacency();
    auto elements = detail::search_maps(adj, c.facets, adj, c.facets, false);
    PermutationGroup g;
    g.elements = std::move(elements);
    for (const auto& e : g.elements)
        if (!is_simplicial(e, c))
            fail(ErrorCode::OracleMismatch, "automorphism search returned a non-simplicial map");
    g.generators = g.elements;  // explicit element set; generators not minimized
    return g;
}

// Automorphism group of a graph (flip graphs; facet structure is empty).
inline PermutationGroup graph_automorphisms(const FlipGraph& g,
                                            int max_vertices = kDefaultAutBound) {
    if (g.vertex_count() > max_vertices)
        fail(ErrorCode::TooLarge, "graph has " + std::to_string(g.vertex_count()) +
                                      " vertices, bound is " + std::to_string(max_vertices));
    if (g.vertex_count() == 0) return close_under_composition(0, {});
    auto adj = g.adjacency();
    PermutationGroup out;
    out.elements = detail::search_maps(adj, {}, adj, {}, false);
    out.generators = out.elements;
    return out;
}

// First isomorphism between two complexes, if any.
inline std::optional<Perm> find_isomorphism(const SimplicialComplex& a,
                                            const SimplicialComplex& b,
                                            int max_vertices = kDefaultAutBound) {
    if (a.vertex_count() != b.vertex_count()) return std::nullopt;
    if (a.vertex_count() > max_vertices)
        fail(ErrorCode::Inconclusive, "isomorphism search aborted: " +
                                          std::to_string(a.vertex_count()) +
                                          " vertices exceeds bound " +
                                          std::to_string(max_vertices));
    if (a.vertex_count() == 0) return identity_perm(0);
    auto found = detail::search_maps(a.adjacency(), a.facets, b.adjacency(), b.facets, true);
    if (found.empty()) return std::nullopt;
    return found.front();
}

}  // namespace arcx
