#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "arcx/error.hpp"
#include "arcx/surface.hpp"
#include "arcx/triangulation.hpp"

namespace arcx {

// Vertex-labeled simplicial complex given by its maximal simplices.  For arc
// complexes the vertices are arcs in canonical order and the facets are the
// triangulations.
struct SimplicialComplex {
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<int>> facets;   // each sorted; facet list sorted lex
    std::vector<std::pair<int, int>> edges; // sorted pairs (i < j), list sorted
    std::vector<char> frontier;             // window-boundary vertices (annulus)

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }

    int dimension() const {
        int d = -1;
        for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    std::vector<std::vector<char>> adjacency() const {
        const int n = vertex_count();
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [i, j] : edges) adj[i][j] = adj[j][i] = 1;
        return adj;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count(), 0);
        for (auto [i, j] : edges) {
            ++deg[i];
            ++deg[j];
        }
        return deg;
    }
};

namespace detail {

// Bron-Kerbosch with pivoting; reports every maximal clique.
inline void maximal_cliques(const std::vector<std::vector<char>>& adj, std::vector<int>& R,
                            std::vector<int> P, std::vector<int> X,
                            std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    int pivot = -1, best = -1;
    for (int u : P) {
        int cnt = 0;
        for (int v : P) cnt += adj[u][v];
        if (cnt > best) best = cnt, pivot = u;
    }
    for (int u : X) {
        int cnt = 0;
        for (int v : P) cnt += adj[u][v];
        if (cnt > best) best = cnt, pivot = u;
    }
    std::vector<int> candidates;
    for (int v : P)
        if (pivot < 0 || !adj[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> P2, X2;
        for (int w : P)
            if (adj[v][w]) P2.push_back(w);
        for (int w : X)
            if (adj[v][w]) X2.push_back(w);
        R.push_back(v);
        maximal_cliques(adj, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.push_back(v);
    }
}

inline std::vector<std::vector<int>> all_maximal_cliques(std::vector<std::vector<char>> adj) {
    // Clique enumeration needs an irreflexive relation; the compatibility
    // matrix records iota(a,a) == 0 on the diagonal.
    for (std::size_t v = 0; v < adj.size(); ++v) adj[v][v] = 0;
    std::vector<std::vector<int>> out;
    std::vector<int> R, P, X;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) P.push_back(v);
    maximal_cliques(adj, R, std::move(P), std::move(X), out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// All triangulations reachable from `start` by flips, as sorted index sets
// into the universe.  Result is sorted, so it is directly comparable with the
// clique enumeration.
inline std::vector<std::vector<int>> flip_closure(const ArcUniverse& u,
                                                  const ExplicitTriangulation& start) {
    auto to_indices = [&u](const ExplicitTriangulation& t) {
        std::vector<int> v;
        for (const Arc& a : t.arcs) v.push_back(u.index_of(a));
        std::sort(v.begin(), v.end());
        return v;
    };
    std::set<std::vector<int>> seen;
    std::queue<ExplicitTriangulation> todo;
    seen.insert(to_indices(start));
    todo.push(start);
    while (!todo.empty()) {
        ExplicitTriangulation t = todo.front();
        todo.pop();
        for (const Arc& a : t.arcs) {
            auto b = flip_replacement(u, t, a);
            if (!b) continue;
            ExplicitTriangulation t2 = flip(u, t, a);
            if (seen.insert(to_indices(t2)).second) todo.push(t2);
        }
    }
    return {seen.begin(), seen.end()};
}

// Builds the arc complex of a finite-type surface (or a bounded annulus
// window).  Facets are computed twice, by flip closure from the base
// triangulation and by direct maximal-clique enumeration over the
// compatibility relation; any disagreement is a hard failure.
inline SimplicialComplex build_arc_complex(const ArcUniverse& u) {
    SimplicialComplex c;
    for (const Arc& a : u.arcs) c.vertex_labels.push_back(a.text());
    c.frontier.assign(u.arcs.size(), 0);
    if (u.winding_bound)
        for (std::size_t i = 0; i < u.arcs.size(); ++i)
            if (std::abs(u.arcs[i].i) == *u.winding_bound) c.frontier[i] = 1;

    if (u.arcs.empty()) return c;  // empty complex (degenerate polygons)

    std::vector<std::vector<int>> by_cliques = detail::all_maximal_cliques(u.compat);
    std::vector<std::vector<int>> by_flips = flip_closure(u, fan(u.surface));
    if (by_cliques != by_flips)
        fail(ErrorCode::OracleMismatch,
             "flip closure and compatibility enumeration disagree on " + u.surface.descriptor());

    c.facets = std::move(by_cliques);
    const int expected = arc_count(u.surface);
    for (const auto& f : c.facets)
        if (static_cast<int>(f.size()) != expected)
            fail(ErrorCode::OracleMismatch,
                 "facet of size " + std::to_string(f.size()) + " on " + u.surface.descriptor() +
                     " (expected " + std::to_string(expected) + ")");

    for (std::size_t i = 0; i < u.arcs.size(); ++i)
        for (std::size_t j = i + 1; j < u.arcs.size(); ++j)
            if (u.compat[i][j]) c.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return c;
}

inline SimplicialComplex build_arc_complex(const CiliatedSurface& surface,
                                           std::optional<int> winding_bound = std::nullopt) {
    if (classify(surface).tag == SurfaceClassTag::Empty) {
        SimplicialComplex c;  // no essential arcs at all
        return c;
    }
    return build_arc_complex(make_universe(surface, winding_bound));
}

struct ComplexStats {
    int dimension = -1;
    std::vector<long long> f_vector;  // f_vector[k] = number of k-simplices... index 0 = vertices
    long long euler_characteristic = 0;
    bool connected = false;
    int diameter = -1;  // of the 1-skeleton; -1 when disconnected or trivial
    std::vector<int> degree_sequence;
    long long vertices = 0, edges = 0, facets = 0;
};

// Dimension, f-vector, Euler characteristic, 1-skeleton diameter and degree
// sequence.  Faces are subsets of facets; the counting walks facet power
// sets, which is cheap at desk scale.
inline ComplexStats stats(const SimplicialComplex& c) {
    if (c.vertex_count() == 0)
        fail(ErrorCode::EmptyComplex, "statistics of the empty complex");
    ComplexStats st;
    st.dimension = c.dimension();
    st.vertices = c.vertex_count();
    st.edges = static_cast<long long>(c.edges.size());
    st.facets = static_cast<long long>(c.facets.size());

    std::set<std::vector<int>> faces;
    for (const auto& facet : c.facets) {
        const int k = static_cast<int>(facet.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(facet[b]);
            faces.insert(std::move(face));
        }
    }
    st.f_vector.assign(st.dimension + 1, 0);
    for (const auto& f : faces) ++st.f_vector[f.size() - 1];
    st.euler_characteristic = 0;
    for (std::size_t k = 0; k < st.f_vector.size(); ++k)
        st.euler_characteristic += (k % 2 == 0 ? 1 : -1) * st.f_vector[k];

    // all-pairs BFS over the 1-skeleton
    const int n = c.vertex_count();
    std::vector<std::vector<int>> nbr(n);
    for (auto [i, j] : c.edges) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }
    st.connected = true;
    st.diameter = 0;
    for (int s = 0; s < n && st.connected; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : nbr[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) {
                st.connected = false;
                break;
            }
            st.diameter = std::max(st.diameter, dist[v]);
        }
    }
    if (!st.connected) st.diameter = -1;

    st.degree_sequence = c.degrees();
    std::sort(st.degree_sequence.begin(), st.degree_sequence.end());
    return st;
}

}  // namespace arcx
