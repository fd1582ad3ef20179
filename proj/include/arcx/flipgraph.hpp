#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "arcx/complex.hpp"
#include "arcx/error.hpp"
#include "arcx/triangulation.hpp"

namespace arcx {

// Graph of triangulations connected by flips.  Vertices carry canonical keys
// (lexicographically sorted arc texts for the explicit model, canonical
// gluing encodings for glued data); each edge remembers which flip produced
// it.
struct FlipGraph {
    std::vector<std::string> vertex_keys;
    std::vector<std::pair<int, int>> edges;   // i < j, sorted
    std::vector<std::string> edge_provenance; // parallel to edges: "old -> new"
    std::vector<char> frontier;               // vertices whose flips were clipped
    std::vector<int> distance;                // BFS distance from the start (balls only)

    int vertex_count() const { return static_cast<int>(vertex_keys.size()); }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count(), 0);
        for (auto [i, j] : edges) {
            ++deg[i];
            ++deg[j];
        }
        return deg;
    }

    std::vector<std::vector<char>> adjacency() const {
        const int n = vertex_count();
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [i, j] : edges) adj[i][j] = adj[j][i] = 1;
        return adj;
    }

    bool connected() const {
        const int n = vertex_count();
        if (n == 0) return true;
        std::vector<std::vector<int>> nbr(n);
        for (auto [i, j] : edges) {
            nbr[i].push_back(j);
            nbr[j].push_back(i);
        }
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : nbr[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    q.push(w);
                }
        }
        return count == n;
    }
};

namespace detail {

struct FlipBfs {
    const ArcUniverse& u;
    std::map<std::vector<int>, int> ids;       // triangulation (sorted indices) -> vertex id
    std::vector<std::vector<int>> tris;        // id -> triangulation
    FlipGraph graph;

    explicit FlipBfs(const ArcUniverse& universe) : u(universe) {}

    std::vector<int> indices(const ExplicitTriangulation& t) const {
        std::vector<int> v;
        for (const Arc& a : t.arcs) v.push_back(u.index_of(a));
        std::sort(v.begin(), v.end());
        return v;
    }

    ExplicitTriangulation triangulation(const std::vector<int>& idx) const {
        std::vector<Arc> arcs;
        for (int i : idx) arcs.push_back(u.arcs[i]);
        return make_triangulation(u.surface, std::move(arcs));
    }

    int id_of(const std::vector<int>& idx) {
        auto [it, inserted] = ids.emplace(idx, static_cast<int>(tris.size()));
        if (inserted) {
            tris.push_back(idx);
            graph.distance.push_back(-1);
        }
        return it->second;
    }

    int find_id(const std::vector<int>& idx) const {
        auto it = ids.find(idx);
        return it == ids.end() ? -1 : it->second;
    }

    // Breadth-first closure under flips; max_radius < 0 means unbounded.
    // Bounded runs return the subgraph induced on the ball: frontier
    // vertices contribute edges to already-discovered vertices only.
    void run(const ExplicitTriangulation& start, int max_radius) {
        std::set<std::pair<int, int>> edge_set;
        std::vector<std::pair<std::pair<int, int>, std::string>> edge_records;
        const int start_id = id_of(indices(start));
        graph.distance[start_id] = 0;
        std::queue<int> q;
        q.push(start_id);
        std::vector<char> clipped;
        while (!q.empty()) {
            const int vid = q.front();
            q.pop();
            const bool at_frontier = max_radius >= 0 && graph.distance[vid] >= max_radius;
            if (at_frontier) {
                if (static_cast<int>(clipped.size()) <= vid) clipped.resize(vid + 1, 0);
                clipped[vid] = 1;
            }
            ExplicitTriangulation t = triangulation(tris[vid]);
            for (const Arc& a : t.arcs) {
                auto rep = flip_replacement(u, t, a);
                if (!rep) continue;
                ExplicitTriangulation t2 = flip(u, t, a);
                const std::vector<int> idx2 = indices(t2);
                int wid;
                if (at_frontier) {
                    wid = find_id(idx2);
                    if (wid < 0) continue;  // stays outside the ball
                } else {
                    wid = id_of(idx2);
                    if (graph.distance[wid] < 0) {
                        graph.distance[wid] = graph.distance[vid] + 1;
                        q.push(wid);
                    }
                }
                auto e = std::minmax(vid, wid);
                if (edge_set.insert({e.first, e.second}).second)
                    edge_records.push_back(
                        {{e.first, e.second}, a.text() + " -> " + rep->text()});
            }
        }
        // renumber vertices by canonical key so the output order is stable
        std::vector<std::string> keys(tris.size());
        for (std::size_t i = 0; i < tris.size(); ++i)
            keys[i] = triangulation(tris[i]).key();
        std::vector<int> order(tris.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&keys](int a, int b) { return keys[a] < keys[b]; });
        std::vector<int> rank(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

        FlipGraph out;
        out.vertex_keys.resize(tris.size());
        out.distance.assign(tris.size(), -1);
        out.frontier.assign(tris.size(), 0);
        clipped.resize(tris.size(), 0);
        for (std::size_t i = 0; i < tris.size(); ++i) {
            out.vertex_keys[rank[i]] = keys[i];
            out.distance[rank[i]] = graph.distance[i];
            out.frontier[rank[i]] = clipped[i];
        }
        std::vector<std::pair<std::pair<int, int>, std::string>> remapped;
        for (auto& [e, prov] : edge_records) {
            auto m = std::minmax(rank[e.first], rank[e.second]);
            remapped.push_back({{m.first, m.second}, prov});
        }
        std::sort(remapped.begin(), remapped.end());
        for (auto& [e, prov] : remapped) {
            out.edges.push_back(e);
            out.edge_provenance.push_back(prov);
        }
        graph = std::move(out);
    }
};

}  // namespace detail

// Full flip graph of a finite-type surface (or bounded annulus window),
// closed under flips from the base triangulation.
inline FlipGraph build_flip_graph(const CiliatedSurface& surface,
                                  std::optional<int> winding_bound = std::nullopt) {
    ArcUniverse u = make_universe(surface, winding_bound);
    detail::FlipBfs bfs(u);
    bfs.run(fan(surface), -1);
    return std::move(bfs.graph);
}

// Ball of the given radius in the flip graph around an explicit
// triangulation.  Frontier vertices sit at the radius; their flips were not
// explored.
inline FlipGraph ball(const ArcUniverse& u, const ExplicitTriangulation& start, int radius) {
    if (radius < 0) fail(ErrorCode::ParseError, "ball radius must be non-negative");
    detail::FlipBfs bfs(u);
    bfs.run(start, radius);
    return std::move(bfs.graph);
}

// The flip graph is the dual 1-skeleton of the arc complex: its vertices are
// the facets and its edges are the facet pairs sharing a codimension-1 face.
// Returns true when graph and complex agree; used as a structural check.
inline bool dual_consistent(const SimplicialComplex& c, const FlipGraph& g,
                            const ArcUniverse& u) {
    if (c.facets.size() != g.vertex_keys.size()) return false;
    std::vector<std::string> facet_keys;
    for (const auto& f : c.facets) {
        std::vector<Arc> arcs;
        for (int v : f) arcs.push_back(u.arcs[v]);
        facet_keys.push_back(ExplicitTriangulation{u.surface, arcs}.key());
    }
    std::vector<std::string> sorted_facet_keys = facet_keys;
    std::sort(sorted_facet_keys.begin(), sorted_facet_keys.end());
    if (sorted_facet_keys != g.vertex_keys) return false;

    // facet pairs sharing all arcs but one
    std::set<std::pair<int, int>> expected;
    std::map<std::string, int> key_rank;
    for (std::size_t i = 0; i < g.vertex_keys.size(); ++i) key_rank[g.vertex_keys[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < c.facets.size(); ++i)
        for (std::size_t j = i + 1; j < c.facets.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(c.facets[i].begin(), c.facets[i].end(), c.facets[j].begin(),
                                  c.facets[j].end(), std::back_inserter(common));
            if (common.size() + 1 == c.facets[i].size()) {
                auto e = std::minmax(key_rank[facet_keys[i]], key_rank[facet_keys[j]]);
                expected.insert({e.first, e.second});
            }
        }
    std::set<std::pair<int, int>> actual(g.edges.begin(), g.edges.end());
    return expected == actual;
}

struct GraphStats {
    long long vertices = 0, edges = 0;
    bool connected = false;
    int diameter = -1;
    std::vector<int> degree_sequence;
};

inline GraphStats graph_stats(const FlipGraph& g) {
    GraphStats st;
    st.vertices = g.vertex_count();
    st.edges = static_cast<long long>(g.edges.size());
    st.connected = g.connected();
    st.degree_sequence = g.degrees();
    std::sort(st.degree_sequence.begin(), st.degree_sequence.end());
    const int n = g.vertex_count();
    std::vector<std::vector<int>> nbr(n);
    for (auto [i, j] : g.edges) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
    }
    if (st.connected && n > 0) {
        st.diameter = 0;
        for (int s = 0; s < n; ++s) {
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
            for (int v = 0; v < n; ++v) st.diameter = std::max(st.diameter, dist[v]);
        }
    }
    return st;
}

}  // namespace arcx
