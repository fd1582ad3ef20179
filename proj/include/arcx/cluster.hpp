#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "arcx/error.hpp"
#include "arcx/flipgraph.hpp"
#include "arcx/glued.hpp"
#include "arcx/triangulation.hpp"

namespace arcx {

using IntMatrix = std::vector<std::vector<int>>;

// A labeled skew-symmetric integer matrix attached to a triangulation.
struct Seed {
    std::vector<std::string> labels;
    IntMatrix matrix;

    int rank() const { return static_cast<int>(labels.size()); }

    bool skew_symmetric() const {
        const int n = rank();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (matrix[i][j] != -matrix[j][i]) return false;
        return true;
    }
};

// Seed text form: one line of labels, then the matrix rows.
inline std::string serialize(const Seed& s) {
    std::ostringstream os;
    os << "labels";
    for (const auto& l : s.labels) os << ' ' << l;
    os << '\n';
    for (const auto& row : s.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
    return os.str();
}

inline Seed parse_seed(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) fail(ErrorCode::ParseError, "empty seed file");
    std::istringstream hs(line);
    std::string head;
    hs >> head;
    if (head != "labels") fail(ErrorCode::ParseError, "seed file must start with a labels line");
    Seed s;
    std::string label;
    while (hs >> label) s.labels.push_back(label);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x) row.push_back(x);
        s.matrix.push_back(std::move(row));
    }
    if (s.matrix.size() != s.labels.size())
        fail(ErrorCode::ParseError, "seed matrix must be square with one row per label");
    for (const auto& row : s.matrix)
        if (row.size() != s.labels.size())
            fail(ErrorCode::ParseError, "seed matrix must be square with one row per label");
    return s;
}

// ---------------------------------------------------------------------------
// signed adjacency matrix of an unpunctured triangulation
//
// Triangles are read counterclockwise; each triangle contributes +1 at (i,j)
// when the side carrying arc i immediately follows the side carrying arc j
// in that counterclockwise order (equivalently, j follows i clockwise), and
// -1 transposed.  Boundary sides carry no label and contribute nothing.
// Reversing the global orientation negates the matrix.
// ---------------------------------------------------------------------------

inline Seed b_matrix(const GluedTriangulation& g,
                     const std::vector<std::string>& arc_labels = {}) {
    if (g.surface.puncture_count > 0)
        fail(ErrorCode::Punctured,
             "signed adjacency matrix needs an unpunctured surface, got " +
                 g.surface.descriptor());
    const int N = static_cast<int>(g.gluing.size());
    std::map<int, int> arc_of_side;
    for (int k = 0; k < N; ++k) {
        auto [a, b] = g.gluing[k];
        arc_of_side[a] = k;
        arc_of_side[b] = k;
    }
    for (std::size_t t = 0; t < g.triangles.size(); ++t) {
        int seen_pair = -1;
        for (int s : g.triangles[t]) {
            auto it = arc_of_side.find(s);
            if (it == arc_of_side.end()) continue;
            if (it->second == seen_pair)
                fail(ErrorCode::SelfFolded,
                     "triangle " + std::to_string(t) + " is self-folded; no matrix entry rule");
            seen_pair = it->second;
        }
    }

    Seed seed;
    if (!arc_labels.empty()) {
        if (static_cast<int>(arc_labels.size()) != N)
            fail(ErrorCode::UnlabeledSide, "need one label per interior arc");
        seed.labels = arc_labels;
    } else {
        for (auto [a, b] : g.gluing)
            seed.labels.push_back(std::to_string(a) + "~" + std::to_string(b));
    }
    seed.matrix.assign(N, std::vector<int>(N, 0));
    for (const auto& tri : g.triangles)
        for (int k = 0; k < 3; ++k) {
            auto u = arc_of_side.find(tri[k]);
            auto v = arc_of_side.find(tri[(k + 1) % 3]);
            if (u == arc_of_side.end() || v == arc_of_side.end()) continue;
            seed.matrix[v->second][u->second] += 1;
            seed.matrix[u->second][v->second] -= 1;
        }
    if (!seed.skew_symmetric())
        fail(ErrorCode::OracleMismatch, "constructed matrix is not skew-symmetric");
    return seed;
}

// Convenience for explicit polygon triangulations: indices follow the
// canonical arc order, labels are the arc texts.
inline Seed b_matrix(const ExplicitTriangulation& t) {
    GluedPolygon gp = to_glued(t);
    std::vector<std::string> labels;
    for (const Arc& a : gp.arc_of_pair) labels.push_back(a.text());
    return b_matrix(gp.glued, labels);
}

// Matrix mutation at index k; the standard exchange-matrix transformation.
// The mutated label gets a prime unless a replacement is supplied.
inline Seed mutate(const Seed& s, int k, std::optional<std::string> fresh_label = std::nullopt) {
    const int n = s.rank();
    if (k < 0 || k >= n)
        fail(ErrorCode::IndexOutOfRange,
             "mutation index " + std::to_string(k) + " out of range for rank " + std::to_string(n));
    Seed out = s;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                out.matrix[i][j] = -s.matrix[i][j];
            else {
                int sign = (s.matrix[i][k] > 0) - (s.matrix[i][k] < 0);
                out.matrix[i][j] =
                    s.matrix[i][j] + sign * std::max(0, s.matrix[i][k] * s.matrix[k][j]);
            }
        }
    out.labels[k] = fresh_label ? *fresh_label : s.labels[k] + "'";
    return out;
}

// ---------------------------------------------------------------------------
// flips match mutations
// ---------------------------------------------------------------------------

struct ExchangeCheck {
    long long edges_checked = 0;
    long long verified = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty() && verified == edges_checked; }
};

// Walk the full flip graph of an unpunctured polygon and verify, edge by
// edge, that the matrix of the flipped triangulation equals the mutation of
// the matrix at the flipped arc, under the label bijection induced by the
// flip.
inline ExchangeCheck exchange_check(const CiliatedSurface& surface) {
    if (surface.puncture_count > 0)
        fail(ErrorCode::Punctured, "exchange check needs an unpunctured surface");
    if (model_of(surface) != SurfaceModel::Polygon)
        fail(ErrorCode::Unsupported,
             "exchange check runs on polygons or on glued data with a radius");
    ExchangeCheck result;
    ArcUniverse u = make_universe(surface);
    auto facets = flip_closure(u, fan(surface));
    for (const auto& facet : facets) {
        std::vector<Arc> arcs;
        for (int idx : facet) arcs.push_back(u.arcs[idx]);
        ExplicitTriangulation t = make_triangulation(surface, arcs);
        Seed seed = b_matrix(t);
        for (std::size_t k = 0; k < t.arcs.size(); ++k) {
            auto rep = flip_replacement(u, t, t.arcs[k]);
            if (!rep) continue;
            ExplicitTriangulation t2 = flip(u, t, t.arcs[k]);
            if (t2.key() < t.key()) continue;  // each flip edge checked once
            ++result.edges_checked;
            Seed mutated = mutate(seed, static_cast<int>(k), rep->text());
            Seed direct = b_matrix(t2);
            // positions of the mutated labels inside t2's canonical order
            bool match = true;
            std::vector<int> sigma(mutated.labels.size());
            for (std::size_t i = 0; i < mutated.labels.size(); ++i) {
                auto it = std::find(direct.labels.begin(), direct.labels.end(), mutated.labels[i]);
                if (it == direct.labels.end()) {
                    match = false;
                    break;
                }
                sigma[i] = static_cast<int>(it - direct.labels.begin());
            }
            if (match)
                for (std::size_t i = 0; i < sigma.size() && match; ++i)
                    for (std::size_t j = 0; j < sigma.size(); ++j)
                        if (mutated.matrix[i][j] != direct.matrix[sigma[i]][sigma[j]]) {
                            match = false;
                            break;
                        }
            if (match)
                ++result.verified;
            else
                result.failures.push_back("flip of " + t.arcs[k].text() + " in " + t.key());
        }
    }
    return result;
}

// Same dictionary on a ball of glued triangulations: the gluing pairs keep
// their identity through a flip, so the label bijection is the identity.
inline ExchangeCheck exchange_check_glued(const GluedTriangulation& t0, int radius) {
    if (t0.surface.puncture_count > 0)
        fail(ErrorCode::Punctured, "exchange check needs an unpunctured surface");
    require_valid(t0);
    ExchangeCheck result;
    std::set<std::string> seen;
    std::queue<std::pair<GluedTriangulation, int>> q;
    seen.insert(canonical_key(t0));
    q.push({t0, 0});
    while (!q.empty()) {
        auto [g, d] = q.front();
        q.pop();
        Seed seed = b_matrix(g);
        for (int k = 0; k < static_cast<int>(g.gluing.size()); ++k) {
            auto [a, b] = g.gluing[k];
            auto s1 = g.find_slot(a);
            auto s2 = g.find_slot(b);
            if (s1->first == s2->first) continue;
            GluedTriangulation g2 = flip_glued(g, a);
            ++result.edges_checked;
            Seed mutated = mutate(seed, k, seed.labels[k]);
            Seed direct = b_matrix(g2);
            if (mutated.matrix == direct.matrix)
                ++result.verified;
            else
                result.failures.push_back("flip of pair " + std::to_string(a) + "~" +
                                          std::to_string(b));
            if (d < radius && seen.insert(canonical_key(g2)).second) q.push({g2, d + 1});
        }
    }
    return result;
}

}  // namespace arcx
