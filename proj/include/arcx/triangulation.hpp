#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "arcx/arc.hpp"
#include "arcx/error.hpp"
#include "arcx/surface.hpp"

namespace arcx {

// The full arc universe of a finite-type surface (or a bounded window of the
// annulus), with the pairwise compatibility relation precomputed.  All
// triangulation search and complex construction happens against one of these.
struct ArcUniverse {
    CiliatedSurface surface;
    std::optional<int> winding_bound;
    std::vector<Arc> arcs;                  // canonical order
    std::vector<std::vector<char>> compat;  // compat[i][j] == 1 iff iota == 0

    int index_of(const Arc& a) const {
        auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        if (it == arcs.end() || *it != a)
            fail(ErrorCode::InvalidArc, a.text() + " is not in the arc universe");
        return static_cast<int>(it - arcs.begin());
    }

    bool contains(const Arc& a) const {
        auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        return it != arcs.end() && *it == a;
    }
};

inline ArcUniverse make_universe(const CiliatedSurface& surface,
                                 std::optional<int> winding_bound = std::nullopt) {
    ArcUniverse u;
    u.surface = surface;
    u.winding_bound = winding_bound;
    u.arcs = enumerate_arcs(surface, winding_bound);
    const int m = static_cast<int>(u.arcs.size());
    u.compat.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const char c = iota(u.arcs[i], u.arcs[j], surface) == 0 ? 1 : 0;
            u.compat[i][j] = c;
            u.compat[j][i] = c;
        }
    return u;
}

// A triangulation as an explicit arc set: pairwise disjoint, of maximal size.
struct ExplicitTriangulation {
    CiliatedSurface surface;
    std::vector<Arc> arcs;  // canonically sorted

    std::string key() const {
        std::string k;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (i) k += '+';
            k += arcs[i].text();
        }
        return k;
    }

    bool operator==(const ExplicitTriangulation& o) const {
        return surface == o.surface && arcs == o.arcs;
    }
};

inline ExplicitTriangulation make_triangulation(const CiliatedSurface& surface,
                                                std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    for (const Arc& a : arcs) validate_arc(a, surface);
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
        fail(ErrorCode::NotATriangulation, "duplicate arc in triangulation");
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (iota(arcs[i], arcs[j], surface) != 0)
                fail(ErrorCode::NotATriangulation,
                     arcs[i].text() + " and " + arcs[j].text() + " intersect");
    const int expected = arc_count(surface);
    if (static_cast<int>(arcs.size()) != expected)
        fail(ErrorCode::NotATriangulation,
             "expected " + std::to_string(expected) + " arcs, got " +
                 std::to_string(arcs.size()));
    return ExplicitTriangulation{surface, std::move(arcs)};
}

// Base triangulation used as the starting point of every search:
//   n-gon                all chords from vertex 0
//   punctured n-gon      all n radii
//   (1,1)-annulus        windings 0 and 1
inline ExplicitTriangulation fan(const CiliatedSurface& surface) {
    std::vector<Arc> arcs;
    switch (model_of(surface)) {
        case SurfaceModel::Polygon: {
            const int n = surface.marked_points[0];
            for (int j = 2; j <= n - 2; ++j) arcs.push_back(Arc::chord(0, j));
            break;
        }
        case SurfaceModel::PuncturedPolygon: {
            const int n = surface.marked_points[0];
            for (int i = 0; i < n; ++i) arcs.push_back(Arc::radius(i));
            break;
        }
        case SurfaceModel::AnnulusOneOne:
            arcs = {Arc::winding(0), Arc::winding(1)};
            break;
        case SurfaceModel::None:
            fail(ErrorCode::InfiniteType,
                 "no explicit base triangulation for " + surface.descriptor());
    }
    return make_triangulation(surface, std::move(arcs));
}

namespace detail {

// All arcs b != a in the universe such that (t \ {a}) ∪ {b} is again a
// triangulation.  The proposition that a codimension-1 face lies in at most
// two maximal simplices says this list has length 0 or 1; finding more is a
// hard failure.
inline std::vector<Arc> flip_candidates(const ArcUniverse& u, const ExplicitTriangulation& t,
                                        const Arc& a) {
    auto pos = std::find(t.arcs.begin(), t.arcs.end(), a);
    if (pos == t.arcs.end())
        fail(ErrorCode::ArcNotInTriangulation, a.text() + " not in " + t.key());
    std::vector<int> rest;
    for (const Arc& x : t.arcs)
        if (!(x == a)) rest.push_back(u.index_of(x));
    std::vector<Arc> found;
    const int m = static_cast<int>(u.arcs.size());
    const int ai = u.index_of(a);
    for (int b = 0; b < m; ++b) {
        if (b == ai) continue;
        if (std::find(rest.begin(), rest.end(), b) != rest.end()) continue;
        bool ok = true;
        for (int r : rest)
            if (!u.compat[b][r]) {
                ok = false;
                break;
            }
        if (ok) found.push_back(u.arcs[b]);
    }
    if (found.size() > 1)
        fail(ErrorCode::OracleMismatch,
             "codimension-1 face of " + t.key() + " lies in more than two maximal simplices");
    return found;
}

}  // namespace detail

inline std::optional<Arc> flip_replacement(const ArcUniverse& u, const ExplicitTriangulation& t,
                                           const Arc& a) {
    auto found = detail::flip_candidates(u, t, a);
    if (found.empty()) return std::nullopt;
    return found.front();
}

inline bool flippable(const ArcUniverse& u, const ExplicitTriangulation& t, const Arc& a) {
    return flip_replacement(u, t, a).has_value();
}

// Replace `a` by the unique other arc completing t \ {a} to a triangulation.
// The old and new arc always intersect exactly once; that is asserted here,
// not assumed.
inline ExplicitTriangulation flip(const ArcUniverse& u, const ExplicitTriangulation& t,
                                  const Arc& a) {
    auto b = flip_replacement(u, t, a);
    if (!b)
        fail(ErrorCode::NotFlippable, a.text() + " is not flippable in " + t.key());
    if (iota(a, *b, u.surface) != 1)
        fail(ErrorCode::OracleMismatch,
             "flip replaced " + a.text() + " by " + b->text() + " with intersection number != 1");
    std::vector<Arc> arcs;
    for (const Arc& x : t.arcs)
        if (!(x == a)) arcs.push_back(x);
    arcs.push_back(*b);
    return make_triangulation(t.surface, std::move(arcs));
}

}  // namespace arcx
