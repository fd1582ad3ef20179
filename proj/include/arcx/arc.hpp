#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "arcx/error.hpp"
#include "arcx/surface.hpp"

namespace arcx {

// Which explicit arc model a surface supports.
enum class SurfaceModel { Polygon, PuncturedPolygon, AnnulusOneOne, None };

inline SurfaceModel model_of(const CiliatedSurface& s) {
    if (s.genus == 0 && s.boundary_count == 1 && s.puncture_count == 0)
        return SurfaceModel::Polygon;
    if (s.genus == 0 && s.boundary_count == 1 && s.puncture_count == 1)
        return SurfaceModel::PuncturedPolygon;
    if (s.genus == 0 && s.boundary_count == 2 && s.puncture_count == 0 &&
        s.marked_points == std::vector<int>{1, 1})
        return SurfaceModel::AnnulusOneOne;
    return SurfaceModel::None;
}

// An isotopy class of essential arc in one of the explicit finite-type models.
//
//   Chord(i,j)         plain n-gon, 0 <= i < j < n, not boundary-parallel
//   SidedChord(i,j,s)  once-punctured n-gon; s tells which complementary
//                      region of the chord contains the puncture (0 = the
//                      pocket swept ccw from i to j, 1 = the other pocket)
//   Radius(i)          once-punctured n-gon, boundary vertex i to the puncture
//   Loop(i)            once-punctured n-gon, embedded loop at i around the puncture
//   Winding(w)         (1,1)-annulus, arc between the two marked points with
//                      winding number w
struct Arc {
    enum class Kind : std::uint8_t { Chord = 0, SidedChord = 1, Radius = 2, Loop = 3, Winding = 4 };

    Kind kind = Kind::Chord;
    int i = 0;
    int j = 0;
    int side = 0;

    static Arc chord(int i, int j) { return {Kind::Chord, i, j, 0}; }
    static Arc sided_chord(int i, int j, int side) { return {Kind::SidedChord, i, j, side}; }
    static Arc radius(int i) { return {Kind::Radius, i, 0, 0}; }
    static Arc loop(int i) { return {Kind::Loop, i, 0, 0}; }
    static Arc winding(int w) { return {Kind::Winding, w, 0, 0}; }

    auto operator<=>(const Arc&) const = default;

    std::string text() const {
        switch (kind) {
            case Kind::Chord: return "C(" + std::to_string(i) + "," + std::to_string(j) + ")";
            case Kind::SidedChord:
                return "SC(" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(side) + ")";
            case Kind::Radius: return "R(" + std::to_string(i) + ")";
            case Kind::Loop: return "L(" + std::to_string(i) + ")";
            case Kind::Winding: return "W(" + std::to_string(i) + ")";
        }
        return "?";
    }
};

// Throws InvalidArc / MixedSurface unless `a` is a valid essential arc on `s`.
inline void validate_arc(const Arc& a, const CiliatedSurface& s) {
    const SurfaceModel model = model_of(s);
    const int n = s.marked_points.empty() ? 0 : s.marked_points[0];
    auto bad = [&](const std::string& why) { fail(ErrorCode::InvalidArc, a.text() + ": " + why); };
    switch (a.kind) {
        case Arc::Kind::Chord: {
            if (model != SurfaceModel::Polygon)
                fail(ErrorCode::MixedSurface, a.text() + " is a plain-polygon arc, surface is " + s.descriptor());
            if (a.i < 0 || a.j >= n || a.i >= a.j) bad("chord endpoints out of order or range");
            if (a.j - a.i < 2 || (a.i == 0 && a.j == n - 1)) bad("boundary-parallel chord");
            return;
        }
        case Arc::Kind::SidedChord: {
            if (model != SurfaceModel::PuncturedPolygon)
                fail(ErrorCode::MixedSurface, a.text() + " is a punctured-polygon arc, surface is " + s.descriptor());
            if (a.i < 0 || a.j >= n || a.i >= a.j) bad("chord endpoints out of order or range");
            if (a.side != 0 && a.side != 1) bad("side must be 0 or 1");
            // The puncture-free pocket must contain a vertex, otherwise the
            // arc is boundary-parallel.  Pocket ccw(i->j) has j-i-1 vertices,
            // pocket ccw(j->i) has n-(j-i)-1.
            const int free_size = (a.side == 0) ? n - (a.j - a.i) - 1 : a.j - a.i - 1;
            if (free_size < 1) bad("boundary-parallel sided chord");
            return;
        }
        case Arc::Kind::Radius: {
            if (model != SurfaceModel::PuncturedPolygon)
                fail(ErrorCode::MixedSurface, a.text() + " needs a punctured polygon, surface is " + s.descriptor());
            if (a.i < 0 || a.i >= n) bad("basepoint out of range");
            return;
        }
        case Arc::Kind::Loop: {
            if (model != SurfaceModel::PuncturedPolygon)
                fail(ErrorCode::MixedSurface, a.text() + " needs a punctured polygon, surface is " + s.descriptor());
            if (a.i < 0 || a.i >= n) bad("basepoint out of range");
            if (n < 2) bad("loop on a punctured monogon is boundary-parallel");
            return;
        }
        case Arc::Kind::Winding: {
            if (model != SurfaceModel::AnnulusOneOne)
                fail(ErrorCode::MixedSurface, a.text() + " needs the (1,1)-annulus, surface is " + s.descriptor());
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Double cover of the once-punctured n-gon, branched at the puncture.
//
// The cover is a disk with 2n boundary labels; the deck transformation is the
// half turn k -> k+n (mod 2n), and the branch point sits at the center.  Arcs
// lift as follows:
//   Radius(i)         one diameter (i, i+n) through the center
//   Loop(i)           the two center-avoiding chords with endpoints (i, i+n)
//   SidedChord(i,j,0) chords (i, j+n) and (i+n, j)
//   SidedChord(i,j,1) chords (i, j) and (i+n, j+n)
// Minimal position downstairs equals half-turn-symmetric minimal position
// upstairs, so intersection numbers reduce to chord interleaving plus the
// rule that crossings at the shared center are free.
// ---------------------------------------------------------------------------

struct CoverChord {
    int a = 0, b = 0;      // endpoints on the 2n-cycle
    bool diameter = false; // passes through the center (branch point)
};

using CoverChordSet = std::vector<CoverChord>;

inline CoverChordSet cover_lift(const Arc& arc, int n) {
    const int m = 2 * n;
    auto mod = [m](int x) { return ((x % m) + m) % m; };
    switch (arc.kind) {
        case Arc::Kind::Radius:
            return {{arc.i, mod(arc.i + n), true}};
        case Arc::Kind::Loop:
            return {{arc.i, mod(arc.i + n), false}, {arc.i, mod(arc.i + n), false}};
        case Arc::Kind::SidedChord:
            if (arc.side == 0)
                return {{arc.i, mod(arc.j + n), false}, {mod(arc.i + n), arc.j, false}};
            return {{arc.i, arc.j, false}, {mod(arc.i + n), mod(arc.j + n), false}};
        default:
            fail(ErrorCode::InvalidArc, arc.text() + " has no lift to the branched double cover");
    }
}

namespace detail {

// Do the chords {a,b} and {c,d} interleave on a cycle of size m?  All four
// endpoints are assumed distinct.
inline bool interleaved(int a, int b, int c, int d, int m) {
    auto between = [m](int lo, int hi, int x) {
        // x strictly inside the ccw interval (lo, hi)
        int span = ((hi - lo) % m + m) % m;
        int off = ((x - lo) % m + m) % m;
        return off > 0 && off < span;
    };
    return between(a, b, c) != between(a, b, d);
}

inline int cover_crossings(const CoverChord& x, const CoverChord& y, int m) {
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return 0;
    if (x.diameter && y.diameter) return 0;  // they meet only at the center
    return interleaved(x.a, x.b, y.a, y.b, m) ? 1 : 0;
}

}  // namespace detail

// Total symmetric crossing count of the two lifts; always even by deck
// symmetry.  Exposed for the evenness property tests.
inline int cover_crossing_total(const Arc& a, const Arc& b, int n) {
    const CoverChordSet la = cover_lift(a, n);
    const CoverChordSet lb = cover_lift(b, n);
    int total = 0;
    for (const auto& x : la)
        for (const auto& y : lb) total += detail::cover_crossings(x, y, 2 * n);
    return total;
}

// Minimal interior intersection number of two arcs.
inline int iota(const Arc& a, const Arc& b, const CiliatedSurface& s) {
    validate_arc(a, s);
    validate_arc(b, s);
    if (a == b) return 0;
    switch (model_of(s)) {
        case SurfaceModel::Polygon:
            if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return 0;
            return detail::interleaved(a.i, a.j, b.i, b.j, s.marked_points[0]) ? 1 : 0;
        case SurfaceModel::PuncturedPolygon: {
            const int total = cover_crossing_total(a, b, s.marked_points[0]);
            if (total % 2 != 0)
                fail(ErrorCode::InvalidArc, "cover crossing total must be even");
            return total / 2;
        }
        case SurfaceModel::AnnulusOneOne: {
            const int d = std::abs(a.i - b.i);
            return d == 0 ? 0 : d - 1;
        }
        case SurfaceModel::None:
            fail(ErrorCode::MixedSurface, "no arc model for surface " + s.descriptor());
    }
    return 0;
}

inline bool compatible(const Arc& a, const Arc& b, const CiliatedSurface& s) {
    return iota(a, b, s) == 0;
}

// Every isotopy class exactly once, in canonical order (variant rank, then
// indices).  The annulus needs an explicit winding bound; everything else of
// finite type enumerates completely.
inline std::vector<Arc> enumerate_arcs(const CiliatedSurface& s,
                                       std::optional<int> winding_bound = std::nullopt) {
    std::vector<Arc> out;
    switch (model_of(s)) {
        case SurfaceModel::Polygon: {
            const int n = s.marked_points[0];
            for (int i = 0; i < n; ++i)
                for (int j = i + 2; j < n; ++j)
                    if (!(i == 0 && j == n - 1)) out.push_back(Arc::chord(i, j));
            return out;
        }
        case SurfaceModel::PuncturedPolygon: {
            const int n = s.marked_points[0];
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int side = 0; side < 2; ++side) {
                        Arc a = Arc::sided_chord(i, j, side);
                        const int free_size = (side == 0) ? n - (j - i) - 1 : j - i - 1;
                        if (free_size >= 1) out.push_back(a);
                    }
            for (int i = 0; i < n; ++i) out.push_back(Arc::radius(i));
            if (n >= 2)
                for (int i = 0; i < n; ++i) out.push_back(Arc::loop(i));
            return out;
        }
        case SurfaceModel::AnnulusOneOne: {
            if (!winding_bound)
                fail(ErrorCode::InfiniteType,
                     "the (1,1)-annulus has infinitely many arcs; supply a winding bound");
            if (*winding_bound < 0)
                fail(ErrorCode::ParseError, "winding bound must be non-negative");
            for (int w = -*winding_bound; w <= *winding_bound; ++w)
                out.push_back(Arc::winding(w));
            return out;
        }
        case SurfaceModel::None:
            fail(ErrorCode::InfiniteType,
                 "surface " + s.descriptor() + " has no finite arc enumeration");
    }
    return out;
}

}  // namespace arcx
