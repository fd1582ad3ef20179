#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arcx/error.hpp"

namespace arcx {

// Topological type of a compact orientable surface with boundary, marked
// points on every boundary component and punctures in the interior.
// Immutable after construction; all counting functions below are pure.
struct CiliatedSurface {
    int genus = 0;
    int boundary_count = 1;
    int puncture_count = 0;
    std::vector<int> marked_points;  // one entry per boundary component, each >= 1

    CiliatedSurface() = default;

    CiliatedSurface(int g, int b, int s, std::vector<int> p)
        : genus(g), boundary_count(b), puncture_count(s), marked_points(std::move(p)) {
        if (genus < 0) fail(ErrorCode::ParseError, "genus must be non-negative");
        if (boundary_count < 1) fail(ErrorCode::ParseError, "at least one boundary component required");
        if (puncture_count < 0) fail(ErrorCode::ParseError, "puncture count must be non-negative");
        if (static_cast<int>(marked_points.size()) != boundary_count)
            fail(ErrorCode::ParseError, "marked-point vector length must equal boundary count");
        for (int pi : marked_points)
            if (pi < 1) fail(ErrorCode::ParseError, "every boundary component needs a marked point");
    }

    int total_marked() const {
        return std::accumulate(marked_points.begin(), marked_points.end(), 0);
    }

    // Representative with marked-point vector sorted descending. Two surfaces
    // are homeomorphic iff their canonical descriptors are equal.
    CiliatedSurface canonical() const {
        CiliatedSurface c = *this;
        std::sort(c.marked_points.begin(), c.marked_points.end(), std::greater<int>());
        return c;
    }

    bool operator==(const CiliatedSurface& o) const {
        return genus == o.genus && boundary_count == o.boundary_count &&
               puncture_count == o.puncture_count && marked_points == o.marked_points;
    }

    // Compact text form "g,b,s;p1,p2,...,pb".
    std::string descriptor() const {
        std::ostringstream os;
        os << genus << ',' << boundary_count << ',' << puncture_count << ';';
        for (std::size_t i = 0; i < marked_points.size(); ++i) {
            if (i) os << ',';
            os << marked_points[i];
        }
        return os.str();
    }

    static CiliatedSurface parse(std::string_view text);

    // Named shapes used throughout the tests and the CLI.
    static CiliatedSurface polygon(int n) { return CiliatedSurface(0, 1, 0, {n}); }
    static CiliatedSurface punctured_polygon(int n) { return CiliatedSurface(0, 1, 1, {n}); }
    static CiliatedSurface annulus_one_one() { return CiliatedSurface(0, 2, 0, {1, 1}); }
};

namespace detail {

inline int parse_int(std::string_view token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        fail(ErrorCode::ParseError, "expected integer, got '" + std::string(token) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

inline CiliatedSurface CiliatedSurface::parse(std::string_view text) {
    auto halves = detail::split(text, ';');
    if (halves.size() != 2)
        fail(ErrorCode::ParseError, "surface descriptor must look like g,b,s;p1,...,pb");
    auto gbs = detail::split(halves[0], ',');
    if (gbs.size() != 3)
        fail(ErrorCode::ParseError, "expected three comma-separated values before ';'");
    std::vector<int> p;
    for (auto tok : detail::split(halves[1], ','))
        p.push_back(detail::parse_int(tok));
    return CiliatedSurface(detail::parse_int(gbs[0]), detail::parse_int(gbs[1]),
                           detail::parse_int(gbs[2]), std::move(p));
}

// Number of arcs in any triangulation: 6g + 3b + 3s + |P| - 6.
// A negative value means the surface admits no triangulation, which is
// reported as an error rather than clamped.
inline int arc_count(const CiliatedSurface& s) {
    int n = 6 * s.genus + 3 * s.boundary_count + 3 * s.puncture_count + s.total_marked() - 6;
    if (n < 0)
        fail(ErrorCode::NegativeCount,
             "surface " + s.descriptor() + " admits no triangulation (arc count " +
                 std::to_string(n) + ")");
    return n;
}

// Dimension of the arc complex: 6g + 3b + 3s + |P| - 7. Negative values are
// meaningful (the complex is empty).
inline int complex_dim(const CiliatedSurface& s) {
    return 6 * s.genus + 3 * s.boundary_count + 3 * s.puncture_count + s.total_marked() - 7;
}

// The arc complex has finitely many vertices iff the surface is a polygon
// with at most one puncture.
inline bool is_finite_type(const CiliatedSurface& s) {
    return s.genus == 0 && s.boundary_count == 1 && s.puncture_count <= 1;
}

inline bool same_homeo_type(const CiliatedSurface& a, const CiliatedSurface& b) {
    return a.canonical() == b.canonical();
}

// Number of triangles cut out by any triangulation, from the side-count
// identity 3T = 2N + |P|.
inline int triangle_count(const CiliatedSurface& s) {
    int n = arc_count(s);
    int sides = 2 * n + s.total_marked();
    if (sides % 3 != 0)
        fail(ErrorCode::NonIntegral, "malformed surface descriptor " + s.descriptor());
    return sides / 3;
}

enum class SurfaceClassTag {
    Empty,          // polygon with p <= 3: no essential arcs at all
    SingleVertex,   // once-punctured monogon
    TwoVertices,    // square
    Pentagon,
    AnnulusOneOne,
    PuncturedDigon,
    General,        // everything of complex dimension >= 2
};

inline std::string_view surface_class_name(SurfaceClassTag tag) {
    switch (tag) {
        case SurfaceClassTag::Empty: return "Empty";
        case SurfaceClassTag::SingleVertex: return "SingleVertex";
        case SurfaceClassTag::TwoVertices: return "TwoVertices";
        case SurfaceClassTag::Pentagon: return "Pentagon";
        case SurfaceClassTag::AnnulusOneOne: return "AnnulusOneOne";
        case SurfaceClassTag::PuncturedDigon: return "PuncturedDigon";
        case SurfaceClassTag::General: return "General";
    }
    return "Unknown";
}

struct SurfaceClass {
    SurfaceClassTag tag;
    CiliatedSurface surface;
};

// Case list for arc complexes of dimension at most 1; every other surface
// has dimension >= 2 and is tagged General.
inline SurfaceClass classify(const CiliatedSurface& s) {
    const bool plain_polygon = s.genus == 0 && s.boundary_count == 1 && s.puncture_count == 0;
    const bool punctured_polygon = s.genus == 0 && s.boundary_count == 1 && s.puncture_count == 1;
    const int p1 = s.marked_points.empty() ? 0 : s.marked_points[0];

    if (plain_polygon && p1 <= 3) return {SurfaceClassTag::Empty, s};
    if (punctured_polygon && p1 == 1) return {SurfaceClassTag::SingleVertex, s};
    if (plain_polygon && p1 == 4) return {SurfaceClassTag::TwoVertices, s};
    if (plain_polygon && p1 == 5) return {SurfaceClassTag::Pentagon, s};
    if (punctured_polygon && p1 == 2) return {SurfaceClassTag::PuncturedDigon, s};
    if (s.genus == 0 && s.boundary_count == 2 && s.puncture_count == 0 && s.total_marked() == 2)
        return {SurfaceClassTag::AnnulusOneOne, s};
    return {SurfaceClassTag::General, s};
}

}  // namespace arcx
