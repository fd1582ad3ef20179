#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arcx/error.hpp"
#include "arcx/flipgraph.hpp"
#include "arcx/surface.hpp"
#include "arcx/triangulation.hpp"

namespace arcx {

// Combinatorial gluing data for an ideal triangulation of an arbitrary
// ciliated surface.  Triangles carry counterclockwise-ordered side labels;
// the gluing pairs the two sides of every interior arc, boundary sides stay
// unpaired.  Glued sides are always identified with opposite traversal, so
// every instance describes an oriented surface; there is no orientation bit
// in the file format.
struct GluedTriangulation {
    CiliatedSurface surface;                    // declared type
    std::vector<std::array<int, 3>> triangles;  // ccw side labels
    std::vector<std::pair<int, int>> gluing;    // a < b within a pair; list sorted

    bool operator==(const GluedTriangulation& o) const {
        return surface == o.surface && triangles == o.triangles && gluing == o.gluing;
    }

    std::map<int, int> partner_map() const {
        std::map<int, int> m;
        for (auto [a, b] : gluing) {
            m[a] = b;
            m[b] = a;
        }
        return m;
    }

    std::vector<int> boundary_sides() const {
        auto partners = partner_map();
        std::vector<int> out;
        for (const auto& tri : triangles)
            for (int s : tri)
                if (!partners.count(s)) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

    // slot of a side label: (triangle, position)
    std::optional<std::pair<int, int>> find_slot(int label) const {
        for (std::size_t t = 0; t < triangles.size(); ++t)
            for (int p = 0; p < 3; ++p)
                if (triangles[t][p] == label) return std::make_pair(static_cast<int>(t), p);
        return std::nullopt;
    }
};

// ---------------------------------------------------------------------------
// file format
//
//   surface 0,1,0;6
//   T 0: 0 1 6
//   T 1: 7 2 8
//   ...
//   G: 6~7
//
// Writer output round-trips bit-exactly through the parser.
// ---------------------------------------------------------------------------

inline std::string serialize(const GluedTriangulation& g) {
    std::ostringstream os;
    os << "surface " << g.surface.descriptor() << "\n";
    for (std::size_t t = 0; t < g.triangles.size(); ++t)
        os << "T " << t << ": " << g.triangles[t][0] << ' ' << g.triangles[t][1] << ' '
           << g.triangles[t][2] << "\n";
    std::vector<std::pair<int, int>> pairs = g.gluing;
    std::sort(pairs.begin(), pairs.end());
    for (auto [a, b] : pairs) os << "G: " << a << '~' << b << "\n";
    return os.str();
}

inline GluedTriangulation parse_glued(const std::string& text) {
    GluedTriangulation g;
    std::istringstream is(text);
    std::string line;
    bool have_surface = false;
    int expected_index = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "surface") {
            std::string desc;
            ls >> desc;
            g.surface = CiliatedSurface::parse(desc);
            have_surface = true;
        } else if (head == "T") {
            std::string idx;
            ls >> idx;
            if (idx != std::to_string(expected_index) + ":")
                fail(ErrorCode::ParseError, "triangle lines must be numbered consecutively");
            ++expected_index;
            std::array<int, 3> tri{};
            if (!(ls >> tri[0] >> tri[1] >> tri[2]))
                fail(ErrorCode::ParseError, "triangle line needs three side labels");
            g.triangles.push_back(tri);
        } else if (head == "G:") {
            std::string pair;
            ls >> pair;
            auto tilde = pair.find('~');
            if (tilde == std::string::npos)
                fail(ErrorCode::ParseError, "gluing line must look like 'G: a~b'");
            int a = detail::parse_int(pair.substr(0, tilde));
            int b = detail::parse_int(pair.substr(tilde + 1));
            if (a == b) fail(ErrorCode::ParseError, "a side cannot be glued to itself");
            g.gluing.emplace_back(std::min(a, b), std::max(a, b));
        } else {
            fail(ErrorCode::ParseError, "unrecognized line: " + line);
        }
    }
    if (!have_surface) fail(ErrorCode::ParseError, "missing surface header");
    std::sort(g.gluing.begin(), g.gluing.end());
    return g;
}

// ---------------------------------------------------------------------------
// validation: recompute the topology from the gluing and compare with the
// declared surface
// ---------------------------------------------------------------------------

struct GluedViolation {
    std::string code;
    std::string message;
};

struct GluedValidation {
    std::vector<GluedViolation> violations;
    std::optional<CiliatedSurface> recomputed;  // canonical marked-point order
    bool ok() const { return violations.empty(); }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

inline GluedValidation validate(const GluedTriangulation& g) {
    GluedValidation result;
    auto violate = [&result](std::string code, std::string message) {
        result.violations.push_back({std::move(code), std::move(message)});
    };

    // structural checks
    std::map<int, int> occurrences;
    for (const auto& tri : g.triangles)
        for (int s : tri) ++occurrences[s];
    for (auto [label, count] : occurrences)
        if (count != 1)
            violate("DuplicateSideLabel",
                    "side label " + std::to_string(label) + " appears " + std::to_string(count) +
                        " times");
    std::map<int, int> pair_uses;
    for (auto [a, b] : g.gluing) {
        ++pair_uses[a];
        ++pair_uses[b];
        if (!occurrences.count(a) || !occurrences.count(b))
            violate("UnknownGluedSide", "gluing " + std::to_string(a) + "~" + std::to_string(b) +
                                            " references a missing side");
        if (a == b) violate("SelfGluedSide", "side " + std::to_string(a) + " glued to itself");
    }
    for (auto [label, count] : pair_uses)
        if (count != 1)
            violate("GluingNotInvolution",
                    "side " + std::to_string(label) + " appears in " + std::to_string(count) +
                        " gluing pairs");
    if (!result.violations.empty()) return result;  // topology needs sound structure

    const int T = static_cast<int>(g.triangles.size());
    const int A = static_cast<int>(g.gluing.size());
    const int boundary = 3 * T - 2 * A;

    // counts against the declared surface
    const CiliatedSurface& s = g.surface;
    try {
        if (T != triangle_count(s))
            violate("TriangleCountMismatch", "declared surface needs " +
                                                 std::to_string(triangle_count(s)) +
                                                 " triangles, file has " + std::to_string(T));
        if (A != arc_count(s))
            violate("ArcCountMismatch", "declared surface needs " + std::to_string(arc_count(s)) +
                                            " interior arcs, file has " + std::to_string(A));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NegativeCount)
            violate("DegenerateSurface", e.what());
        else
            violate("NonIntegralTriangles", e.what());
    }
    if (boundary != s.total_marked())
        violate("BoundarySegmentMismatch",
                "declared surface has " + std::to_string(s.total_marked()) +
                    " boundary segments, file has " + std::to_string(boundary));

    // corner identifications: side p of a triangle runs corner p -> p+1 (ccw);
    // glued sides are traversed oppositely
    detail::UnionFind uf(3 * T);
    std::map<int, std::pair<int, int>> slots;
    for (int t = 0; t < T; ++t)
        for (int p = 0; p < 3; ++p) slots[g.triangles[t][p]] = {t, p};
    for (auto [a, b] : g.gluing) {
        auto [t1, p1] = slots[a];
        auto [t2, p2] = slots[b];
        uf.unite(3 * t1 + p1, 3 * t2 + (p2 + 1) % 3);
        uf.unite(3 * t1 + (p1 + 1) % 3, 3 * t2 + p2);
    }

    // boundary cycles: each boundary side runs between two vertex classes;
    // following start(next) == end(current) traces the boundary components
    std::map<int, int> out_of, into;  // vertex class -> boundary side label
    bool trace_ok = true;
    auto partners = g.partner_map();
    for (int t = 0; t < T && trace_ok; ++t)
        for (int p = 0; p < 3; ++p) {
            int label = g.triangles[t][p];
            if (partners.count(label)) continue;
            int start = uf.find(3 * t + p);
            int end = uf.find(3 * t + (p + 1) % 3);
            if (out_of.count(start) || into.count(end)) {
                trace_ok = false;
                break;
            }
            out_of[start] = label;
            into[end] = label;
        }
    if (!trace_ok) {
        violate("BoundaryTraceBroken", "a marked point has more than two boundary segments");
        return result;
    }

    std::vector<int> cycle_lengths;
    {
        std::map<int, int> start_of;  // boundary label -> start vertex class
        for (auto& [cls, label] : out_of) start_of[label] = cls;
        std::set<int> unseen;
        for (auto& [label, cls] : start_of) unseen.insert(label);
        while (!unseen.empty()) {
            int first = *unseen.begin();
            int current = first;
            int len = 0;
            do {
                unseen.erase(current);
                ++len;
                // endpoint of current = start of the next side
                auto slot = slots[current];
                int end_class = uf.find(3 * slot.first + (slot.second + 1) % 3);
                auto it = out_of.find(end_class);
                if (it == out_of.end()) {
                    violate("BoundaryTraceBroken", "boundary walk left the boundary");
                    return result;
                }
                current = it->second;
            } while (current != first);
            cycle_lengths.push_back(len);
        }
    }

    std::set<int> vertex_classes, boundary_classes;
    for (int c = 0; c < 3 * T; ++c) vertex_classes.insert(uf.find(c));
    for (auto& [cls, label] : out_of) boundary_classes.insert(cls);
    const int V = static_cast<int>(vertex_classes.size());
    const int E = A + boundary;
    const int chi = V - E + T;
    const int b_computed = static_cast<int>(cycle_lengths.size());
    const int s_computed = V - static_cast<int>(boundary_classes.size());
    const int genus_twice = 2 - b_computed - chi;
    if (genus_twice < 0 || genus_twice % 2 != 0) {
        violate("GenusMismatch", "Euler characteristic " + std::to_string(chi) +
                                     " is inconsistent with " + std::to_string(b_computed) +
                                     " boundary components");
        return result;
    }
    std::sort(cycle_lengths.begin(), cycle_lengths.end(), std::greater<int>());
    CiliatedSurface recomputed(genus_twice / 2, b_computed, s_computed, cycle_lengths);
    result.recomputed = recomputed;

    if (recomputed.genus != s.genus)
        violate("GenusMismatch", "declared genus " + std::to_string(s.genus) +
                                     ", recomputed " + std::to_string(recomputed.genus));
    if (recomputed.boundary_count != s.boundary_count)
        violate("BoundaryComponentMismatch",
                "declared " + std::to_string(s.boundary_count) + " boundary components, recomputed " +
                    std::to_string(recomputed.boundary_count));
    if (recomputed.puncture_count != s.puncture_count)
        violate("PunctureMismatch", "declared " + std::to_string(s.puncture_count) +
                                        " punctures, recomputed " +
                                        std::to_string(recomputed.puncture_count));
    else if (recomputed.boundary_count == s.boundary_count) {
        auto declared_sorted = s.canonical().marked_points;
        if (declared_sorted != recomputed.marked_points)
            violate("MarkedPointMismatch", "declared marked-point multiset differs from the gluing");
    }
    return result;
}

inline void require_valid(const GluedTriangulation& g) {
    auto v = validate(g);
    if (!v.ok())
        fail(ErrorCode::NotATriangulation,
             "invalid glued triangulation: " + v.violations.front().code + " (" +
                 v.violations.front().message + ")");
}

// ---------------------------------------------------------------------------
// flips
// ---------------------------------------------------------------------------

// Flip the interior arc with side label `label`.  The two adjacent triangles
// (a,b,x) and (c,d,y), rotated so the flipped sides sit last, are replaced by
// (b,c,x) and (d,a,y); the quadrilateral they span is re-diagonalized and all
// other sides keep their labels.
inline GluedTriangulation flip_glued(const GluedTriangulation& g, int label) {
    auto slot = g.find_slot(label);
    if (!slot) fail(ErrorCode::UnknownSide, "no side labelled " + std::to_string(label));
    auto partners = g.partner_map();
    auto it = partners.find(label);
    if (it == partners.end())
        fail(ErrorCode::BoundarySide, "side " + std::to_string(label) + " is a boundary side");
    const int mate = it->second;
    auto mate_slot = g.find_slot(mate);
    auto [t1, p1] = *slot;
    auto [t2, p2] = *mate_slot;
    if (t1 == t2)
        fail(ErrorCode::SelfFolded, "side " + std::to_string(label) +
                                        " is the interior edge of a self-folded triangle");
    auto rotated = [](const std::array<int, 3>& tri, int last_pos) {
        // cyclic rotation putting position last_pos at index 2
        std::array<int, 3> out{};
        for (int k = 0; k < 3; ++k) out[k] = tri[(last_pos + 1 + k) % 3];
        return out;
    };
    std::array<int, 3> P = rotated(g.triangles[t1], p1);  // (a, b, label)
    std::array<int, 3> Q = rotated(g.triangles[t2], p2);  // (c, d, mate)
    GluedTriangulation out = g;
    out.triangles[t1] = {P[1], Q[0], label};  // (b, c, label)
    out.triangles[t2] = {Q[1], P[0], mate};   // (d, a, mate)
    return out;
}

// ---------------------------------------------------------------------------
// canonical form
//
// Key invariance: triangles and interior labels are anonymous, boundary
// labels are pinned.  A rooted traversal relabels interior arcs in discovery
// order; the canonical key is the minimum encoding over all 3T rooted
// starts.  Orientation is preserved (rotations only, no reflections).
// ---------------------------------------------------------------------------

inline std::string canonical_key(const GluedTriangulation& g) {
    const int T = static_cast<int>(g.triangles.size());
    if (T == 0) return "()";
    auto partners = g.partner_map();
    std::map<int, std::pair<int, int>> slots;
    for (int t = 0; t < T; ++t)
        for (int p = 0; p < 3; ++p) slots[g.triangles[t][p]] = {t, p};

    std::string best;
    for (int root = 0; root < T; ++root)
        for (int rot = 0; rot < 3; ++rot) {
            std::vector<int> order{root};        // discovery order of triangles
            std::vector<int> rotation(T, -1);    // first-listed side position
            std::vector<char> seen(T, 0);
            seen[root] = 1;
            rotation[root] = rot;
            std::map<int, int> pair_number;
            std::ostringstream os;
            for (std::size_t qi = 0; qi < order.size(); ++qi) {
                const int t = order[qi];
                for (int k = 0; k < 3; ++k) {
                    const int label = g.triangles[t][(rotation[t] + k) % 3];
                    auto pit = partners.find(label);
                    if (pit == partners.end()) {
                        os << "b" << label << ' ';
                        continue;
                    }
                    auto [num_it, inserted] =
                        pair_number.emplace(std::min(label, pit->second),
                                            static_cast<int>(pair_number.size()));
                    os << "i" << num_it->second << ' ';
                    auto [t2, p2] = slots[pit->second];
                    if (!seen[t2]) {
                        seen[t2] = 1;
                        rotation[t2] = p2;
                        order.push_back(t2);
                    }
                }
                os << "| ";
            }
            if (static_cast<int>(order.size()) != T) {
                // disconnected gluings get a distinct marker so keys never
                // collide with connected ones
                os << "#disconnected ";
            }
            std::string enc = os.str();
            if (best.empty() || enc < best) best = std::move(enc);
        }
    return best;
}

// Ball of combinatorial flip classes around t0: breadth-first closure under
// glued flips up to the radius, vertices keyed by canonical form.  The
// subgraph induced on the ball is returned; flips that leave the ball are
// simply not recorded, and flips connecting a class to itself are dropped.
inline FlipGraph ball_glued(const GluedTriangulation& t0, int radius) {
    if (radius < 0) fail(ErrorCode::ParseError, "ball radius must be non-negative");
    require_valid(t0);

    std::map<std::string, int> ids;
    std::vector<GluedTriangulation> reps;
    std::vector<int> dist;
    std::set<std::pair<int, int>> edge_set;
    std::vector<std::pair<std::pair<int, int>, std::string>> edge_records;
    std::vector<char> frontier;

    auto id_of = [&](const GluedTriangulation& g, bool allow_new) -> int {
        std::string key = canonical_key(g);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        if (!allow_new) return -1;
        int id = static_cast<int>(reps.size());
        ids.emplace(std::move(key), id);
        reps.push_back(g);
        dist.push_back(-1);
        frontier.push_back(0);
        return id;
    };

    const int start = id_of(t0, true);
    dist[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        const int vid = q.front();
        q.pop();
        const bool at_frontier = dist[vid] >= radius;
        frontier[vid] = at_frontier ? 1 : 0;
        const GluedTriangulation current = reps[vid];
        for (auto [a, b] : current.gluing) {
            auto s1 = current.find_slot(a);
            auto s2 = current.find_slot(b);
            if (s1->first == s2->first) continue;  // self-folded interior: not flippable
            GluedTriangulation next = flip_glued(current, a);
            const int wid = id_of(next, !at_frontier);
            if (wid < 0) continue;
            if (dist[wid] < 0) {
                dist[wid] = dist[vid] + 1;
                q.push(wid);
            }
            if (wid == vid) continue;  // flip lands in the same combinatorial class
            auto e = std::minmax(vid, wid);
            if (edge_set.insert({e.first, e.second}).second)
                edge_records.push_back(
                    {{e.first, e.second},
                     "flip " + std::to_string(a) + "~" + std::to_string(b)});
        }
    }

    // order vertices by canonical key for stable output
    std::vector<std::pair<std::string, int>> keyed;
    for (const auto& [key, id] : ids) keyed.emplace_back(key, id);
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> rank(reps.size());
    for (std::size_t i = 0; i < keyed.size(); ++i) rank[keyed[i].second] = static_cast<int>(i);

    FlipGraph out;
    out.vertex_keys.resize(reps.size());
    out.distance.assign(reps.size(), -1);
    out.frontier.assign(reps.size(), 0);
    for (const auto& [key, id] : ids) {
        out.vertex_keys[rank[id]] = key;
        out.distance[rank[id]] = dist[id];
        out.frontier[rank[id]] = frontier[id];
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
    return out;
}

// ---------------------------------------------------------------------------
// explicit -> glued conversion for plain polygons
// ---------------------------------------------------------------------------

// Result of converting an explicit polygon triangulation: the glued structure
// plus the arc behind every gluing pair (gluing[k] realizes arc_of_pair[k]).
struct GluedPolygon {
    GluedTriangulation glued;
    std::vector<Arc> arc_of_pair;
};

// Triangles of a polygon triangulation are exactly the vertex triples whose
// three connecting segments are all edges (boundary segments or chords of the
// triangulation); no such triple can contain another vertex.
inline GluedPolygon to_glued(const ExplicitTriangulation& t) {
    if (model_of(t.surface) != SurfaceModel::Polygon)
        fail(ErrorCode::Unsupported, "glued conversion is implemented for plain polygons");
    const int n = t.surface.marked_points[0];
    const auto& arcs = t.arcs;

    auto arc_index = [&arcs](int a, int b) -> int {  // -1 when (a,b) is no chord of t
        Arc probe = Arc::chord(std::min(a, b), std::max(a, b));
        auto it = std::lower_bound(arcs.begin(), arcs.end(), probe);
        return (it != arcs.end() && *it == probe) ? static_cast<int>(it - arcs.begin()) : -1;
    };
    auto connected = [&](int a, int b) {
        if ((b - a + n) % n == 1 || (a - b + n) % n == 1) return true;  // boundary segment
        return arc_index(a, b) >= 0;
    };

    std::vector<std::array<int, 3>> faces;  // vertex triples, ccw
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (connected(a, b) && connected(b, c) && connected(a, c))
                    faces.push_back({a, b, c});

    // side labels: boundary segment i -> i+1 gets label i; arc k gets labels
    // n+2k and n+2k+1 in face order
    GluedPolygon out;
    out.glued.surface = t.surface;
    out.arc_of_pair = arcs;
    std::vector<int> uses(arcs.size(), 0);
    for (const auto& f : faces) {
        std::array<int, 3> sides{};
        for (int e = 0; e < 3; ++e) {
            const int a = f[e], b = f[(e + 1) % 3];
            if ((b - a + n) % n == 1)
                sides[e] = a;  // boundary side a -> a+1
            else if ((a - b + n) % n == 1)
                sides[e] = b;  // boundary side b -> b+1 (wrap pair (0, n-1))
            else {
                const int k = arc_index(a, b);
                sides[e] = n + 2 * k + uses[k];
                ++uses[k];
            }
        }
        out.glued.triangles.push_back(sides);
    }
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (uses[k] != 2)
            fail(ErrorCode::NotATriangulation,
                 "arc " + arcs[k].text() + " does not bound exactly two triangles");
        out.glued.gluing.emplace_back(n + 2 * static_cast<int>(k),
                                      n + 2 * static_cast<int>(k) + 1);
    }
    return out;
}

}  // namespace arcx
