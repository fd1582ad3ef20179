#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arcx/complex.hpp"
#include "arcx/error.hpp"
#include "arcx/flipgraph.hpp"
#include "arcx/symmetry.hpp"

namespace arcx {

// ---------------------------------------------------------------------------
// mapping class group action on polygon arc complexes
//
// For the n-gon and the once-punctured n-gon the mapping class group is the
// dihedral relabeling group of the boundary vertices: the rotation i -> i+1
// and the reflection i -> -i, the latter orientation-reversing.  Homeomorphisms
// of a disk fixing the marked points are isotopic to the identity, so these
// 2n relabelings exhaust the mapping classes.
// ---------------------------------------------------------------------------

namespace detail {

struct Relabeling {
    int shift = 0;
    bool reflected = false;  // i -> shift - i when set, else i -> shift + i

    int apply(int v, int n) const {
        int w = reflected ? shift - v : shift + v;
        return ((w % n) + n) % n;
    }
};

// image of an arc under a dihedral boundary relabeling
inline Arc relabel_arc(const Arc& a, const Relabeling& r, int n) {
    auto map_pair = [&](int i, int j) {
        int x = r.apply(i, n), y = r.apply(j, n);
        return std::minmax(x, y);
    };
    switch (a.kind) {
        case Arc::Kind::Chord: {
            auto [x, y] = map_pair(a.i, a.j);
            return Arc::chord(x, y);
        }
        case Arc::Kind::Radius:
            return Arc::radius(r.apply(a.i, n));
        case Arc::Kind::Loop:
            return Arc::loop(r.apply(a.i, n));
        case Arc::Kind::SidedChord: {
            auto [x, y] = map_pair(a.i, a.j);
            // the puncture pocket is carried along as a vertex set; recompute
            // which pocket of the image chord it became
            auto pocket_ccw = [n](int from, int to) {
                std::set<int> out;
                for (int v = (from + 1) % n; v != to; v = (v + 1) % n) out.insert(v);
                return out;
            };
            std::set<int> pocket = (a.side == 0) ? pocket_ccw(a.i, a.j) : pocket_ccw(a.j, a.i);
            std::set<int> image_pocket;
            for (int v : pocket) image_pocket.insert(r.apply(v, n));
            std::set<int> ccw_pocket = pocket_ccw(x, y);
            int side;
            if (image_pocket.empty())
                side = ccw_pocket.empty() ? 0 : 1;
            else
                side = ccw_pocket.count(*image_pocket.begin()) ? 0 : 1;
            return Arc::sided_chord(x, y, side);
        }
        case Arc::Kind::Winding:
            fail(ErrorCode::Unsupported, "no dihedral action on the annulus model");
    }
    return a;
}

}  // namespace detail

struct McgAction {
    PermutationGroup image;        // induced vertex permutations of the arc complex
    int label_group_order = 0;     // 2n formal dihedral relabelings
    int kernel_order = 0;          // relabelings inducing the identity permutation
    std::vector<Perm> generator_perms;  // images of rotation and reflection
};

// Action of the mapping class group on the arc complex of an n-gon or
// once-punctured n-gon, as a group of vertex permutations.  Every element is
// checked to be simplicial (facets map to facets), never assumed.
inline McgAction mcg_action_full(const CiliatedSurface& surface, const SimplicialComplex& complex) {
    const SurfaceModel model = model_of(surface);
    if (model != SurfaceModel::Polygon && model != SurfaceModel::PuncturedPolygon)
        fail(ErrorCode::Unsupported,
             "mapping class action implemented for polygons, not " + surface.descriptor());
    const int n = surface.marked_points[0];
    const auto arcs = enumerate_arcs(surface);
    auto arc_rank = [&arcs](const Arc& a) {
        auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
        if (it == arcs.end() || *it != a)
            fail(ErrorCode::OracleMismatch, "relabeled arc " + a.text() + " left the universe");
        return static_cast<int>(it - arcs.begin());
    };

    McgAction out;
    out.label_group_order = 2 * n;
    std::set<Perm> image_set;
    for (int reflected = 0; reflected < 2; ++reflected)
        for (int shift = 0; shift < n; ++shift) {
            detail::Relabeling r{shift, reflected == 1};
            Perm p(arcs.size());
            for (std::size_t k = 0; k < arcs.size(); ++k)
                p[k] = arc_rank(detail::relabel_arc(arcs[k], r, n));
            if (!is_simplicial(p, complex))
                fail(ErrorCode::OracleMismatch,
                     "mapping class relabeling is not simplicial on " + surface.descriptor());
            if (p == identity_perm(static_cast<int>(arcs.size()))) ++out.kernel_order;
            image_set.insert(std::move(p));
        }
    out.image.elements.assign(image_set.begin(), image_set.end());
    {
        detail::Relabeling rot{1, false}, refl{0, true};
        Perm pr(arcs.size()), pf(arcs.size());
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            pr[k] = arc_rank(detail::relabel_arc(arcs[k], rot, n));
            pf[k] = arc_rank(detail::relabel_arc(arcs[k], refl, n));
        }
        out.generator_perms = {pr, pf};
        out.image.generators = out.generator_perms;
    }
    if (!out.image.is_closed())
        fail(ErrorCode::OracleMismatch, "mapping class image is not closed under composition");
    return out;
}

inline PermutationGroup mcg_action(const CiliatedSurface& surface) {
    auto complex = build_arc_complex(surface);
    return mcg_action_full(surface, complex).image;
}

// ---------------------------------------------------------------------------
// rigidity reports
// ---------------------------------------------------------------------------

struct RigidityReport {
    CiliatedSurface surface;
    int dim = -1;
    long long aut_order = 0;
    int mod_label_order = 0;   // 2n
    long long mod_image_order = 0;
    int kernel_order = 0;
    bool equal = false;           // |Aut(A)| == |Mod image|
    bool kernel_trivial = false;  // only the identity relabeling fixes every arc
    bool mod_subgroup_of_aut = false;
    bool in_theorem_scope = false;  // dim >= 2
};

inline RigidityReport rigidity_report(const CiliatedSurface& surface,
                                      int max_vertices = kDefaultAutBound) {
    auto complex = build_arc_complex(surface);
    if (complex.vertex_count() == 0)
        fail(ErrorCode::EmptyComplex, "no rigidity report for the empty complex");
    auto aut = automorphisms(complex, max_vertices);
    auto mcg = mcg_action_full(surface, complex);
    RigidityReport r;
    r.surface = surface;
    r.dim = complex.dimension();
    r.aut_order = aut.order();
    r.mod_label_order = mcg.label_group_order;
    r.mod_image_order = mcg.image.order();
    r.kernel_order = mcg.kernel_order;
    r.equal = r.aut_order == r.mod_image_order;
    r.kernel_trivial = mcg.kernel_order == 1;
    r.mod_subgroup_of_aut = mcg.image.is_subgroup_of(aut);
    r.in_theorem_scope = r.dim >= 2;
    return r;
}

struct FlipGraphAutReport {
    CiliatedSurface surface;
    long long aut_complex_order = 0;
    long long aut_flip_graph_order = 0;
    bool equal = false;
};

inline FlipGraphAutReport flipgraph_aut_check(const CiliatedSurface& surface,
                                              int max_vertices = kDefaultAutBound) {
    auto complex = build_arc_complex(surface);
    if (complex.dimension() < 1)
        fail(ErrorCode::Unsupported,
             "flip-graph comparison needs complex dimension >= 1 on " + surface.descriptor());
    auto graph = build_flip_graph(surface);
    FlipGraphAutReport r;
    r.surface = surface;
    r.aut_complex_order = automorphisms(complex, max_vertices).order();
    r.aut_flip_graph_order = graph_automorphisms(graph, max_vertices).order();
    r.equal = r.aut_complex_order == r.aut_flip_graph_order;
    return r;
}

// ---------------------------------------------------------------------------
// distinguishing complexes
// ---------------------------------------------------------------------------

struct InvariantVector {
    long long vertices = 0;
    int dimension = -1;
    long long facets = 0;
    long long edges = 0;
    std::vector<int> degree_sequence;
    std::vector<int> facet_adjacency_degrees;  // dual graph degree sequence

    bool operator==(const InvariantVector&) const = default;
};

inline InvariantVector invariant_vector(const SimplicialComplex& c) {
    InvariantVector iv;
    iv.vertices = c.vertex_count();
    iv.dimension = c.dimension();
    iv.facets = static_cast<long long>(c.facets.size());
    iv.edges = static_cast<long long>(c.edges.size());
    iv.degree_sequence = c.degrees();
    std::sort(iv.degree_sequence.begin(), iv.degree_sequence.end());
    std::vector<int> dual_deg(c.facets.size(), 0);
    for (std::size_t i = 0; i < c.facets.size(); ++i)
        for (std::size_t j = i + 1; j < c.facets.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(c.facets[i].begin(), c.facets[i].end(), c.facets[j].begin(),
                                  c.facets[j].end(), std::back_inserter(common));
            if (common.size() + 1 == c.facets[i].size()) {
                ++dual_deg[i];
                ++dual_deg[j];
            }
        }
    iv.facet_adjacency_degrees = dual_deg;
    std::sort(iv.facet_adjacency_degrees.begin(), iv.facet_adjacency_degrees.end());
    return iv;
}

struct DistinguishReport {
    CiliatedSurface a, b;
    bool same_homeo = false;
    bool isomorphic = false;
    std::string certificate;  // which invariant separates, or the search outcome
    InvariantVector invariants_a, invariants_b;
    std::optional<Perm> witness;  // isomorphism when one exists
};

// Certify that the arc complexes of two non-homeomorphic finite-type
// surfaces are non-isomorphic: first by invariant vector, else by exhaustive
// isomorphism search.  An aborted search raises Inconclusive, never a silent
// wrong answer.
inline DistinguishReport distinguish(const CiliatedSurface& a, const CiliatedSurface& b,
                                     int max_vertices = kDefaultAutBound) {
    DistinguishReport r;
    r.a = a;
    r.b = b;
    r.same_homeo = same_homeo_type(a, b);
    auto ca = build_arc_complex(a);
    auto cb = build_arc_complex(b);
    r.invariants_a = invariant_vector(ca);
    r.invariants_b = invariant_vector(cb);
    if (!(r.invariants_a == r.invariants_b)) {
        r.isomorphic = false;
        if (r.invariants_a.vertices != r.invariants_b.vertices)
            r.certificate = "vertex_count";
        else if (r.invariants_a.dimension != r.invariants_b.dimension)
            r.certificate = "dimension";
        else if (r.invariants_a.facets != r.invariants_b.facets)
            r.certificate = "facet_count";
        else if (r.invariants_a.edges != r.invariants_b.edges)
            r.certificate = "edge_count";
        else if (r.invariants_a.degree_sequence != r.invariants_b.degree_sequence)
            r.certificate = "degree_sequence";
        else
            r.certificate = "facet_adjacency_degrees";
        return r;
    }
    auto iso = find_isomorphism(ca, cb, max_vertices);
    if (iso) {
        r.isomorphic = true;
        r.witness = iso;
        r.certificate = "isomorphism_found";
    } else {
        r.isomorphic = false;
        r.certificate = "exhaustive_search";
    }
    return r;
}

}  // namespace arcx
