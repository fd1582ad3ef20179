#pragma once

#include "arcx/glued.hpp"

namespace fixtures {

using arcx::CiliatedSurface;
using arcx::GluedTriangulation;

// (1,1)-annulus cut along windings 0 and 1: two triangles sharing both arcs,
// one boundary side each.  Labels: o=0 (outer), i=1 (inner), arc sides 2~3
// and 4~5.
inline GluedTriangulation annulus_fan() {
    GluedTriangulation g;
    g.surface = CiliatedSurface::annulus_one_one();
    g.triangles = {{3, 0, 4}, {1, 5, 2}};
    g.gluing = {{2, 3}, {4, 5}};
    return g;
}

// Annulus with two marked points outside, one inside; cut along one radial
// arc into a pentagon and triangulated with two diagonals.  Boundary: outer
// sides 0 and 1, inner side 2; arcs 3~4, 5~6, 7~8.
inline GluedTriangulation annulus_two_one() {
    GluedTriangulation g;
    g.surface = CiliatedSurface(0, 2, 0, {2, 1});
    g.triangles = {{7, 2, 3}, {4, 5, 1}, {8, 0, 6}};
    g.gluing = {{3, 4}, {5, 6}, {7, 8}};
    return g;
}

// Once-punctured digon triangulated by a loop at vertex 0 and the radius it
// encloses: one self-folded triangle (radius sides 3~4 glued within it) plus
// the outer triangle.  Boundary sides 0 and 1; loop sides 5~6.
inline GluedTriangulation punctured_digon_selffolded() {
    GluedTriangulation g;
    g.surface = CiliatedSurface(0, 1, 1, {2});
    g.triangles = {{3, 4, 5}, {6, 0, 1}};
    g.gluing = {{3, 4}, {5, 6}};
    return g;
}

// One-holed torus with a single marked point on the boundary: a pentagon
// with side word a b a' b' d (d the boundary), triangulated by two
// diagonals.  Labels: a=0, b=1, a'=2, b'=3, d=4, diagonals 5~6 and 7~8.
inline GluedTriangulation torus_one_boundary() {
    GluedTriangulation g;
    g.surface = CiliatedSurface(1, 1, 0, {1});
    g.triangles = {{0, 1, 5}, {6, 2, 7}, {8, 3, 4}};
    g.gluing = {{0, 2}, {1, 3}, {5, 6}, {7, 8}};
    return g;
}

}  // namespace fixtures
