#pragma once

#include <cstdint>

#include "hambit/vertex.hpp"

namespace hambit {

// Local geometry of the Hamming graph H(n,q): metric, spheres and balls,
// direction lines and cylinders, coordinate insertion/deletion, pair
// projection, and matrix-free application of the adjacency operator.
//
// Everything here is a pure function of immutable inputs.  Results are
// independent of evaluation order, and all counting is exact integer
// arithmetic.

// Number of coordinates where x and y differ.
int distance(const Vertex& x, const Vertex& y);

// Early-exit variant: true iff distance(x,y) >= d.
bool distance_at_least(const Vertex& x, const Vertex& y, int d);

// S_r(x) = {y : d(x,y) = r}.  Empty for r > n (not an error).
VertexSet sphere(const Params& p, const Vertex& x, int r);

// B_r(x) = union of spheres 0..r.  For r > n this is the whole vertex set.
VertexSet ball(const Params& p, const Vertex& x, int r);

// The direction-i line through x: {x + e^a_i : a in Z_q}, a q-clique.
VertexSet line_clique(const Params& p, const Vertex& x, int i);

// The fiber over x in H(n-1,q) under deletion of coordinate i:
// {x^a_i : a in Z_q}, a q-clique in H(n,q).
VertexSet fiber_clique(const Params& p, const Vertex& x, int i);

// Cylinder C_{x,i}: union of radius-1 balls around the direction-i line
// through x.  Invariant under changing digit i of x.
VertexSet cylinder(const Params& p, const Vertex& x, int i);

// x^a_i: the word (x_1,...,x_{i-1}, a, x_i,...,x_n) in H(n+1,q).
// Valid insertion positions are 1..n+1.
Vertex insert_coord(const Params& p, const Vertex& x, int i, int a);

// Removes digit i, shifting later digits down; exact inverse of insert_coord.
// Requires n >= 2.
Vertex delete_coord(const Params& p, const Vertex& x, int i);

// Coordinate-deletion image of a whole set.
VertexSet delete_coord(const Params& p, const VertexSet& s, int i);

// The i-projection of a pair: with A+ and A- the coordinate-deletion images
// of the two components, returns (A+ \ A-, A- \ A+) in H(n-1,q).
SignedPair project_pair(const Params& p, const SignedPair& pair, int i);

// (Af)(x) = sum of f over the neighbors of x, computed matrix-free by digit
// enumeration.  Throws std::overflow_error if any entry would overflow.
IntFunction adjacency_apply(const Space& s, const IntFunction& f);

namespace detail {

// Shared validation helpers.
void require_coord(const Params& p, int i);
void require_vertex(const Params& p, const Vertex& x, const char* what);

}  // namespace detail

}  // namespace hambit
