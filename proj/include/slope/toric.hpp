#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slope/engine.hpp"
#include "slope/profile.hpp"

// Lattice polygons with torus-invariant subschemes: exact slice volumes,
// boundary measures, lattice-point counts, and the boundary-integral weight
// pair that cross-checks the filtration engine.

namespace slope {

struct Vec2 {
  Rational x, y;
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

// Inward halfspace nx*px + ny*py >= offset with (nx, ny) integral primitive.
struct Halfspace {
  long nx = 0, ny = 0;
  Rational offset;
};

// A full-dimensional bounded lattice polygon.  After construction the facets
// are stored in counterclockwise edge order, starting with the edge that
// leaves the lexicographically smallest vertex, and vertices[i], vertices[i+1]
// are the endpoints of the edge supported by facets[i].
struct Polytope {
  std::vector<Halfspace> facets;
  std::vector<Vec2> vertices;
  std::size_t edge_count() const { return facets.size(); }
};

// Canonical strict builder: throws invalid_input on non-primitive normals,
// unbounded or lower-dimensional regions, and redundant/duplicate halfspaces.
Polytope make_polytope(std::vector<Halfspace> hs);

// Affine weight f(p) = ux*px + uy*py - offset, required to be >= 0 on the
// polygon, with an integer multiplicity >= 1.
struct FaceWeight {
  long ux = 0, uy = 0;
  Rational offset;
  long multiplicity = 1;
};

// Invariant subscheme described by its vanishing function g = sum f_i / m_i.
struct ToricSubscheme {
  std::vector<FaceWeight> faces;
};

void validate_subscheme(const Polytope& P, const ToricSubscheme& Z);

Rational subscheme_g(const ToricSubscheme& Z, const Vec2& p);
Rational subscheme_g_min(const Polytope& P, const ToricSubscheme& Z);
Rational subscheme_g_max(const Polytope& P, const ToricSubscheme& Z);

Rational polygon_area(const Polytope& P);

// Lattice length of a segment with rational endpoints.
Rational lattice_length(const Vec2& a, const Vec2& b);

// Lattice-normalized boundary length (sum of edge lattice lengths).
Rational polygon_boundary_measure(const Polytope& P);

// P intersected with {g >= x}; pre: x < max of g over P (else the slice is
// empty or lower-dimensional).  For x <= min g the slice is all of P.
Polytope slice(const Polytope& P, const ToricSubscheme& Z, const Rational& x);

// Hilbert profile of the filtration: a0(x) = area of the slice at x,
// a1(x) = half its lattice boundary length (slicing edge included), on
// [0, g_max], with breakpoints at the g-values of the vertices.  The whole
// range is certified (the boundary configuration at g_max is the nontrivial
// product degeneration induced by g), so eps = Exact(g_max), saturating.
SlopeProfile toric_profile(const Polytope& P, const ToricSubscheme& Z);

// Exact number of lattice points in the k-fold dilation (k >= 1).
Rational lattice_count(const Polytope& P, long k);

// Boundary-integral weight pair of the configuration at parameter c:
//   b0 = -integral_P min(c, g) dmu,
//   b1 = -(1/2) integral_{boundary P} min(c, g) dsigma,
// with dsigma the lattice-normalized edge measure.  Pre: 0 < c <= g_max.
WeightPair donaldson_weights(const Polytope& P, const ToricSubscheme& Z, const Rational& c);

// Translate the boundary-integral pair to the filtration engine's convention
// (they differ by sign and by c*a0(0), c*a1(0), which cancel in the Futaki
// invariant): engine_i = -boundary_i - c * a_i(0).
WeightPair donaldson_to_engine(const WeightPair& w, const SlopeProfile& prof, const Rational& c);

// Largest c with L - c * (sum m_i D_i) nef, for Z supported on facets of P;
// computed from the invariant-curve degrees (virtual edge lengths).
Rational toric_surface_seshadri(const Polytope& P, const ToricSubscheme& Z);

struct ScanHit {
  std::vector<std::size_t> facet_idx;  // sorted, the support of the candidate
  std::vector<long> mults;             // parallel to facet_idx
  Rational c;                          // parameter attaining the best Futaki value
  Rational futaki;                     // F1 at c (most negative found on the grid)
  Rational margin;                     // N(c) = -a0(0)^2 F1(c)
  ToricSubscheme Z;
};

// Deterministic search for destabilizing invariant subschemes: all facet
// subsets of size <= budget with multiplicities in 1..budget whose vanishing
// function attains 0 on P, swept over a fixed parameter grid and ranked by
// most negative Futaki value (ties broken lexicographically).
std::vector<ScanHit> destabilizer_scan(const Polytope& P, int budget);

}  // namespace slope
