#pragma once

// Exact min-plus tropical geometry over the rationals.
//
// For f = sum_a c_a x^a and a prime p, the tropicalization is
//   T_f(v) = min_a ( a.v + ord_p(c_a) ),
// and the tropical hypersurface is the locus where the min is attained at
// least twice.  Every valuation vector of a torus root of f lies on that
// locus, which is what makes the curve intersections here sound supersets
// for root-valuation counting.
//
// Plane curves (n = 2) are represented by their 1-dimensional cells: closed
// segments and rays with primitive integer directions and multiplicities
// (lattice length of the dual edge in the induced subdivision of the
// support).  A 2-term polynomial's curve is a full affine line; it is stored
// as two opposite rays from a deterministic base point, and all point
// classification treats such a 2-valent collinear "vertex" as interior.

#include <optional>
#include <vector>

#include "ptrop/newton.hpp"
#include "ptrop/poly.hpp"

namespace ptrop {

struct QPoint {
  Rational x, y;
  bool operator==(const QPoint& o) const { return x == o.x && y == o.y; }
  bool operator!=(const QPoint& o) const { return !(*this == o); }
  bool operator<(const QPoint& o) const {
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
};

struct IntDir {
  long long dx = 0, dy = 0;
  bool operator==(const IntDir& o) const { return dx == o.dx && dy == o.dy; }
};

IntDir primitive(long long dx, long long dy);  // divides by gcd, keeps sign

// A closed 1-cell: base + s * dir for s in [0, len] (segment) or [0, inf) (ray).
struct TropCell {
  QPoint base;
  IntDir dir;                   // primitive
  std::optional<Rational> len;  // nullopt for rays; else > 0
  long long mult = 1;           // lattice length of the dual subdivision edge
  std::vector<size_t> ties;     // support indices attaining the min on the cell

  bool is_ray() const { return !len.has_value(); }
  QPoint end() const;  // bounded cells only
  bool contains(const QPoint& q) const;
  // Parameter of q on the cell's line (q assumed collinear).
  Rational param_of(const QPoint& q) const;
};

struct TropCurve {
  long prime = 0;
  std::vector<Monomial> support;   // lex-sorted support of f
  std::vector<Rational> weights;   // ord_p of the matching coefficients
  std::vector<QPoint> vertices;    // all finite cell endpoints, lex-sorted
  std::vector<TropCell> cells;
};

// Does the min in T_f(v) tie (>= 2 minimizing terms)?  Works in any number of
// variables.  ZeroPolynomial on the zero polynomial; a monomial never ties.
bool trop_membership(const SparsePoly& f, long p, const std::vector<Rational>& v);

// The tropical plane curve of a 2-variable polynomial with >= 2 terms
// (MonomialInput otherwise).
TropCurve plane_trop_curve(const SparsePoly& f, long p);

bool curve_contains(const TropCurve& C, const QPoint& q);

// Balancing: at every vertex the mult-weighted outgoing primitive directions
// sum to zero.  True for every curve this module builds; exposed for tests.
bool is_balanced(const TropCurve& C);

struct IntersectionPoint {
  QPoint at;
  bool transversal = false;
};

struct OverlapCell {
  QPoint base;
  IntDir dir;
  std::optional<Rational> len;  // nullopt: common ray; else bounded overlap
};

// points:   isolated intersection points, lex-sorted, tagged transversal when
//           every curve is locally a single line there and the local lines do
//           not all coincide.
// overlaps: positive-length common cells (collinear overlap pieces).
// tropically_generic: no overlaps and every point transversal.
// superset: the points list provably contains every rational valuation vector
//           common to the curves, i.e. there are no overlaps hiding more.
struct IntersectionReport {
  std::vector<IntersectionPoint> points;
  std::vector<OverlapCell> overlaps;
  bool tropically_generic = false;
  bool superset = false;
};

IntersectionReport intersect_plane_curves(const TropCurve& A, const TropCurve& B);

// Common refinement of >= 2 curves.
IntersectionReport intersect_many(const std::vector<TropCurve>& curves);

// Vertical-decomposition census for the curve of f = y_i - g(x) inside the
// (x, y_1..y_N) torus, recorded in the (x, y_i) coordinate plane (every cell
// is a product with R^{N-1} in the remaining graph coordinates):
//   (a) one open ray, direction -(1, max_exp g), from the leftmost breakpoint;
//   (b) t' open vertical rays, direction (0, 1), one per breakpoint;
//   (c) t' - 1 half-open strips [left breakpoint, right breakpoint) along the
//       graph of the piecewise-linear minimum;
//   (d) one closed ray, direction (1, min_exp g), from the rightmost
//       breakpoint.
// Breakpoints are the points (v, m(v)) where v is a root valuation of g and
// m(v) the minimum; the four families are pairwise disjoint and their union
// is exactly the curve.  t' = number of distinct root valuations.
struct VertCensus {
  int var_index = 1;   // which y_i (1-based)
  int total_y = 1;     // N
  long long t = 0;     // terms of g
  long long t_prime = 0;
  QPoint a_base;
  IntDir a_dir;
  std::vector<QPoint> b_bases;
  std::vector<std::pair<QPoint, QPoint>> strips;  // [left, right)
  QPoint d_base;
  IntDir d_dir;
};

VertCensus vert_decomposition(const SparsePoly& g, long p, int var_index, int total_y);

}  // namespace ptrop
