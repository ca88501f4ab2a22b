#pragma once

// p-adic Newton polygons of univariate Laurent polynomials.
//
// The polygon of f = sum c_e x^e at a prime p is the lower convex hull of the
// lifted points (e, ord_p(c_e)).  Its lower edges encode the valuations of
// the nonzero roots of f exactly: an edge of slope s and horizontal length h
// accounts for exactly h roots of valuation -s (with multiplicity, over the
// algebraically closed p-adic field).  Everything here is exact rational
// arithmetic; no rounding enters hull construction.

#include <optional>
#include <utility>
#include <vector>

#include "ptrop/poly.hpp"

namespace ptrop {

// Roots-per-valuation table; keys are the finitely many valuations of the
// nonzero roots.
using ValuationCount = std::map<Rational, long long>;

struct PolygonEdge {
  Rational slope;
  long long hlen;  // horizontal (exponent-axis) length, >= 1
};

using LiftedPoint = std::pair<long long, Rational>;

class NewtonPolygon {
 public:
  // Builds the lower hull of a nonempty set of lifted points.  Points sharing
  // an exponent are merged keeping the smaller lift.
  static NewtonPolygon from_points(long p, std::vector<LiftedPoint> pts);

  long prime() const { return prime_; }
  const std::vector<LiftedPoint>& lifted() const { return lifted_; }
  // Strict vertices of the lower hull, exponent-ascending.  Edge slopes are
  // strictly increasing, so edges are in bijection with root valuations.
  const std::vector<LiftedPoint>& vertices() const { return vertices_; }
  const std::vector<PolygonEdge>& edges() const { return edges_; }

 private:
  long prime_ = 0;
  std::vector<LiftedPoint> lifted_;
  std::vector<LiftedPoint> vertices_;
  std::vector<PolygonEdge> edges_;
};

// Polygon of a nonzero univariate Laurent polynomial (ZeroPolynomial, NonPrime).
NewtonPolygon newton_polygon(const SparsePoly& f, long p);

// Valuation -> number of roots of that valuation (empty for a monomial).
// The counts always sum to max_exp - min_exp of the defining polynomial.
ValuationCount root_valuations(const NewtonPolygon& P);

// Polygon of a product: vertex-wise Minkowski sum / slope-sorted edge merge.
// Throws PrimeMismatch when the polygons disagree on p.
NewtonPolygon minkowski_sum(const NewtonPolygon& A, const NewtonPolygon& B);

// One factor (alpha + beta * x)^gamma of a sparse product of affine powers.
struct SpsFactor {
  Rational alpha;
  Rational beta;
  long long gamma = 1;
};

// Polygon of prod_i (alpha_i + beta_i x)^gamma_i computed WITHOUT expansion,
// as the Minkowski sum of the factor polygons.  DegenerateFactor if some
// factor is identically zero (alpha = beta = 0).
NewtonPolygon sps_product_polygon(const std::vector<SpsFactor>& factors, long p);

// Certified valuation counting for a SUM f1 + f2 given only the two polygons.
// When the hulls share no vertex, no leading term can cancel, the sum's
// polygon is exactly the lower hull of the union of the vertex sets, and
// `counts` is the true valuation table of f1 + f2.  When a vertex is shared,
// cancellation can genuinely change the answer, so vertex_disjoint = false
// and the returned table is only the generic-case bound, not a certificate.
// Optional m1, m2 are caller-supplied edge-count proxies; when both are given
// and the result is certified, the table size is checked against m1 + m2.
struct SumCertificate {
  NewtonPolygon polygon;
  ValuationCount counts;
  bool vertex_disjoint = false;
};

SumCertificate sum_valuation_count(const NewtonPolygon& A, const NewtonPolygon& B,
                                   std::optional<long long> m1 = {},
                                   std::optional<long long> m2 = {});

}  // namespace ptrop
