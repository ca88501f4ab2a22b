#include "ptrop/newton.hpp"

#include <algorithm>
#include <set>

namespace ptrop {

namespace {

// Sign of the cross product (b - a) x (c - a); exponents are exact integers,
// lifts exact rationals, so this is an exact orientation test.
int orient(const LiftedPoint& a, const LiftedPoint& b, const LiftedPoint& c) {
  Rational cross = Rational(b.first - a.first) * (c.second - a.second) -
                   (b.second - a.second) * Rational(c.first - a.first);
  return cross.sign();
}

}  // namespace

NewtonPolygon NewtonPolygon::from_points(long p, std::vector<LiftedPoint> pts) {
  if (!is_prime(p)) fail("NonPrime", "polygon requires a prime, got " + std::to_string(p));
  if (pts.empty()) fail("BadInput", "polygon of an empty point set");

  std::sort(pts.begin(), pts.end(), [](const LiftedPoint& a, const LiftedPoint& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // Equal exponents: only the smallest lift can lie on the lower hull.
  std::vector<LiftedPoint> uniq;
  for (const auto& pt : pts)
    if (uniq.empty() || uniq.back().first != pt.first) uniq.push_back(pt);

  NewtonPolygon P;
  P.prime_ = p;
  P.lifted_ = uniq;

  // Monotone chain, keeping strict left turns only, so every kept point is a
  // genuine vertex (collinear interior points are dropped).
  std::vector<LiftedPoint>& hull = P.vertices_;
  for (const auto& pt : uniq) {
    while (hull.size() >= 2 && orient(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }

  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    long long dx = hull[i + 1].first - hull[i].first;
    Rational dy = hull[i + 1].second - hull[i].second;
    P.edges_.push_back(PolygonEdge{dy / Rational(dx), dx});
  }
  return P;
}

NewtonPolygon newton_polygon(const SparsePoly& f, long p) {
  if (!f.is_univariate()) fail("BadInput", "newton_polygon requires a univariate polynomial");
  if (f.is_zero()) fail("ZeroPolynomial", "newton_polygon of the zero polynomial");
  std::vector<LiftedPoint> pts;
  pts.reserve(f.term_count());
  for (const auto& [m, c] : f.terms())
    pts.emplace_back(m.e[0], ord(c, p).finite());
  return NewtonPolygon::from_points(p, std::move(pts));
}

ValuationCount root_valuations(const NewtonPolygon& P) {
  ValuationCount vc;
  for (const auto& e : P.edges()) vc[-e.slope] = e.hlen;
  return vc;
}

NewtonPolygon minkowski_sum(const NewtonPolygon& A, const NewtonPolygon& B) {
  if (A.prime() != B.prime())
    fail("PrimeMismatch", "minkowski_sum of polygons over different primes");

  // The sum's leftmost vertex is the sum of the leftmost vertices; its edge
  // multiset is the slope-sorted merge of the two edge multisets.
  LiftedPoint start{A.vertices().front().first + B.vertices().front().first,
                    A.vertices().front().second + B.vertices().front().second};
  std::vector<PolygonEdge> edges;
  edges.insert(edges.end(), A.edges().begin(), A.edges().end());
  edges.insert(edges.end(), B.edges().begin(), B.edges().end());
  std::sort(edges.begin(), edges.end(),
            [](const PolygonEdge& a, const PolygonEdge& b) { return a.slope < b.slope; });

  std::vector<LiftedPoint> pts{start};
  LiftedPoint cur = start;
  for (const auto& e : edges) {
    cur.first += e.hlen;
    cur.second = cur.second + e.slope * Rational(e.hlen);
    pts.push_back(cur);
  }
  // from_points re-merges equal-slope runs into single edges.
  return NewtonPolygon::from_points(A.prime(), std::move(pts));
}

NewtonPolygon sps_product_polygon(const std::vector<SpsFactor>& factors, long p) {
  if (!is_prime(p)) fail("NonPrime", "sps_product_polygon requires a prime");
  NewtonPolygon acc = NewtonPolygon::from_points(p, {{0, Rational(0)}});  // polygon of 1
  for (const auto& f : factors) {
    if (f.gamma < 0) fail("BadInput", "negative factor multiplicity");
    if (f.gamma > 1'000'000'000) fail("TooLarge", "factor multiplicity too large");
    if (f.alpha.is_zero() && f.beta.is_zero())
      fail("DegenerateFactor", "factor with alpha = beta = 0 is identically zero");
    if (f.gamma == 0) continue;
    Rational g(f.gamma);
    std::vector<LiftedPoint> pts;
    if (!f.alpha.is_zero()) pts.emplace_back(0, ord(f.alpha, p).finite() * g);
    if (!f.beta.is_zero()) pts.emplace_back(f.gamma, ord(f.beta, p).finite() * g);
    acc = minkowski_sum(acc, NewtonPolygon::from_points(p, std::move(pts)));
  }
  return acc;
}

SumCertificate sum_valuation_count(const NewtonPolygon& A, const NewtonPolygon& B,
                                   std::optional<long long> m1,
                                   std::optional<long long> m2) {
  if (A.prime() != B.prime())
    fail("PrimeMismatch", "sum_valuation_count of polygons over different primes");

  std::set<LiftedPoint> va(A.vertices().begin(), A.vertices().end());
  bool disjoint = true;
  for (const auto& v : B.vertices())
    if (va.count(v)) { disjoint = false; break; }

  std::vector<LiftedPoint> all(A.vertices());
  all.insert(all.end(), B.vertices().begin(), B.vertices().end());

  SumCertificate cert;
  cert.polygon = NewtonPolygon::from_points(A.prime(), std::move(all));
  cert.counts = root_valuations(cert.polygon);
  cert.vertex_disjoint = disjoint;
  if (disjoint && m1 && m2 &&
      static_cast<long long>(cert.counts.size()) > *m1 + *m2)
    throw std::logic_error("certified valuation count exceeded the edge-count bound");
  return cert;
}

}  // namespace ptrop
