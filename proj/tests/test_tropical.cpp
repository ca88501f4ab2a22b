#include <doctest.h>

#include <random>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/examples.hpp"
#include "ptrop/tropical.hpp"

using namespace ptrop;

namespace {

Monomial m2(long long a, long long b) { return Monomial({a, b}); }

SparsePoly linear_line(long long e1, long long e2, long long e3, long p) {
  // x * p^e1 + y * p^e2 + p^e3 (as exact rationals, negative e allowed).
  SparsePoly f(2);
  f.add_term(m2(1, 0), Rational(p).pow(e1));
  f.add_term(m2(0, 1), Rational(p).pow(e2));
  f.add_term(m2(0, 0), Rational(p).pow(e3));
  return f;
}

}  // namespace

TEST_CASE("membership is the min-attained-twice test") {
  long p = 3;
  SparsePoly f(2);  // x*y - 1: ties exactly on v1 + v2 = 0
  f.add_term(m2(1, 1), Rational(1));
  f.add_term(m2(0, 0), Rational(-1));
  CHECK(trop_membership(f, p, {Rational(2), Rational(-2)}));
  CHECK(trop_membership(f, p, {Rational(0), Rational(0)}));
  CHECK_FALSE(trop_membership(f, p, {Rational(1), Rational(1)}));
  SparsePoly mono = SparsePoly::single_term(m2(2, 3), Rational(5));
  CHECK_FALSE(trop_membership(mono, p, {Rational(0), Rational(0)}));
  SparsePoly z(2);
  CHECK_THROWS_AS(trop_membership(z, p, {Rational(0), Rational(0)}), Error);
}

TEST_CASE("a tropical line has one vertex and three rays") {
  TropCurve C = plane_trop_curve(linear_line(0, 0, 0, 3), 3);
  REQUIRE(C.vertices.size() == 1);
  CHECK(C.vertices[0] == QPoint{Rational(0), Rational(0)});
  REQUIRE(C.cells.size() == 3);
  for (const auto& c : C.cells) {
    CHECK(c.is_ray());
    CHECK(c.mult == 1);
    CHECK(c.ties.size() == 2);
  }
  CHECK(is_balanced(C));
}

TEST_CASE("curve_contains agrees with membership along cells") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long long> e_d(-2, 2), exp_d(0, 3), c_d(1, 20);
  std::uniform_int_distribution<int> nt(2, 5), sign(0, 1);
  long p = 3;
  for (int trial = 0; trial < 30; ++trial) {
    SparsePoly f(2);
    int terms = nt(rng);
    for (int i = 0; i < terms; ++i) {
      Rational c = Rational(c_d(rng)) * Rational(p).pow(e_d(rng));
      f.add_term(m2(exp_d(rng), exp_d(rng)), sign(rng) ? c : -c);
    }
    if (f.term_count() < 2) continue;
    TropCurve C = plane_trop_curve(f, p);
    CHECK(is_balanced(C));
    for (const auto& cell : C.cells) {
      // Base, and a point a third of the way along (or one step out a ray).
      QPoint probe = cell.is_ray()
                         ? QPoint{cell.base.x + Rational(to_big(cell.dir.dx)),
                                  cell.base.y + Rational(to_big(cell.dir.dy))}
                         : QPoint{cell.base.x + *cell.len / Rational(3) *
                                                    Rational(to_big(cell.dir.dx)),
                                  cell.base.y + *cell.len / Rational(3) *
                                                    Rational(to_big(cell.dir.dy))};
      for (const QPoint& q : {cell.base, probe}) {
        CHECK(curve_contains(C, q));
        CHECK(trop_membership(f, p, {q.x, q.y}));
      }
    }
  }
}

TEST_CASE("two lines in general position cross once, transversally") {
  long p = 3;
  TropCurve A = plane_trop_curve(linear_line(0, 0, 0, p), p);   // vertex (0,0)
  TropCurve B = plane_trop_curve(linear_line(0, 4, 5, p), p);   // vertex (5,1)
  IntersectionReport r = intersect_plane_curves(A, B);
  REQUIRE(r.points.size() == 1);
  // A's horizontal ray meets B's (-1,-1) ray at (4, 0).
  CHECK(r.points[0].at == QPoint{Rational(4), Rational(0)});
  CHECK(r.points[0].transversal);
  CHECK(r.overlaps.empty());
  CHECK(r.tropically_generic);
  CHECK(r.superset);
}

TEST_CASE("identical curves overlap fully and certify nothing") {
  for (long p : {2L, 3L, 5L}) {
    PolySystem F = overlap_pair(p);
    TropCurve A = plane_trop_curve(F[0], p);
    TropCurve B = plane_trop_curve(F[1], p);
    CHECK(curves_identical(A, B));
    IntersectionReport r = intersect_plane_curves(A, B);
    CHECK(r.overlaps.size() == A.cells.size());  // full overlap, cell by cell
    CHECK_FALSE(r.tropically_generic);
    CHECK_FALSE(r.superset);
    for (const auto& pt : r.points) CHECK_FALSE(pt.transversal);
  }
}

TEST_CASE("quadrinomial curves: 3 vertices, 6 cells, balanced, identical") {
  for (long p : {3L, 5L, 7L}) {
    PolySystem F = quadrinomial_pair(p);
    TropCurve A = plane_trop_curve(F[0], p);
    TropCurve B = plane_trop_curve(F[1], p);
    CHECK(A.vertices.size() == 3);
    CHECK(A.cells.size() == 6);
    CHECK(is_balanced(A));
    CHECK(curves_identical(A, B));
  }
}

TEST_CASE("cell parameterization and endpoints are exact") {
  TropCell cell;
  cell.base = QPoint{Rational(1), Rational(2)};
  cell.dir = IntDir{3, -1};
  cell.len = Rational(to_big(2), to_big(3));
  QPoint e = cell.end();
  CHECK(e == QPoint{Rational(3), Rational(to_big(4), to_big(3))});
  CHECK(cell.contains(cell.base));
  CHECK(cell.contains(e));
  QPoint mid{Rational(2), Rational(to_big(5), to_big(3))};
  CHECK(cell.contains(mid));
  CHECK(cell.param_of(mid) == Rational(to_big(1), to_big(3)));
  CHECK_FALSE(cell.contains(QPoint{Rational(4), Rational(1)}));  // past the end
}

TEST_CASE("primitive direction reduction") {
  IntDir d = primitive(4, -6);
  CHECK(d == IntDir{2, -3});
  IntDir n = primitive(0, -5);
  CHECK(n == IntDir{0, -1});
}

TEST_CASE("vertical decomposition census of the cubic example") {
  for (long p : {2L, 3L, 5L}) {
    VertCensus c = vert_decomposition(vert_example_cubic(p), p, 1, 1);
    CHECK(c.t == 4);
    CHECK(c.t_prime == 3);
    std::vector<QPoint> want_b = {QPoint{Rational(0), Rational(0)},
                                  QPoint{Rational(1), Rational(2)},
                                  QPoint{Rational(2), Rational(3)}};
    CHECK(c.b_bases == want_b);
    REQUIRE(c.strips.size() == 2);
    CHECK(c.strips[0].first == want_b[0]);
    CHECK(c.strips[0].second == want_b[1]);
    CHECK(c.strips[1].first == want_b[1]);
    CHECK(c.strips[1].second == want_b[2]);
    CHECK(c.a_base == want_b[0]);
    CHECK(c.a_dir == IntDir{-1, -3});
    CHECK(c.d_base == want_b[2]);
    CHECK(c.d_dir == IntDir{1, 0});
  }
}

TEST_CASE("monomials have no tropical curve") {
  SparsePoly mono = SparsePoly::single_term(m2(2, 1), Rational(3));
  try {
    plane_trop_curve(mono, 3);
    FAIL("expected MonomialInput");
  } catch (const Error& e) {
    CHECK(e.code() == "MonomialInput");
  }
}
