#include <doctest.h>

#include <random>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/examples.hpp"
#include "ptrop/newton.hpp"
#include "ptrop/oracle.hpp"

using namespace ptrop;

namespace {

bool same_polygon(const NewtonPolygon& A, const NewtonPolygon& B) {
  if (A.prime() != B.prime()) return false;
  if (A.vertices() != B.vertices()) return false;
  if (A.edges().size() != B.edges().size()) return false;
  for (size_t i = 0; i < A.edges().size(); ++i) {
    if (A.edges()[i].slope != B.edges()[i].slope) return false;
    if (A.edges()[i].hlen != B.edges()[i].hlen) return false;
  }
  return true;
}

Rational random_rational(std::mt19937_64& rng, long p) {
  std::uniform_int_distribution<long long> num_d(1, 40), ord_d(-3, 3);
  std::uniform_int_distribution<int> sign_d(0, 1);
  long long n = num_d(rng);
  while (n % p == 0) n = num_d(rng);
  Rational r = Rational(n) * Rational(p).pow(ord_d(rng));
  return sign_d(rng) ? r : -r;
}

PlantedPoly random_planted(std::mt19937_64& rng, long p, int max_deg) {
  std::uniform_int_distribution<int> deg_d(1, max_deg), mult_d(1, 2);
  std::vector<std::pair<Rational, long long>> roots;
  int deg = deg_d(rng);
  int used = 0;
  while (used < deg) {
    int m = std::min(mult_d(rng), deg - used);
    roots.emplace_back(random_rational(rng, p), m);
    used += m;
  }
  return poly_from_roots(roots, random_rational(rng, p));
}

}  // namespace

TEST_CASE("sextic polygon: frozen vertices, edges, and valuations") {
  NewtonPolygon P = newton_polygon(planted_sextic().f, 3);
  REQUIRE(P.vertices().size() == 4);
  CHECK(P.vertices()[0] == LiftedPoint{0, Rational(2)});
  CHECK(P.vertices()[1] == LiftedPoint{2, Rational(0)});
  CHECK(P.vertices()[2] == LiftedPoint{5, Rational(0)});
  CHECK(P.vertices()[3] == LiftedPoint{6, Rational(5)});
  REQUIRE(P.edges().size() == 3);
  CHECK(P.edges()[0].slope == Rational(-1));
  CHECK(P.edges()[0].hlen == 2);
  CHECK(P.edges()[1].slope == Rational(0));
  CHECK(P.edges()[1].hlen == 3);
  CHECK(P.edges()[2].slope == Rational(5));
  CHECK(P.edges()[2].hlen == 1);

  ValuationCount vc = root_valuations(P);
  REQUIRE(vc.size() == 3);
  CHECK(vc.at(Rational(-5)) == 1);
  CHECK(vc.at(Rational(0)) == 3);
  CHECK(vc.at(Rational(1)) == 2);
}

TEST_CASE("valuation counts sum to the exponent span") {
  std::mt19937_64 rng(123);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 40; ++trial) {
      SparsePoly f = random_planted(rng, p, 5).f;
      NewtonPolygon P = newton_polygon(f, p);
      long long total = 0;
      for (const auto& [v, n] : root_valuations(P)) total += n;
      CHECK(total == f.max_exp() - f.min_exp());
    }
  }
}

TEST_CASE("planted rational roots have exactly the polygon's valuations") {
  std::mt19937_64 rng(456);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 40; ++trial) {
      PlantedPoly pl = random_planted(rng, p, 5);
      ValuationCount want;
      for (const auto& [r, m] : pl.roots) want[ord(r, p).finite()] += m;
      CHECK(root_valuations(newton_polygon(pl.f, p)) == want);
    }
  }
}

TEST_CASE("from_points merges duplicate exponents keeping the lower lift") {
  NewtonPolygon P = NewtonPolygon::from_points(
      3, {{0, Rational(2)}, {0, Rational(1)}, {1, Rational(0)}});
  REQUIRE(P.lifted().size() == 2);
  CHECK(P.lifted()[0] == LiftedPoint{0, Rational(1)});
}

TEST_CASE("polygon construction rejects bad input") {
  SparsePoly z(1);
  CHECK_THROWS_AS(newton_polygon(z, 3), Error);
  SparsePoly f(1);
  f.add_term(Monomial({0}), Rational(1));
  f.add_term(Monomial({1}), Rational(1));
  try {
    newton_polygon(f, 10);
    FAIL("expected NonPrime");
  } catch (const Error& e) {
    CHECK(e.code() == "NonPrime");
  }
}

TEST_CASE("product polygons are Minkowski sums") {
  std::mt19937_64 rng(789);
  for (long p : {2L, 5L}) {
    for (int trial = 0; trial < 25; ++trial) {
      SparsePoly f = random_planted(rng, p, 4).f;
      SparsePoly g = random_planted(rng, p, 4).f;
      NewtonPolygon lhs = newton_polygon(f * g, p);
      NewtonPolygon rhs = minkowski_sum(newton_polygon(f, p), newton_polygon(g, p));
      CHECK(same_polygon(lhs, rhs));
    }
  }
  try {
    SparsePoly f(1);
    f.add_term(Monomial({0}), Rational(1));
    f.add_term(Monomial({1}), Rational(1));
    minkowski_sum(newton_polygon(f, 2), newton_polygon(f, 3));
    FAIL("expected PrimeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "PrimeMismatch");
  }
}

TEST_CASE("sps product polygon avoids expansion but matches it") {
  std::mt19937_64 rng(1011);
  std::uniform_int_distribution<int> nfac_d(1, 4), gamma_d(1, 3);
  for (long p : {2L, 3L}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<SpsFactor> factors;
      SparsePoly expanded = SparsePoly::constant(1, Rational(1));
      int nfac = nfac_d(rng);
      for (int i = 0; i < nfac; ++i) {
        SpsFactor fac;
        fac.alpha = random_rational(rng, p);
        fac.beta = random_rational(rng, p);
        fac.gamma = gamma_d(rng);
        factors.push_back(fac);
        SparsePoly lin(1);
        lin.add_term(Monomial({0}), fac.alpha);
        lin.add_term(Monomial({1}), fac.beta);
        expanded = expanded * lin.pow(static_cast<unsigned long long>(fac.gamma));
      }
      CHECK(same_polygon(sps_product_polygon(factors, p),
                         newton_polygon(expanded, p)));
    }
  }
  try {
    sps_product_polygon({SpsFactor{Rational(0), Rational(0), 2}}, 3);
    FAIL("expected DegenerateFactor");
  } catch (const Error& e) {
    CHECK(e.code() == "DegenerateFactor");
  }
}

TEST_CASE("sum certificates are exact when hulls share no vertex") {
  std::mt19937_64 rng(1213);
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    long p = 3;
    SparsePoly f = random_planted(rng, p, 4).f;
    SparsePoly g = random_planted(rng, p, 4).f;
    SparsePoly h = f + g;
    if (h.is_zero()) continue;
    SumCertificate cert =
        sum_valuation_count(newton_polygon(f, p), newton_polygon(g, p));
    if (cert.vertex_disjoint) {
      ++certified;
      CHECK(cert.counts == root_valuations(newton_polygon(h, p)));
    }
  }
  CHECK(certified > 10);  // the generic case must actually occur
}

TEST_CASE("sum certificates refuse shared vertices") {
  SparsePoly f(1);
  f.add_term(Monomial({0}), Rational(1));
  f.add_term(Monomial({2}), Rational(9));
  NewtonPolygon P = newton_polygon(f, 3);
  SumCertificate cert = sum_valuation_count(P, P);
  CHECK_FALSE(cert.vertex_disjoint);  // identical hulls share every vertex
}
