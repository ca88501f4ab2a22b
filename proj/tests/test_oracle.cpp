#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/newton.hpp"
#include "ptrop/oracle.hpp"

using namespace ptrop;

namespace {

SparsePoly uni(std::vector<std::pair<long long, Rational>> terms) {
  SparsePoly f(1);
  for (auto& [e, c] : terms) f.add_term(Monomial({e}), c);
  return f;
}

}  // namespace

TEST_CASE("planted polynomials round-trip through rational_roots") {
  std::mt19937 rng(20260819u);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5), mult(1, 3),
      count(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rational> used;
    std::vector<std::pair<Rational, long long>> roots;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Rational r(num(rng), den(rng));
      if (!used.insert(r).second) continue;
      roots.push_back({r, mult(rng)});
    }
    if (roots.empty()) continue;
    int s = num(rng);
    Rational scale(s == 0 ? 7 : s, den(rng));
    PlantedPoly P = poly_from_roots(roots, scale);
    std::sort(roots.begin(), roots.end());
    CHECK(P.roots == roots);
    CHECK(rational_roots(P.f) == roots);
  }
}

TEST_CASE("rational_roots handles zero roots and rootless inputs") {
  // x^3 (x - 2): root 0 with multiplicity 3, root 2 simple.
  SparsePoly f = uni({{4, Rational(1)}, {3, Rational(-2)}});
  std::vector<std::pair<Rational, long long>> expect = {{Rational(0), 3},
                                                        {Rational(2), 1}};
  CHECK(rational_roots(f) == expect);

  CHECK(rational_roots(uni({{2, Rational(1)}, {0, Rational(1)}})).empty());

  // Laurent input: roots in the torus only, x^{-2}(x-1) has just x = 1.
  SparsePoly lau = uni({{-1, Rational(1)}, {-2, Rational(-1)}});
  std::vector<std::pair<Rational, long long>> one = {{Rational(1), 1}};
  CHECK(rational_roots(lau) == one);
}

TEST_CASE("squarefree_part strips multiplicities, keeps the root set") {
  PlantedPoly P = poly_from_roots(
      {{Rational(1), 3}, {Rational(6), 2}, {Rational(1, 243), 1}},
      Rational(243));
  SparsePoly s = squarefree_part(P.f);
  std::vector<std::pair<Rational, long long>> expect = {
      {Rational(1, 243), 1}, {Rational(1), 1}, {Rational(6), 1}};
  CHECK(rational_roots(s) == expect);

  // Already squarefree inputs keep their degree.
  SparsePoly g = uni({{2, Rational(1)}, {0, Rational(-2)}});
  CHECK(squarefree_part(g).terms() == g.terms());
}

TEST_CASE("zp_root_count certifies simple quadratics") {
  SparsePoly f = uni({{2, Rational(1)}, {0, Rational(1)}});  // x^2 + 1
  ZpRootReport at5 = zp_root_count(f, 5, 3);
  CHECK(at5.certified == 2);
  CHECK(at5.inconclusive == 0);
  CHECK_FALSE(at5.precision_too_low);

  ZpRootReport at3 = zp_root_count(f, 3, 3);
  CHECK(at3.approximate == 0);
  CHECK(at3.certified == 0);
}

TEST_CASE("zp_root_count on the h_n family") {
  // h_2 at p = 3 has 4 = 2^2 roots in Z_3, certified already at k = 2,
  // and still exactly 4 at higher precision.
  SparsePoly h2 = shub_smale_family(2, 3);
  CHECK(zp_root_count(h2, 3, 2).certified == 4);
  CHECK(zp_root_count(h2, 3, 4).certified == 4);

  // At k = 1 every residue looks like a root of h_2 = (3 - h_1) h_1 mod 3,
  // but only some certify: approximate over-counts, certified never does.
  ZpRootReport low = zp_root_count(h2, 3, 1);
  CHECK(low.approximate >= low.certified);
  CHECK(low.certified <= 4);

  SparsePoly h3 = shub_smale_family(3, 3);
  ZpRootReport r3 = zp_root_count(h3, 3, 5);
  CHECK(r3.certified == 8);
  CHECK(r3.approximate >= r3.certified);
}

TEST_CASE("shub-smale family invariants at small n") {
  for (long p : {2L, 3L}) {
    for (int n = 1; n <= 6; ++n) {
      SparsePoly h = shub_smale_family(n, p);
      CHECK(h.max_exp() == (1LL << n));
      CHECK(h.min_exp() == 1);
      NewtonPolygon P = newton_polygon(h, p);
      CHECK(root_valuations(P).size() == static_cast<size_t>(n));
      // Rational roots are always exactly {0, 1}, simple.
      std::vector<std::pair<Rational, long long>> expect = {{Rational(0), 1},
                                                            {Rational(1), 1}};
      CHECK(rational_roots(h) == expect);
    }
  }
}

TEST_CASE("oracle error contracts") {
  SparsePoly f = uni({{1, Rational(1)}, {0, Rational(-1)}});
  try {
    zp_root_count(f, 3, 0);
    FAIL("expected BadInput");
  } catch (const Error& e) {
    CHECK(e.code() == "BadInput");
  }
  try {
    zp_root_count(f, 10, 2);
    FAIL("expected NonPrime");
  } catch (const Error& e) {
    CHECK(e.code() == "NonPrime");
  }
  try {
    zp_root_count(f, 11, 8);  // 11^8 > 10^7
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == "TooLarge");
  }
  CHECK_THROWS_AS(zp_root_count(SparsePoly(1), 3, 2), Error);

  CHECK_THROWS_AS(poly_from_roots({{Rational(1), 0}}, Rational(1)), Error);
  CHECK_THROWS_AS(poly_from_roots({{Rational(1), 2}}, Rational(0)), Error);

  SparsePoly multi(2);
  multi.add_term(Monomial({1, 1}), Rational(1));
  multi.add_term(Monomial({0, 0}), Rational(-1));
  CHECK_THROWS_AS(rational_roots(multi), Error);
  CHECK_THROWS_AS(squarefree_part(multi), Error);

  CHECK_THROWS_AS(shub_smale_family(0, 3), Error);
  CHECK_THROWS_AS(shub_smale_family(15, 3), Error);
  CHECK_THROWS_AS(shub_smale_family(3, 9), Error);
}
