#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/examples.hpp"
#include "ptrop/tropical.hpp"
#include "ptrop/valcount.hpp"

using namespace ptrop;

namespace {

Monomial m2(long long a, long long b) { return Monomial({a, b}); }

PolySystem diag_system(int n) {
  std::vector<SparsePoly> polys;
  for (int i = 0; i < n; ++i) {
    SparsePoly f(n);
    std::vector<long long> e(n, 0);
    e[static_cast<size_t>(i)] = 1;
    f.add_term(Monomial(e), Rational(1));
    f.add_term(Monomial(std::vector<long long>(n, 0)), Rational(-1));
    polys.push_back(f);
  }
  return PolySystem(polys);
}

}  // namespace

TEST_CASE("canonical support is graded-lex ascending") {
  PolySystem F = quadrinomial_pair(3);
  std::vector<Monomial> s = canonical_support(F);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == m2(0, 0));
  CHECK(s[1] == m2(9, 10));
  CHECK(s[2] == m2(0, 21));
  CHECK(s[3] == m2(32, 0));
}

TEST_CASE("classify recognizes the four regimes") {
  CHECK(classify(diag_system(2)).regime == Regime::T_EQ_N_PLUS_1);
  CHECK(classify(diag_system(2)).t == 3);

  SparsePoly b(2);  // single binomial in 2 vars: t = 2 <= n
  b.add_term(m2(1, 1), Rational(1));
  b.add_term(m2(0, 0), Rational(-1));
  CHECK(classify(PolySystem({b})).regime == Regime::T_LE_N);

  CHECK(classify(chain_system(2, 3)).regime == Regime::T_EQ_N_PLUS_2);
  CHECK(classify(quadrinomial_pair(3)).regime == Regime::T_EQ_N_PLUS_2);

  SparsePoly wide(2);  // 5 support points in 2 vars: beyond n + 2
  wide.add_term(m2(0, 0), Rational(1));
  wide.add_term(m2(1, 0), Rational(1));
  wide.add_term(m2(0, 1), Rational(1));
  wide.add_term(m2(1, 1), Rational(1));
  wide.add_term(m2(2, 2), Rational(1));
  CHECK(classify(PolySystem({wide, wide})).regime == Regime::LARGER);

  CHECK(std::string(regime_name(Regime::T_EQ_N_PLUS_2)) == "T_EQ_N_PLUS_2");
}

TEST_CASE("small-support counting: unique vector cases") {
  for (long p : {2L, 3L, 5L}) {
    // (x1 x2 - 1, x1 - p): the unique valuation vector is (1, -1).
    SparsePoly f1(2), f2(2);
    f1.add_term(m2(1, 1), Rational(1));
    f1.add_term(m2(0, 0), Rational(-1));
    f2.add_term(m2(1, 0), Rational(1));
    f2.add_term(m2(0, 0), Rational(to_big(-p)));
    CountResult r = count_small_support(PolySystem({f1, f2}), p);
    CHECK(r.kind == CountResult::Kind::EXACT);
    CHECK(r.value == 1);
    REQUIRE(r.vec.has_value());
    CHECK(*r.vec == std::vector<Rational>{Rational(1), Rational(-1)});

    // Diagonal system: the origin.
    CountResult d = count_small_support(diag_system(3), p);
    CHECK(d.kind == CountResult::Kind::EXACT);
    CHECK(d.value == 1);
    CHECK(*d.vec == std::vector<Rational>(3, Rational(0)));
  }
}

TEST_CASE("small-support counting: zero and infinite cases") {
  // Inconsistent valuations: x - p and x - 1 share no root valuation.
  SparsePoly g1(1), g2(1);
  g1.add_term(Monomial({1}), Rational(1));
  g1.add_term(Monomial({0}), Rational(-3));
  g2.add_term(Monomial({1}), Rational(1));
  g2.add_term(Monomial({0}), Rational(-1));
  CountResult zero = count_small_support(PolySystem({g1, g2}), 3);
  CHECK(zero.kind == CountResult::Kind::EXACT);
  CHECK(zero.value == 0);

  // One binomial in two variables: a whole tropical line of vectors.
  SparsePoly b(2);
  b.add_term(m2(1, 1), Rational(1));
  b.add_term(m2(0, 0), Rational(-9));
  CountResult inf = count_small_support(PolySystem({b}), 3);
  CHECK(inf.kind == CountResult::Kind::INFINITE);
}

TEST_CASE("small-support counting rejects n+2 supports and composite p") {
  try {
    count_small_support(chain_system(2, 3), 3);
    FAIL("expected RegimeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "RegimeMismatch");
  }
  try {
    count_small_support(diag_system(2), 6);
    FAIL("expected NonPrime");
  } catch (const Error& e) {
    CHECK(e.code() == "NonPrime");
  }
}

TEST_CASE("fij reduction of the quadrinomial: star shape, trinomial rows") {
  PolySystem F = quadrinomial_pair(3);
  FijReduction r = fij_reduction(F, 1, 2);
  CHECK(r.star);
  CHECK(r.degeneracies.empty());
  CHECK(r.i == 1);
  CHECK(r.j == 2);
  REQUIRE(r.system.size() == 2);
  // Each row: unit pivot on an eliminated monomial + tail on {a_1, a_2}.
  std::vector<Monomial> pivots = {r.support[2], r.support[3]};
  for (size_t row = 0; row < 2; ++row) {
    const SparsePoly& g = r.system[row];
    CHECK(g.term_count() <= 3);
    bool has_unit_pivot = false;
    for (const auto& piv : pivots)
      if (g.coeff(piv) == Rational(1)) has_unit_pivot = true;
    CHECK(has_unit_pivot);
  }
}

TEST_CASE("fij reduction argument validation") {
  PolySystem F = quadrinomial_pair(3);
  CHECK_THROWS_AS(fij_reduction(F, 1, 1), Error);
  CHECK_THROWS_AS(fij_reduction(F, 0, 2), Error);
  CHECK_THROWS_AS(fij_reduction(F, 1, 5), Error);
  try {
    fij_reduction(diag_system(2), 1, 2);
    FAIL("expected RegimeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == "RegimeMismatch");
  }
}

TEST_CASE("slab hyperplanes are parallel to a_i - a_j") {
  PolySystem F = quadrinomial_pair(3);
  FijReduction G = fij_reduction(F, 1, 2);
  std::vector<SlabHyperplane> slabs = slab_hyperplanes(G, 3);
  CHECK_FALSE(slabs.empty());
  // a_1 - a_2 = (-9, -10): every slab normal is a multiple of it.
  for (const auto& s : slabs) {
    REQUIRE(s.normal.size() == 2);
    CHECK(s.normal[0] * (-10) == s.normal[1] * (-9));
  }
}

TEST_CASE("chain n=2: certified bounded count with the three witnesses") {
  CountResult r = count_n_plus_2(chain_system(2, 3), 3);
  CHECK(r.kind == CountResult::Kind::BOUNDED);
  CHECK(r.superset);
  CHECK(r.bound == 3);
  std::vector<std::vector<Rational>> w = chain_witnesses(2);
  for (const auto& v : w) {
    CHECK(std::find(r.candidates.begin(), r.candidates.end(), v) !=
          r.candidates.end());
  }
}

TEST_CASE("sps reduction preserves root x-coordinates") {
  // Single product: f11 = (x-2)(x+3); expression roots are x = 2, -3.
  SparsePoly f11(1);
  f11.add_term(Monomial({2}), Rational(1));
  f11.add_term(Monomial({1}), Rational(1));
  f11.add_term(Monomial({0}), Rational(-6));
  SpsExpression e1{1, 1, 3, {{f11}}};
  PolySystem F1 = sps_reduce(e1);
  CHECK(F1.nvars() == 2);   // x and y_{1,1}
  CHECK(F1.size() == 2);    // one defining row + the sum row
  for (Rational x : {Rational(2), Rational(-3)}) {
    std::vector<Rational> pt = {x, f11.evaluate({x})};
    for (const auto& g : F1.polys()) CHECK(g.evaluate(pt).is_zero());
  }

  // Two products engineered to share the root x = 1.
  SparsePoly a(1), b(1), c(1), d(1);
  a.add_term(Monomial({1}), Rational(1));
  a.add_term(Monomial({0}), Rational(-1));  // x - 1
  b.add_term(Monomial({2}), Rational(1));
  b.add_term(Monomial({0}), Rational(4));   // x^2 + 4
  c.add_term(Monomial({1}), Rational(-1));
  c.add_term(Monomial({0}), Rational(1));   // 1 - x
  d.add_term(Monomial({0}), Rational(7));   // 7
  SpsExpression e2{2, 2, 3, {{a, b}, {c, d}}};
  PolySystem F2 = sps_reduce(e2);
  CHECK(F2.nvars() == 5);
  CHECK(F2.size() == 5);
  std::vector<Rational> pt = {Rational(1), a.evaluate({Rational(1)}),
                              b.evaluate({Rational(1)}), c.evaluate({Rational(1)}),
                              d.evaluate({Rational(1)})};
  for (const auto& g : F2.polys()) CHECK(g.evaluate(pt).is_zero());
  // Every defining row has at most t + 1 terms; the sum row exactly k terms.
  for (size_t i = 0; i + 1 < F2.size(); ++i)
    CHECK(F2[i].term_count() <= static_cast<size_t>(e2.t + 1));
  CHECK(F2[F2.size() - 1].term_count() == static_cast<size_t>(e2.k));
}

TEST_CASE("closed-form bounds at frozen inputs") {
  CHECK(maybetrivial_bound(1, 5, 9) == 0);
  CHECK(maybetrivial_bound(2, 1, 2) == 5);
  CHECK(maybetrivial_bound(2, 3, 4) == 37);
  CHECK(assertion2_bound(1) == 2);
  CHECK(assertion2_bound(2) == 3);
  CHECK(assertion2_bound(3) == 4);
  CHECK(assertion2_bound(4) == 20);
}
