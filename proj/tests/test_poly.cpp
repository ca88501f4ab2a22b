#include <doctest.h>

#include <random>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/poly.hpp"

using namespace ptrop;

namespace {

Monomial m2(long long a, long long b) { return Monomial({a, b}); }

SparsePoly random_poly(std::mt19937_64& rng, int nvars, int max_terms) {
  std::uniform_int_distribution<long long> exp_d(-3, 5), coeff_d(-9, 9);
  std::uniform_int_distribution<int> nt(1, max_terms);
  SparsePoly f(nvars);
  int terms = nt(rng);
  for (int i = 0; i < terms; ++i) {
    std::vector<long long> e(nvars);
    for (auto& x : e) x = exp_d(rng);
    f.add_term(Monomial(e), Rational(coeff_d(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("monomial order is lexicographic; grlex grades first") {
  CHECK(m2(0, 0) < m2(0, 1));
  CHECK(m2(0, 5) < m2(1, 0));
  CHECK(grlex_less(m2(0, 0), m2(0, 1)));
  CHECK(grlex_less(m2(2, 0), m2(0, 3)));   // degree 2 < degree 3
  CHECK(grlex_less(m2(0, 21), m2(32, 0)));  // degree 21 < degree 32
  CHECK_FALSE(grlex_less(m2(1, 1), m2(0, 2)));  // same degree: lex decides
  CHECK(grlex_less(m2(0, 2), m2(1, 1)));
  CHECK(m2(3, -1).total_degree() == 2);
  CHECK(m2(0, 0).is_origin());
  CHECK((m2(1, 2) + m2(3, -5)) == m2(4, -3));
  CHECK((m2(1, 2) - m2(3, -5)) == m2(-2, 7));
}

TEST_CASE("add_term accumulates and drops zeros") {
  SparsePoly f(2);
  f.add_term(m2(1, 0), Rational(2));
  f.add_term(m2(1, 0), Rational(-2));
  CHECK(f.is_zero());
  f.add_term(m2(0, 1), Rational(to_big(1), to_big(3)));
  f.add_term(m2(0, 1), Rational(to_big(2), to_big(3)));
  CHECK(f.term_count() == 1);
  CHECK(f.coeff(m2(0, 1)) == Rational(1));
  CHECK(f.coeff(m2(5, 5)).is_zero());
}

TEST_CASE("ring operations satisfy basic identities") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 50; ++trial) {
    SparsePoly f = random_poly(rng, 2, 5);
    SparsePoly g = random_poly(rng, 2, 5);
    SparsePoly h = random_poly(rng, 2, 4);
    CHECK((f + g - g).terms() == f.terms());
    CHECK((f * g).terms() == (g * f).terms());
    CHECK(((f + g) * h).terms() == (f * h + g * h).terms());
    CHECK((f - f).is_zero());
    CHECK((-f + f).is_zero());
    CHECK(f.scaled(Rational(3)).terms() == (f + f + f).terms());
  }
}

TEST_CASE("pow matches repeated multiplication") {
  std::mt19937_64 rng(7);
  SparsePoly f = random_poly(rng, 2, 3);
  SparsePoly p = SparsePoly::constant(2, Rational(1));
  for (unsigned k = 0; k <= 5; ++k) {
    CHECK(f.pow(k).terms() == p.terms());
    p = p * f;
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(99);
  std::vector<Rational> x = {Rational(to_big(2), to_big(3)), Rational(-5)};
  for (int trial = 0; trial < 50; ++trial) {
    SparsePoly f = random_poly(rng, 2, 4);
    SparsePoly g = random_poly(rng, 2, 4);
    CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
    CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
  }
  SparsePoly laurent(1);
  laurent.add_term(Monomial({-2}), Rational(3));
  CHECK(laurent.evaluate({Rational(2)}) == Rational(to_big(3), to_big(4)));
  try {
    laurent.evaluate({Rational(0)});
    FAIL("expected ZeroToNegativePower");
  } catch (const Error& e) {
    CHECK(e.code() == "ZeroToNegativePower");
  }
}

TEST_CASE("divide_by_monomial shifts exponents exactly") {
  SparsePoly f(2);
  f.add_term(m2(3, 1), Rational(5));
  f.add_term(m2(1, 1), Rational(-2));
  SparsePoly g = f.divide_by_monomial(m2(1, 1));
  CHECK(g.coeff(m2(2, 0)) == Rational(5));
  CHECK(g.coeff(m2(0, 0)) == Rational(-2));
  CHECK((g.divide_by_monomial(m2(-1, -1))).terms() == f.terms());
}

TEST_CASE("univariate helpers") {
  SparsePoly f(1);
  f.add_term(Monomial({-1}), Rational(7));
  f.add_term(Monomial({2}), Rational(1));
  CHECK(f.min_exp() == -1);
  CHECK(f.max_exp() == 2);
  long long offset = 0;
  std::vector<Rational> c = f.dense_coeffs(offset);
  CHECK(offset == -1);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == Rational(7));
  CHECK(c[1].is_zero());
  CHECK(c[2].is_zero());
  CHECK(c[3] == Rational(1));
  SparsePoly d = f.derivative();
  CHECK(d.coeff(Monomial({-2})) == Rational(-7));
  CHECK(d.coeff(Monomial({1})) == Rational(2));
  SparsePoly z(1);
  CHECK_THROWS_AS(z.min_exp(), Error);
}

TEST_CASE("system union support is lex-sorted and deduplicated") {
  SparsePoly f(2), g(2);
  f.add_term(m2(1, 0), Rational(1));
  f.add_term(m2(0, 0), Rational(1));
  g.add_term(m2(0, 1), Rational(1));
  g.add_term(m2(0, 0), Rational(2));
  PolySystem F({f, g});
  std::vector<Monomial> u = F.union_support();
  REQUIRE(u.size() == 3);
  CHECK(u[0] == m2(0, 0));
  CHECK(u[1] == m2(0, 1));
  CHECK(u[2] == m2(1, 0));
  CHECK(F.t() == 3);
  CHECK(F.nvars() == 2);
  SparsePoly h(3);
  h.add_term(Monomial({1, 1, 1}), Rational(1));
  CHECK_THROWS_AS(PolySystem({f, h}), Error);
}

TEST_CASE("str renders with default and custom names") {
  SparsePoly f(2);
  f.add_term(m2(1, 0), Rational(1));
  f.add_term(m2(0, 0), Rational(-4));
  std::string s = f.str({"x", "y"});
  CHECK(s.find("x") != std::string::npos);
  CHECK(s.find("4") != std::string::npos);
}
