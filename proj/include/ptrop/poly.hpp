#pragma once

// Sparse Laurent polynomials with exact rational coefficients.
//
// A Monomial is an integer exponent vector (negative exponents allowed; these
// are Laurent monomials, i.e. functions on the torus).  A SparsePoly maps
// monomials to nonzero coefficients, lexicographically ordered, so iteration
// and serialization are deterministic.  A PolySystem is a tuple of polys in a
// shared variable set.

#include <map>
#include <string>
#include <vector>

#include "ptrop/rational.hpp"

namespace ptrop {

struct Monomial {
  std::vector<long long> e;

  Monomial() = default;
  explicit Monomial(std::vector<long long> exps) : e(std::move(exps)) {}

  size_t nvars() const { return e.size(); }
  long long total_degree() const;
  bool is_origin() const;

  // Componentwise sum / difference (the product / quotient of monomials).
  Monomial operator+(const Monomial& o) const;
  Monomial operator-(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
  bool operator<(const Monomial& o) const { return e < o.e; }  // lex
};

// Graded lexicographic: total degree first, then lex.  This is the canonical
// order used for user-facing indexing of a support set.
bool grlex_less(const Monomial& a, const Monomial& b);

class SparsePoly {
 public:
  SparsePoly() : nvars_(0) {}
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly single_term(const Monomial& m, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // Adds c * x^m, accumulating with any existing term and dropping zeros.
  void add_term(const Monomial& m, const Rational& c);

  Rational coeff(const Monomial& m) const;
  std::vector<Monomial> support() const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly scaled(const Rational& c) const;
  SparsePoly pow(unsigned long long k) const;

  // Divides every term by x^m (exponent shift; exact for Laurent polys).
  SparsePoly divide_by_monomial(const Monomial& m) const;

  // Exact evaluation; 0 raised to a negative exponent throws
  // ZeroToNegativePower, 0^0 = 1.
  Rational evaluate(const std::vector<Rational>& x) const;

  // --- univariate helpers (require nvars == 1 and, mostly, nonzero) ---
  bool is_univariate() const { return nvars_ == 1; }
  long long min_exp() const;  // ZeroPolynomial on the zero poly
  long long max_exp() const;
  // Coefficient vector c[0..span] with c[i] = coeff of x^(offset + i).
  // Throws TooLarge if the exponent span exceeds the cap.
  std::vector<Rational> dense_coeffs(long long& offset) const;
  SparsePoly derivative() const;  // d/dx, univariate only

  std::string str(const std::vector<std::string>& vars = {}) const;

 private:
  int nvars_;
  std::map<Monomial, Rational> terms_;
};

class PolySystem {
 public:
  PolySystem() : nvars_(0) {}
  explicit PolySystem(int nvars) : nvars_(nvars) {}
  explicit PolySystem(std::vector<SparsePoly> polys);

  int nvars() const { return nvars_; }
  size_t size() const { return polys_.size(); }
  const SparsePoly& operator[](size_t i) const { return polys_[i]; }
  const std::vector<SparsePoly>& polys() const { return polys_; }
  void push_back(SparsePoly f);

  // Union of the supports, lex sorted.
  std::vector<Monomial> union_support() const;
  // Union support size t.
  size_t t() const { return union_support().size(); }

 private:
  int nvars_;
  std::vector<SparsePoly> polys_;
};

}  // namespace ptrop
