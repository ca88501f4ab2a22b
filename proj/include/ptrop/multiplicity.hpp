#pragma once

// Univariate reduction and intersection multiplicity for systems supported
// on n+2 monomials.
//
// Input shape: n Laurent polynomials in n variables, each of the normalized
// form  x^{a_l} - alpha_l - x^{a_{n+1}}/c  over the common support
// {O, a_1, ..., a_{n+1}}.  Appending a row of 1s to the matrix with columns
// (O, a_1, ..., a_{n+1}) gives an (n+1) x (n+2) matrix whose integer kernel
// is generated by a single vector b; when the support is in general position
// (no n+1 points on an affine hyperplane) b has no zero coordinate, and the
// monomial identity prod_l (x^{a_l})^{b_l} * (x^{a_{n+1}})^{b_{n+1}} = 1
// collapses the system to one equation in u := x^{a_{n+1}}:
//
//     prod_l (c*alpha_l + u)^{b_l} * u^{b_{n+1}} = c^{b_1+...+b_n} =: C.
//
// Negative kernel entries make the left side a rational function, so the
// artifact works with the cleared-denominator identity lhs(u) = C * rhs(u):
//
//     lhs = u^{max(b_{n+1},0)}  * prod_{b_l > 0} (c*alpha_l + u)^{b_l}
//     rhs = u^{max(-b_{n+1},0)} * prod_{b_l < 0} (c*alpha_l + u)^{-b_l}
//
// Every root x* of the system in the torus gives a root u* = (x*)^{a_{n+1}}
// of cleared := lhs - C*rhs, away from the poles u in {0} u {-c*alpha_l};
// the root multiplicity of cleared is at most n+1, and that bound is sharp.
// The construction is invariant under b -> -b (lhs and C*rhs swap, C maps to
// 1/C; cleared changes only by a nonzero scalar times that swap, so its root
// multiplicities are unchanged).

#include <optional>
#include <string>
#include <vector>

#include "ptrop/linalg.hpp"
#include "ptrop/poly.hpp"

namespace ptrop {

struct UnivariateReduction {
  int n = 0;
  std::vector<Monomial> a;       // a_1..a_{n+1}; the origin column is implicit
  std::vector<Rational> alphas;  // alpha_1..alpha_n, one per input row
  Rational c;                    // shared-tail scale: the tail term is -x^{a_{n+1}}/c
  std::vector<BigInt> b;         // kernel vector, indexed (O, a_1..a_n, a_{n+1})
  Rational C;                    // c^{b_1+...+b_n}
  SparsePoly cleared_lhs;        // univariate in u
  SparsePoly cleared_rhs;        // univariate in u
  SparsePoly cleared;            // cleared_lhs - C*cleared_rhs, never zero
};

// Parses and reduces a normalized system.  Errors:
//   RegimeMismatch          not n polynomials / support size != n+2 / rows not
//                           of the normalized trinomial shape
//   GeneralPositionFailure  kernel not 1-dimensional, a kernel coordinate is
//                           zero, or repeated alpha values whose merged kernel
//                           coefficients sum to zero (outside the theorem's
//                           genericity; rejected rather than guessed at)
//   TooLarge                kernel entries too large to expand exactly
UnivariateReduction univariate_reduction(const PolySystem& F);

// Largest k with (u - zeta)^k dividing f, by repeated exact synthetic
// division.  f univariate Laurent; roots are counted in K*, so for zeta = 0
// the answer is max(min_exp, 0).  Errors: ZeroPolynomial, BadInput.
long long multiplicity_at(const SparsePoly& f, const Rational& zeta);

// The sharp multiplicity bound for a root of a system supported on A:
// 1 when #A = n+1, n+1 when #A = n+2.  Requires every (n+1)-point subset of
// A to affinely span (no n+1 points on a hyperplane).
// Errors: UnsupportedSupportSize, GeneralPositionFailure, BadInput.
long long mult_bound(const std::vector<Monomial>& A, int n);

// Sharpness witness for the n+1 bound: with zeta_1..zeta_{n+1} the (n+1)-st
// roots of unity, g(u) := u * prod_{i=1..n} (u + zeta_{n+1} - zeta_i) + 1
// satisfies g(u - zeta_{n+1}) = u^{n+1}, so -zeta_{n+1} is a root of
// multiplicity exactly n+1.  g arises from the univariate reduction of the
// system  theta*x_i = zeta_{n+1} - zeta_i + 1/(x_1...x_n)  (theta an n-th
// root of -1), which is emitted as a description, not solved.
//
// n = 1 is fully rational (zeta_2 = -1, zeta_1 = 1) and exact_g is set.
// n >= 2 uses two tiers: a floating instantiation over complex approximations
// of the roots of unity (float_max_err = max |coefficient| of
// g(u - zeta_{n+1}) - u^{n+1}), plus, for n <= 6, an exact integer check of
// the underlying identity prod_{all zeta} (u - zeta) = u^{n+1} - 1 computed
// as the product of the cyclotomic polynomials Phi_d over d | n+1.
struct SharpnessReport {
  int n = 0;
  long long expected_multiplicity = 0;      // n + 1
  std::string system_description;
  std::optional<SparsePoly> exact_g;        // set when n == 1
  long long exact_multiplicity = 0;         // n == 1: multiplicity_at(exact_g, 1)
  bool float_checked = false;               // n >= 2
  double float_max_err = 0.0;
  bool cyclotomic_checked = false;          // n <= 6
  bool cyclotomic_identity_ok = false;
};

SharpnessReport sharpness_system(int n);

}  // namespace ptrop
