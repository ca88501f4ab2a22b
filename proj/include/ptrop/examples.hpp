#pragma once

// Stored worked examples with frozen expectations.
//
// Each constructor below builds a specific system whose exact invariants
// (root valuations, tropical intersections, reduction shapes, counts) were
// worked out by hand and are pinned in run_stored_examples.  The CLI
// `examples` subcommand prints the resulting pass/fail table; the test suite
// asserts every row passes.  Symbolic-p examples accept the prime as a
// parameter; expectations below are prime-independent unless a row's detail
// string says otherwise.

#include <string>
#include <vector>

#include "ptrop/oracle.hpp"
#include "ptrop/poly.hpp"
#include "ptrop/rational.hpp"
#include "ptrop/tropical.hpp"

namespace ptrop {

// 243 (x - 1)^3 (x - 6)^2 (x - 1/243), expanded exactly: integer coefficients
// 36 - 8868x + 29305x^2 - 35310x^3 + 18240x^4 - 3646x^5 + 243x^6.
// Root valuations at p = 3:  {1 -> 2, 0 -> 3, -5 -> 1}.
PlantedPoly planted_sextic();

// (x^3 - y - 1, x^3 - 2y + 2): Gauss-Jordan reduction in graded-lex
// descending monomial order yields exactly (x^3 - 4, y - 3).
PolySystem gauss_pair();
PolySystem gauss_pair_expected();

// The n-variable chain system (n >= 2):
//   f_1 = x_1 x_2 - p - x_1^2
//   f_l = x_l x_{l+1} - 1 - p^{2l-3} x_1^2   (2 <= l <= n-1)
//   f_n = x_n - 1 - p^{2n-3} x_1^2
// Union support has exactly n + 2 monomials, and the system attains exactly
// n + 1 distinct valuation vectors, listed by chain_witnesses.
PolySystem chain_system(int n, long p);

// The n + 1 true valuation vectors of chain_system(n, p), lex-sorted;
// independent of the prime: (1, 0, ..., 0), the origin, and for each
// j = 1..n-1 the vector with x_1 = -j and x_l = -max(j + 2 - l, 0).
std::vector<std::vector<Rational>> chain_witnesses(int n);

// The quadrinomial pair (odd primes only; BadInput at p = 2):
//   f_1 =          p x_2^21 -          p x_1^32 +       p +         x_1^9 x_2^10
//   f_2 = -(p+p^2)   x_2^21 + (p+p^3)    x_1^32 + p+p^4   + (1+p)   x_1^9 x_2^10
// Trop(f_1) = Trop(f_2) (3 vertices, 6 one-cells).  With the two Gauss-Jordan
// rewrites F^(1,2) and F^(3,4) computed exactly, the six tropical curves
// intersect in exactly THREE points, for every odd prime:
//   (1/32, 23/320), (11/189, 1/21), and (-42/163, -64/163),
// the third being the concurrence of the tie lines 32v1 = 21v2,
// 11v2 = 9v1 - 2, and 23v1 - 10v2 = -2.  The historically quoted answer is
// the two-point set quadrinomial_expected_points(); it is what the same
// intersection yields when the F^(1,2) row with pivot x_1^32 is replaced by
// the variant in quadrinomial_displayed_f12, whose pivot coefficient p + p^3
// (valuation 1 instead of 0) is NOT a scalar multiple of any row of the
// reduced system -- see the stored-example diff for the reconciliation.
PolySystem quadrinomial_pair(long p);
std::vector<QPoint> quadrinomial_expected_points();  // the two quoted points
QPoint quadrinomial_extra_point();                   // (-42/163, -64/163)
// The variant F^(1,2): row 1 as the exact reduction, row 2 with leading
// coefficient p + p^3 on the x_1^32 pivot (same tail).  Not row-equivalent
// to the pair; kept to document how the two-point answer arises.
PolySystem quadrinomial_displayed_f12(long p);

// (x + y + 1, x + y + 1 + p): identical tropical curves, no common root at
// all, so naive curve intersection certifies nothing.
PolySystem overlap_pair(long p);

// (x - 1)(x - p)(x - p^2) expanded: 4 terms, 3 distinct root valuations,
// used to pin the vertical-decomposition census.
SparsePoly vert_example_cubic(long p);

// Cell-by-cell equality of two plane tropical curves.
bool curves_identical(const TropCurve& A, const TropCurve& B);

struct StoredExample {
  std::string name;
  bool pass = false;
  std::string detail;  // computed-vs-expected summary, or the error
};

// Recomputes every stored example at prime p and diffs against the frozen
// expectations.  Rows whose expectation is documented only for specific
// primes substitute their documented default (noted in the detail string).
std::vector<StoredExample> run_stored_examples(long p);

}  // namespace ptrop
