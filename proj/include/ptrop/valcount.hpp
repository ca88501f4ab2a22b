#pragma once

// Valuation counting for sparse polynomial systems over the p-adic complex
// numbers: how many distinct vectors (ord_p x_1, ..., ord_p x_n) arise from
// roots of the system with every coordinate nonzero?
//
// - classify: support-size regime and a general-position certificate.
// - count_small_support: for supports of at most n+1 monomials the count is
//   0, 1, or infinite, and is decided exactly.
// - fij_reduction / slab_hyperplanes / count_n_plus_2: for supports of
//   exactly n+2 monomials, Gauss-Jordan elimination down to trinomial rows
//   yields a finite certified superset of candidate valuation vectors plus a
//   proven cap on the number of true ones.
// - sps_reduce: rewrites a sum of products of sparse univariates as a
//   polynomial system in km+1 variables with the same root x-coordinates.
// - maybetrivial_bound / assertion2_bound: closed-form bounds.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ptrop/linalg.hpp"
#include "ptrop/poly.hpp"
#include "ptrop/rational.hpp"

namespace ptrop {

enum class Regime { T_LE_N, T_EQ_N_PLUS_1, T_EQ_N_PLUS_2, LARGER };

const char* regime_name(Regime r);

struct SupportClass {
  int n = 0;     // number of variables
  size_t t = 0;  // union-support size
  Regime regime = Regime::T_LE_N;
  // Every collection of n distinct index pairs of the support gives n
  // linearly independent difference vectors.  Meaningful only when `regime`
  // is T_EQ_N_PLUS_2 and `general_position_checked` is true; the check is
  // skipped (checked = false) when the pair-collection enumeration would
  // exceed the exhaustive-search budget.
  bool general_position = false;
  bool general_position_checked = false;
};

// Union support of F sorted graded-lexicographically ascending: the canonical
// indexing a_1 < a_2 < ... < a_t used by fij_reduction.
std::vector<Monomial> canonical_support(const PolySystem& F);

SupportClass classify(const PolySystem& F);

struct CountResult {
  enum class Kind { EXACT, INFINITE, BOUNDED };
  Kind kind = Kind::EXACT;

  // EXACT: the count (0 or 1); `vec` holds the unique vector when value == 1.
  long long value = 0;
  std::optional<std::vector<Rational>> vec;

  // BOUNDED: lex-sorted candidate vectors, a cap on the number of *true*
  // vectors (candidates may be more numerous), and whether the candidate list
  // provably contains every true vector.
  std::vector<std::vector<Rational>> candidates;
  BigInt bound = 0;
  bool superset = false;
};

// A sum of k products of m sparse univariate factors, each factor nonzero
// with at most t terms.
struct SpsExpression {
  long long k = 0, m = 0, t = 0;
  std::vector<std::vector<SparsePoly>> factors;  // k rows of m univariate polys
};

// The expression as a system of km+1 polynomials in km+1 variables
// (x = variable 0, then y_{i,j} at index 1 + i*m + j): first the equations
// y_{ij} - f_{ij}(x), each with at most t+1 terms, then sum_i prod_j y_{ij}
// with exactly k terms.  The x-coordinates of the system's roots are exactly
// the roots of the expression.  BadInput on shape violations, TooLarge when
// km is enormous.
PolySystem sps_reduce(const SpsExpression& e);

// Exact count of valuation vectors for t <= n+1 support monomials: EXACT(0),
// EXACT(1) with the vector, or INFINITE.  RegimeMismatch when t > n+1,
// NonPrime for composite p.
CountResult count_small_support(const PolySystem& F, long p);

// Gauss-Jordan elimination of every support monomial except a_i and a_j
// (1-based indices into canonical_support).  In the generic "star" outcome
// every row is a trinomial  x^{a_k} + beta x^{a_i} + gamma x^{a_j}  with a
// distinct pivot a_k not in {a_i, a_j} and there are exactly n nonzero rows.
// Otherwise `degeneracies` records, per non-conforming row, the shape that
// appeared:
//   'a' pivot + a_i   'b' pivot + a_j   'c' a_i + a_j (two-term rows)
//   'm' monomial row  'z' zero row      'o' anything else
// Degenerate outcomes are reported, not thrown.
struct FijReduction {
  PolySystem system;              // one poly per input poly, zero rows kept
  std::vector<Monomial> support;  // canonical support a_1 < ... < a_t
  size_t i = 0, j = 0;            // the two surviving columns (1-based)
  bool star = false;
  std::vector<std::pair<size_t, char>> degeneracies;  // (row index, case)
};

// RegimeMismatch unless t == n+2; BadInput on bad indices.
FijReduction fij_reduction(const PolySystem& F, size_t i, size_t j);

// The valuation hyperplane of row ell of a star reduction: every root with
// valuation vector v whose row-ell minimum ties between the a_i and a_j
// terms satisfies  normal . v = offset  with normal = a_i - a_j and
// offset = ord_p(gamma_ell / beta_ell).  One entry per nonzero row; all
// normals are equal by construction.  BadInput when G is not a star.
struct SlabHyperplane {
  std::vector<long long> normal;
  Rational offset;
  size_t row = 0;
};

std::vector<SlabHyperplane> slab_hyperplanes(const FijReduction& G, long p);

// Certified finite superset of the valuation vectors for t == n+2 support
// monomials (RegimeMismatch otherwise; the system must consist of exactly n
// nonzero polynomials).  Returns a BOUNDED result with
// bound = assertion2_bound(n) and superset = true whenever the candidate
// list is proven to contain every true vector:
//   n == 1: Newton-polygon valuations (exact);
//   n == 2: intersection of the tropical curves of F and of every star
//           reduction row (superset reflects overlap-freeness);
//   n >= 3: for each star reduction, every root valuation solves one of the
//           3^n per-row tie systems; families whose tie systems are all
//           either uniquely solvable or inconsistent certify a finite
//           candidate set, and certified families are intersected.
// GeneralPositionFailure when no reduction certifies (n >= 3).
CountResult count_n_plus_2(const PolySystem& F, long p);

// k(k-1)(2km(t-1)+1)/2 for positive integers; BadInput otherwise.
BigInt maybetrivial_bound(long long k, long long m, long long t);

// max{2, floor(n/2)^n + n} for n >= 1; BadInput otherwise.
BigInt assertion2_bound(long long n);

}  // namespace ptrop
