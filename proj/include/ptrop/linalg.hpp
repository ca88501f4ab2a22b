#pragma once

// Exact linear algebra over Q and Z.
//
// - rref: fraction-exact reduced row echelon form with pivot bookkeeping.
// - gauss_jordan_system: rewrites a polynomial system in an equivalent
//   row-reduced form relative to a chosen ordering of the union support
//   (the coefficient matrix transposed, reduced, and read back as polys).
// - hermite_unimodular: a unimodular U (|det| = 1) triangularizing a list of
//   integer vectors: U * a_i has zeros below position i.
// - monomial_change: pushes a unimodular exponent change through a poly;
//   valuation vectors transform by the transpose (ord x = U^T ord y).
// - integer_kernel: the primitive integer kernel vector of an integer matrix
//   of nullity exactly 1.

#include <vector>

#include "ptrop/poly.hpp"

namespace ptrop {

class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  RationalMatrix mat;
  std::vector<size_t> pivot_cols;  // one per nonzero row, strictly increasing
};

RrefResult rref(RationalMatrix M);

struct GaussJordanResult {
  PolySystem system;            // one poly per input poly; zero rows kept
  RrefResult reduced;           // the reduced coefficient matrix (rows = polys)
  std::vector<Monomial> order;  // the monomial ordering used (columns)
};

// `order` must be a permutation of the union support of F.
GaussJordanResult gauss_jordan_system(const PolySystem& F,
                                      const std::vector<Monomial>& order);

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_identity(size_t n);
BigInt int_det(IntMatrix M);  // exact (fraction-free Bareiss)

struct UnimodularTransform {
  IntMatrix U;      // n x n, det = +-1
  IntMatrix U_inv;  // exact integer inverse
};

// Given vectors a_1..a_k in Z^n (k <= n), returns U with U * a_i supported on
// the first i coordinates (so [U a_1 | ... | U a_k] is lower triangular).
UnimodularTransform hermite_unimodular(const std::vector<std::vector<BigInt>>& vecs);

// Applies the exponent change a -> U a to every term.  U must be square with
// dimension equal to the number of variables.
SparsePoly monomial_change(const SparsePoly& f, const IntMatrix& U);
PolySystem monomial_change(const PolySystem& F, const IntMatrix& U);

// Primitive integer kernel vector (content 1, first nonzero entry positive)
// of a matrix with kernel dimension exactly 1; NullityNotOne otherwise.
std::vector<BigInt> integer_kernel(const IntMatrix& M);

// Unimodular row reduction T * M = H with H in row-echelon form (rows past
// `rank` are zero).  Because T is invertible over Z, rows rank..r-1 of T are a
// basis of the full (saturated) left kernel {y : y M = 0} -- the lattice of
// integer relations among the rows of M.
struct IntRowEchelon {
  IntMatrix T;  // r x r, det = +-1
  IntMatrix H;  // T * M
  size_t rank = 0;
};

IntRowEchelon int_row_echelon(const IntMatrix& M);

}  // namespace ptrop
