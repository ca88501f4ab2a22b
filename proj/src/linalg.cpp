#include "ptrop/linalg.hpp"

#include <algorithm>
#include <set>

namespace ptrop {

RrefResult rref(RationalMatrix M) {
  RrefResult res;
  size_t rank = 0;
  for (size_t col = 0; col < M.cols() && rank < M.rows(); ++col) {
    // First nonzero entry at or below the working row (deterministic; with
    // exact arithmetic there is no numerical reason to prefer large pivots).
    size_t piv = rank;
    while (piv < M.rows() && M.at(piv, col).is_zero()) ++piv;
    if (piv == M.rows()) continue;
    if (piv != rank)
      for (size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(rank, j));
    Rational inv = M.at(rank, col).inverse();
    for (size_t j = col; j < M.cols(); ++j) M.at(rank, j) *= inv;
    for (size_t r = 0; r < M.rows(); ++r) {
      if (r == rank || M.at(r, col).is_zero()) continue;
      Rational f = M.at(r, col);
      for (size_t j = col; j < M.cols(); ++j) M.at(r, j) -= f * M.at(rank, j);
    }
    res.pivot_cols.push_back(col);
    ++rank;
  }
  res.mat = std::move(M);
  return res;
}

GaussJordanResult gauss_jordan_system(const PolySystem& F,
                                      const std::vector<Monomial>& order) {
  std::vector<Monomial> support = F.union_support();
  std::set<Monomial> in_order(order.begin(), order.end());
  if (order.size() != support.size() || in_order.size() != order.size() ||
      !std::all_of(support.begin(), support.end(),
                   [&](const Monomial& m) { return in_order.count(m) > 0; }))
    fail("BadInput", "monomial order must be a permutation of the union support");

  const size_t r = F.size(), t = order.size();
  RationalMatrix M(r, t);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < t; ++j) M.at(i, j) = F[i].coeff(order[j]);

  GaussJordanResult out;
  out.reduced = rref(std::move(M));
  out.order = order;
  PolySystem G(F.nvars());
  for (size_t i = 0; i < r; ++i) {
    SparsePoly g(F.nvars());
    for (size_t j = 0; j < t; ++j) g.add_term(order[j], out.reduced.mat.at(i, j));
    G.push_back(std::move(g));
  }
  out.system = std::move(G);
  return out;
}

IntMatrix int_identity(size_t n) {
  IntMatrix I(n, std::vector<BigInt>(n, 0));
  for (size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

BigInt int_det(IntMatrix M) {
  const size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) fail("BadInput", "determinant of a non-square matrix");
  if (n == 0) return 1;
  // Fraction-free Bareiss; every division below is exact.
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(M[k][k]) == 0) {
      size_t s = k + 1;
      while (s < n && sgn(M[s][k]) == 0) ++s;
      if (s == n) return 0;
      std::swap(M[k], M[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        BigInt num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(M[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : BigInt(-M[n - 1][n - 1]);
}

namespace {

// xgcd(a, b) = (g, s, t) with g = s a + t b, g >= 0.
void xgcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

UnimodularTransform hermite_unimodular(const std::vector<std::vector<BigInt>>& vecs) {
  if (vecs.empty()) fail("BadInput", "hermite_unimodular of an empty vector list");
  const size_t n = vecs[0].size();
  for (const auto& v : vecs)
    if (v.size() != n) fail("BadInput", "hermite_unimodular with mixed dimensions");
  if (vecs.size() > n)
    fail("BadInput", "hermite_unimodular needs at most as many vectors as dimensions");

  IntMatrix U = int_identity(n);
  IntMatrix V = int_identity(n);  // running inverse: row ops on U <-> column ops on V

  auto apply_pair = [&](size_t i, size_t r, const BigInt& a, const BigInt& b) {
    // Rows (i, r) of U <- (s*row_i + t*row_r, -(b/g)*row_i + (a/g)*row_r),
    // a 2x2 unimodular op E with det 1; V picks up E^{-1} on columns (i, r).
    BigInt g, s, t;
    xgcd(a, b, g, s, t);
    BigInt ag = a / g, bg = b / g;
    for (size_t j = 0; j < n; ++j) {
      BigInt ui = s * U[i][j] + t * U[r][j];
      BigInt ur = -bg * U[i][j] + ag * U[r][j];
      U[i][j] = ui;
      U[r][j] = ur;
    }
    for (size_t j = 0; j < n; ++j) {
      BigInt vi = ag * V[j][i] + bg * V[j][r];
      BigInt vr = -t * V[j][i] + s * V[j][r];
      V[j][i] = vi;
      V[j][r] = vr;
    }
  };

  auto mul_row = [&](const std::vector<BigInt>& a, size_t row) {
    BigInt acc = 0;
    for (size_t j = 0; j < n; ++j) acc += U[row][j] * a[j];
    return acc;
  };

  for (size_t i = 0; i < vecs.size(); ++i) {
    for (size_t r = i + 1; r < n; ++r) {
      BigInt wi = mul_row(vecs[i], i), wr = mul_row(vecs[i], r);
      if (sgn(wr) == 0) continue;
      if (sgn(wi) == 0) {
        std::swap(U[i], U[r]);
        for (size_t j = 0; j < n; ++j) std::swap(V[j][i], V[j][r]);
        continue;
      }
      apply_pair(i, r, wi, wr);
    }
    // Normalize the pivot sign; only rows >= i are in play, which can no
    // longer disturb the zero tails of earlier vectors.
    if (sgn(mul_row(vecs[i], i)) < 0) {
      for (size_t j = 0; j < n; ++j) U[i][j] = -U[i][j];
      for (size_t j = 0; j < n; ++j) V[j][i] = -V[j][i];
    }
  }
  return UnimodularTransform{std::move(U), std::move(V)};
}

SparsePoly monomial_change(const SparsePoly& f, const IntMatrix& U) {
  const size_t n = static_cast<size_t>(f.nvars());
  if (U.size() != n) fail("BadInput", "monomial_change dimension mismatch");
  for (const auto& row : U)
    if (row.size() != n) fail("BadInput", "monomial_change needs a square matrix");

  SparsePoly g(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    std::vector<long long> e(n, 0);
    for (size_t i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (size_t j = 0; j < n; ++j) acc += U[i][j] * to_big(m.e[j]);
      if (!acc.fits_slong_p()) fail("TooLarge", "transformed exponent out of range");
      e[i] = acc.get_si();
    }
    g.add_term(Monomial(e), c);
  }
  return g;
}

PolySystem monomial_change(const PolySystem& F, const IntMatrix& U) {
  PolySystem G(F.nvars());
  for (const auto& f : F.polys()) G.push_back(monomial_change(f, U));
  return G;
}

std::vector<BigInt> integer_kernel(const IntMatrix& M) {
  if (M.empty()) fail("BadInput", "integer_kernel of an empty matrix");
  const size_t r = M.size(), c = M[0].size();
  for (const auto& row : M)
    if (row.size() != c) fail("BadInput", "integer_kernel with ragged rows");

  RationalMatrix Q(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) Q.at(i, j) = Rational(M[i][j]);
  RrefResult R = rref(std::move(Q));

  size_t rank = R.pivot_cols.size();
  if (c - rank != 1)
    fail("NullityNotOne", "kernel dimension is " + std::to_string(c - rank) +
                              ", expected 1");

  // The unique non-pivot column parametrizes the kernel.
  std::vector<bool> is_pivot(c, false);
  for (size_t pc : R.pivot_cols) is_pivot[pc] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> v(c, Rational(0));
  v[free_col] = Rational(1);
  for (size_t i = 0; i < rank; ++i) v[R.pivot_cols[i]] = -R.mat.at(i, free_col);

  BigInt lcm = 1;
  for (const auto& x : v) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    lcm = l;
  }
  std::vector<BigInt> k(c);
  BigInt content = 0;
  for (size_t j = 0; j < c; ++j) {
    Rational scaled = v[j] * Rational(lcm);
    k[j] = scaled.num();  // integral by construction
    BigInt g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), k[j].get_mpz_t());
    content = g;
  }
  int lead = 0;
  for (size_t j = 0; j < c && lead == 0; ++j) lead = sgn(k[j]);
  for (size_t j = 0; j < c; ++j) {
    mpz_divexact(k[j].get_mpz_t(), BigInt(k[j]).get_mpz_t(), content.get_mpz_t());
    if (lead < 0) k[j] = -k[j];
  }
  return k;
}

IntRowEchelon int_row_echelon(const IntMatrix& M) {
  if (M.empty()) fail("BadInput", "int_row_echelon of an empty matrix");
  const size_t r = M.size(), c = M[0].size();
  for (const auto& row : M)
    if (row.size() != c) fail("BadInput", "int_row_echelon with ragged rows");

  IntRowEchelon res;
  res.T = int_identity(r);
  res.H = M;
  IntMatrix& T = res.T;
  IntMatrix& H = res.H;

  auto apply_pair = [&](size_t i, size_t k, const BigInt& a, const BigInt& b) {
    // Rows (i, k) <- (s*row_i + t*row_k, -(b/g)*row_i + (a/g)*row_k) on both
    // H and T; the 2x2 op has det 1, so T stays unimodular.
    BigInt g, s, t;
    xgcd(a, b, g, s, t);
    BigInt ag = a / g, bg = b / g;
    for (size_t j = 0; j < c; ++j) {
      BigInt hi = s * H[i][j] + t * H[k][j];
      BigInt hk = -bg * H[i][j] + ag * H[k][j];
      H[i][j] = hi;
      H[k][j] = hk;
    }
    for (size_t j = 0; j < r; ++j) {
      BigInt ti = s * T[i][j] + t * T[k][j];
      BigInt tk = -bg * T[i][j] + ag * T[k][j];
      T[i][j] = ti;
      T[k][j] = tk;
    }
  };

  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    size_t pivot = row;
    while (pivot < r && sgn(H[pivot][col]) == 0) ++pivot;
    if (pivot == r) continue;
    if (pivot != row) {
      std::swap(H[pivot], H[row]);
      std::swap(T[pivot], T[row]);
    }
    for (size_t k = row + 1; k < r; ++k) {
      if (sgn(H[k][col]) == 0) continue;
      apply_pair(row, k, H[row][col], H[k][col]);
    }
    if (sgn(H[row][col]) < 0) {
      for (auto& x : H[row]) x = -x;
      for (auto& x : T[row]) x = -x;
    }
    ++row;
  }
  res.rank = row;
  return res;
}

}  // namespace ptrop
