#include "ptrop/multiplicity.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <sstream>
#include <utility>

#include "ptrop/error.hpp"

namespace ptrop {

namespace {

// Total expanded degree allowed for the cleared identity.
constexpr long long kMaxClearedDegree = 4096;

bool fits_ll(const BigInt& v) { return v.fits_slong_p(); }

long long to_ll(const BigInt& v) { return static_cast<long long>(v.get_si()); }

// The factor (c*alpha + u) as a univariate poly in u.
SparsePoly linear_factor(const Rational& c_alpha) {
  SparsePoly f(1);
  f.add_term(Monomial({1}), Rational(1));
  f.add_term(Monomial({0}), c_alpha);
  return f;
}

SparsePoly u_power(long long k) {
  SparsePoly f(1);
  f.add_term(Monomial({k}), Rational(1));
  return f;
}

// --- dense rational univariate helpers (ascending coefficients) ---

std::vector<Rational> dense_mul(const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void dense_trim(std::vector<Rational>& a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

// Exact division a / b; returns false if the division leaves a remainder.
bool dense_divide_exact(std::vector<Rational> a, std::vector<Rational> b,
                        std::vector<Rational>& quot) {
  dense_trim(a);
  dense_trim(b);
  if (b.size() == 1 && b[0].is_zero()) fail("DivisionByZero", "polynomial division by zero");
  if (a.size() < b.size()) {
    if (a.size() == 1 && a[0].is_zero()) {
      quot = {Rational(0)};
      return true;
    }
    return false;
  }
  quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (size_t k = quot.size(); k-- > 0;) {
    Rational q = a[k + b.size() - 1] / lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= q * b[j];
  }
  for (const Rational& r : a)
    if (!r.is_zero()) return false;
  return true;
}

// u^m - 1 as a dense coefficient vector.
std::vector<Rational> dense_um_minus_1(int m) {
  std::vector<Rational> v(static_cast<size_t>(m) + 1, Rational(0));
  v[0] = Rational(-1);
  v[static_cast<size_t>(m)] = Rational(1);
  return v;
}

// Cyclotomic polynomial Phi_d by the recursive exact division
// Phi_d = (u^d - 1) / prod_{e | d, e < d} Phi_e.
std::vector<Rational> cyclotomic(int d, std::map<int, std::vector<Rational>>& memo) {
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  std::vector<Rational> num = dense_um_minus_1(d);
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    std::vector<Rational> quot;
    if (!dense_divide_exact(num, cyclotomic(e, memo), quot))
      throw std::logic_error("cyclotomic division not exact");
    num = std::move(quot);
  }
  memo[d] = num;
  return num;
}

}  // namespace

UnivariateReduction univariate_reduction(const PolySystem& F) {
  const int n = F.nvars();
  if (n < 1) fail("BadInput", "univariate_reduction needs at least one variable");
  if (F.size() != static_cast<size_t>(n))
    fail("RegimeMismatch",
               "univariate_reduction needs exactly n polynomials in n variables");

  // Support shape: {O, a_1, ..., a_{n+1}}.
  const std::vector<Monomial> supp = F.union_support();
  if (supp.size() != static_cast<size_t>(n) + 2)
    fail("RegimeMismatch", "support must have exactly n+2 monomials");
  const Monomial origin(std::vector<long long>(static_cast<size_t>(n), 0));
  if (std::find(supp.begin(), supp.end(), origin) == supp.end())
    fail("RegimeMismatch",
               "normalized form requires the origin in the support (constant terms)");

  // Every row is a trinomial O + private + shared tail.
  struct Row {
    Monomial m1, m2;  // the two non-origin monomials
    Rational c1, c2;
    Rational alpha;
  };
  std::vector<Row> rows;
  for (size_t i = 0; i < F.size(); ++i) {
    const SparsePoly& f = F[i];
    if (f.term_count() != 3)
      fail("RegimeMismatch", "each polynomial must have exactly 3 terms");
    Row r;
    bool has_origin = false;
    std::vector<std::pair<Monomial, Rational>> others;
    for (const auto& [m, coef] : f.terms()) {
      if (m == origin) {
        has_origin = true;
        r.alpha = -coef;
      } else {
        others.emplace_back(m, coef);
      }
    }
    if (!has_origin)
      fail("RegimeMismatch", "each polynomial must have a constant term");
    r.m1 = others[0].first;
    r.c1 = others[0].second;
    r.m2 = others[1].first;
    r.c2 = others[1].second;
    rows.push_back(std::move(r));
  }

  // Identify the shared tail monomial a_{n+1}.
  Monomial tail;
  if (n >= 2) {
    std::map<Monomial, int> count;
    for (const Row& r : rows) {
      ++count[r.m1];
      ++count[r.m2];
    }
    std::vector<Monomial> shared;
    for (const auto& [m, k] : count)
      if (k == static_cast<int>(rows.size())) shared.push_back(m);
    if (shared.size() != 1)
      fail("RegimeMismatch",
                 "rows do not share exactly one common tail monomial");
    tail = shared[0];
  } else {
    // One row, two candidate (a_1, tail) splits; the private coefficient must
    // be exactly 1.  When both splits qualify, take the graded-lex larger
    // monomial as the tail (deterministic and consistent with re-serialization).
    const Row& r = rows[0];
    const bool first_ok = r.c1.is_one();
    const bool second_ok = r.c2.is_one();
    if (first_ok && second_ok)
      tail = grlex_less(r.m1, r.m2) ? r.m2 : r.m1;
    else if (first_ok)
      tail = r.m2;
    else if (second_ok)
      tail = r.m1;
    else
      fail("RegimeMismatch", "no monomial has coefficient exactly 1");
  }

  UnivariateReduction red;
  red.n = n;

  // Per-row: private monomial with coefficient 1, shared tail coefficient
  // -1/c identical across rows, nonzero alpha.
  Rational tail_coef;
  bool tail_coef_set = false;
  for (const Row& r : rows) {
    Monomial priv;
    Rational priv_c, tc;
    if (r.m1 == tail) {
      priv = r.m2;
      priv_c = r.c2;
      tc = r.c1;
    } else if (r.m2 == tail) {
      priv = r.m1;
      priv_c = r.c1;
      tc = r.c2;
    } else {
      fail("RegimeMismatch", "a row is missing the shared tail monomial");
    }
    if (!priv_c.is_one())
      fail("RegimeMismatch",
                 "the leading monomial of each row must have coefficient exactly 1");
    if (r.alpha.is_zero())
      fail("RegimeMismatch", "alpha coefficients must be nonzero");
    if (!tail_coef_set) {
      tail_coef = tc;
      tail_coef_set = true;
    } else if (tc != tail_coef) {
      fail("RegimeMismatch", "tail coefficients differ between rows");
    }
    red.a.push_back(priv);
    red.alphas.push_back(r.alpha);
  }
  red.a.push_back(tail);
  red.c = -tail_coef.inverse();  // tail term is -x^{a_{n+1}}/c

  // Kernel of the lifted support matrix (columns O, a_1..a_{n+1}; row of 1s).
  IntMatrix ahat(static_cast<size_t>(n) + 1,
                 std::vector<BigInt>(static_cast<size_t>(n) + 2, BigInt(0)));
  for (int k = 0; k < n; ++k) {
    ahat[static_cast<size_t>(k)][0] = 0;
    for (size_t col = 0; col < red.a.size(); ++col)
      ahat[static_cast<size_t>(k)][col + 1] = to_big(red.a[col].e[static_cast<size_t>(k)]);
  }
  for (size_t col = 0; col < static_cast<size_t>(n) + 2; ++col)
    ahat[static_cast<size_t>(n)][col] = 1;
  try {
    red.b = integer_kernel(ahat);
  } catch (const Error& e) {
    if (e.code() == "NullityNotOne")
      fail("GeneralPositionFailure",
                 "support is affinely degenerate: kernel is not 1-dimensional");
    throw;
  }
  for (const BigInt& bi : red.b)
    if (sgn(bi) == 0)
      fail("GeneralPositionFailure",
                 "kernel vector has a zero coordinate (n+1 support points lie on a hyperplane)");

  // Repeated alpha values merge their kernel coefficients in the Vandermonde
  // argument; a vanishing merged sum falls outside the theorem's genericity.
  {
    std::map<Rational, BigInt> merged;
    for (int l = 1; l <= n; ++l) {
      auto [it, inserted] = merged.emplace(red.alphas[static_cast<size_t>(l - 1)],
                                           red.b[static_cast<size_t>(l)]);
      if (!inserted) it->second += red.b[static_cast<size_t>(l)];
    }
    for (const auto& [al, sum] : merged)
      if (sgn(sum) == 0)
        fail("GeneralPositionFailure",
                   "repeated alpha values with vanishing merged kernel coefficient");
  }

  BigInt abs_sum(0);
  for (const BigInt& bi : red.b) abs_sum += abs(bi);
  if (!fits_ll(abs_sum) || to_ll(abs_sum) > kMaxClearedDegree)
    fail("TooLarge", "kernel entries too large to expand the cleared identity");

  // C = c^{b_1 + ... + b_n}.
  BigInt expnt(0);
  for (int l = 1; l <= n; ++l) expnt += red.b[static_cast<size_t>(l)];
  red.C = red.c.pow(to_ll(expnt));

  // lhs / rhs of the cleared identity.
  const long long b_tail = to_ll(red.b[static_cast<size_t>(n) + 1]);
  SparsePoly lhs = u_power(std::max(b_tail, 0LL));
  SparsePoly rhs = u_power(std::max(-b_tail, 0LL));
  for (int l = 1; l <= n; ++l) {
    const long long bl = to_ll(red.b[static_cast<size_t>(l)]);
    const SparsePoly factor = linear_factor(red.c * red.alphas[static_cast<size_t>(l - 1)]);
    if (bl > 0)
      lhs = lhs * factor.pow(static_cast<unsigned long long>(bl));
    else
      rhs = rhs * factor.pow(static_cast<unsigned long long>(-bl));
  }
  red.cleared_lhs = lhs;
  red.cleared_rhs = rhs;
  red.cleared = lhs - rhs.scaled(red.C);
  if (red.cleared.is_zero())
    throw std::logic_error("cleared identity collapsed to zero");
  return red;
}

long long multiplicity_at(const SparsePoly& f, const Rational& zeta) {
  if (!f.is_univariate()) fail("BadInput", "multiplicity_at needs a univariate polynomial");
  if (f.is_zero()) fail("ZeroPolynomial", "multiplicity_at of the zero polynomial");
  const long long m0 = f.min_exp();
  if (zeta.is_zero()) return std::max(m0, 0LL);

  long long offset = 0;
  std::vector<Rational> c = f.dense_coeffs(offset);
  long long mult = 0;
  // Repeated synthetic division by (u - zeta) while the remainder vanishes.
  while (c.size() > 1 || !c[0].is_zero()) {
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational acc(0);
    for (size_t i = c.size(); i-- > 1;) {
      acc = c[i] + zeta * acc;
      q[i - 1] = acc;
    }
    Rational rem = c[0] + zeta * acc;
    if (!rem.is_zero()) break;
    ++mult;
    c = std::move(q);
    if (c.empty()) break;  // f was a power of (u - zeta) exactly
  }
  return mult;
}

long long mult_bound(const std::vector<Monomial>& A, int n) {
  if (n < 1) fail("BadInput", "mult_bound needs n >= 1");
  for (const Monomial& m : A)
    if (m.nvars() != static_cast<size_t>(n))
      fail("BadInput", "support monomial has the wrong number of variables");
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = i + 1; j < A.size(); ++j)
      if (A[i] == A[j]) fail("BadInput", "support points must be distinct");
  if (A.size() != static_cast<size_t>(n) + 1 && A.size() != static_cast<size_t>(n) + 2)
    fail("UnsupportedSupportSize", "mult_bound handles #A = n+1 and #A = n+2 only");

  // Every (n+1)-point subset must affinely span R^n: the n difference
  // vectors from the subset's first point must have nonzero determinant.
  const size_t t = A.size();
  std::vector<size_t> subset(static_cast<size_t>(n) + 1);
  // Subsets of size n+1 out of t (t - n - 1 is 0 or 1, so at most t subsets).
  for (size_t skip = 0; skip < t; ++skip) {
    if (t == static_cast<size_t>(n) + 1 && skip > 0) break;  // only one subset
    size_t w = 0;
    for (size_t i = 0; i < t; ++i) {
      if (t == static_cast<size_t>(n) + 2 && i == skip) continue;
      subset[w++] = i;
    }
    IntMatrix D(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n)));
    for (int r = 1; r <= n; ++r)
      for (int k = 0; k < n; ++k)
        D[static_cast<size_t>(r - 1)][static_cast<size_t>(k)] =
            to_big(A[subset[static_cast<size_t>(r)]].e[static_cast<size_t>(k)] -
                   A[subset[0]].e[static_cast<size_t>(k)]);
    if (sgn(int_det(D)) == 0)
      fail("GeneralPositionFailure",
                 "n+1 support points lie on an affine hyperplane");
  }
  return A.size() == static_cast<size_t>(n) + 1 ? 1 : static_cast<long long>(n) + 1;
}

SharpnessReport sharpness_system(int n) {
  if (n < 1) fail("BadInput", "sharpness_system needs n >= 1");
  if (n > 100000) fail("TooLarge", "sharpness_system degree cap exceeded");

  SharpnessReport rep;
  rep.n = n;
  rep.expected_multiplicity = static_cast<long long>(n) + 1;
  {
    std::ostringstream os;
    os << "theta*x_i = zeta_" << (n + 1) << " - zeta_i + 1/(x_1*...*x_" << n
       << ") for i = 1.." << n << ", zeta_1..zeta_" << (n + 1) << " the (" << (n + 1)
       << ")-th roots of unity, theta any " << n
       << "-th root of -1; reduced equation g(u) = u * prod_i (u + zeta_" << (n + 1)
       << " - zeta_i) + 1 with g(u - zeta_" << (n + 1) << ") = u^" << (n + 1);
    rep.system_description = os.str();
  }

  if (n == 1) {
    // zeta_2 = -1 distinguished, zeta_1 = 1: g(u) = u*(u - 2) + 1 = (u - 1)^2,
    // with -zeta_2 = 1 the double root.
    SparsePoly g(1);
    g.add_term(Monomial({2}), Rational(1));
    g.add_term(Monomial({1}), Rational(-2));
    g.add_term(Monomial({0}), Rational(1));
    rep.exact_g = g;
    rep.exact_multiplicity = multiplicity_at(g, Rational(1));
  }

  if (n >= 2) {
    // Floating tier: zeta_k = exp(2*pi*i*k/(n+1)), zeta_{n+1} = 1 distinguished.
    using C = std::complex<double>;
    const double tau = 6.283185307179586476925286766559;
    std::vector<C> g{C(1.0, 0.0)};  // running product, ascending coefficients
    for (int i = 1; i <= n; ++i) {
      const double ang = tau * static_cast<double>(i) / static_cast<double>(n + 1);
      const C zi(std::cos(ang), std::sin(ang));
      const C a0 = C(1.0, 0.0) - zi;  // constant term of (u + zeta_{n+1} - zeta_i)
      std::vector<C> next(g.size() + 1, C(0.0, 0.0));
      for (size_t k = 0; k < g.size(); ++k) {
        next[k] += g[k] * a0;
        next[k + 1] += g[k];
      }
      g = std::move(next);
    }
    // g(u) = u * prod + 1.
    g.insert(g.begin(), C(0.0, 0.0));
    g[0] += C(1.0, 0.0);
    // Compose h(u) = g(u - 1) by Horner with polynomial coefficients.
    std::vector<C> h{C(0.0, 0.0)};
    for (size_t k = g.size(); k-- > 0;) {
      // h = h*(u - 1) + g[k]
      std::vector<C> nh(h.size() + 1, C(0.0, 0.0));
      for (size_t i = 0; i < h.size(); ++i) {
        nh[i + 1] += h[i];
        nh[i] -= h[i];
      }
      nh[0] += g[k];
      h = std::move(nh);
      while (h.size() > 1 && std::abs(h.back()) == 0.0) h.pop_back();
    }
    // h should be u^{n+1}.
    double err = 0.0;
    for (size_t k = 0; k < h.size(); ++k) {
      C expect = (k == static_cast<size_t>(n) + 1) ? C(1.0, 0.0) : C(0.0, 0.0);
      err = std::max(err, std::abs(h[k] - expect));
    }
    if (h.size() < static_cast<size_t>(n) + 2) err = std::max(err, 1.0);
    rep.float_checked = true;
    rep.float_max_err = err;
  }

  if (n <= 6) {
    // Exact tier: prod_{d | n+1} Phi_d == u^{n+1} - 1.
    std::map<int, std::vector<Rational>> memo;
    std::vector<Rational> prod{Rational(1)};
    for (int d = 1; d <= n + 1; ++d)
      if ((n + 1) % d == 0) prod = dense_mul(prod, cyclotomic(d, memo));
    dense_trim(prod);
    std::vector<Rational> target = dense_um_minus_1(n + 1);
    rep.cyclotomic_checked = true;
    rep.cyclotomic_identity_ok = (prod == target);
  }
  return rep;
}

}  // namespace ptrop
