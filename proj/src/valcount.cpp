#include "ptrop/valcount.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "ptrop/error.hpp"
#include "ptrop/newton.hpp"
#include "ptrop/tropical.hpp"

namespace ptrop {

namespace {

std::vector<Monomial> desc_order(const PolySystem& F) {
  std::vector<Monomial> s = F.union_support();
  std::sort(s.begin(), s.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  return s;
}

std::vector<SparsePoly> nonzero_rows(const PolySystem& S) {
  std::vector<SparsePoly> out;
  for (const SparsePoly& f : S.polys())
    if (!f.is_zero()) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Binomial systems.  A two-term row  A x^u + B x^w = 0  pins the monomial
// x^{u-w} to the constant -B/A.  The system x^{g_l} = c_l has a root in the
// torus over an algebraically closed valued field iff prod c_l^{lambda_l} = 1
// for every integer relation lambda among the g_l; a basis of the full
// relation lattice falls out of the unimodular row reduction of the g-matrix.
// ---------------------------------------------------------------------------

struct BinomialSystem {
  IntMatrix g;              // one difference vector per row
  std::vector<Rational> c;  // matching constants, all nonzero
  IntRowEchelon ech;        // row reduction of g
  bool consistent = false;
};

BinomialSystem binomial_system(const std::vector<SparsePoly>& rows, int n) {
  BinomialSystem B;
  for (const SparsePoly& f : rows) {
    auto it = f.terms().begin();
    Monomial m1 = it->first;
    Rational c1 = it->second;
    ++it;
    Monomial m2 = it->first;
    Rational c2 = it->second;
    if (grlex_less(m1, m2)) {
      std::swap(m1, m2);
      std::swap(c1, c2);
    }
    Monomial diff = m1 - m2;  // x^diff = -c2/c1
    std::vector<BigInt> grow(n);
    for (int k = 0; k < n; ++k) grow[k] = to_big(diff.e[k]);
    B.g.push_back(std::move(grow));
    B.c.push_back(-(c2 / c1));
  }
  B.ech = int_row_echelon(B.g);
  B.consistent = true;
  const size_t r = B.g.size();
  for (size_t l = B.ech.rank; l < r && B.consistent; ++l) {
    Rational prod(1);
    for (size_t k = 0; k < r; ++k) {
      const BigInt& lam = B.ech.T[l][k];
      if (sgn(lam) == 0) continue;
      if (!lam.fits_slong_p())
        fail("TooLarge", "relation coefficient exceeds machine range");
      prod = prod * B.c[k].pow(static_cast<long long>(lam.get_si()));
    }
    if (!prod.is_one()) B.consistent = false;
  }
  return B;
}

// ---------------------------------------------------------------------------
// Dimension reduction: when the support differences of `rows` span a proper
// sublattice of rank d < n, a unimodular change of torus coordinates moves
// the whole system into the first d variables, and the remaining n - d
// coordinates act freely.
// ---------------------------------------------------------------------------

std::vector<SparsePoly> reduce_coordinates(const std::vector<SparsePoly>& rows,
                                           int n, size_t d) {
  PolySystem K(n);
  for (const SparsePoly& f : rows) K.push_back(f);
  std::vector<Monomial> S = K.union_support();
  const Monomial s1 = S.front();

  std::vector<std::vector<BigInt>> basis;
  size_t have = 0;
  for (size_t idx = 1; idx < S.size() && have < d; ++idx) {
    Monomial diff = S[idx] - s1;
    std::vector<BigInt> v(n);
    for (int k = 0; k < n; ++k) v[k] = to_big(diff.e[k]);
    std::vector<std::vector<BigInt>> trial = basis;
    trial.push_back(std::move(v));
    if (int_row_echelon(trial).rank > have) {
      basis = std::move(trial);
      ++have;
    }
  }
  if (have != d) throw std::logic_error("difference rank dropped during reduction");

  UnimodularTransform UT = hermite_unimodular(basis);
  std::vector<SparsePoly> out;
  for (const SparsePoly& f : rows) {
    SparsePoly g = monomial_change(f.divide_by_monomial(s1), UT.U);
    SparsePoly h(static_cast<int>(d));
    for (const auto& [m, c] : g.terms()) {
      std::vector<long long> head(m.e.begin(), m.e.begin() + d);
      for (size_t k = d; k < m.e.size(); ++k)
        if (m.e[k] != 0)
          throw std::logic_error("coordinate reduction left a tail exponent");
      h.add_term(Monomial(std::move(head)), c);
    }
    out.push_back(std::move(h));
  }
  return out;
}

// Rank of the difference lattice of the union support, and the support size.
struct SupportSpan {
  size_t t = 0;
  size_t rank = 0;
};

SupportSpan support_span(const std::vector<SparsePoly>& rows, int n) {
  PolySystem K(n);
  for (const SparsePoly& f : rows) K.push_back(f);
  std::vector<Monomial> S = K.union_support();
  SupportSpan span;
  span.t = S.size();
  if (S.size() < 2) return span;
  IntMatrix D;
  for (size_t idx = 1; idx < S.size(); ++idx) {
    Monomial diff = S[idx] - S.front();
    std::vector<BigInt> v(n);
    for (int k = 0; k < n; ++k) v[k] = to_big(diff.e[k]);
    D.push_back(std::move(v));
  }
  span.rank = int_row_echelon(D).rank;
  return span;
}

// ---------------------------------------------------------------------------
// Groebner fallback for torus emptiness.  Used only for the residual shapes
// (support larger than #vars + 1 with full-rank differences) that the direct
// case analysis does not settle; the systems reaching it are tiny.  Degree
// reverse lexicographic order, exact rational arithmetic, monic basis polys.
// ---------------------------------------------------------------------------

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (size_t k = a.e.size(); k-- > 0;) {
      long long diff = a.e[k] - b.e[k];
      if (diff != 0) return diff > 0;
    }
    return false;
  }
};

using GPoly = std::map<Monomial, Rational, GrevlexLess>;

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.e.size(); ++k)
    if (a.e[k] > b.e[k]) return false;
  return true;
}

Monomial mono_sub(const Monomial& a, const Monomial& b) { return a - b; }

void add_scaled(GPoly& f, const GPoly& g, const Monomial& shift, const Rational& s) {
  for (const auto& [m, c] : g) {
    Monomial key = m + shift;
    auto it = f.find(key);
    if (it == f.end()) {
      Rational val = c * s;
      if (!val.is_zero()) f.emplace(std::move(key), std::move(val));
    } else {
      it->second = it->second + c * s;
      if (it->second.is_zero()) f.erase(it);
    }
  }
}

void make_monic(GPoly& f) {
  if (f.empty()) return;
  Rational lc = f.rbegin()->second;
  if (lc.is_one()) return;
  for (auto& [m, c] : f) c = c / lc;
}

GPoly normal_form(GPoly f, const std::vector<GPoly>& basis) {
  GPoly rem;
  while (!f.empty()) {
    auto lt = std::prev(f.end());
    bool reduced = false;
    for (const GPoly& g : basis) {
      const Monomial& glt = g.rbegin()->first;
      if (!divides(glt, lt->first)) continue;
      Monomial shift = mono_sub(lt->first, glt);
      Rational s = -(lt->second / g.rbegin()->second);
      add_scaled(f, g, shift, s);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.emplace(lt->first, lt->second);
      f.erase(lt);
    }
  }
  return rem;
}

// True iff 1 lies in the ideal generated by `gens` (so the affine variety
// over an algebraically closed field is empty).
bool one_in_ideal(std::vector<GPoly> gens) {
  std::vector<GPoly> basis;
  for (GPoly& g : gens) {
    if (g.empty()) continue;
    if (g.rbegin()->first.total_degree() == 0) return true;
    make_monic(g);
    basis.push_back(std::move(g));
  }
  if (basis.empty()) return false;

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) pairs.emplace_back(a, b);

  size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > 20000 || basis.size() > 300)
      fail("TooLarge", "ideal-membership search exceeded its budget");
    auto [a, b] = pairs.front();
    pairs.pop_front();

    const Monomial& la = basis[a].rbegin()->first;
    const Monomial& lb = basis[b].rbegin()->first;
    std::vector<long long> lcm(la.e.size());
    bool coprime = true;
    for (size_t k = 0; k < lcm.size(); ++k) {
      lcm[k] = std::max(la.e[k], lb.e[k]);
      if (la.e[k] > 0 && lb.e[k] > 0) coprime = false;
      if (lcm[k] > 200) fail("TooLarge", "ideal-membership degrees exploded");
    }
    if (coprime) continue;  // S-polynomial reduces to zero

    Monomial g(lcm);
    GPoly s;
    add_scaled(s, basis[a], mono_sub(g, la), Rational(1));
    add_scaled(s, basis[b], mono_sub(g, lb), Rational(-1));
    GPoly nf = normal_form(std::move(s), basis);
    if (nf.empty()) continue;
    if (nf.rbegin()->first.total_degree() == 0) return true;
    make_monic(nf);
    basis.push_back(std::move(nf));
    for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }
  return false;
}

// Emptiness of the torus zero set of `rows` in d variables via saturation:
// adjoin w with  x_1 ... x_d w = 1  and test 1 in the ideal.
bool torus_empty_groebner(const std::vector<SparsePoly>& rows, int d) {
  std::vector<GPoly> gens;
  for (const SparsePoly& f : rows) {
    std::vector<long long> mn(d, 0);
    for (const auto& [m, c] : f.terms())
      for (int k = 0; k < d; ++k) mn[k] = std::min(mn[k], m.e[k]);
    GPoly g;
    for (const auto& [m, c] : f.terms()) {
      std::vector<long long> e(d + 1, 0);
      for (int k = 0; k < d; ++k) e[k] = m.e[k] - mn[k];
      g.emplace(Monomial(std::move(e)), c);
    }
    gens.push_back(std::move(g));
  }
  GPoly sat;
  sat.emplace(Monomial(std::vector<long long>(d + 1, 1)), Rational(1));
  sat.emplace(Monomial(std::vector<long long>(d + 1, 0)), Rational(-1));
  gens.push_back(std::move(sat));
  return one_in_ideal(std::move(gens));
}

// ---------------------------------------------------------------------------
// Torus emptiness of an arbitrary small system (any support), exact:
//   - Gauss-Jordan; a monomial row kills the torus, no surviving row is the
//     whole torus.
//   - all-binomial rows: relation-lattice consistency.
//   - a single surviving non-monomial row always has a torus zero.
//   - support differences of rank d' < #vars: unimodular reduction to d'
//     variables (a free subtorus factors off) and recursion.
//   - full-rank differences with support of exactly d+1 points: the rows are
//     independent affine-linear forms in the d free monomials, and any
//     coordinate form in their span would have surfaced as a monomial row,
//     so the solution space meets the torus.
//   - anything else: Groebner saturation.
// ---------------------------------------------------------------------------

bool torus_empty(const std::vector<SparsePoly>& rows_in, int d) {
  std::vector<SparsePoly> rows;
  for (const SparsePoly& f : rows_in)
    if (!f.is_zero()) rows.push_back(f);
  if (rows.empty()) return false;
  if (d == 0) return true;  // a nonzero constant row on a zero-dim torus

  PolySystem K(d);
  for (SparsePoly& f : rows) K.push_back(std::move(f));
  GaussJordanResult gj = gauss_jordan_system(K, desc_order(K));
  rows = nonzero_rows(gj.system);
  if (rows.empty()) return false;

  bool all_two = true;
  for (const SparsePoly& f : rows) {
    if (f.term_count() == 1) return true;
    if (f.term_count() != 2) all_two = false;
  }
  if (all_two) return !binomial_system(rows, d).consistent;
  if (rows.size() == 1) return false;

  SupportSpan span = support_span(rows, d);
  if (span.rank < static_cast<size_t>(d))
    return torus_empty(reduce_coordinates(rows, d, span.rank),
                       static_cast<int>(span.rank));
  if (span.t == static_cast<size_t>(d) + 1) return false;
  return torus_empty_groebner(rows, d);
}

}  // namespace

// ---------------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------------

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::T_LE_N: return "T_LE_N";
    case Regime::T_EQ_N_PLUS_1: return "T_EQ_N_PLUS_1";
    case Regime::T_EQ_N_PLUS_2: return "T_EQ_N_PLUS_2";
    case Regime::LARGER: return "LARGER";
  }
  return "UNKNOWN";
}

std::vector<Monomial> canonical_support(const PolySystem& F) {
  std::vector<Monomial> s = F.union_support();
  std::sort(s.begin(), s.end(), grlex_less);
  return s;
}

SupportClass classify(const PolySystem& F) {
  SupportClass sc;
  sc.n = F.nvars();
  std::vector<Monomial> A = canonical_support(F);
  sc.t = A.size();

  const size_t n = static_cast<size_t>(sc.n);
  if (sc.t <= n)
    sc.regime = Regime::T_LE_N;
  else if (sc.t == n + 1)
    sc.regime = Regime::T_EQ_N_PLUS_1;
  else if (sc.t == n + 2)
    sc.regime = Regime::T_EQ_N_PLUS_2;
  else
    sc.regime = Regime::LARGER;

  if (sc.regime != Regime::T_EQ_N_PLUS_2 || n == 0) return sc;

  // Exhaustive general-position check: every collection of n distinct index
  // pairs must give linearly independent difference vectors.
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t u = 0; u < A.size(); ++u)
    for (size_t v = u + 1; v < A.size(); ++v) pairs.emplace_back(u, v);

  double combos = 1.0;
  for (size_t k = 0; k < n; ++k)
    combos *= static_cast<double>(pairs.size() - k) / static_cast<double>(k + 1);
  if (combos > 5e6) {
    sc.general_position_checked = false;
    sc.general_position = false;
    return sc;
  }

  std::vector<size_t> idx(n);
  for (size_t k = 0; k < n; ++k) idx[k] = k;
  bool ok = true;
  while (ok) {
    IntMatrix M;
    for (size_t k = 0; k < n; ++k) {
      Monomial diff = A[pairs[idx[k]].first] - A[pairs[idx[k]].second];
      std::vector<BigInt> row(n);
      for (size_t c = 0; c < n; ++c) row[c] = to_big(diff.e[c]);
      M.push_back(std::move(row));
    }
    if (sgn(int_det(M)) == 0) {
      ok = false;
      break;
    }
    // next combination
    size_t k = n;
    while (k-- > 0) {
      if (idx[k] != pairs.size() - n + k) {
        ++idx[k];
        for (size_t l = k + 1; l < n; ++l) idx[l] = idx[l - 1] + 1;
        break;
      }
      if (k == 0) goto done;
    }
  }
done:
  sc.general_position = ok;
  sc.general_position_checked = true;
  return sc;
}

// ---------------------------------------------------------------------------
// SPS reduction.
// ---------------------------------------------------------------------------

PolySystem sps_reduce(const SpsExpression& e) {
  if (e.k < 1 || e.m < 1 || e.t < 1)
    fail("BadInput", "sps_reduce needs positive shape parameters k, m, t");
  if (e.factors.size() != static_cast<size_t>(e.k))
    fail("BadInput", "sps_reduce factor grid has wrong row count");
  for (const auto& row : e.factors) {
    if (row.size() != static_cast<size_t>(e.m))
      fail("BadInput", "sps_reduce factor grid has wrong column count");
    for (const SparsePoly& f : row) {
      if (!f.is_univariate()) fail("BadInput", "sps_reduce factors must be univariate");
      if (f.is_zero()) fail("BadInput", "sps_reduce factors must be nonzero");
      if (f.term_count() > static_cast<size_t>(e.t))
        fail("BadInput", "sps_reduce factor exceeds the declared term bound");
    }
  }
  if (e.k > 100000 / e.m) fail("TooLarge", "sps_reduce variable count is enormous");

  const int nv = static_cast<int>(e.k * e.m + 1);
  PolySystem out(nv);
  for (long long i = 0; i < e.k; ++i) {
    for (long long j = 0; j < e.m; ++j) {
      std::vector<long long> ye(nv, 0);
      ye[static_cast<size_t>(1 + i * e.m + j)] = 1;
      SparsePoly g = SparsePoly::single_term(Monomial(std::move(ye)), Rational(1));
      for (const auto& [m, c] : e.factors[i][j].terms()) {
        std::vector<long long> xe(nv, 0);
        xe[0] = m.e[0];
        g.add_term(Monomial(std::move(xe)), -c);
      }
      out.push_back(std::move(g));
    }
  }
  SparsePoly top(nv);
  for (long long i = 0; i < e.k; ++i) {
    std::vector<long long> pe(nv, 0);
    for (long long j = 0; j < e.m; ++j) pe[static_cast<size_t>(1 + i * e.m + j)] = 1;
    top.add_term(Monomial(std::move(pe)), Rational(1));
  }
  out.push_back(std::move(top));
  return out;
}

// ---------------------------------------------------------------------------
// Exact counting for t <= n+1.
// ---------------------------------------------------------------------------

CountResult count_small_support(const PolySystem& F, long p) {
  if (!is_prime(p)) fail("NonPrime", "count_small_support needs a prime");
  if (F.nvars() < 1) fail("BadInput", "count_small_support needs at least one variable");
  SupportClass sc = classify(F);
  if (sc.regime != Regime::T_LE_N && sc.regime != Regime::T_EQ_N_PLUS_1)
    fail("RegimeMismatch", "count_small_support needs t <= n+1, got t = " +
                               std::to_string(sc.t) + " with n = " +
                               std::to_string(sc.n));
  const int n = F.nvars();

  CountResult res;
  std::vector<SparsePoly> rows;
  for (const SparsePoly& f : F.polys())
    if (!f.is_zero()) rows.push_back(f);
  if (rows.empty()) {
    res.kind = CountResult::Kind::INFINITE;
    return res;
  }

  PolySystem K(n);
  for (const SparsePoly& f : rows) K.push_back(f);
  GaussJordanResult gj = gauss_jordan_system(K, desc_order(K));
  rows = nonzero_rows(gj.system);
  if (rows.empty()) {
    res.kind = CountResult::Kind::INFINITE;
    return res;
  }

  bool all_two = true;
  for (const SparsePoly& f : rows) {
    if (f.term_count() == 1) {
      res.kind = CountResult::Kind::EXACT;
      res.value = 0;
      return res;
    }
    if (f.term_count() != 2) all_two = false;
  }

  if (all_two) {
    BinomialSystem B = binomial_system(rows, n);
    if (!B.consistent) {
      res.kind = CountResult::Kind::EXACT;
      res.value = 0;
      return res;
    }
    if (B.ech.rank < static_cast<size_t>(n)) {
      res.kind = CountResult::Kind::INFINITE;
      return res;
    }
    // Full-rank consistent binomial system: the valuation vector is the
    // unique solution of  g_l . v = ord_p(c_l).
    RationalMatrix M(B.g.size(), static_cast<size_t>(n) + 1);
    for (size_t l = 0; l < B.g.size(); ++l) {
      for (int c = 0; c < n; ++c) M.at(l, c) = Rational(B.g[l][c]);
      M.at(l, static_cast<size_t>(n)) = ord(B.c[l], p).finite();
    }
    RrefResult R = rref(std::move(M));
    if (R.pivot_cols.size() != static_cast<size_t>(n))
      throw std::logic_error("consistent binomial system with deficient ord solve");
    std::vector<Rational> v(n);
    for (size_t r = 0; r < R.pivot_cols.size(); ++r) {
      if (R.pivot_cols[r] >= static_cast<size_t>(n))
        throw std::logic_error("consistent binomial system solved inconsistently");
      v[R.pivot_cols[r]] = R.mat.at(r, static_cast<size_t>(n));
    }
    res.kind = CountResult::Kind::EXACT;
    res.value = 1;
    res.vec = std::move(v);
    return res;
  }

  // A row with >= 3 terms exists (so n >= 2 and rows never fill the support).
  if (rows.size() == 1) {
    res.kind = CountResult::Kind::INFINITE;  // one hypersurface, n >= 2
    return res;
  }
  SupportSpan span = support_span(rows, n);
  if (span.rank == static_cast<size_t>(n)) {
    // Independent differences turn the rows into independent affine-linear
    // forms in the n free monomials; with no monomial rows the solution
    // space meets the torus in positive dimension.
    res.kind = CountResult::Kind::INFINITE;
    return res;
  }
  bool empty = torus_empty(reduce_coordinates(rows, n, span.rank),
                           static_cast<int>(span.rank));
  if (empty) {
    res.kind = CountResult::Kind::EXACT;
    res.value = 0;
  } else {
    // Nonempty with a free subtorus factor of dimension n - rank >= 1.
    res.kind = CountResult::Kind::INFINITE;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Trinomial reductions for t == n+2.
// ---------------------------------------------------------------------------

FijReduction fij_reduction(const PolySystem& F, size_t i, size_t j) {
  const int n = F.nvars();
  std::vector<Monomial> A = canonical_support(F);
  if (A.size() != static_cast<size_t>(n) + 2)
    fail("RegimeMismatch", "fij_reduction needs t == n+2, got t = " +
                               std::to_string(A.size()));
  if (i < 1 || j < 1 || i > A.size() || j > A.size() || i == j)
    fail("BadInput", "fij_reduction indices must be distinct and in 1..t");

  const Monomial ai = A[i - 1], aj = A[j - 1];
  std::vector<Monomial> order;
  for (const Monomial& m : A)
    if (m != ai && m != aj) order.push_back(m);
  std::sort(order.begin(), order.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  order.push_back(ai);
  order.push_back(aj);

  GaussJordanResult gj = gauss_jordan_system(F, order);

  FijReduction R;
  R.system = gj.system;
  R.support = std::move(A);
  R.i = i;
  R.j = j;

  size_t star_rows = 0;
  for (size_t idx = 0; idx < R.system.size(); ++idx) {
    const SparsePoly& f = R.system[idx];
    if (f.is_zero()) {
      R.degeneracies.emplace_back(idx, 'z');
      continue;
    }
    std::vector<Monomial> sup = f.support();
    bool has_i = std::find(sup.begin(), sup.end(), ai) != sup.end();
    bool has_j = std::find(sup.begin(), sup.end(), aj) != sup.end();
    if (sup.size() == 3 && has_i && has_j) {
      ++star_rows;
      continue;
    }
    char kind = 'o';
    if (sup.size() == 1) {
      kind = 'm';
    } else if (sup.size() == 2) {
      if (has_i && has_j)
        kind = 'c';
      else if (has_i)
        kind = 'a';
      else if (has_j)
        kind = 'b';
    }
    R.degeneracies.emplace_back(idx, kind);
  }
  R.star = R.degeneracies.empty() && star_rows == static_cast<size_t>(n);
  return R;
}

std::vector<SlabHyperplane> slab_hyperplanes(const FijReduction& G, long p) {
  if (!is_prime(p)) fail("NonPrime", "slab_hyperplanes needs a prime");
  if (!G.star)
    fail("BadInput", "slab_hyperplanes needs the trinomial (star) pattern");
  const Monomial ai = G.support[G.i - 1], aj = G.support[G.j - 1];
  const Monomial normal = ai - aj;

  std::vector<SlabHyperplane> out;
  for (size_t idx = 0; idx < G.system.size(); ++idx) {
    const SparsePoly& f = G.system[idx];
    if (f.is_zero()) continue;
    Rational beta = f.coeff(ai), gamma = f.coeff(aj);
    SlabHyperplane h;
    h.normal = normal.e;
    h.offset = ord(gamma / beta, p).finite();
    h.row = idx;
    out.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Candidate superset for t == n+2.
// ---------------------------------------------------------------------------

CountResult count_n_plus_2(const PolySystem& F, long p) {
  if (!is_prime(p)) fail("NonPrime", "count_n_plus_2 needs a prime");
  const int n = F.nvars();
  if (n < 1) fail("BadInput", "count_n_plus_2 needs at least one variable");
  SupportClass sc = classify(F);
  if (sc.regime != Regime::T_EQ_N_PLUS_2)
    fail("RegimeMismatch", "count_n_plus_2 needs t == n+2, got t = " +
                               std::to_string(sc.t) + " with n = " +
                               std::to_string(sc.n));
  if (F.size() != static_cast<size_t>(n))
    fail("BadInput", "count_n_plus_2 needs exactly n polynomials");
  for (const SparsePoly& f : F.polys())
    if (f.is_zero()) fail("BadInput", "count_n_plus_2 forbids zero polynomials");

  CountResult res;
  res.kind = CountResult::Kind::BOUNDED;
  res.bound = assertion2_bound(n);

  for (const SparsePoly& f : F.polys()) {
    if (f.term_count() == 1) {
      res.superset = true;  // a monomial equation has no torus roots
      return res;
    }
  }

  if (n == 1) {
    ValuationCount vc = root_valuations(newton_polygon(F[0], p));
    for (const auto& [val, cnt] : vc) res.candidates.push_back({val});
    res.superset = true;  // Newton polygon valuations are exact
    return res;
  }

  const std::vector<Monomial> A = canonical_support(F);
  std::vector<FijReduction> stars;
  for (size_t i = 1; i <= A.size(); ++i)
    for (size_t j = i + 1; j <= A.size(); ++j) {
      FijReduction R = fij_reduction(F, i, j);
      if (R.star) stars.push_back(std::move(R));
    }

  if (n == 2) {
    std::vector<TropCurve> curves;
    for (const SparsePoly& f : F.polys()) curves.push_back(plane_trop_curve(f, p));
    for (const FijReduction& R : stars)
      for (const SparsePoly& f : R.system.polys())
        if (!f.is_zero()) curves.push_back(plane_trop_curve(f, p));
    IntersectionReport rep = intersect_many(curves);
    for (const IntersectionPoint& pt : rep.points)
      res.candidates.push_back({pt.at.x, pt.at.y});
    res.superset = rep.superset;
    return res;
  }

  // n >= 3: each root valuation ties at least two terms of every trinomial
  // row, so it solves one of the 3^n per-row tie systems of each star
  // reduction.  A reduction certifies a finite superset when every tie
  // system is uniquely solvable or inconsistent.
  if (stars.empty())
    fail("GeneralPositionFailure",
         "no monomial pair eliminates to the trinomial pattern");

  struct RowData {
    Monomial pivot;
    Rational beta, gamma;
  };

  bool any_certified = false;
  std::set<std::vector<Rational>> inter;
  for (const FijReduction& R : stars) {
    const Monomial ai = R.support[R.i - 1], aj = R.support[R.j - 1];
    std::vector<RowData> rd;
    for (const SparsePoly& f : R.system.polys()) {
      if (f.is_zero()) continue;
      RowData d;
      for (const Monomial& m : f.support())
        if (m != ai && m != aj) d.pivot = m;
      d.beta = f.coeff(ai);
      d.gamma = f.coeff(aj);
      rd.push_back(std::move(d));
    }

    bool certified = true;
    std::set<std::vector<Rational>> sols;
    long long total = 1;
    for (int l = 0; l < n; ++l) total *= 3;
    for (long long code = 0; code < total && certified; ++code) {
      RationalMatrix M(static_cast<size_t>(n), static_cast<size_t>(n) + 1);
      long long rem = code;
      for (int l = 0; l < n; ++l) {
        int digit = static_cast<int>(rem % 3);
        rem /= 3;
        Monomial normal;
        Rational rhs;
        if (digit == 0) {
          normal = rd[l].pivot - ai;
          rhs = ord(rd[l].beta, p).finite();
        } else if (digit == 1) {
          normal = rd[l].pivot - aj;
          rhs = ord(rd[l].gamma, p).finite();
        } else {
          normal = ai - aj;
          rhs = ord(rd[l].gamma / rd[l].beta, p).finite();
        }
        for (int c = 0; c < n; ++c) M.at(l, c) = Rational(normal.e[c]);
        M.at(l, static_cast<size_t>(n)) = rhs;
      }
      RrefResult RR = rref(std::move(M));
      bool inconsistent = false;
      for (size_t pc : RR.pivot_cols)
        if (pc == static_cast<size_t>(n)) inconsistent = true;
      if (inconsistent) continue;
      if (RR.pivot_cols.size() < static_cast<size_t>(n)) {
        certified = false;  // a tie system with infinitely many solutions
        break;
      }
      std::vector<Rational> v(n);
      for (size_t r = 0; r < RR.pivot_cols.size(); ++r)
        v[RR.pivot_cols[r]] = RR.mat.at(r, static_cast<size_t>(n));
      sols.insert(std::move(v));
    }
    if (!certified) continue;
    if (!any_certified) {
      inter = std::move(sols);
      any_certified = true;
    } else {
      std::set<std::vector<Rational>> keep;
      for (const auto& v : inter)
        if (sols.count(v)) keep.insert(v);
      inter = std::move(keep);
    }
  }

  if (!any_certified)
    fail("GeneralPositionFailure",
         "no trinomial reduction certifies a finite candidate set");

  for (const auto& v : inter) {
    bool member = true;
    for (const SparsePoly& f : F.polys())
      if (!trop_membership(f, p, v)) member = false;
    for (const FijReduction& R : stars) {
      if (!member) break;
      for (const SparsePoly& f : R.system.polys())
        if (!f.is_zero() && !trop_membership(f, p, v)) member = false;
    }
    if (member) res.candidates.push_back(v);
  }
  res.superset = true;
  return res;
}

// ---------------------------------------------------------------------------
// Closed-form bounds.
// ---------------------------------------------------------------------------

BigInt maybetrivial_bound(long long k, long long m, long long t) {
  if (k < 1 || m < 1 || t < 1)
    fail("BadInput", "maybetrivial_bound needs positive integers");
  BigInt K = to_big(k), M = to_big(m), T = to_big(t);
  BigInt inner = 2 * K * M * (T - 1) + 1;
  return K * (K - 1) * inner / 2;
}

BigInt assertion2_bound(long long n) {
  if (n < 1) fail("BadInput", "assertion2_bound needs n >= 1");
  BigInt half = to_big(n / 2);
  BigInt val;
  mpz_pow_ui(val.get_mpz_t(), half.get_mpz_t(), static_cast<unsigned long>(n));
  val += to_big(n);
  if (val < 2) val = 2;
  return val;
}

}  // namespace ptrop
