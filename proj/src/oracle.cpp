#include "ptrop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ptrop/error.hpp"
#include "ptrop/multiplicity.hpp"
#include "ptrop/newton.hpp"

namespace ptrop {

namespace {

constexpr size_t kMaxDivisors = 200000;
constexpr unsigned long long kMaxResidues = 10000000ULL;  // p^k cap
constexpr unsigned long long kMaxExactBits = 2000000ULL;  // direct-eval size cap

// --- dense integer univariate helpers (ascending coefficients) ---

void trim_z(std::vector<BigInt>& a) {
  while (a.size() > 1 && sgn(a.back()) == 0) a.pop_back();
}

bool is_zero_z(const std::vector<BigInt>& a) {
  return a.size() == 1 && sgn(a[0]) == 0;
}

BigInt content_z(const std::vector<BigInt>& a) {
  BigInt g(0);
  for (const BigInt& x : a) g = gcd(g, x);
  return g;  // 0 only for the zero vector
}

// Divide by content and make the leading coefficient positive.
void make_primitive(std::vector<BigInt>& a) {
  trim_z(a);
  if (is_zero_z(a)) return;
  BigInt g = content_z(a);
  if (sgn(a.back()) < 0) g = -g;
  for (BigInt& x : a) x /= g;
}

// Primitive integer coefficients of f / x^{min_exp}.
std::vector<BigInt> dense_primitive(const SparsePoly& f) {
  long long offset = 0;
  std::vector<Rational> c = f.dense_coeffs(offset);
  BigInt lcm_den(1);
  for (const Rational& r : c) lcm_den = lcm(lcm_den, r.den());
  std::vector<BigInt> out(c.size());
  for (size_t i = 0; i < c.size(); ++i)
    out[i] = c[i].num() * (lcm_den / c[i].den());
  make_primitive(out);
  return out;
}

SparsePoly from_dense(const std::vector<BigInt>& a, long long shift) {
  SparsePoly f(1);
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0)
      f.add_term(Monomial({static_cast<long long>(i) + shift}), Rational(a[i]));
  return f;
}

std::vector<BigInt> deriv_z(const std::vector<BigInt>& a) {
  if (a.size() == 1) return {BigInt(0)};
  std::vector<BigInt> d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * to_big(static_cast<long long>(i));
  trim_z(d);
  return d;
}

// Pseudo-remainder of a by b (deg b <= deg a): repeatedly scale a by lc(b)
// and cancel the leading term.  The result is defined up to a content factor,
// which the primitive PRS strips anyway.
std::vector<BigInt> prem_z(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const BigInt& lb = b.back();
  while (!is_zero_z(a) && a.size() >= b.size()) {
    const BigInt la = a.back();
    const size_t shift = a.size() - b.size();
    for (BigInt& x : a) x *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim_z(a);
  }
  return a;
}

// Gcd of two integer polynomials by the primitive polynomial remainder
// sequence; the result is primitive with positive leading coefficient.
std::vector<BigInt> gcd_z(std::vector<BigInt> a, std::vector<BigInt> b) {
  make_primitive(a);
  make_primitive(b);
  if (is_zero_z(a)) return b;
  if (is_zero_z(b)) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!is_zero_z(b)) {
    std::vector<BigInt> r = prem_z(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

// Exact quotient a / b for integer polynomials with b | a and b primitive.
std::vector<BigInt> exact_div_z(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  trim_z(a);
  if (is_zero_z(a)) return {BigInt(0)};
  if (a.size() < b.size()) throw std::logic_error("exact_div_z: not divisible");
  std::vector<BigInt> q(a.size() - b.size() + 1);
  for (size_t k = q.size(); k-- > 0;) {
    BigInt quo, rem;
    mpz_tdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(),
                a[k + b.size() - 1].get_mpz_t(), b.back().get_mpz_t());
    if (sgn(rem) != 0) throw std::logic_error("exact_div_z: not divisible");
    q[k] = quo;
    if (sgn(quo) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) a[k + j] -= quo * b[j];
  }
  for (const BigInt& x : a)
    if (sgn(x) != 0) throw std::logic_error("exact_div_z: nonzero remainder");
  return q;
}

// All positive divisors of |x| (x nonzero).  Trial division to 10^6, then a
// primality test on the cofactor; a large composite cofactor cannot be
// factored here and raises TooLarge.
std::vector<BigInt> divisors_of(BigInt x) {
  x = abs(x);
  std::map<BigInt, unsigned long> factors;
  for (long d = 2; static_cast<unsigned long long>(d) * static_cast<unsigned long long>(d) <= 1000000000000ULL && d <= 1000000; d == 2 ? d = 3 : d += 2) {
    if (x == 1) break;
    BigInt bd = to_big(d);
    if (bd * bd > x) break;
    while (mpz_divisible_p(x.get_mpz_t(), bd.get_mpz_t())) {
      ++factors[bd];
      x /= bd;
    }
  }
  if (x != 1) {
    if (mpz_probab_prime_p(x.get_mpz_t(), 64) == 0)
      fail("TooLarge", "cannot factor a coefficient for the rational-root search");
    ++factors[x];
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [prime, exp] : factors) {
    const size_t base = divs.size();
    if (base * (exp + 1) > kMaxDivisors)
      fail("TooLarge", "too many divisors in the rational-root search");
    BigInt pw(1);
    for (unsigned long e = 1; e <= exp; ++e) {
      pw *= prime;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Certifies P(num/den) != 0 (cleared form sum P[e] num^e den^{D-e}) modulo a
// few large prime powers; true means proven nonzero.
bool nonzero_mod_certificate(const std::vector<BigInt>& P, const BigInt& num,
                             const BigInt& den) {
  const long mod_primes[] = {2, 3, 5, 7, 11};
  const size_t D = P.size() - 1;
  for (long mp : mod_primes) {
    BigInt m(1);
    // ~2100-bit modulus.
    int e = static_cast<int>(2100.0 / (std::log2(static_cast<double>(mp)))) + 1;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(mp), static_cast<unsigned long>(e));
    BigInt nm = num % m, dm = den % m, acc(0);
    // Horner: acc = acc*num + P[e]*den^{D-e}, all mod m.
    BigInt dpow(1);
    std::vector<BigInt> dpows(D + 1);
    for (size_t i = 0; i <= D; ++i) {
      dpows[i] = dpow;
      dpow = (dpow * dm) % m;
    }
    for (size_t i = P.size(); i-- > 0;) {
      acc = (acc * nm + (P[i] % m) * dpows[D - i]) % m;
    }
    if (sgn(acc % m) != 0) return true;
  }
  return false;
}

// Exact root test of the primitive polynomial P at num/den (den > 0, reduced).
// Falls back to modular certificates when the exact value would be enormous.
bool is_root(const std::vector<BigInt>& P, const Rational& r) {
  const BigInt num = r.num(), den = r.den();
  const size_t D = P.size() - 1;
  size_t max_coeff_bits = 0;
  for (const BigInt& c : P)
    max_coeff_bits = std::max(max_coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const size_t arg_bits = std::max(mpz_sizeinbase(num.get_mpz_t(), 2),
                                   mpz_sizeinbase(den.get_mpz_t(), 2));
  const unsigned long long est =
      static_cast<unsigned long long>(max_coeff_bits) +
      static_cast<unsigned long long>(D) * static_cast<unsigned long long>(arg_bits) + 64;
  if (est > kMaxExactBits) {
    if (nonzero_mod_certificate(P, num, den)) return false;
    fail("TooLarge", "cannot certify an oversized rational-root candidate");
  }
  std::vector<BigInt> dpows(D + 1);
  dpows[0] = 1;
  for (size_t i = 1; i <= D; ++i) dpows[i] = dpows[i - 1] * den;
  BigInt acc(0);
  for (size_t i = P.size(); i-- > 0;) acc = acc * num + P[i] * dpows[D - i];
  return sgn(acc) == 0;
}

// --- word-sized modular arithmetic for the residue scan ---

unsigned long long mulmod(unsigned long long a, unsigned long long b,
                          unsigned long long m) {
  return static_cast<unsigned long long>(
      static_cast<unsigned __int128>(a) * b % m);
}

long long ord_of_residue(unsigned long long v, long p, long long saturate) {
  if (v == 0) return saturate;
  long long o = 0;
  const unsigned long long up = static_cast<unsigned long long>(p);
  while (v % up == 0) {
    v /= up;
    ++o;
  }
  return o;
}

}  // namespace

PlantedPoly poly_from_roots(const std::vector<std::pair<Rational, long long>>& roots,
                            const Rational& scale) {
  if (scale.is_zero()) fail("BadInput", "poly_from_roots needs a nonzero scale");
  std::map<Rational, long long> merged;
  for (const auto& [r, m] : roots) {
    if (m < 1) fail("BadInput", "poly_from_roots multiplicities must be >= 1");
    merged[r] += m;
  }
  PlantedPoly out;
  SparsePoly f = SparsePoly::constant(1, scale);
  for (const auto& [r, m] : merged) {
    SparsePoly lin(1);
    lin.add_term(Monomial({1}), Rational(1));
    lin.add_term(Monomial({0}), -r);
    f = f * lin.pow(static_cast<unsigned long long>(m));
    out.roots.emplace_back(r, m);
  }
  out.f = f;
  return out;
}

std::vector<std::pair<Rational, long long>> rational_roots(const SparsePoly& f) {
  if (!f.is_univariate()) fail("BadInput", "rational_roots needs a univariate polynomial");
  if (f.is_zero()) fail("ZeroPolynomial", "rational_roots of the zero polynomial");
  std::map<Rational, long long> found;
  const long long m0 = f.min_exp();
  if (m0 > 0) found[Rational(0)] = m0;

  const std::vector<BigInt> P = dense_primitive(f);
  if (P.size() > 1) {
    const SparsePoly fp = from_dense(P, 0);
    // Valuation screen: a rational root r must have ord_p(r) among the Newton
    // polygon's root valuations for every prime p.
    const long screen_primes[] = {2, 3, 5};
    std::vector<std::set<Rational>> valsets;
    for (long p : screen_primes) {
      std::set<Rational> keys;
      for (const auto& [v, cnt] : root_valuations(newton_polygon(fp, p))) keys.insert(v);
      valsets.push_back(std::move(keys));
    }

    const std::vector<BigInt> num_divs = divisors_of(P[0]);
    const std::vector<BigInt> den_divs = divisors_of(P.back());
    if (num_divs.size() * den_divs.size() > kMaxDivisors)
      fail("TooLarge", "too many rational-root candidates");
    std::set<Rational> candidates;
    for (const BigInt& nn : num_divs)
      for (const BigInt& dd : den_divs) {
        Rational r(nn, dd);
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const Rational& r : candidates) {
      bool pass = true;
      for (size_t i = 0; i < valsets.size() && pass; ++i) {
        const ExtVal o = ord(r, screen_primes[i]);
        if (valsets[i].find(o.finite()) == valsets[i].end()) pass = false;
      }
      if (!pass) continue;
      if (!is_root(P, r)) continue;
      found[r] = multiplicity_at(fp, r);
    }
  }
  return {found.begin(), found.end()};
}

SparsePoly squarefree_part(const SparsePoly& f) {
  if (!f.is_univariate()) fail("BadInput", "squarefree_part needs a univariate polynomial");
  if (f.is_zero()) fail("ZeroPolynomial", "squarefree_part of the zero polynomial");
  const long long m0 = f.min_exp();
  std::vector<BigInt> P = dense_primitive(f);  // f / x^{m0}, primitive
  std::vector<BigInt> S;
  if (P.size() == 1) {
    S = {BigInt(1)};
  } else {
    const std::vector<BigInt> G = gcd_z(P, deriv_z(P));
    S = exact_div_z(P, G);
    make_primitive(S);
  }
  // Root 0 (present iff min_exp > 0) contributes a single factor of x.
  return from_dense(S, m0 > 0 ? 1 : 0);
}

ZpRootReport zp_root_count(const SparsePoly& f, long p, long long k) {
  if (!is_prime(p)) fail("NonPrime", "zp_root_count needs a prime");
  if (k < 1) fail("BadInput", "zp_root_count needs precision k >= 1");
  if (!f.is_univariate()) fail("BadInput", "zp_root_count needs a univariate polynomial");
  if (f.is_zero()) fail("ZeroPolynomial", "zp_root_count of the zero polynomial");
  if (f.min_exp() < 0)
    fail("BadInput", "zp_root_count needs a polynomial (no negative exponents)");

  // p^k residues, capped.
  {
    BigInt pk(1);
    for (long long i = 0; i < k; ++i) {
      pk *= to_big(p);
      if (pk > to_big(static_cast<long long>(kMaxResidues)))
        fail("TooLarge", "p^k exceeds the residue-search cap of 10^7");
    }
  }
  unsigned long long pk = 1;
  for (long long i = 0; i < k; ++i) pk *= static_cast<unsigned long long>(p);

  // Working precision K: p^K < 2^62, at most 2k+6 (enough slack to certify
  // simple roots and separate residues).
  const unsigned long long limit = (1ULL << 62);
  unsigned long long modulus = 1;
  long long K = 0;
  while (K < 2 * k + 6 && modulus <= (limit - 1) / static_cast<unsigned long long>(p)) {
    modulus *= static_cast<unsigned long long>(p);
    ++K;
  }

  // Clear denominators; scaling by the (p-free part of the) lcm preserves
  // the root set, and any p-part shifts every ord_p(f(r)) equally, which
  // cannot create roots; we remove the whole content anyway.
  if (f.max_exp() > 1000000) fail("TooLarge", "zp_root_count degree cap exceeded");
  std::vector<BigInt> P(static_cast<size_t>(f.max_exp()) + 1, BigInt(0));
  {
    BigInt lcm_den(1);
    for (const auto& [m, c] : f.terms()) lcm_den = lcm(lcm_den, c.den());
    for (const auto& [m, c] : f.terms())
      P[static_cast<size_t>(m.e[0])] = c.num() * (lcm_den / c.den());
    make_primitive(P);
  }
  const std::vector<BigInt> D = deriv_z(P);

  std::vector<unsigned long long> pc(P.size()), dc(D.size());
  const BigInt bm = to_big(static_cast<long long>(modulus));
  for (size_t i = 0; i < P.size(); ++i) {
    BigInt r = P[i] % bm;
    if (sgn(r) < 0) r += bm;
    pc[i] = r.get_ui();
  }
  for (size_t i = 0; i < D.size(); ++i) {
    BigInt r = D[i] % bm;
    if (sgn(r) < 0) r += bm;
    dc[i] = r.get_ui();
  }

  ZpRootReport rep;
  rep.prime = p;
  rep.k = k;
  rep.precision = K;
  for (unsigned long long r = 0; r < pk; ++r) {
    unsigned long long fv = 0;
    for (size_t i = pc.size(); i-- > 0;) fv = (mulmod(fv, r, modulus) + pc[i]) % modulus;
    const long long va = ord_of_residue(fv, p, K);
    if (va < k) continue;  // not a root mod p^k
    ++rep.approximate;
    unsigned long long dv = 0;
    for (size_t i = dc.size(); i-- > 0;) dv = (mulmod(dv, r, modulus) + dc[i]) % modulus;
    const long long sa = ord_of_residue(dv, p, K);
    // Hensel: need ord f(r) > 2 ord f'(r).  va and sa saturate at K; the
    // saturated va = K still certifies when K > 2*sa, but a saturated sa is
    // always inconclusive.  Certified residues additionally need
    // va - sa >= k so the lifted roots of distinct residues are distinct.
    const bool hensel = (sa < K) && (va > 2 * sa);
    if (hensel && va - sa >= k) {
      ++rep.certified;
    } else {
      ++rep.inconclusive;
      rep.precision_too_low = true;
    }
  }
  return rep;
}

SparsePoly shub_smale_family(int n, long p) {
  if (n < 1) fail("BadInput", "shub_smale_family needs n >= 1");
  if (n > 14) fail("TooLarge", "shub_smale_family expansion capped at n = 14");
  if (!is_prime(p)) fail("NonPrime", "shub_smale_family needs a prime");
  SparsePoly h(1);
  h.add_term(Monomial({1}), Rational(1));
  h.add_term(Monomial({2}), Rational(-1));
  long long e = 1;  // 3^{m-1}
  for (int m = 1; m < n; ++m) {
    const Rational pe = Rational(to_big(p)).pow(e);
    h = (SparsePoly::constant(1, pe) - h) * h;
    e *= 3;
  }
  return h;
}

}  // namespace ptrop
