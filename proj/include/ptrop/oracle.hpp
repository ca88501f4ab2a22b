#pragma once

// Brute-force ground truth, independent of the polygon/tropical machinery:
// planted-root polynomial construction, exact rational root finding,
// square-free parts, Hensel-certified Z_p root counting by exhaustive residue
// search, and the explicit h_n family with 2^n-degree expansions.

#include <utility>
#include <vector>

#include "ptrop/poly.hpp"

namespace ptrop {

struct PlantedPoly {
  SparsePoly f;                                       // scale * prod (x - r_i)^{m_i}, exact
  std::vector<std::pair<Rational, long long>> roots;  // sorted, merged multiplicities
};

// Exact expansion of scale * prod (x - r)^m.  Repeated root values merge.
// Errors: BadInput (zero scale or a multiplicity < 1).
PlantedPoly poly_from_roots(const std::vector<std::pair<Rational, long long>>& roots,
                            const Rational& scale);

// All rational roots of a univariate Laurent polynomial, with exact
// multiplicities, sorted by root.  Divisor-pair search over the cleared
// integer coefficients; candidates are screened by p-adic valuation against
// the Newton polygon at p in {2,3,5}, and oversized exact evaluations fall
// back to modular nonzero certificates (pruning only on proof).  The root 0
// is reported with multiplicity min_exp when min_exp > 0.
// Errors: ZeroPolynomial, BadInput (multivariate), TooLarge (coefficient
// factorization or candidate certification out of range).
std::vector<std::pair<Rational, long long>> rational_roots(const SparsePoly& f);

// A polynomial with the same roots as f, all with multiplicity 1: the monomial
// root (x = 0, when present) times f/x^{min_exp} divided by its gcd with its
// derivative.  Primitive integer coefficients, positive leading coefficient.
// Errors: ZeroPolynomial, BadInput (multivariate).
SparsePoly squarefree_part(const SparsePoly& f);

struct ZpRootReport {
  long prime = 0;
  long long k = 0;             // requested residue precision (mod p^k)
  long long precision = 0;     // working precision K (values computed mod p^K)
  long long approximate = 0;   // residues r mod p^k with f(r) = 0 mod p^k
  long long certified = 0;     // Hensel-certified distinct Z_p roots
  long long inconclusive = 0;  // approximate residues that could not be certified
  bool precision_too_low = false;  // some residue was inconclusive
};

// Exhaustive scan of r in {0, ..., p^k - 1}: a residue is an approximate root
// when f(r) = 0 mod p^k, and is certified when ord_p f(r) > 2 ord_p f'(r)
// (the Hensel criterion, guaranteeing a unique lift) with enough slack
// (ord_p f(r) - ord_p f'(r) >= k) for distinct residues to give distinct
// roots.  Certification failures are reported, never fatal: the certified
// count is always a sound lower bound and the approximate count an upper
// bound on the number of Z_p roots congruence classes.
// Errors: NonPrime, BadInput (k < 1, multivariate, negative exponents),
// ZeroPolynomial, TooLarge (p^k > 10^7).
ZpRootReport zp_root_count(const SparsePoly& f, long p, long long k);

// h_1 = x - x^2,  h_{m+1} = (p^{3^{m-1}} - h_m) * h_m, exactly expanded;
// degree 2^n.  Errors: BadInput (n < 1), NonPrime, TooLarge (n > 14).
SparsePoly shub_smale_family(int n, long p);

}  // namespace ptrop
