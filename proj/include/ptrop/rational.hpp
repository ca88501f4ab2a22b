#pragma once

// Exact rational arithmetic and p-adic valuations.
//
// Rational wraps GMP's mpq_class: always canonical (reduced, positive
// denominator), serialized as "num/den" (or just "num" when den = 1).
// ExtVal is a rational extended with +infinity, the value ord_p(0); addition
// absorbs infinity and min/comparisons treat it as larger than every finite
// value, which is exactly the arithmetic valuation theory needs:
//   ord_p(xy) = ord_p(x) + ord_p(y),  ord_p(x+y) >= min(ord_p x, ord_p y).

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "ptrop/error.hpp"

namespace ptrop {

using BigInt = mpz_class;

// mpz_class has no long long constructor; this project targets LP64 only.
static_assert(sizeof(long) == 8, "expected 64-bit long");
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

// Deterministic primality check for the word-sized primes this library
// accepts (GMP's test is exact far beyond the long range).
bool is_prime(long p);

// Multiplicity of the prime p in a nonzero integer.
long long int_ord(const BigInt& n, long p);

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(to_big(n)) {}            // NOLINT implicit
  Rational(const BigInt& n) : q_(n) {}                // NOLINT implicit
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Parses "num", "num/den", with optional leading '-'. Throws BadInput.
  static Rational from_string(const std::string& s);

  std::string str() const;

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long long e) const;  // 0^0 = 1; 0^negative throws

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class q_;
};

// A rational extended with +infinity (and only +infinity).
class ExtVal {
 public:
  ExtVal() : inf_(false), v_() {}
  ExtVal(Rational v) : inf_(false), v_(std::move(v)) {}  // NOLINT implicit
  static ExtVal infinity() { ExtVal e; e.inf_ = true; return e; }

  bool is_inf() const { return inf_; }

  // The finite value; calling this on infinity is a programming error.
  const Rational& finite() const;

  std::string str() const { return inf_ ? "inf" : v_.str(); }
  static ExtVal from_string(const std::string& s);

  ExtVal operator+(const ExtVal& o) const;
  ExtVal operator-() const;                 // negating infinity throws
  // Scalar multiple c*v: c may be any rational for finite v; infinity only
  // scales by positive c (0 * inf and negative * inf are undefined here).
  ExtVal scale(const Rational& c) const;

  friend bool operator==(const ExtVal& a, const ExtVal& b);
  friend bool operator<(const ExtVal& a, const ExtVal& b);
  friend bool operator!=(const ExtVal& a, const ExtVal& b) { return !(a == b); }
  friend bool operator<=(const ExtVal& a, const ExtVal& b) { return a < b || a == b; }
  friend bool operator>(const ExtVal& a, const ExtVal& b) { return b < a; }
  friend bool operator>=(const ExtVal& a, const ExtVal& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const ExtVal& v);

 private:
  bool inf_;
  Rational v_;
};

ExtVal min(const ExtVal& a, const ExtVal& b);

// ord_p of a rational: ord(0) = +infinity, ord(num/den) = ord(num) - ord(den).
// Throws NonPrime unless p is prime.
ExtVal ord(const Rational& x, long p);

}  // namespace ptrop
