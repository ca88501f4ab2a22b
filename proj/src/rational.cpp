#include "ptrop/rational.hpp"

#include <cctype>
#include <ostream>

namespace ptrop {

bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  // 40 Miller-Rabin rounds after BPSW; exact for anything near the long range.
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

long long int_ord(const BigInt& n, long p) {
  if (sgn(n) == 0) fail("DivisionByZero", "int_ord of zero is infinite");
  BigInt reduced;
  mp_bitcnt_t k = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), BigInt(p).get_mpz_t());
  return static_cast<long long>(k);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) fail("DivisionByZero", "rational with zero denominator");
  q_ = mpq_class(num) / mpq_class(den);
  q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t = s.substr(b, e - b);
  if (t.empty()) fail("BadInput", "empty rational literal");
  auto is_int = [](const std::string& u) {
    size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      if (!is_int(t)) fail("BadInput", "bad rational literal: " + t);
      return Rational(BigInt(t));
    }
    std::string ns = t.substr(0, slash), ds = t.substr(slash + 1);
    if (!is_int(ns) || !is_int(ds)) fail("BadInput", "bad rational literal: " + t);
    return Rational(BigInt(ns), BigInt(ds));
  } catch (const std::invalid_argument&) {
    fail("BadInput", "bad rational literal: " + t);
  }
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail("DivisionByZero", "inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) fail("ZeroToNegativePower", "0 raised to a negative power");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail("DivisionByZero", "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

const Rational& ExtVal::finite() const {
  if (inf_) throw std::logic_error("ExtVal::finite() on infinity");
  return v_;
}

ExtVal ExtVal::from_string(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (s.substr(b, e - b) == "inf") return infinity();
  return ExtVal(Rational::from_string(s));
}

ExtVal ExtVal::operator+(const ExtVal& o) const {
  if (inf_ || o.inf_) return infinity();
  return ExtVal(v_ + o.v_);
}

ExtVal ExtVal::operator-() const {
  if (inf_) throw std::logic_error("negating +infinity");
  return ExtVal(-v_);
}

ExtVal ExtVal::scale(const Rational& c) const {
  if (inf_) {
    if (c.sign() <= 0) throw std::logic_error("scaling infinity by a nonpositive factor");
    return infinity();
  }
  return ExtVal(v_ * c);
}

bool operator==(const ExtVal& a, const ExtVal& b) {
  if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
  return a.v_ == b.v_;
}

bool operator<(const ExtVal& a, const ExtVal& b) {
  if (a.inf_) return false;
  if (b.inf_) return true;
  return a.v_ < b.v_;
}

std::ostream& operator<<(std::ostream& os, const ExtVal& v) {
  return os << v.str();
}

ExtVal min(const ExtVal& a, const ExtVal& b) { return a < b ? a : b; }

ExtVal ord(const Rational& x, long p) {
  if (!is_prime(p)) fail("NonPrime", "ord requires a prime, got " + std::to_string(p));
  if (x.is_zero()) return ExtVal::infinity();
  long long v = int_ord(x.num(), p) - int_ord(x.den(), p);
  return ExtVal(Rational(v));
}

}  // namespace ptrop
