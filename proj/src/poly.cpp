#include "ptrop/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ptrop {

namespace {
constexpr long long kDenseSpanCap = 5'000'000;
}

long long Monomial::total_degree() const {
  long long s = 0;
  for (long long v : e) s += v;
  return s;
}

bool Monomial::is_origin() const {
  return std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
}

Monomial Monomial::operator+(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
  Monomial r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly f(nvars);
  f.add_term(Monomial(std::vector<long long>(nvars, 0)), c);
  return f;
}

SparsePoly SparsePoly::single_term(const Monomial& m, const Rational& c) {
  SparsePoly f(static_cast<int>(m.nvars()));
  f.add_term(m, c);
  return f;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.nvars()) != nvars_)
    fail("BadInput", "monomial arity does not match polynomial");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Monomial> SparsePoly::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& [m, c] : terms_) s.push_back(m);
  return s;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) fail("BadInput", "adding polynomials of different arity");
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) fail("BadInput", "subtracting polynomials of different arity");
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) fail("BadInput", "multiplying polynomials of different arity");
  SparsePoly r(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

SparsePoly SparsePoly::pow(unsigned long long k) const {
  SparsePoly acc = constant(nvars_, Rational(1));
  SparsePoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

SparsePoly SparsePoly::divide_by_monomial(const Monomial& m) const {
  if (static_cast<int>(m.nvars()) != nvars_)
    fail("BadInput", "monomial arity does not match polynomial");
  SparsePoly r(nvars_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm - m, c);
  return r;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    fail("BadInput", "evaluation point arity does not match polynomial");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      t *= x[i].pow(m.e[i]);
    }
    acc += t;
  }
  return acc;
}

long long SparsePoly::min_exp() const {
  if (!is_univariate()) fail("BadInput", "min_exp requires a univariate polynomial");
  if (is_zero()) fail("ZeroPolynomial", "zero polynomial has no exponent range");
  return terms_.begin()->first.e[0];
}

long long SparsePoly::max_exp() const {
  if (!is_univariate()) fail("BadInput", "max_exp requires a univariate polynomial");
  if (is_zero()) fail("ZeroPolynomial", "zero polynomial has no exponent range");
  return terms_.rbegin()->first.e[0];
}

std::vector<Rational> SparsePoly::dense_coeffs(long long& offset) const {
  offset = min_exp();
  long long span = max_exp() - offset;
  if (span > kDenseSpanCap) fail("TooLarge", "exponent span too large to densify");
  std::vector<Rational> c(static_cast<size_t>(span) + 1, Rational(0));
  for (const auto& [m, k] : terms_) c[static_cast<size_t>(m.e[0] - offset)] = k;
  return c;
}

SparsePoly SparsePoly::derivative() const {
  if (!is_univariate()) fail("BadInput", "derivative requires a univariate polynomial");
  SparsePoly r(1);
  for (const auto& [m, c] : terms_) {
    if (m.e[0] == 0) continue;
    r.add_term(Monomial({m.e[0] - 1}), c * Rational(m.e[0]));
  }
  return r;
}

std::string SparsePoly::str(const std::vector<std::string>& vars) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() >= 0 ? " + " : " - ");
    }
    first = false;
    Rational a = c.abs();
    std::vector<std::string> factors;
    if (!a.is_one() || m.is_origin()) factors.push_back(a.str());
    for (int i = 0; i < nvars_; ++i) {
      if (m.e[i] == 0) continue;
      std::string v =
          i < static_cast<int>(vars.size()) ? vars[i] : "x" + std::to_string(i + 1);
      if (m.e[i] != 1) v += "^" + std::to_string(m.e[i]);
      factors.push_back(v);
    }
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

PolySystem::PolySystem(std::vector<SparsePoly> polys) : nvars_(0), polys_(std::move(polys)) {
  if (!polys_.empty()) nvars_ = polys_[0].nvars();
  for (const auto& f : polys_)
    if (f.nvars() != nvars_) fail("BadInput", "system mixes polynomial arities");
}

void PolySystem::push_back(SparsePoly f) {
  if (polys_.empty()) nvars_ = f.nvars();
  else if (f.nvars() != nvars_) fail("BadInput", "system mixes polynomial arities");
  polys_.push_back(std::move(f));
}

std::vector<Monomial> PolySystem::union_support() const {
  std::set<Monomial> s;
  for (const auto& f : polys_)
    for (const auto& [m, c] : f.terms()) s.insert(m);
  return std::vector<Monomial>(s.begin(), s.end());
}

}  // namespace ptrop
