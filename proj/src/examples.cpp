#include "ptrop/examples.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/linalg.hpp"
#include "ptrop/multiplicity.hpp"
#include "ptrop/newton.hpp"
#include "ptrop/valcount.hpp"

namespace ptrop {

namespace {

Rational frac(long long n, long long d) { return Rational(to_big(n), to_big(d)); }

Monomial mono1(long long e) { return Monomial({e}); }
Monomial mono2(long long a, long long b) { return Monomial({a, b}); }

std::string fmt_pt(const QPoint& q) {
  return "(" + q.x.str() + "," + q.y.str() + ")";
}

std::string fmt_pts(const std::vector<QPoint>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt_pt(v[i]);
  return s + "}";
}

std::string fmt_vec(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

std::string fmt_vecs(const std::vector<std::vector<Rational>>& vs) {
  std::string s = "{";
  for (size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + fmt_vec(vs[i]);
  return s + "}";
}

std::string fmt_valcount(const ValuationCount& vc) {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, c] : vc) {
    if (!first) s += " ";
    first = false;
    s += v.str() + "->" + std::to_string(c);
  }
  return s + "}";
}

std::string fmt_roots(const std::vector<std::pair<Rational, long long>>& r) {
  std::string s = "{";
  for (size_t i = 0; i < r.size(); ++i)
    s += (i ? " " : "") + r[i].first.str() + "^" + std::to_string(r[i].second);
  return s + "}";
}

// a == lambda * b for a nonzero scalar lambda?
bool proportional(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& front = *b.terms().begin();
  Rational ca = a.coeff(front.first);
  if (ca.is_zero()) return false;
  return (a.scaled(front.second) - b.scaled(ca)).is_zero();
}

bool same_poly(const SparsePoly& a, const SparsePoly& b) {
  return (a - b).is_zero();
}

using Body = std::function<std::pair<bool, std::string>()>;

void run(std::vector<StoredExample>& out, const std::string& name, const Body& body) {
  try {
    auto [ok, detail] = body();
    out.push_back({name, ok, detail});
  } catch (const Error& e) {
    out.push_back({name, false, std::string("error ") + e.code() + ": " + e.what()});
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

}  // namespace

PlantedPoly planted_sextic() {
  return poly_from_roots({{Rational(1), 3}, {Rational(6), 2}, {frac(1, 243), 1}},
                         Rational(243));
}

PolySystem gauss_pair() {
  SparsePoly f1(2), f2(2);
  f1.add_term(mono2(3, 0), Rational(1));
  f1.add_term(mono2(0, 1), Rational(-1));
  f1.add_term(mono2(0, 0), Rational(-1));
  f2.add_term(mono2(3, 0), Rational(1));
  f2.add_term(mono2(0, 1), Rational(-2));
  f2.add_term(mono2(0, 0), Rational(2));
  PolySystem F(2);
  F.push_back(f1);
  F.push_back(f2);
  return F;
}

PolySystem gauss_pair_expected() {
  SparsePoly g1(2), g2(2);
  g1.add_term(mono2(3, 0), Rational(1));
  g1.add_term(mono2(0, 0), Rational(-4));
  g2.add_term(mono2(0, 1), Rational(1));
  g2.add_term(mono2(0, 0), Rational(-3));
  PolySystem F(2);
  F.push_back(g1);
  F.push_back(g2);
  return F;
}

PolySystem chain_system(int n, long p) {
  if (n < 2) fail("BadInput", "chain_system needs n >= 2");
  if (!is_prime(p)) fail("NonPrime", "chain_system: p must be prime");
  Rational P(to_big(p));
  PolySystem F(n);
  auto e = [&](int i) {  // x_i, 1-based
    std::vector<long long> v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i - 1)] = 1;
    return Monomial(v);
  };
  auto twoe1 = [&]() {
    std::vector<long long> v(static_cast<size_t>(n), 0);
    v[0] = 2;
    return Monomial(v);
  };
  Monomial origin(std::vector<long long>(static_cast<size_t>(n), 0));

  SparsePoly f1(n);
  f1.add_term(e(1) + e(2), Rational(1));
  f1.add_term(origin, -P);
  f1.add_term(twoe1(), Rational(-1));
  F.push_back(f1);

  for (int l = 2; l <= n - 1; ++l) {
    SparsePoly fl(n);
    fl.add_term(e(l) + e(l + 1), Rational(1));
    fl.add_term(origin, Rational(-1));
    fl.add_term(twoe1(), -P.pow(2 * l - 3));
    F.push_back(fl);
  }

  SparsePoly fn(n);
  fn.add_term(e(n), Rational(1));
  fn.add_term(origin, Rational(-1));
  fn.add_term(twoe1(), -P.pow(2 * n - 3));
  F.push_back(fn);
  return F;
}

std::vector<std::vector<Rational>> chain_witnesses(int n) {
  if (n < 2) fail("BadInput", "chain_witnesses needs n >= 2");
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> w(static_cast<size_t>(n), Rational(0));
  w[0] = Rational(1);
  out.push_back(w);                                              // (1, 0, ..., 0)
  out.emplace_back(static_cast<size_t>(n), Rational(0));         // origin
  for (int j = 1; j <= n - 1; ++j) {
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    v[0] = Rational(-j);
    for (int l = 2; l <= n; ++l) {
      long long d = std::max<long long>(j + 2 - l, 0);
      v[static_cast<size_t>(l - 1)] = Rational(-d);
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolySystem quadrinomial_pair(long p) {
  if (!is_prime(p)) fail("NonPrime", "quadrinomial_pair: p must be prime");
  if (p == 2) fail("BadInput", "quadrinomial_pair requires an odd prime");
  Rational P(to_big(p));
  Rational P2 = P * P, P3 = P2 * P, P4 = P3 * P;
  SparsePoly f1(2), f2(2);
  f1.add_term(mono2(0, 21), P);
  f1.add_term(mono2(32, 0), -P);
  f1.add_term(mono2(0, 0), P);
  f1.add_term(mono2(9, 10), Rational(1));
  f2.add_term(mono2(0, 21), -(P + P2));
  f2.add_term(mono2(32, 0), P + P3);
  f2.add_term(mono2(0, 0), P + P4);
  f2.add_term(mono2(9, 10), Rational(1) + P);
  PolySystem F(2);
  F.push_back(f1);
  F.push_back(f2);
  return F;
}

std::vector<QPoint> quadrinomial_expected_points() {
  return {QPoint{frac(1, 32), frac(23, 320)}, QPoint{frac(11, 189), frac(1, 21)}};
}

QPoint quadrinomial_extra_point() { return QPoint{frac(-42, 163), frac(-64, 163)}; }

namespace {

// The three hand-reduced rows of the quadrinomial pair, pivots normalized:
//   e1 = x_2^21 + (2+p^2+p^3)/(p(p-1))   + (2+p+p^2)/(p^2(p-1)) x_1^9 x_2^10
//   e2 = x_1^32 + (2+p+p^3)/(p(p-1))     + 2(1+p)/(p^2(p-1))    x_1^9 x_2^10
//   e3 = 1      - 2/(p(p-1))      x_2^21 + (2+p+p^2)/(p(p^2-1)) x_1^32
SparsePoly quad_e1(const Rational& P) {
  Rational P2 = P * P, P3 = P2 * P, one(1), two(2);
  SparsePoly e(2);
  e.add_term(mono2(0, 21), one);
  e.add_term(mono2(0, 0), (two + P2 + P3) / (P * (P - one)));
  e.add_term(mono2(9, 10), (two + P + P2) / (P2 * (P - one)));
  return e;
}

SparsePoly quad_e2(const Rational& P) {
  Rational P2 = P * P, P3 = P2 * P, one(1), two(2);
  SparsePoly e(2);
  e.add_term(mono2(32, 0), one);
  e.add_term(mono2(0, 0), (two + P + P3) / (P * (P - one)));
  e.add_term(mono2(9, 10), (two * (one + P)) / (P2 * (P - one)));
  return e;
}

SparsePoly quad_e3(const Rational& P) {
  Rational P2 = P * P, one(1), two(2);
  SparsePoly e(2);
  e.add_term(mono2(0, 21), -two / (P * (P - one)));
  e.add_term(mono2(32, 0), (two + P + P2) / (P * (P2 - one)));
  e.add_term(mono2(0, 0), one);
  return e;
}

}  // namespace

PolySystem quadrinomial_displayed_f12(long p) {
  if (!is_prime(p)) fail("NonPrime", "quadrinomial_displayed_f12: p must be prime");
  if (p == 2) fail("BadInput", "quadrinomial_displayed_f12 requires an odd prime");
  Rational P(to_big(p));
  SparsePoly r2 = quad_e2(P);
  r2.add_term(mono2(32, 0), P + P * P * P - Rational(1));  // pivot 1 -> p + p^3
  PolySystem F(2);
  F.push_back(quad_e1(P));
  F.push_back(r2);
  return F;
}

PolySystem overlap_pair(long p) {
  if (!is_prime(p)) fail("NonPrime", "overlap_pair: p must be prime");
  SparsePoly f1(2), f2(2);
  f1.add_term(mono2(1, 0), Rational(1));
  f1.add_term(mono2(0, 1), Rational(1));
  f1.add_term(mono2(0, 0), Rational(1));
  f2 = f1;
  f2.add_term(mono2(0, 0), Rational(to_big(p)));  // constant becomes 1 + p
  PolySystem F(2);
  F.push_back(f1);
  F.push_back(f2);
  return F;
}

SparsePoly vert_example_cubic(long p) {
  if (!is_prime(p)) fail("NonPrime", "vert_example_cubic: p must be prime");
  Rational P(to_big(p));
  Rational P2 = P * P, P3 = P2 * P;
  SparsePoly g(1);
  g.add_term(mono1(3), Rational(1));
  g.add_term(mono1(2), -(Rational(1) + P + P2));
  g.add_term(mono1(1), P + P2 + P3);
  g.add_term(mono1(0), -P3);
  return g;
}

bool curves_identical(const TropCurve& A, const TropCurve& B) {
  if (A.prime != B.prime || A.support != B.support || A.weights != B.weights)
    return false;
  if (A.vertices != B.vertices || A.cells.size() != B.cells.size()) return false;
  for (size_t i = 0; i < A.cells.size(); ++i) {
    const TropCell& a = A.cells[i];
    const TropCell& b = B.cells[i];
    if (!(a.base == b.base) || !(a.dir == b.dir) || a.len != b.len ||
        a.mult != b.mult || a.ties != b.ties)
      return false;
  }
  return true;
}

std::vector<StoredExample> run_stored_examples(long p) {
  if (!is_prime(p)) fail("NonPrime", "run_stored_examples: p must be prime");
  std::vector<StoredExample> out;

  // --- planted sextic: expansion + Newton polygon at p = 3 (fixed prime) ---
  run(out, "sextic-newton-valuations", [&]() -> std::pair<bool, std::string> {
    PlantedPoly s = planted_sextic();
    const long long expect_coeffs[] = {36, -8868, 29305, -35310, 18240, -3646, 243};
    for (long long i = 0; i <= 6; ++i)
      if (s.f.coeff(mono1(i)) != Rational(expect_coeffs[i]))
        return {false, "expansion mismatch at x^" + std::to_string(i)};
    ValuationCount got = root_valuations(newton_polygon(s.f, 3));
    ValuationCount want{{Rational(-5), 1}, {Rational(0), 3}, {Rational(1), 2}};
    bool ok = got == want;
    return {ok, "p=3 fixed; got " + fmt_valcount(got) + " want " + fmt_valcount(want)};
  });

  run(out, "sextic-rational-roots", [&]() -> std::pair<bool, std::string> {
    PlantedPoly s = planted_sextic();
    auto got = rational_roots(s.f);
    std::vector<std::pair<Rational, long long>> want = {
        {frac(1, 243), 1}, {Rational(1), 3}, {Rational(6), 2}};
    bool ok = got == want;
    return {ok, "got " + fmt_roots(got) + " want " + fmt_roots(want)};
  });

  run(out, "sextic-multiplicities", [&]() -> std::pair<bool, std::string> {
    PlantedPoly s = planted_sextic();
    long long m1 = multiplicity_at(s.f, Rational(1));
    long long m6 = multiplicity_at(s.f, Rational(6));
    long long ms = multiplicity_at(s.f, frac(1, 243));
    long long m2 = multiplicity_at(s.f, Rational(2));
    bool ok = m1 == 3 && m6 == 2 && ms == 1 && m2 == 0;
    std::ostringstream d;
    d << "mult(1)=" << m1 << " mult(6)=" << m6 << " mult(1/243)=" << ms
      << " mult(2)=" << m2 << " want 3,2,1,0";
    return {ok, d.str()};
  });

  // --- Gauss-Jordan pair (prime-free) ---
  run(out, "gauss-jordan-pair", [&]() -> std::pair<bool, std::string> {
    PolySystem F = gauss_pair();
    std::vector<Monomial> order = F.union_support();
    std::sort(order.begin(), order.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
    GaussJordanResult R = gauss_jordan_system(F, order);
    PolySystem want = gauss_pair_expected();
    bool ok = R.system.size() == 2 && same_poly(R.system[0], want[0]) &&
              same_poly(R.system[1], want[1]);
    return {ok, "reduced rows " + R.system[0].str({"x", "y"}) + " ; " +
                    R.system[1].str({"x", "y"}) + " want x^3-4 ; y-3"};
  });

  // --- chain system, n = 2: transversal curve intersection ---
  run(out, "chain-n2-transversal", [&]() -> std::pair<bool, std::string> {
    PolySystem F = chain_system(2, p);
    TropCurve c1 = plane_trop_curve(F[0], p);
    TropCurve c2 = plane_trop_curve(F[1], p);
    IntersectionReport r = intersect_plane_curves(c1, c2);
    std::vector<QPoint> want = {QPoint{Rational(-1), Rational(-1)},
                                QPoint{Rational(0), Rational(0)},
                                QPoint{Rational(1), Rational(0)}};
    std::vector<QPoint> got;
    bool all_trans = true;
    for (const auto& ip : r.points) {
      got.push_back(ip.at);
      all_trans = all_trans && ip.transversal;
    }
    bool ok = got == want && all_trans && r.overlaps.empty() &&
              r.tropically_generic && r.superset;
    return {ok, "points " + fmt_pts(got) + " want " + fmt_pts(want) +
                    (r.tropically_generic ? " (generic)" : " (NOT generic)")};
  });

  // --- overlap pair: identical curves, nothing certifiable ---
  run(out, "overlap-pair-identical", [&]() -> std::pair<bool, std::string> {
    PolySystem F = overlap_pair(p);
    TropCurve c1 = plane_trop_curve(F[0], p);
    TropCurve c2 = plane_trop_curve(F[1], p);
    bool ident = curves_identical(c1, c2);
    IntersectionReport r = intersect_plane_curves(c1, c2);
    bool ok = ident && !r.overlaps.empty() && !r.tropically_generic && !r.superset;
    std::ostringstream d;
    d << (ident ? "curves identical" : "curves DIFFER") << ", " << r.overlaps.size()
      << " overlap cells, generic=" << (r.tropically_generic ? "true" : "false");
    return {ok, d.str()};
  });

  // --- quadrinomial pair (odd primes; substitute 3 when p = 2) ---
  long pq = (p == 2) ? 3 : p;
  std::string qnote = (p == 2) ? " [p=2 unsupported; ran documented default 3]" : "";

  run(out, "quadrinomial-identical-curves", [&]() -> std::pair<bool, std::string> {
    PolySystem F = quadrinomial_pair(pq);
    TropCurve c1 = plane_trop_curve(F[0], pq);
    TropCurve c2 = plane_trop_curve(F[1], pq);
    bool ident = curves_identical(c1, c2);
    bool shape = c1.vertices.size() == 3 && c1.cells.size() == 6;
    std::ostringstream d;
    d << (ident ? "identical" : "DIFFER") << ", " << c1.vertices.size()
      << " vertices, " << c1.cells.size() << " one-cells (want 3, 6)" << qnote;
    return {ident && shape, d.str()};
  });

  run(out, "quadrinomial-reductions", [&]() -> std::pair<bool, std::string> {
    PolySystem F = quadrinomial_pair(pq);
    FijReduction r12 = fij_reduction(F, 1, 2);
    FijReduction r34 = fij_reduction(F, 3, 4);
    if (!r12.star || !r34.star) return {false, "reduction not a star"};
    Rational P(to_big(pq));
    auto matches = [&](const PolySystem& S, const SparsePoly& e) {
      return proportional(S[0], e) || proportional(S[1], e);
    };
    bool ok = matches(r12.system, quad_e1(P)) && matches(r12.system, quad_e2(P)) &&
              matches(r34.system, quad_e3(P));
    // The p + p^3 pivot variant must NOT lie in the reduced row space: it has
    // no x_2^21 term, so if it did it would be a multiple of the x_1^32 row.
    ok = ok && !proportional(quadrinomial_displayed_f12(pq)[1], quad_e2(P));
    return {ok,
            std::string(ok ? "both stars; rows match hand-reduced coefficients; "
                             "p+p^3 pivot variant confirmed outside the row space"
                           : "row coefficient mismatch") +
                qnote};
  });

  run(out, "quadrinomial-overlap-segment", [&]() -> std::pair<bool, std::string> {
    PolySystem F = quadrinomial_pair(pq);
    FijReduction r12 = fij_reduction(F, 1, 2);
    TropCurve c1 = plane_trop_curve(r12.system[0], pq);
    TropCurve c2 = plane_trop_curve(r12.system[1], pq);
    IntersectionReport r = intersect_plane_curves(c1, c2);
    if (r.overlaps.size() != 1 || !r.overlaps[0].len.has_value())
      return {false, "want exactly one bounded overlap, got " +
                         std::to_string(r.overlaps.size())};
    const OverlapCell& o = r.overlaps[0];
    QPoint end{o.base.x + *o.len * Rational(to_big(o.dir.dx)),
               o.base.y + *o.len * Rational(to_big(o.dir.dy))};
    std::set<QPoint> got{o.base, end};
    std::set<QPoint> want{QPoint{frac(-1, 32), frac(41, 320)},
                          QPoint{frac(31, 189), frac(-1, 21)}};
    bool ok = got == want;
    std::string d = "overlap endpoints " + fmt_pt(o.base) + ".." + fmt_pt(end) +
                    " want (-1/32,41/320)..(31/189,-1/21), the two star vertices "
                    "on the tie line 9v1+10v2=1" +
                    qnote;
    return {ok, d};
  });

  run(out, "quadrinomial-intersection", [&]() -> std::pair<bool, std::string> {
    PolySystem F = quadrinomial_pair(pq);
    FijReduction r12 = fij_reduction(F, 1, 2);
    FijReduction r34 = fij_reduction(F, 3, 4);
    auto collect = [&](const IntersectionReport& r, bool& all_trans) {
      std::vector<QPoint> got;
      all_trans = true;
      for (const auto& ip : r.points) {
        got.push_back(ip.at);
        all_trans = all_trans && ip.transversal;
      }
      return got;
    };

    // Exact reductions: three transversal points, certified superset.
    std::vector<TropCurve> curves;
    curves.push_back(plane_trop_curve(F[0], pq));
    curves.push_back(plane_trop_curve(F[1], pq));
    curves.push_back(plane_trop_curve(r12.system[0], pq));
    curves.push_back(plane_trop_curve(r12.system[1], pq));
    curves.push_back(plane_trop_curve(r34.system[0], pq));
    curves.push_back(plane_trop_curve(r34.system[1], pq));
    IntersectionReport r = intersect_many(curves);
    bool all_trans = false;
    std::vector<QPoint> got = collect(r, all_trans);
    std::vector<QPoint> want = quadrinomial_expected_points();
    want.push_back(quadrinomial_extra_point());
    std::sort(want.begin(), want.end());
    bool exact_ok = got == want && all_trans && r.overlaps.empty() &&
                    r.tropically_generic && r.superset;

    // p + p^3 pivot variant: exactly the two historically quoted points.
    PolySystem D = quadrinomial_displayed_f12(pq);
    curves[2] = plane_trop_curve(D[0], pq);
    curves[3] = plane_trop_curve(D[1], pq);
    IntersectionReport rd = intersect_many(curves);
    bool trans_d = false;
    std::vector<QPoint> got_d = collect(rd, trans_d);
    std::vector<QPoint> want_d = quadrinomial_expected_points();
    std::sort(want_d.begin(), want_d.end());
    bool display_ok = got_d == want_d && trans_d && rd.overlaps.empty();

    bool ok = exact_ok && display_ok;
    return {ok, "exact reductions -> " + fmt_pts(got) + " (want " + fmt_pts(want) +
                    "); p+p^3 pivot variant -> " + fmt_pts(got_d) + " (want " +
                    fmt_pts(want_d) + ")" + qnote};
  });

  // --- chain system witnesses, n = 2, 3, 4 ---
  for (int n = 2; n <= 4; ++n) {
    run(out, "chain-witnesses-n" + std::to_string(n),
        [&, n]() -> std::pair<bool, std::string> {
          PolySystem F = chain_system(n, p);
          CountResult r = count_n_plus_2(F, p);
          if (r.kind != CountResult::Kind::BOUNDED || !r.superset)
            return {false, "expected a certified bounded superset"};
          std::vector<std::vector<Rational>> filtered;
          for (const auto& v : r.candidates) {
            bool member = true;
            for (const auto& f : F.polys())
              if (!trop_membership(f, p, v)) {
                member = false;
                break;
              }
            if (member) filtered.push_back(v);
          }
          std::vector<std::vector<Rational>> want = chain_witnesses(n);
          bool ok = filtered == want;
          std::ostringstream d;
          d << r.candidates.size() << " candidates, " << filtered.size()
            << " after membership filter; want the " << want.size()
            << " witnesses " << fmt_vecs(want);
          if (!ok) d << "; got " << fmt_vecs(filtered);
          return {ok, d.str()};
        });
  }

  // --- iterated-square family (documented primes 2 and 3) ---
  long ps = (p == 2 || p == 3) ? p : 3;
  std::string snote =
      (ps == p) ? "" : " [expectation documented for p in {2,3}; ran default 3]";

  run(out, "slp-distinct-valuations", [&]() -> std::pair<bool, std::string> {
    for (int n = 1; n <= 8; ++n) {
      SparsePoly h = shub_smale_family(n, ps);
      if (h.max_exp() != (1LL << n))
        return {false, "h_" + std::to_string(n) + " degree mismatch"};
      size_t k = root_valuations(newton_polygon(h, ps)).size();
      if (k != static_cast<size_t>(n))
        return {false, "h_" + std::to_string(n) + " has " + std::to_string(k) +
                           " distinct valuations, want " + std::to_string(n)};
    }
    return {true, "h_n: degree 2^n and exactly n distinct root valuations, n=1..8" +
                      snote};
  });

  run(out, "slp-rational-roots", [&]() -> std::pair<bool, std::string> {
    for (int n = 1; n <= 4; ++n) {
      auto got = rational_roots(shub_smale_family(n, ps));
      std::vector<std::pair<Rational, long long>> want = {{Rational(0), 1},
                                                          {Rational(1), 1}};
      if (got != want)
        return {false, "h_" + std::to_string(n) + " rational roots " + fmt_roots(got) +
                           " want {0^1 1^1}"};
    }
    return {true, "h_n rational roots exactly {0, 1}, both simple, n=1..4" + snote};
  });

  run(out, "slp-h2-zp-count", [&]() -> std::pair<bool, std::string> {
    long pz = (p > 56) ? 3 : p;
    std::string znote =
        (pz == p) ? "" : " [prime too large for residue enumeration; ran default 3]";
    long long k = (pz == 2) ? 6 : 4;
    ZpRootReport r = zp_root_count(shub_smale_family(2, pz), pz, k);
    bool ok = r.certified == 4;
    std::ostringstream d;
    d << "h_2 at p=" << pz << " k=" << k << ": certified=" << r.certified
      << " approximate=" << r.approximate << " want certified=4" << znote;
    return {ok, d.str()};
  });

  // --- multiplicity sharpness family (prime-free) ---
  run(out, "sharpness-multiplicities", [&]() -> std::pair<bool, std::string> {
    SharpnessReport r1 = sharpness_system(1);
    if (!r1.exact_g.has_value() || r1.exact_multiplicity != 2)
      return {false, "n=1: exact reduced equation should be (u-1)^2"};
    for (int n = 2; n <= 6; ++n) {
      SharpnessReport r = sharpness_system(n);
      if (r.expected_multiplicity != n + 1)
        return {false, "n=" + std::to_string(n) + " expected_multiplicity wrong"};
      if (!r.cyclotomic_checked || !r.cyclotomic_identity_ok)
        return {false, "n=" + std::to_string(n) + " cyclotomic identity failed"};
      if (!r.float_checked || !(r.float_max_err < 1e-9))
        return {false, "n=" + std::to_string(n) + " float residual " +
                           std::to_string(r.float_max_err)};
    }
    SharpnessReport f9 = sharpness_system(9);
    if (!f9.float_checked || !(f9.float_max_err < 1e-6))
      return {false, "n=9 float residual too large"};
    return {true, "multiplicity n+1 attained: n=1 exact (u-1)^2; n=2..6 cyclotomic "
                  "identity + float residual < 1e-9; n=9 float residual < 1e-6"};
  });

  // --- vertical decomposition census ---
  run(out, "vert-census-cubic", [&]() -> std::pair<bool, std::string> {
    VertCensus c = vert_decomposition(vert_example_cubic(p), p, 1, 1);
    std::vector<QPoint> want_b = {QPoint{Rational(0), Rational(0)},
                                  QPoint{Rational(1), Rational(2)},
                                  QPoint{Rational(2), Rational(3)}};
    bool ok = c.t == 4 && c.t_prime == 3 && c.b_bases == want_b &&
              c.strips.size() == 2 && c.strips[0].first == want_b[0] &&
              c.strips[0].second == want_b[1] && c.strips[1].first == want_b[1] &&
              c.strips[1].second == want_b[2] && c.a_base == want_b[0] &&
              c.a_dir == IntDir{-1, -3} && c.d_base == want_b[2] &&
              c.d_dir == IntDir{1, 0};
    std::ostringstream d;
    d << "t=" << c.t << " t'=" << c.t_prime << " breakpoints "
      << fmt_pts(c.b_bases) << " want t=4 t'=3 {(0,0) (1,2) (2,3)}";
    return {ok, d.str()};
  });

  // --- binomial + monomial-difference system: exact unique vector ---
  run(out, "binomial-exact-count", [&]() -> std::pair<bool, std::string> {
    SparsePoly f1(2), f2(2);
    f1.add_term(mono2(1, 1), Rational(1));
    f1.add_term(mono2(0, 0), Rational(-1));
    f2.add_term(mono2(1, 0), Rational(1));
    f2.add_term(mono2(0, 0), Rational(to_big(-p)));
    PolySystem F(2);
    F.push_back(f1);
    F.push_back(f2);
    CountResult r = count_small_support(F, p);
    std::vector<Rational> want = {Rational(1), Rational(-1)};
    bool ok = r.kind == CountResult::Kind::EXACT && r.value == 1 &&
              r.vec.has_value() && *r.vec == want;
    std::string d = "count=" + std::to_string(r.value);
    if (r.vec.has_value()) d += " vector " + fmt_vec(*r.vec);
    d += " want 1 at (1,-1)";
    return {ok, d};
  });

  // --- closed-form bounds (prime-free) ---
  run(out, "bound-formulas", [&]() -> std::pair<bool, std::string> {
    bool ok = maybetrivial_bound(1, 5, 9) == 0 && maybetrivial_bound(2, 1, 2) == 5 &&
              maybetrivial_bound(2, 3, 4) == 37 && assertion2_bound(1) == 2 &&
              assertion2_bound(2) == 3 && assertion2_bound(3) == 4 &&
              assertion2_bound(4) == 20;
    return {ok, "k(k-1)(2km(t-1)+1)/2 at (1,5,9),(2,1,2),(2,3,4) -> 0,5,37; "
                "max{2, floor(n/2)^n + n} at n=1..4 -> 2,3,4,20"};
  });

  return out;
}

}  // namespace ptrop
