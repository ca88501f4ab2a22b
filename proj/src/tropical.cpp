#include "ptrop/tropical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ptrop {

IntDir primitive(long long dx, long long dy) {
  if (dx == 0 && dy == 0) throw std::logic_error("primitive of the zero vector");
  long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
  return IntDir{dx / g, dy / g};
}

namespace {

IntDir canonical_line_dir(const IntDir& d) {
  // A line's two primitive directions differ by sign; pick one canonically.
  if (d.dx < 0 || (d.dx == 0 && d.dy < 0)) return IntDir{-d.dx, -d.dy};
  return d;
}

Rational cross(const IntDir& a, const IntDir& b) {
  return Rational(BigInt(to_big(a.dx) * to_big(b.dy) - to_big(a.dy) * to_big(b.dx)));
}

Rational cross_pd(const QPoint& v, const IntDir& d) {
  return v.x * Rational(d.dy) - v.y * Rational(d.dx);
}

QPoint advance(const QPoint& base, const IntDir& d, const Rational& s) {
  return QPoint{base.x + s * Rational(d.dx), base.y + s * Rational(d.dy)};
}

QPoint sub(const QPoint& a, const QPoint& b) { return QPoint{a.x - b.x, a.y - b.y}; }

}  // namespace

QPoint TropCell::end() const {
  if (!len) throw std::logic_error("end() of an unbounded cell");
  return advance(base, dir, *len);
}

Rational TropCell::param_of(const QPoint& q) const {
  if (dir.dx != 0) return (q.x - base.x) / Rational(dir.dx);
  return (q.y - base.y) / Rational(dir.dy);
}

bool TropCell::contains(const QPoint& q) const {
  if (!cross_pd(sub(q, base), dir).is_zero()) return false;
  Rational s = param_of(q);
  if (s.sign() < 0) return false;
  return !len || s <= *len;
}

bool trop_membership(const SparsePoly& f, long p, const std::vector<Rational>& v) {
  if (f.is_zero()) fail("ZeroPolynomial", "tropical membership in the zero polynomial");
  if (static_cast<int>(v.size()) != f.nvars())
    fail("BadInput", "membership point arity does not match polynomial");
  bool have = false;
  Rational best;
  int hits = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational val = ord(c, p).finite();
    for (int i = 0; i < f.nvars(); ++i)
      if (m.e[i] != 0) val += Rational(m.e[i]) * v[i];
    if (!have || val < best) {
      best = val;
      hits = 1;
      have = true;
    } else if (val == best) {
      ++hits;
    }
  }
  return hits >= 2;
}

TropCurve plane_trop_curve(const SparsePoly& f, long p) {
  if (f.nvars() != 2) fail("BadInput", "plane_trop_curve requires exactly 2 variables");
  if (f.is_zero()) fail("ZeroPolynomial", "plane_trop_curve of the zero polynomial");
  if (f.term_count() < 2)
    fail("MonomialInput", "a monomial has an empty tropical curve");
  if (!is_prime(p)) fail("NonPrime", "plane_trop_curve requires a prime");

  TropCurve C;
  C.prime = p;
  for (const auto& [m, c] : f.terms()) {
    C.support.push_back(m);
    C.weights.push_back(ord(c, p).finite());
  }
  const size_t k = C.support.size();

  auto value_at = [&](size_t i, const QPoint& q) {
    return C.weights[i] + Rational(C.support[i].e[0]) * q.x +
           Rational(C.support[i].e[1]) * q.y;
  };

  struct RawCell {
    QPoint v0;
    IntDir dd;
    std::optional<Rational> lo, hi;  // nullopt = unbounded on that side
    std::vector<size_t> ties;
  };
  std::map<std::vector<size_t>, RawCell> by_ties;

  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j < k; ++j) {
      long long d0 = C.support[i].e[0] - C.support[j].e[0];
      long long d1 = C.support[i].e[1] - C.support[j].e[1];
      Rational rhs = C.weights[j] - C.weights[i];
      IntDir dd = primitive(-d1, d0);
      QPoint v0 = d0 != 0 ? QPoint{rhs / Rational(d0), Rational(0)}
                          : QPoint{Rational(0), rhs / Rational(d1)};

      std::optional<Rational> lo, hi;
      bool empty = false;
      for (size_t c = 0; c < k && !empty; ++c) {
        if (c == i || c == j) continue;
        long long b0 = C.support[c].e[0] - C.support[i].e[0];
        long long b1 = C.support[c].e[1] - C.support[i].e[1];
        Rational beta(BigInt(to_big(b0) * to_big(dd.dx) + to_big(b1) * to_big(dd.dy)));
        Rational alpha = Rational(b0) * v0.x + Rational(b1) * v0.y +
                         (C.weights[c] - C.weights[i]);
        if (beta.is_zero()) {
          if (alpha.sign() < 0) empty = true;
          continue;
        }
        Rational bound = -alpha / beta;
        if (beta.sign() > 0) {
          if (!lo || bound > *lo) lo = bound;
        } else {
          if (!hi || bound < *hi) hi = bound;
        }
      }
      if (empty) continue;
      if (lo && hi && *lo >= *hi) continue;  // empty or a single point (a vertex)

      Rational mid(0);
      if (lo && hi) mid = (*lo + *hi) / Rational(2);
      else if (lo) mid = *lo + Rational(1);
      else if (hi) mid = *hi - Rational(1);
      QPoint probe = advance(v0, dd, mid);

      Rational best = value_at(0, probe);
      for (size_t c = 1; c < k; ++c) {
        Rational val = value_at(c, probe);
        if (val < best) best = val;
      }
      std::vector<size_t> ties;
      for (size_t c = 0; c < k; ++c)
        if (value_at(c, probe) == best) ties.push_back(c);

      if (!by_ties.count(ties)) by_ties.emplace(ties, RawCell{v0, dd, lo, hi, ties});
    }
  }

  for (auto& [ties, rc] : by_ties) {
    // Dual edge: the tie exponents are collinear; its lattice length is the
    // cell multiplicity.
    long long best_lo = 0, best_hi = 0;  // projections onto the normal
    size_t arg_lo = 0, arg_hi = 0;
    for (size_t idx = 0; idx < ties.size(); ++idx) {
      const Monomial& m = C.support[ties[idx]];
      long long proj = m.e[0] * rc.dd.dy - m.e[1] * rc.dd.dx;  // dot with normal
      if (idx == 0 || proj < best_lo) { best_lo = proj; arg_lo = ties[idx]; }
      if (idx == 0 || proj > best_hi) { best_hi = proj; arg_hi = ties[idx]; }
    }
    long long ddx = C.support[arg_hi].e[0] - C.support[arg_lo].e[0];
    long long ddy = C.support[arg_hi].e[1] - C.support[arg_lo].e[1];
    long long mult = std::gcd(ddx < 0 ? -ddx : ddx, ddy < 0 ? -ddy : ddy);

    if (rc.lo && rc.hi) {
      TropCell cell;
      cell.base = advance(rc.v0, rc.dd, *rc.lo);
      cell.dir = rc.dd;
      cell.len = *rc.hi - *rc.lo;
      cell.mult = mult;
      cell.ties = ties;
      C.cells.push_back(std::move(cell));
    } else if (rc.lo || rc.hi) {
      TropCell cell;
      cell.base = advance(rc.v0, rc.dd, rc.lo ? *rc.lo : *rc.hi);
      cell.dir = rc.lo ? rc.dd : IntDir{-rc.dd.dx, -rc.dd.dy};
      cell.mult = mult;
      cell.ties = ties;
      C.cells.push_back(std::move(cell));
    } else {
      // A full line: two opposite rays from the deterministic base point.
      for (int s : {+1, -1}) {
        TropCell cell;
        cell.base = rc.v0;
        cell.dir = s > 0 ? rc.dd : IntDir{-rc.dd.dx, -rc.dd.dy};
        cell.mult = mult;
        cell.ties = ties;
        C.cells.push_back(std::move(cell));
      }
    }
  }

  std::set<QPoint> verts;
  for (const auto& cell : C.cells) {
    verts.insert(cell.base);
    if (cell.len) verts.insert(cell.end());
  }
  C.vertices.assign(verts.begin(), verts.end());
  return C;
}

bool curve_contains(const TropCurve& C, const QPoint& q) {
  return std::any_of(C.cells.begin(), C.cells.end(),
                     [&](const TropCell& c) { return c.contains(q); });
}

bool is_balanced(const TropCurve& C) {
  std::map<QPoint, std::pair<BigInt, BigInt>> sums;
  for (const auto& cell : C.cells) {
    auto& s = sums[cell.base];
    s.first += to_big(cell.mult) * to_big(cell.dir.dx);
    s.second += to_big(cell.mult) * to_big(cell.dir.dy);
    if (cell.len) {
      auto& e = sums[cell.end()];
      e.first -= to_big(cell.mult) * to_big(cell.dir.dx);
      e.second -= to_big(cell.mult) * to_big(cell.dir.dy);
    }
  }
  for (const auto& [v, s] : sums)
    if (sgn(s.first) != 0 || sgn(s.second) != 0) return false;
  return true;
}

namespace {

// Local structure of a curve at a point: absent, locally-a-line (with the
// canonical line direction), or a true vertex.
enum class Shape { kAbsent, kLine, kVertex };

struct LocalShape {
  Shape kind = Shape::kAbsent;
  IntDir line{0, 0};
};

LocalShape local_shape(const TropCurve& C, const QPoint& q) {
  std::vector<const TropCell*> at_end;
  for (const auto& cell : C.cells) {
    if (!cell.contains(q)) continue;
    Rational s = cell.param_of(q);
    bool interior = s.sign() > 0 && (!cell.len || s < *cell.len);
    if (interior) return LocalShape{Shape::kLine, canonical_line_dir(cell.dir)};
    at_end.push_back(&cell);
  }
  if (at_end.empty()) return LocalShape{};
  if (at_end.size() == 2) {
    IntDir d0 = at_end[0]->param_of(q).sign() > 0
                    ? IntDir{-at_end[0]->dir.dx, -at_end[0]->dir.dy}
                    : at_end[0]->dir;
    IntDir d1 = at_end[1]->param_of(q).sign() > 0
                    ? IntDir{-at_end[1]->dir.dx, -at_end[1]->dir.dy}
                    : at_end[1]->dir;
    // Two incident cells heading in exactly opposite directions: the point is
    // interior to the union (an artificial split of a line).
    if (d0.dx == -d1.dx && d0.dy == -d1.dy)
      return LocalShape{Shape::kLine, canonical_line_dir(d0)};
  }
  return LocalShape{Shape::kVertex, IntDir{0, 0}};
}

struct CellMeet {
  enum { kEmpty, kPoint, kOverlap } kind = kEmpty;
  QPoint point;
  TropCell overlap;
};

CellMeet meet(const TropCell& A, const TropCell& B) {
  CellMeet out;
  Rational cr = cross(A.dir, B.dir);
  QPoint diff = sub(B.base, A.base);
  if (!cr.is_zero()) {
    Rational s = (diff.x * Rational(B.dir.dy) - diff.y * Rational(B.dir.dx)) / cr;
    Rational t = (diff.x * Rational(A.dir.dy) - diff.y * Rational(A.dir.dx)) / cr;
    if (s.sign() < 0 || (A.len && s > *A.len)) return out;
    if (t.sign() < 0 || (B.len && t > *B.len)) return out;
    out.kind = CellMeet::kPoint;
    out.point = advance(A.base, A.dir, s);
    return out;
  }
  if (!cross_pd(diff, A.dir).is_zero()) return out;  // parallel, different lines

  // Same line: intersect parameter intervals measured along A.
  Rational b0 = A.param_of(B.base);
  bool same_dir = B.dir == A.dir;
  // B covers [b_lo, b_hi] in A-params (infinite ends when B is a ray).
  std::optional<Rational> b_lo, b_hi;
  if (B.len) {
    if (same_dir) { b_lo = b0; b_hi = b0 + *B.len; }
    else { b_lo = b0 - *B.len; b_hi = b0; }
  } else {
    if (same_dir) b_lo = b0;
    else b_hi = b0;
  }
  Rational lo(0);
  if (b_lo && *b_lo > lo) lo = *b_lo;
  std::optional<Rational> hi = A.len;
  if (b_hi && (!hi || *b_hi < *hi)) hi = *b_hi;

  if (hi && *hi < lo) return out;
  if (hi && *hi == lo) {
    out.kind = CellMeet::kPoint;
    out.point = advance(A.base, A.dir, lo);
    return out;
  }
  out.kind = CellMeet::kOverlap;
  out.overlap.base = advance(A.base, A.dir, lo);
  out.overlap.dir = A.dir;
  if (hi) out.overlap.len = *hi - lo;
  out.overlap.mult = 1;
  return out;
}

// Merges a collection of collinear-capable cells into disjoint maximal cells.
std::vector<TropCell> merge_cells(const std::vector<TropCell>& cells,
                                  std::vector<QPoint>* point_degenerates) {
  struct LineKey {
    IntDir d;
    Rational off;
    bool operator<(const LineKey& o) const {
      if (d.dx != o.d.dx) return d.dx < o.d.dx;
      if (d.dy != o.d.dy) return d.dy < o.d.dy;
      return off < o.off;
    }
  };
  struct Interval {
    Rational lo;
    std::optional<Rational> hi;
    bool lo_inf = false;
  };
  std::map<LineKey, std::pair<TropCell, std::vector<Interval>>> lines;
  for (const auto& c : cells) {
    IntDir cd = canonical_line_dir(c.dir);
    LineKey key{cd, cross_pd(c.base, cd)};
    auto it = lines.find(key);
    if (it == lines.end())
      it = lines.emplace(key, std::make_pair(c, std::vector<Interval>{})).first;
    // Parameters along cd anchored at the representative cell's base.
    const TropCell& anchor = it->second.first;
    TropCell axis{anchor.base, cd, std::nullopt, 1, {}};
    Rational t0 = axis.param_of(c.base);
    bool fwd = c.dir == cd;
    Interval iv;
    if (c.len) {
      iv.lo = fwd ? t0 : t0 - *c.len;
      iv.hi = fwd ? t0 + *c.len : t0;
    } else if (fwd) {
      iv.lo = t0;
    } else {
      iv.hi = t0;
      iv.lo_inf = true;
    }
    it->second.second.push_back(std::move(iv));
  }

  std::vector<TropCell> out;
  for (auto& [key, entry] : lines) {
    auto& [anchor, ivs] = entry;
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
      if (a.lo_inf != b.lo_inf) return a.lo_inf;
      return a.lo < b.lo;
    });
    TropCell axis{anchor.base, key.d, std::nullopt, 1, {}};
    size_t i = 0;
    while (i < ivs.size()) {
      Interval cur = ivs[i++];
      while (i < ivs.size()) {
        const Interval& nx = ivs[i];
        bool touches = cur.hi.has_value()
                           ? (nx.lo_inf || nx.lo <= *cur.hi)
                           : true;  // cur unbounded above swallows everything
        if (!touches) break;
        if (cur.hi && nx.hi && *nx.hi > *cur.hi) cur.hi = nx.hi;
        if (cur.hi && !nx.hi) cur.hi.reset();
        ++i;
      }
      if (!cur.lo_inf && cur.hi && *cur.hi == cur.lo) {
        if (point_degenerates)
          point_degenerates->push_back(advance(axis.base, axis.dir, cur.lo));
        continue;
      }
      TropCell piece;
      if (cur.lo_inf && cur.hi) {
        piece.base = advance(axis.base, axis.dir, *cur.hi);
        piece.dir = IntDir{-key.d.dx, -key.d.dy};
      } else if (cur.lo_inf && !cur.hi) {
        // Whole line: emit two rays from the anchor base.
        piece.base = axis.base;
        piece.dir = key.d;
        out.push_back(piece);
        piece.dir = IntDir{-key.d.dx, -key.d.dy};
      } else {
        piece.base = advance(axis.base, axis.dir, cur.lo);
        piece.dir = key.d;
        if (cur.hi) piece.len = *cur.hi - cur.lo;
      }
      piece.mult = 1;
      out.push_back(std::move(piece));
    }
  }
  return out;
}

struct OverlayState {
  std::set<QPoint> points;
  std::vector<TropCell> cells;
};

OverlayState overlay_cells(const std::vector<TropCell>& A, const std::vector<TropCell>& B) {
  OverlayState st;
  std::vector<TropCell> raw;
  for (const auto& a : A)
    for (const auto& b : B) {
      CellMeet m = meet(a, b);
      if (m.kind == CellMeet::kPoint) st.points.insert(m.point);
      else if (m.kind == CellMeet::kOverlap) raw.push_back(m.overlap);
    }
  std::vector<QPoint> degenerate;
  st.cells = merge_cells(raw, &degenerate);
  for (const auto& q : degenerate) st.points.insert(q);
  // A point lying inside an overlap piece is not isolated.
  for (auto it = st.points.begin(); it != st.points.end();) {
    bool inside = std::any_of(st.cells.begin(), st.cells.end(),
                              [&](const TropCell& c) { return c.contains(*it); });
    it = inside ? st.points.erase(it) : std::next(it);
  }
  return st;
}

IntersectionReport finalize(const OverlayState& st,
                            const std::vector<const TropCurve*>& curves) {
  IntersectionReport rep;
  for (const auto& q : st.points) {
    bool any_vertex = false;
    std::set<std::pair<long long, long long>> lines;
    for (const TropCurve* c : curves) {
      LocalShape sh = local_shape(*c, q);
      if (sh.kind == Shape::kVertex) any_vertex = true;
      if (sh.kind == Shape::kLine) lines.insert({sh.line.dx, sh.line.dy});
    }
    rep.points.push_back(IntersectionPoint{q, !any_vertex && lines.size() >= 2});
  }
  for (const auto& c : st.cells)
    rep.overlaps.push_back(OverlapCell{c.base, c.dir, c.len});
  rep.superset = rep.overlaps.empty();
  rep.tropically_generic =
      rep.superset && std::all_of(rep.points.begin(), rep.points.end(),
                                  [](const IntersectionPoint& p) { return p.transversal; });
  return rep;
}

}  // namespace

IntersectionReport intersect_plane_curves(const TropCurve& A, const TropCurve& B) {
  if (A.prime != B.prime)
    fail("PrimeMismatch", "intersecting curves over different primes");
  OverlayState st = overlay_cells(A.cells, B.cells);
  return finalize(st, {&A, &B});
}

IntersectionReport intersect_many(const std::vector<TropCurve>& curves) {
  if (curves.size() < 2) fail("BadInput", "intersect_many needs at least two curves");
  for (const auto& c : curves)
    if (c.prime != curves[0].prime)
      fail("PrimeMismatch", "intersecting curves over different primes");

  OverlayState st = overlay_cells(curves[0].cells, curves[1].cells);
  for (size_t k = 2; k < curves.size(); ++k) {
    OverlayState next;
    for (const auto& q : st.points)
      if (curve_contains(curves[k], q)) next.points.insert(q);
    std::vector<TropCell> raw;
    for (const auto& a : st.cells)
      for (const auto& b : curves[k].cells) {
        CellMeet m = meet(a, b);
        if (m.kind == CellMeet::kPoint) next.points.insert(m.point);
        else if (m.kind == CellMeet::kOverlap) raw.push_back(m.overlap);
      }
    std::vector<QPoint> degenerate;
    next.cells = merge_cells(raw, &degenerate);
    for (const auto& q : degenerate) next.points.insert(q);
    for (auto it = next.points.begin(); it != next.points.end();) {
      bool inside = std::any_of(next.cells.begin(), next.cells.end(),
                                [&](const TropCell& c) { return c.contains(*it); });
      it = inside ? next.points.erase(it) : std::next(it);
    }
    st = std::move(next);
  }
  std::vector<const TropCurve*> ptrs;
  for (const auto& c : curves) ptrs.push_back(&c);
  return finalize(st, ptrs);
}

VertCensus vert_decomposition(const SparsePoly& g, long p, int var_index, int total_y) {
  if (!g.is_univariate()) fail("BadInput", "vert_decomposition requires univariate g");
  if (g.is_zero()) fail("ZeroPolynomial", "vert_decomposition of the zero polynomial");
  if (g.term_count() < 2)
    fail("MonomialInput", "vert_decomposition needs at least two terms");
  if (total_y < 1 || var_index < 1 || var_index > total_y)
    fail("BadInput", "vert_decomposition variable index out of range");

  NewtonPolygon P = newton_polygon(g, p);
  VertCensus census;
  census.var_index = var_index;
  census.total_y = total_y;
  census.t = static_cast<long long>(g.term_count());
  census.t_prime = static_cast<long long>(P.edges().size());

  // Breakpoints of v -> min_a (a v + w_a): one per edge, at v = -slope, in
  // ascending v (edges are slope-ascending, so iterate them in reverse).
  for (size_t idx = P.edges().size(); idx-- > 0;) {
    Rational v = -P.edges()[idx].slope;
    const LiftedPoint& left = P.vertices()[idx];
    Rational height = Rational(left.first) * v + left.second;
    census.b_bases.push_back(QPoint{v, height});
  }
  for (size_t i = 0; i + 1 < census.b_bases.size(); ++i)
    census.strips.emplace_back(census.b_bases[i], census.b_bases[i + 1]);

  census.a_base = census.b_bases.front();
  census.a_dir = primitive(-1, -g.max_exp());
  census.d_base = census.b_bases.back();
  census.d_dir = primitive(1, g.min_exp());
  return census;
}

}  // namespace ptrop
