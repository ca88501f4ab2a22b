#include "ptrop/svg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ptrop/error.hpp"
#include "ptrop/rational.hpp"

namespace ptrop {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Fixed two decimals, exact rounding (half away from zero).
std::string px(const Rational& q) {
  BigInt num = q.num() * 100;
  BigInt den = q.den();
  BigInt twice = num * 2 + (sgn(num) >= 0 ? den : -den);
  BigInt r = twice / (den * 2);  // mpz division truncates toward zero
  bool neg = sgn(r) < 0;
  BigInt a = abs(r);
  BigInt ip = a / 100, fp = a % 100;
  std::string frac = fp.get_str();
  if (frac.size() < 2) frac.insert(frac.begin(), '0');
  std::string out = (neg ? "-" : "") + ip.get_str();
  if (frac != "00") {
    if (frac[1] == '0') frac.erase(1);
    out += "." + frac;
  }
  return out;
}

// Exact world box plus the affine world-to-screen map.
class Frame {
 public:
  Frame(std::vector<QPoint> pts, const SvgOptions& opt) : opt_(opt) {
    if (pts.empty()) pts.push_back(QPoint{Rational(0), Rational(0)});
    x0_ = x1_ = pts.front().x;
    y0_ = y1_ = pts.front().y;
    for (const auto& q : pts) {
      x0_ = std::min(x0_, q.x);
      x1_ = std::max(x1_, q.x);
      y0_ = std::min(y0_, q.y);
      y1_ = std::max(y1_, q.y);
    }
    // Pad by a tenth of the span (at least 1) so nothing sits on the border.
    Rational tenth(to_big(1), to_big(10));
    Rational padx = std::max((x1_ - x0_) * tenth, Rational(1));
    Rational pady = std::max((y1_ - y0_) * tenth, Rational(1));
    x0_ = x0_ - padx;
    x1_ = x1_ + padx;
    y0_ = y0_ - pady;
    y1_ = y1_ + pady;

    Rational avail_w(to_big(opt.width - 2 * opt.margin));
    Rational avail_h(to_big(opt.height - 2 * opt.margin));
    Rational sx = avail_w / (x1_ - x0_);
    Rational sy = avail_h / (y1_ - y0_);
    scale_ = std::min(sx, sy);
    off_x_ = (Rational(to_big(opt.width)) - scale_ * (x1_ - x0_)) / Rational(2);
    off_y_ = (Rational(to_big(opt.height)) - scale_ * (y1_ - y0_)) / Rational(2);
  }

  std::string X(const Rational& wx) const { return px(off_x_ + (wx - x0_) * scale_); }
  std::string Y(const Rational& wy) const {
    return px(Rational(to_big(opt_.height)) - off_y_ - (wy - y0_) * scale_);
  }
  std::string pt(const QPoint& q) const { return X(q.x) + "," + Y(q.y); }

  // Largest t >= 0 with base + t*dir inside the padded world box (the base is
  // always inside it, because every cell base goes into the fitted points).
  Rational clip_t(const QPoint& base, const IntDir& dir) const {
    std::optional<Rational> best;
    auto consider = [&](long long d, const Rational& from, const Rational& lo,
                        const Rational& hi) {
      if (d == 0) return;
      Rational t = (d > 0 ? hi - from : lo - from) / Rational(to_big(d));
      if (!best || t < *best) best = t;
    };
    consider(dir.dx, base.x, x0_, x1_);
    consider(dir.dy, base.y, y0_, y1_);
    if (!best || best->sign() < 0) return Rational(0);
    return *best;
  }

  bool x_axis_visible() const { return y0_.sign() <= 0 && y1_.sign() >= 0; }
  bool y_axis_visible() const { return x0_.sign() <= 0 && x1_.sign() >= 0; }
  const Rational& x0() const { return x0_; }
  const Rational& x1() const { return x1_; }
  const Rational& y0() const { return y0_; }
  const Rational& y1() const { return y1_; }

 private:
  SvgOptions opt_;
  Rational x0_, x1_, y0_, y1_;
  Rational scale_, off_x_, off_y_;
};

void open_svg(std::ostringstream& out, const SvgOptions& opt, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << opt.width << "\" height=\"" << opt.height << "\" viewBox=\"0 0 "
      << opt.width << " " << opt.height << "\">\n"
      << "  <title>" << xml_escape(title) << "</title>\n"
      << "  <rect width=\"" << opt.width << "\" height=\"" << opt.height
      << "\" fill=\"#ffffff\"/>\n";
}

void draw_axes(std::ostringstream& out, const Frame& fr) {
  if (fr.x_axis_visible()) {
    out << "  <line x1=\"" << fr.X(fr.x0()) << "\" y1=\"" << fr.Y(Rational(0))
        << "\" x2=\"" << fr.X(fr.x1()) << "\" y2=\"" << fr.Y(Rational(0))
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
  if (fr.y_axis_visible()) {
    out << "  <line x1=\"" << fr.X(Rational(0)) << "\" y1=\"" << fr.Y(fr.y0())
        << "\" x2=\"" << fr.X(Rational(0)) << "\" y2=\"" << fr.Y(fr.y1())
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
  }
}

QPoint ray_end(const Frame& fr, const QPoint& base, const IntDir& dir) {
  Rational t = fr.clip_t(base, dir);
  return QPoint{base.x + t * Rational(to_big(dir.dx)),
                base.y + t * Rational(to_big(dir.dy))};
}

}  // namespace

std::string polygon_svg(const NewtonPolygon& P, const SvgOptions& opt) {
  std::vector<QPoint> pts;
  for (const auto& [e, v] : P.lifted())
    pts.push_back(QPoint{Rational(e), v});
  Frame fr(pts, opt);

  std::ostringstream out;
  open_svg(out, opt, "Newton polygon at p = " + std::to_string(P.prime()));
  draw_axes(out, fr);

  // Lower hull.
  out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < P.vertices().size(); ++i) {
    if (i) out << " ";
    out << fr.X(Rational(P.vertices()[i].first)) << "," << fr.Y(P.vertices()[i].second);
  }
  out << "\"/>\n";

  // Edge slope labels at edge midpoints.
  for (size_t i = 0; i + 1 < P.vertices().size(); ++i) {
    const auto& a = P.vertices()[i];
    const auto& b = P.vertices()[i + 1];
    Rational mx = (Rational(a.first) + Rational(b.first)) / Rational(2);
    Rational my = (a.second + b.second) / Rational(2);
    out << "  <text x=\"" << fr.X(mx) << "\" y=\"" << fr.Y(my)
        << "\" dy=\"-6\" font-size=\"11\" fill=\"#555555\">slope "
        << xml_escape(P.edges()[i].slope.str()) << "</text>\n";
  }

  // Lifted points: hollow dots; hull vertices: filled, labeled.
  for (const auto& [e, v] : P.lifted()) {
    bool is_vertex = false;
    for (const auto& w : P.vertices())
      if (w.first == e && w.second == v) is_vertex = true;
    out << "  <circle cx=\"" << fr.X(Rational(e)) << "\" cy=\"" << fr.Y(v)
        << "\" r=\"" << (is_vertex ? "4" : "3") << "\" fill=\""
        << (is_vertex ? "#d62728" : "#ffffff")
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    if (is_vertex) {
      out << "  <text x=\"" << fr.X(Rational(e)) << "\" y=\"" << fr.Y(v)
          << "\" dx=\"6\" dy=\"12\" font-size=\"11\" fill=\"#333333\">("
          << e << ", " << xml_escape(v.str()) << ")</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

std::string curves_svg(const std::vector<TropCurve>& curves,
                       const IntersectionReport* overlay, const SvgOptions& opt) {
  // Fit the frame to every finite feature of every curve (and the overlay).
  std::vector<QPoint> pts;
  for (const auto& C : curves) {
    for (const auto& v : C.vertices) pts.push_back(v);
    for (const auto& c : C.cells) {
      pts.push_back(c.base);
      if (!c.is_ray()) pts.push_back(c.end());
    }
  }
  if (overlay) {
    for (const auto& p : overlay->points) pts.push_back(p.at);
    for (const auto& o : overlay->overlaps) {
      pts.push_back(o.base);
      if (o.len.has_value()) {
        pts.push_back(QPoint{o.base.x + *o.len * Rational(to_big(o.dir.dx)),
                             o.base.y + *o.len * Rational(to_big(o.dir.dy))});
      }
    }
  }
  Frame fr(pts, opt);

  std::ostringstream out;
  std::string title = "Tropical curve";
  if (curves.size() > 1) title += "s";
  if (!curves.empty()) title += " at p = " + std::to_string(curves.front().prime);
  open_svg(out, opt, title);
  draw_axes(out, fr);

  for (size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& C = curves[ci];
    const char* color = kPalette[ci % kPaletteSize];
    for (const auto& c : C.cells) {
      QPoint end = c.is_ray() ? ray_end(fr, c.base, c.dir) : c.end();
      long long w = 2 + (c.mult > 1 ? std::min<long long>(c.mult - 1, 3) : 0);
      out << "  <line x1=\"" << fr.X(c.base.x)
          << "\" y1=\"" << fr.Y(c.base.y) << "\" x2=\"" << fr.X(end.x)
          << "\" y2=\"" << fr.Y(end.y) << "\" stroke=\"" << color
          << "\" stroke-width=\"" << w << "\" stroke-linecap=\"round\"/>\n";
    }
    for (const auto& v : C.vertices) {
      out << "  <circle cx=\"" << fr.X(v.x) << "\" cy=\"" << fr.Y(v.y)
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
  }

  if (overlay) {
    for (const auto& o : overlay->overlaps) {
      QPoint end = o.len.has_value()
                       ? QPoint{o.base.x + *o.len * Rational(to_big(o.dir.dx)),
                                o.base.y + *o.len * Rational(to_big(o.dir.dy))}
                       : ray_end(fr, o.base, o.dir);
      out << "  <line x1=\"" << fr.X(o.base.x) << "\" y1=\"" << fr.Y(o.base.y)
          << "\" x2=\"" << fr.X(end.x) << "\" y2=\"" << fr.Y(end.y)
          << "\" stroke=\"#ffd700\" stroke-width=\"7\" stroke-opacity=\"0.55\""
          << " stroke-linecap=\"round\"/>\n";
    }
    for (const auto& p : overlay->points) {
      out << "  <circle cx=\"" << fr.X(p.at.x) << "\" cy=\"" << fr.Y(p.at.y)
          << "\" r=\"5\" fill=\"" << (p.transversal ? "#000000" : "#ffffff")
          << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n"
          << "  <text x=\"" << fr.X(p.at.x) << "\" y=\"" << fr.Y(p.at.y)
          << "\" dx=\"8\" dy=\"-6\" font-size=\"11\" fill=\"#000000\">("
          << xml_escape(p.at.x.str()) << ", " << xml_escape(p.at.y.str())
          << ")</text>\n";
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace ptrop
