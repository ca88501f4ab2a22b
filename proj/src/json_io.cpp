#include "ptrop/json_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ptrop/error.hpp"

namespace ptrop {

namespace {

std::vector<std::string> default_vars(int nvars) {
  std::vector<std::string> vars;
  vars.reserve(static_cast<size_t>(nvars));
  for (int i = 1; i <= nvars; ++i) vars.push_back("x" + std::to_string(i));
  return vars;
}

Json exps_json(const Monomial& m) {
  Json a = Json::array();
  for (long long e : m.e) a.push_back(e);
  return a;
}

Json qpoint_json(const QPoint& q) {
  return Json::array({q.x.str(), q.y.str()});
}

Json intdir_json(const IntDir& d) { return Json::array({d.dx, d.dy}); }

Json lifted_json(const std::vector<LiftedPoint>& pts) {
  Json a = Json::array();
  for (const auto& [e, v] : pts) a.push_back(Json::array({e, v.str()}));
  return a;
}

// A BigInt as a JSON integer when it fits the 53-bit safe range, else as a
// decimal string (both compare equal under the canonical dump rules only to
// themselves, so emission stays deterministic).
Json big_json(const BigInt& n) {
  static const BigInt kSafe = (to_big(1) << 53);
  if (n < kSafe && n > -kSafe) {
    return static_cast<long long>(n.get_si());
  }
  return n.get_str();
}

long long require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail("BadInput", std::string(what) + ": expected an integer");
  return j.get<long long>();
}

const Json& require_member(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) fail("BadInput", std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail("BadInput", std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

}  // namespace

// ---------------------------------------------------------------------------
// Emission.

Json poly_json(const SparsePoly& f, std::vector<std::string> vars) {
  if (vars.empty()) vars = default_vars(f.nvars());
  if (static_cast<int>(vars.size()) != f.nvars())
    fail("BadInput", "poly_json: variable list does not match nvars");
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["coeff"] = c.str();
    t["exps"] = exps_json(m);
    terms.push_back(std::move(t));
  }
  Json j;
  j["vars"] = vars;
  j["terms"] = std::move(terms);
  return j;
}

Json system_json(const PolySystem& F, std::vector<std::string> vars) {
  Json polys = Json::array();
  for (const auto& f : F.polys()) polys.push_back(poly_json(f, vars));
  Json j;
  j["polys"] = std::move(polys);
  return j;
}

Json matrix_json(const RationalMatrix& M) {
  Json entries = Json::array();
  for (size_t r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < M.cols(); ++c) row.push_back(M.at(r, c).str());
    entries.push_back(std::move(row));
  }
  Json j;
  j["rows"] = M.rows();
  j["cols"] = M.cols();
  j["entries"] = std::move(entries);
  return j;
}

Json int_matrix_json(const IntMatrix& M) {
  Json entries = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    entries.push_back(std::move(r));
  }
  Json j;
  j["rows"] = M.size();
  j["cols"] = M.empty() ? 0 : M.front().size();
  j["entries"] = std::move(entries);
  return j;
}

Json support_json(const std::vector<Monomial>& A) {
  Json a = Json::array();
  for (const auto& m : A) a.push_back(exps_json(m));
  return a;
}

Json valuations_json(const ValuationCount& counts) {
  Json j = Json::object();
  for (const auto& [v, n] : counts) j[v.str()] = n;
  return j;
}

Json polygon_json(const NewtonPolygon& P) {
  Json edges = Json::array();
  for (const auto& e : P.edges()) {
    Json ej;
    ej["slope"] = e.slope.str();
    ej["hlen"] = e.hlen;
    edges.push_back(std::move(ej));
  }
  Json j;
  j["prime"] = P.prime();
  j["lifted"] = lifted_json(P.lifted());
  j["vertices"] = lifted_json(P.vertices());
  j["edges"] = std::move(edges);
  j["valuations"] = valuations_json(root_valuations(P));
  return j;
}

Json curve_json(const TropCurve& C) {
  Json weights = Json::array();
  for (const auto& w : C.weights) weights.push_back(w.str());
  Json vertices = Json::array();
  for (const auto& v : C.vertices) vertices.push_back(qpoint_json(v));
  Json cells = Json::array();
  for (const auto& c : C.cells) {
    Json cj;
    cj["base"] = qpoint_json(c.base);
    cj["dir"] = intdir_json(c.dir);
    cj["kind"] = c.is_ray() ? "ray" : "segment";
    if (!c.is_ray()) cj["len"] = c.len->str();
    cj["mult"] = c.mult;
    cj["ties"] = c.ties;
    cells.push_back(std::move(cj));
  }
  Json j;
  j["prime"] = C.prime;
  j["support"] = support_json(C.support);
  j["weights"] = std::move(weights);
  j["vertices"] = std::move(vertices);
  j["cells"] = std::move(cells);
  return j;
}

Json intersection_json(const IntersectionReport& R) {
  Json points = Json::array();
  for (const auto& p : R.points) {
    Json pj;
    pj["at"] = qpoint_json(p.at);
    pj["transversal"] = p.transversal;
    points.push_back(std::move(pj));
  }
  Json overlaps = Json::array();
  for (const auto& o : R.overlaps) {
    Json oj;
    oj["base"] = qpoint_json(o.base);
    oj["dir"] = intdir_json(o.dir);
    oj["kind"] = o.len.has_value() ? "segment" : "ray";
    if (o.len.has_value()) oj["len"] = o.len->str();
    overlaps.push_back(std::move(oj));
  }
  Json j;
  j["points"] = std::move(points);
  j["overlaps"] = std::move(overlaps);
  j["tropically_generic"] = R.tropically_generic;
  j["superset"] = R.superset;
  return j;
}

Json census_json(const VertCensus& V) {
  Json b = Json::array();
  for (const auto& q : V.b_bases) b.push_back(qpoint_json(q));
  Json strips = Json::array();
  for (const auto& [l, r] : V.strips)
    strips.push_back(Json::array({qpoint_json(l), qpoint_json(r)}));
  Json j;
  j["var_index"] = V.var_index;
  j["total_y"] = V.total_y;
  j["t"] = V.t;
  j["t_prime"] = V.t_prime;
  j["a_base"] = qpoint_json(V.a_base);
  j["a_dir"] = intdir_json(V.a_dir);
  j["b_bases"] = std::move(b);
  j["strips"] = std::move(strips);
  j["d_base"] = qpoint_json(V.d_base);
  j["d_dir"] = intdir_json(V.d_dir);
  return j;
}

Json classify_json(const SupportClass& S) {
  Json j;
  j["n"] = S.n;
  j["t"] = S.t;
  j["regime"] = regime_name(S.regime);
  j["general_position"] = S.general_position;
  j["general_position_checked"] = S.general_position_checked;
  return j;
}

Json count_json(const CountResult& R) {
  Json j;
  switch (R.kind) {
    case CountResult::Kind::EXACT: {
      j["kind"] = "exact";
      j["value"] = R.value;
      if (R.vec.has_value()) {
        Json v = Json::array();
        for (const auto& x : *R.vec) v.push_back(x.str());
        j["vector"] = std::move(v);
      }
      break;
    }
    case CountResult::Kind::INFINITE: {
      j["kind"] = "infinite";
      break;
    }
    case CountResult::Kind::BOUNDED: {
      j["kind"] = "bounded";
      j["bound"] = big_json(R.bound);
      j["superset"] = R.superset;
      Json cands = Json::array();
      for (const auto& vec : R.candidates) {
        Json v = Json::array();
        for (const auto& x : vec) v.push_back(x.str());
        cands.push_back(std::move(v));
      }
      j["candidates"] = std::move(cands);
      break;
    }
  }
  return j;
}

Json fij_json(const FijReduction& R) {
  Json degs = Json::array();
  for (const auto& [row, kase] : R.degeneracies)
    degs.push_back(Json::array({row, std::string(1, kase)}));
  Json j;
  j["system"] = system_json(R.system);
  j["support"] = support_json(R.support);
  j["i"] = R.i;
  j["j"] = R.j;
  j["star"] = R.star;
  j["degeneracies"] = std::move(degs);
  return j;
}

Json gauss_jordan_json(const GaussJordanResult& R) {
  Json j;
  j["system"] = system_json(R.system);
  j["order"] = support_json(R.order);
  j["matrix"] = rref_json(R.reduced);
  return j;
}

Json rref_json(const RrefResult& R) {
  Json j;
  j["matrix"] = matrix_json(R.mat);
  j["pivot_cols"] = R.pivot_cols;
  return j;
}

Json hermite_json(const UnimodularTransform& T) {
  Json j;
  j["U"] = int_matrix_json(T.U);
  j["U_inv"] = int_matrix_json(T.U_inv);
  return j;
}

Json reduction_json(const UnivariateReduction& R) {
  Json b = Json::array();
  for (const auto& v : R.b) b.push_back(big_json(v));
  Json alphas = Json::array();
  for (const auto& a : R.alphas) alphas.push_back(a.str());
  std::vector<std::string> u = {"u"};
  Json j;
  j["n"] = R.n;
  j["a"] = support_json(R.a);
  j["alphas"] = std::move(alphas);
  j["c"] = R.c.str();
  j["b"] = std::move(b);
  j["C"] = R.C.str();
  j["cleared_lhs"] = poly_json(R.cleared_lhs, u);
  j["cleared_rhs"] = poly_json(R.cleared_rhs, u);
  j["cleared"] = poly_json(R.cleared, u);
  return j;
}

Json sharpness_json(const SharpnessReport& R) {
  Json j;
  j["n"] = R.n;
  j["expected_multiplicity"] = R.expected_multiplicity;
  j["system_description"] = R.system_description;
  if (R.exact_g.has_value()) {
    j["exact_g"] = poly_json(*R.exact_g, {"u"});
    j["exact_multiplicity"] = R.exact_multiplicity;
  }
  j["float_checked"] = R.float_checked;
  if (R.float_checked) {
    j["float_max_err"] = R.float_max_err;
    j["float_note"] = "approximate (floating-point tier)";
  }
  j["cyclotomic_checked"] = R.cyclotomic_checked;
  if (R.cyclotomic_checked) j["cyclotomic_identity_ok"] = R.cyclotomic_identity_ok;
  return j;
}

Json zp_json(const ZpRootReport& R) {
  Json j;
  j["prime"] = R.prime;
  j["k"] = R.k;
  j["precision"] = R.precision;
  j["approximate"] = R.approximate;
  j["certified"] = R.certified;
  j["inconclusive"] = R.inconclusive;
  j["precision_too_low"] = R.precision_too_low;
  return j;
}

Json roots_json(const std::vector<std::pair<Rational, long long>>& roots) {
  Json a = Json::array();
  for (const auto& [r, m] : roots) a.push_back(Json::array({r.str(), m}));
  return a;
}

// ---------------------------------------------------------------------------
// Parsing.

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  fail("BadInput", "expected a rational (integer or \"num/den\" string), got " +
                       std::string(j.type_name()));
}

Monomial parse_exps(const Json& j) {
  if (!j.is_array() || j.empty())
    fail("BadInput", "exponent vector: expected a nonempty array of integers");
  std::vector<long long> e;
  e.reserve(j.size());
  for (const auto& x : j) e.push_back(require_int(x, "exponent"));
  return Monomial(std::move(e));
}

SparsePoly parse_poly(const Json& j) {
  const Json& vars = require_member(j, "vars", "polynomial");
  const Json& terms = require_member(j, "terms", "polynomial");
  if (!vars.is_array() || vars.empty())
    fail("BadInput", "polynomial: \"vars\" must be a nonempty array");
  if (!terms.is_array()) fail("BadInput", "polynomial: \"terms\" must be an array");
  const int nvars = static_cast<int>(vars.size());
  SparsePoly f(nvars);
  for (const auto& t : terms) {
    const Json& coeff = require_member(t, "coeff", "term");
    const Json& exps = require_member(t, "exps", "term");
    Monomial m = parse_exps(exps);
    if (static_cast<int>(m.nvars()) != nvars)
      fail("BadInput", "term: exponent vector length does not match \"vars\"");
    f.add_term(m, parse_rational(coeff));
  }
  return f;
}

PolySystem parse_system(const Json& j) {
  const Json& polys = require_member(j, "polys", "system");
  if (!polys.is_array() || polys.empty())
    fail("BadInput", "system: \"polys\" must be a nonempty array");
  std::vector<SparsePoly> fs;
  fs.reserve(polys.size());
  for (const auto& pj : polys) fs.push_back(parse_poly(pj));
  for (const auto& f : fs)
    if (f.nvars() != fs.front().nvars())
      fail("BadInput", "system: polynomials disagree on the variable count");
  return PolySystem(std::move(fs));
}

std::vector<Monomial> parse_support(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) arr = &require_member(j, "monomials", "support");
  if (!arr->is_array() || arr->empty())
    fail("BadInput", "support: expected a nonempty array of exponent vectors");
  std::vector<Monomial> A;
  A.reserve(arr->size());
  for (const auto& mj : *arr) A.push_back(parse_exps(mj));
  for (const auto& m : A)
    if (m.nvars() != A.front().nvars())
      fail("BadInput", "support: exponent vectors disagree on length");
  return A;
}

SpsExpression parse_sps(const Json& j) {
  SpsExpression e;
  e.k = require_int(require_member(j, "k", "sps"), "sps k");
  e.m = require_int(require_member(j, "m", "sps"), "sps m");
  e.t = require_int(require_member(j, "t", "sps"), "sps t");
  const Json& factors = require_member(j, "factors", "sps");
  if (!factors.is_array())
    fail("BadInput", "sps: \"factors\" must be an array of polynomial rows");
  for (const auto& row : factors) {
    if (!row.is_array()) fail("BadInput", "sps: each factor row must be an array");
    std::vector<SparsePoly> fs;
    fs.reserve(row.size());
    for (const auto& pj : row) fs.push_back(parse_poly(pj));
    e.factors.push_back(std::move(fs));
  }
  return e;
}

IntMatrix parse_int_matrix(const Json& j) {
  const Json* entries = &j;
  if (j.is_object()) entries = &require_member(j, "entries", "matrix");
  if (!entries->is_array() || entries->empty())
    fail("BadInput", "matrix: expected a nonempty array of rows");
  IntMatrix M;
  for (const auto& rj : *entries) {
    if (!rj.is_array() || rj.empty())
      fail("BadInput", "matrix: each row must be a nonempty array");
    std::vector<BigInt> row;
    row.reserve(rj.size());
    for (const auto& x : rj) {
      Rational q = parse_rational(x);
      if (!q.is_integer()) fail("BadInput", "matrix: entries must be integers");
      row.push_back(q.num());
    }
    M.push_back(std::move(row));
  }
  for (const auto& row : M)
    if (row.size() != M.front().size())
      fail("BadInput", "matrix: rows have unequal lengths");
  return M;
}

RationalMatrix parse_rational_matrix(const Json& j) {
  const Json* entries = &j;
  if (j.is_object()) entries = &require_member(j, "entries", "matrix");
  if (!entries->is_array() || entries->empty())
    fail("BadInput", "matrix: expected a nonempty array of rows");
  const size_t rows = entries->size();
  const size_t cols = entries->front().is_array() ? entries->front().size() : 0;
  if (cols == 0) fail("BadInput", "matrix: each row must be a nonempty array");
  RationalMatrix M(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    const Json& rj = (*entries)[r];
    if (!rj.is_array() || rj.size() != cols)
      fail("BadInput", "matrix: rows have unequal lengths");
    for (size_t c = 0; c < cols; ++c) M.at(r, c) = parse_rational(rj[c]);
  }
  return M;
}

std::vector<std::pair<Rational, long long>> parse_roots(const Json& j) {
  if (!j.is_array()) fail("BadInput", "roots: expected an array of [root, mult] pairs");
  std::vector<std::pair<Rational, long long>> roots;
  roots.reserve(j.size());
  for (const auto& pj : j) {
    if (!pj.is_array() || pj.size() != 2)
      fail("BadInput", "roots: each entry must be a [root, mult] pair");
    long long m = require_int(pj[1], "multiplicity");
    if (m <= 0) fail("BadInput", "roots: multiplicities must be positive");
    roots.emplace_back(parse_rational(pj[0]), m);
  }
  return roots;
}

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("BadInput", "malformed JSON input");
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ptrop
