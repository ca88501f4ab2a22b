#pragma once

// JSON emission and parsing for every datatype the CLI exchanges.
//
// Conventions shared by all schemas:
//   * every number that could leave the 53-bit safe-integer range travels as
//     a canonical Rational string ("-5", "3/4", "inf"); small structural
//     integers (exponents, counts, indices, primes) are plain JSON integers
//   * objects are emitted with sorted keys (the underlying JSON value is
//     map-backed), so identical data always serializes to identical bytes
//   * floating-point values never appear, with one documented exception: the
//     sharpness report's floating tier, which carries an explicit
//     "float_note": "approximate" marker
//
// Input schemas (accepted by the parse_* functions):
//   polynomial  {"vars": ["x1","x2"],
//                "terms": [{"coeff": "36", "exps": [0,0]}, ...]}
//               coefficients are Rational strings (plain integers allowed);
//               exponents may be negative (Laurent)
//   system      {"polys": [<polynomial>, ...]}         (shared var list)
//   support     [[0,0],[9,10], ...]  or  {"monomials": [[0,0], ...]}
//   matrix      {"rows": 2, "cols": 3, "entries": [["1","-1","0"], ...]}
//               (also accepted: a bare array of rows)
//   sps         {"k": 2, "m": 1, "t": 3,
//                "factors": [[<polynomial>, ...], ...]}  (k rows of m
//               univariate polynomials, each with at most t terms)
//   roots       [["1", 3], ["6", 2], ...]   (root, multiplicity) pairs
//
// Every parse function throws Error("BadInput", ...) on malformed data.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ptrop/linalg.hpp"
#include "ptrop/multiplicity.hpp"
#include "ptrop/newton.hpp"
#include "ptrop/oracle.hpp"
#include "ptrop/poly.hpp"
#include "ptrop/rational.hpp"
#include "ptrop/tropical.hpp"
#include "ptrop/valcount.hpp"

namespace ptrop {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Emission.  All functions are deterministic: same value, same bytes.

// Default variable names are x1..xn when `vars` is empty; `vars` must
// otherwise have exactly f.nvars() entries.
Json poly_json(const SparsePoly& f, std::vector<std::string> vars = {});
Json system_json(const PolySystem& F, std::vector<std::string> vars = {});

Json matrix_json(const RationalMatrix& M);
Json int_matrix_json(const IntMatrix& M);
Json support_json(const std::vector<Monomial>& A);

// {"prime", "lifted", "vertices" (as [exp, "ord"] pairs), "edges"
//  ([{"slope","hlen"}]), "valuations" ({"-5": 1, "0": 3, ...})}
Json polygon_json(const NewtonPolygon& P);

// {"prime", "support", "weights", "vertices", "cells"}; cells carry
// base/dir/kind(segment|ray)/len(segments only)/mult/ties.
Json curve_json(const TropCurve& C);

// {"points" ([{"at","transversal"}]), "overlaps", "superset",
//  "tropically_generic"}
Json intersection_json(const IntersectionReport& R);

Json census_json(const VertCensus& V);
Json classify_json(const SupportClass& S);

// {"kind": "exact"|"infinite"|"bounded"} plus, per kind: exact carries
// "value" and (when value == 1) "vector"; bounded carries "bound",
// "superset", "candidates".
Json count_json(const CountResult& R);

Json fij_json(const FijReduction& R);
Json gauss_jordan_json(const GaussJordanResult& R);
Json rref_json(const RrefResult& R);
Json hermite_json(const UnimodularTransform& T);

// {"b": [1,-2,1], "C": "...", "cleared_lhs": <poly>, "cleared_rhs": <poly>,
//  "cleared": <poly>, "a", "alphas", "c", "n"}; the cleared polynomials are
// univariate in u.
Json reduction_json(const UnivariateReduction& R);

Json sharpness_json(const SharpnessReport& R);
Json zp_json(const ZpRootReport& R);
Json roots_json(const std::vector<std::pair<Rational, long long>>& roots);
Json valuations_json(const ValuationCount& counts);

// ---------------------------------------------------------------------------
// Parsing.

Rational parse_rational(const Json& j);
Monomial parse_exps(const Json& j);
SparsePoly parse_poly(const Json& j);
PolySystem parse_system(const Json& j);
std::vector<Monomial> parse_support(const Json& j);
SpsExpression parse_sps(const Json& j);
IntMatrix parse_int_matrix(const Json& j);
RationalMatrix parse_rational_matrix(const Json& j);
std::vector<std::pair<Rational, long long>> parse_roots(const Json& j);

// Parses JSON text (not a file path); BadInput on syntax errors.
Json parse_text(const std::string& text);

// Canonical dump: 2-space indent, sorted keys, trailing newline.
std::string dump_json(const Json& j);

}  // namespace ptrop
