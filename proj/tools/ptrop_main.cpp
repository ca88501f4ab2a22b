// ptrop — exact p-adic tropical geometry of sparse polynomials.
//
// Subcommands: polygon, trop, intersect, rref, hnf, reduce-sps, count,
// bound, mult, oracle, examples.  Input is JSON (a file path, inline JSON
// text, or "-" for stdin); output is canonical JSON (sorted keys, Rational
// strings), SVG 1.1 for the geometry subcommands, or plain text where noted.
//
// Exit codes: 0 success, 1 domain error (a JSON {"error","message"} object
// on stderr), 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptrop/error.hpp"
#include "ptrop/examples.hpp"
#include "ptrop/json_io.hpp"
#include "ptrop/linalg.hpp"
#include "ptrop/multiplicity.hpp"
#include "ptrop/newton.hpp"
#include "ptrop/oracle.hpp"
#include "ptrop/poly.hpp"
#include "ptrop/svg.hpp"
#include "ptrop/tropical.hpp"
#include "ptrop/valcount.hpp"

namespace {

using namespace ptrop;

// Usage problems detected after CLI11 parsing (wrong format for a
// subcommand, missing mode flags, ...) exit with status 2 like CLI11's own
// parse errors.
struct UsageError {
  std::string message;
};

Json read_input(const std::string& in) {
  if (in.empty()) throw UsageError{"--in is required for this subcommand"};
  if (in == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_text(ss.str());
  }
  const size_t first = in.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (in[first] == '{' || in[first] == '[')) {
    return parse_text(in);
  }
  std::ifstream f(in);
  if (!f) fail("BadInput", "cannot open input file: " + in);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) fail("BadInput", "cannot open output file: " + out);
  f << text;
}

std::vector<Monomial> grlex_desc_support(const PolySystem& F) {
  std::vector<Monomial> order = F.union_support();
  std::sort(order.begin(), order.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  return order;
}

std::vector<std::string> sps_var_names(const SpsExpression& e) {
  std::vector<std::string> names = {"x"};
  for (long long i = 0; i < e.k; ++i)
    for (long long j = 0; j < e.m; ++j)
      names.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return names;
}

std::vector<BigInt> mat_vec(const IntMatrix& U, const std::vector<BigInt>& a) {
  std::vector<BigInt> out(U.size(), BigInt(0));
  for (size_t r = 0; r < U.size(); ++r)
    for (size_t c = 0; c < a.size(); ++c) out[r] += U[r][c] * a[c];
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic tropical geometry of sparse polynomials"};
  app.require_subcommand(1);

  // Common option storage.
  std::string in, out, format = "json", order_in;
  long prime = 0;

  auto add_io = [&](CLI::App* cmd, bool needs_prime) {
    cmd->add_option("--in", in, "input: JSON file path, inline JSON, or - for stdin");
    cmd->add_option("--out", out, "output path (default: stdout)");
    cmd->add_option("--format", format, "output format: json | svg | text")
        ->check(CLI::IsMember({"json", "svg", "text"}));
    if (needs_prime)
      cmd->add_option("--prime", prime, "the prime p")->required();
    else
      cmd->add_option("--prime", prime, "the prime p");
  };

  CLI::App* c_polygon = app.add_subcommand(
      "polygon", "Newton polygon and root-valuation counts of a univariate polynomial");
  add_io(c_polygon, true);

  CLI::App* c_trop = app.add_subcommand(
      "trop", "tropical plane curve of a two-variable polynomial");
  add_io(c_trop, true);

  CLI::App* c_intersect = app.add_subcommand(
      "intersect", "intersection of the tropical curves of a polynomial system");
  add_io(c_intersect, true);

  CLI::App* c_rref = app.add_subcommand(
      "rref", "reduced row echelon form of a matrix, or Gauss-Jordan reduction "
              "of a polynomial system over its support");
  add_io(c_rref, false);
  c_rref->add_option("--order", order_in,
                     "support ordering for systems (JSON; default: graded-lex "
                     "descending on the union support)");

  CLI::App* c_hnf = app.add_subcommand(
      "hnf", "unimodular triangularization of integer vectors (rows of the "
             "input matrix)");
  add_io(c_hnf, false);
  bool hnf_echelon = false, hnf_kernel = false;
  c_hnf->add_flag("--echelon", hnf_echelon,
                  "unimodular row echelon form T*M = H with left-kernel rows");
  c_hnf->add_flag("--kernel", hnf_kernel,
                  "primitive integer kernel vector (nullity must be 1)");

  CLI::App* c_sps = app.add_subcommand(
      "reduce-sps", "rewrite a sum of products of sparse univariates as a "
                    "polynomial system with the same root x-coordinates");
  add_io(c_sps, false);

  CLI::App* c_count = app.add_subcommand(
      "count", "classify a system's support and count/bound its valuation vectors");
  add_io(c_count, true);

  CLI::App* c_bound = app.add_subcommand("bound", "closed-form bounds");
  std::vector<long long> mt_args;
  long long a2_n = 0;
  int mb_n = 0;
  c_bound->add_option("--maybetrivial", mt_args,
                      "k m t: bound for k-fold products of m univariate "
                      "t-sparse factors")
      ->expected(3);
  c_bound->add_option("--assertion2", a2_n, "n: bound for the n+2-support family");
  c_bound->add_option("--mult", mb_n,
                      "n: sharp root-multiplicity bound for the --in support");
  c_bound->add_option("--in", in, "support JSON (for --mult)");
  c_bound->add_option("--out", out, "output path (default: stdout)");
  c_bound->add_option("--format", format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* c_mult = app.add_subcommand(
      "mult", "univariate reduction of a normalized system; root multiplicities");
  add_io(c_mult, false);
  std::string mult_at;
  int sharp_n = 0;
  c_mult->add_option("--at", mult_at, "rational zeta: multiplicity of the "
                                      "(reduced or input) polynomial at zeta");
  c_mult->add_option("--sharpness", sharp_n,
                     "n: report on the sharpness witness for the n+1 bound");

  CLI::App* c_oracle = app.add_subcommand(
      "oracle", "brute-force reference computations on univariate polynomials");
  add_io(c_oracle, false);
  bool o_rr = false, o_sf = false, o_zp = false, o_planted = false;
  int o_family = 0;
  long long o_prec = 0;
  std::string o_scale = "1";
  c_oracle->add_flag("--rational-roots", o_rr, "all rational roots with multiplicity");
  c_oracle->add_flag("--squarefree", o_sf, "square-free part");
  c_oracle->add_flag("--zp", o_zp, "Z_p root count mod p^k (requires --prime, --precision)");
  c_oracle->add_option("--precision", o_prec, "residue precision k for --zp");
  c_oracle->add_option("--family", o_family, "n: emit the n-th iterated-square family member");
  c_oracle->add_flag("--planted", o_planted,
                     "build a polynomial from [root, mult] pairs (--in) and --scale");
  c_oracle->add_option("--scale", o_scale, "leading scale for --planted (default 1)");

  CLI::App* c_examples = app.add_subcommand(
      "examples", "regenerate every stored example and diff against expectations");
  bool ex_all = false;
  c_examples->add_flag("--all", ex_all, "run the full table (default)");
  c_examples->add_option("--prime", prime, "prime to instantiate symbolic-p examples (default 3)");
  c_examples->add_option("--out", out, "output path (default: stdout)");
  c_examples->add_option("--format", format, "output format: json | text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // The data subcommands default to JSON; the human-facing ones to text.
  if ((*c_bound && c_bound->count("--format") == 0) ||
      (*c_examples && c_examples->count("--format") == 0)) {
    format = "text";
  }

  try {
    const bool want_svg = format == "svg";
    const bool want_text = format == "text";

    if (*c_polygon) {
      NewtonPolygon P = newton_polygon(parse_poly(read_input(in)), prime);
      if (want_svg) {
        write_output(polygon_svg(P), out);
      } else if (want_text) {
        std::ostringstream ss;
        for (const auto& [v, n] : root_valuations(P))
          ss << v.str() << " -> " << n << "\n";
        write_output(ss.str(), out);
      } else {
        write_output(dump_json(polygon_json(P)), out);
      }
      return 0;
    }

    if (*c_trop) {
      TropCurve C = plane_trop_curve(parse_poly(read_input(in)), prime);
      write_output(want_svg ? curves_svg({C}) : dump_json(curve_json(C)), out);
      return 0;
    }

    if (*c_intersect) {
      PolySystem F = parse_system(read_input(in));
      std::vector<TropCurve> curves;
      curves.reserve(F.size());
      for (const auto& f : F.polys()) curves.push_back(plane_trop_curve(f, prime));
      IntersectionReport rep = intersect_many(curves);
      if (want_svg) {
        write_output(curves_svg(curves, &rep), out);
      } else {
        Json j;
        Json cj = Json::array();
        for (const auto& C : curves) cj.push_back(curve_json(C));
        j["curves"] = std::move(cj);
        j["report"] = intersection_json(rep);
        write_output(dump_json(j), out);
      }
      return 0;
    }

    if (*c_rref) {
      if (want_svg) throw UsageError{"rref has no svg output"};
      Json input = read_input(in);
      if (input.is_object() && input.contains("polys")) {
        PolySystem F = parse_system(input);
        std::vector<Monomial> order = order_in.empty()
                                          ? grlex_desc_support(F)
                                          : parse_support(read_input(order_in));
        write_output(dump_json(gauss_jordan_json(gauss_jordan_system(F, order))), out);
      } else {
        write_output(dump_json(rref_json(rref(parse_rational_matrix(input)))), out);
      }
      return 0;
    }

    if (*c_hnf) {
      if (want_svg) throw UsageError{"hnf has no svg output"};
      if (hnf_echelon && hnf_kernel)
        throw UsageError{"--echelon and --kernel are mutually exclusive"};
      IntMatrix M = parse_int_matrix(read_input(in));
      Json j;
      if (hnf_echelon) {
        IntRowEchelon E = int_row_echelon(M);
        j["T"] = int_matrix_json(E.T);
        j["H"] = int_matrix_json(E.H);
        j["rank"] = E.rank;
      } else if (hnf_kernel) {
        std::vector<BigInt> ker = integer_kernel(M);
        Json kj = Json::array();
        for (const auto& v : ker) kj.push_back(v.get_str());
        j["kernel"] = std::move(kj);
      } else {
        UnimodularTransform T = hermite_unimodular(M);
        j = hermite_json(T);
        Json images = Json::array();
        for (const auto& a : M) {
          Json ij = Json::array();
          for (const auto& v : mat_vec(T.U, a)) ij.push_back(v.get_str());
          images.push_back(std::move(ij));
        }
        j["images"] = std::move(images);
      }
      write_output(dump_json(j), out);
      return 0;
    }

    if (*c_sps) {
      if (want_svg) throw UsageError{"reduce-sps has no svg output"};
      SpsExpression e = parse_sps(read_input(in));
      PolySystem F = sps_reduce(e);
      write_output(dump_json(system_json(F, sps_var_names(e))), out);
      return 0;
    }

    if (*c_count) {
      if (want_svg) throw UsageError{"count has no svg output"};
      PolySystem F = parse_system(read_input(in));
      SupportClass S = classify(F);
      CountResult R;
      switch (S.regime) {
        case Regime::T_LE_N:
        case Regime::T_EQ_N_PLUS_1:
          R = count_small_support(F, prime);
          break;
        case Regime::T_EQ_N_PLUS_2:
          R = count_n_plus_2(F, prime);
          break;
        case Regime::LARGER:
          fail("RegimeMismatch",
               "union support has more than n+2 monomials; no counting "
               "method applies");
      }
      Json j;
      j["classify"] = classify_json(S);
      j["count"] = count_json(R);
      write_output(dump_json(j), out);
      return 0;
    }

    if (*c_bound) {
      int modes = (!mt_args.empty() ? 1 : 0) + (a2_n > 0 ? 1 : 0) + (mb_n > 0 ? 1 : 0);
      if (modes != 1)
        throw UsageError{"bound requires exactly one of --maybetrivial, "
                         "--assertion2, --mult"};
      BigInt b;
      if (!mt_args.empty()) {
        b = maybetrivial_bound(mt_args[0], mt_args[1], mt_args[2]);
      } else if (a2_n > 0) {
        b = assertion2_bound(a2_n);
      } else {
        b = to_big(mult_bound(parse_support(read_input(in)), mb_n));
      }
      if (format == "json") {
        Json j;
        static const BigInt kSafe = (to_big(1) << 53);
        if (b < kSafe && b > -kSafe)
          j["bound"] = static_cast<long long>(b.get_si());
        else
          j["bound"] = b.get_str();
        write_output(dump_json(j), out);
      } else {
        write_output(b.get_str() + "\n", out);
      }
      return 0;
    }

    if (*c_mult) {
      if (want_svg) throw UsageError{"mult has no svg output"};
      if (sharp_n > 0) {
        write_output(dump_json(sharpness_json(sharpness_system(sharp_n))), out);
        return 0;
      }
      Json input = read_input(in);
      if (input.is_object() && input.contains("polys")) {
        UnivariateReduction R = univariate_reduction(parse_system(input));
        Json j = reduction_json(R);
        if (!mult_at.empty()) {
          Rational zeta = Rational::from_string(mult_at);
          Json aj;
          aj["zeta"] = zeta.str();
          aj["multiplicity"] = multiplicity_at(R.cleared, zeta);
          j["at"] = std::move(aj);
        }
        write_output(dump_json(j), out);
      } else {
        if (mult_at.empty())
          throw UsageError{"mult on a bare polynomial requires --at"};
        SparsePoly f = parse_poly(input);
        Rational zeta = Rational::from_string(mult_at);
        Json j;
        j["zeta"] = zeta.str();
        j["multiplicity"] = multiplicity_at(f, zeta);
        write_output(dump_json(j), out);
      }
      return 0;
    }

    if (*c_oracle) {
      if (want_svg) throw UsageError{"oracle has no svg output"};
      int modes = (o_rr ? 1 : 0) + (o_sf ? 1 : 0) + (o_zp ? 1 : 0) +
                  (o_family > 0 ? 1 : 0) + (o_planted ? 1 : 0);
      if (modes != 1)
        throw UsageError{"oracle requires exactly one of --rational-roots, "
                         "--squarefree, --zp, --family, --planted"};
      if (o_rr) {
        Json j;
        j["roots"] = roots_json(rational_roots(parse_poly(read_input(in))));
        write_output(dump_json(j), out);
      } else if (o_sf) {
        write_output(dump_json(poly_json(squarefree_part(parse_poly(read_input(in))))), out);
      } else if (o_zp) {
        if (prime == 0 || o_prec <= 0)
          throw UsageError{"--zp requires --prime and --precision"};
        ZpRootReport R = zp_root_count(parse_poly(read_input(in)), prime, o_prec);
        write_output(dump_json(zp_json(R)), out);
      } else if (o_family > 0) {
        if (prime == 0) throw UsageError{"--family requires --prime"};
        write_output(dump_json(poly_json(shub_smale_family(o_family, prime))), out);
      } else {
        PlantedPoly P = poly_from_roots(parse_roots(read_input(in)),
                                        Rational::from_string(o_scale));
        Json j;
        j["poly"] = poly_json(P.f);
        j["roots"] = roots_json(P.roots);
        write_output(dump_json(j), out);
      }
      return 0;
    }

    if (*c_examples) {
      long p = prime == 0 ? 3 : prime;
      std::vector<StoredExample> rows = run_stored_examples(p);
      bool all_pass = true;
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) {
          Json j;
          j["name"] = r.name;
          j["pass"] = r.pass;
          j["detail"] = r.detail;
          arr.push_back(std::move(j));
          all_pass = all_pass && r.pass;
        }
        write_output(dump_json(arr), out);
      } else {
        std::ostringstream ss;
        size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.name.size());
        for (const auto& r : rows) {
          all_pass = all_pass && r.pass;
          ss << (r.pass ? "PASS  " : "FAIL  ") << r.name
             << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
        }
        ss << (all_pass ? "all examples pass" : "SOME EXAMPLES FAILED")
           << " (p = " << p << ")\n";
        write_output(ss.str(), out);
      }
      return all_pass ? 0 : 1;
    }

    throw UsageError{"no subcommand selected"};
  } catch (const UsageError& u) {
    std::cerr << "usage error: " << u.message << "\n";
    return 2;
  } catch (const Error& e) {
    Json j;
    j["error"] = e.code();
    j["message"] = e.what();
    std::cerr << dump_json(j);
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "Internal";
    j["message"] = e.what();
    std::cerr << dump_json(j);
    return 1;
  }
}
