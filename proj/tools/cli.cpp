#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "mahler/mahler.hpp"

namespace mahler::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

struct Common {
  std::string poly;
  std::string family;
  std::vector<double> radii;
  int nodes = 0;
  int levels = 6;
  long long budget = 0;
};

Complex parse_complex(const std::string& s) {
  LaurentPoly p = parse_poly(s, 1);
  if (p.depends_on(0)) throw UsageError("expected a complex number, got '" + s + "'");
  return constant_term(p);
}

LaurentPoly resolve_base(const Common& c) {
  if (!c.family.empty() && !c.poly.empty()) {
    throw UsageError("give either --poly-family or a polynomial");
  }
  if (c.family == "q") return tempered_family_base();
  if (c.poly.empty()) throw UsageError("a polynomial is required");
  return parse_poly(c.poly);
}

Torus resolve_torus(const Common& c, int n) {
  if (static_cast<int>(c.radii.size()) != n) {
    throw UsageError("expected " + std::to_string(n) + " radii, got " +
                     std::to_string(c.radii.size()));
  }
  return Torus(c.radii);
}

// Halves the per-dimension count until the total fits the budget.
GridSpec make_grid(int dims, int nodes, int levels, long long budget) {
  GridSpec g = nodes > 0 ? GridSpec::uniform(dims, nodes) : GridSpec::defaults(dims);
  g.refinement_levels = levels;
  if (budget > 0) {
    while (g.total_nodes() > budget && g.nodes_per_dim[0] > 8) {
      for (auto& n : g.nodes_per_dim) n /= 2;
    }
  }
  g.validate();
  return g;
}

json envelope(const std::string& command, json result) {
  return json{{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw UsageError("cannot write " + p.string());
  f << text;
}

void add_common(CLI::App* sub, Common& c, bool family_flag) {
  if (family_flag) {
    sub->add_option("--poly,--base", c.poly, "base polynomial q; the family member is r - q");
    sub->add_option("--poly-family", c.family, "named family: q = x + 1/x + y + 1/y + r")
        ->check(CLI::IsMember({"q"}));
  } else {
    sub->add_option("--poly", c.poly, "Laurent polynomial, e.g. \"x + x^-1 + y + y^-1 + 4\"");
  }
  sub->add_option("--radii", c.radii, "torus radii a,b[,c]")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->required();
}

void add_grid(CLI::App* sub, Common& c) {
  sub->add_option("--nodes", c.nodes, "nodes per dimension (power of two >= 8)");
  sub->add_option("--levels", c.levels, "refinement levels at singular nodes")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", c.budget, "cap on total grid nodes per measure")
      ->check(CLI::PositiveNumber);
}

// Measures of r - base on (a, a) or (a, sqrt a) and on the unit torus.
json window_table(const LaurentPoly& base, Complex r, double lo, double hi, int points,
                  bool sqrt_b, long long budget) {
  json rows = json::array();
  const GridSpec g = make_grid(1, 0, 6, budget);
  VerifyOptions opt;
  opt.grid = g;
  for (int k = 1; k <= points; ++k) {
    const double a = lo + (hi - lo) * k / (points + 1);
    const double b = sqrt_b ? std::sqrt(a) : a;
    json row{{"a", a}, {"b", b}};
    try {
      RelationReport rep = verify_main_relation(base, r, Torus({a, b}), 1e-5, opt);
      row["m_ab"] = rep.lhs.value;
      row["m"] = rep.rhs_base.value;
      row["difference"] = rep.lhs.value - rep.rhs_base.value;
      row["nu"] = rep.nu;
      row["pass"] = rep.pass;
    } catch (const PreconditionNotMet& e) {
      row["precondition"] = e.what();
      row["pass"] = false;
    }
    rows.push_back(row);
  }
  return rows;
}

json region_artifacts(const fs::path& dir, const std::string& stem, double a, double b) {
  const RegionModel m = build_region(tempered_family_base(), a, b);
  const fs::path csv = dir / (stem + ".csv");
  write_file(csv, region_csv(m));
  json summary = summarize(m, true);
  write_file(dir / (stem + ".json"), envelope("region", summary).dump(2) + "\n");
  return json{{"files", {csv.filename().string(), stem + ".json"}}, {"summary", summary}};
}

json reproduce(const std::string& target, const fs::path& dir, long long budget) {
  fs::create_directories(dir);
  if (target == "region_10_4") return region_artifacts(dir, target, 10, 4);
  if (target == "region_1p5_1p07") return region_artifacts(dir, target, 1.5, 1.07);
  if (target == "q4_grid") {
    const LaurentPoly q4 = q4_polynomial();
    const GridSpec g = make_grid(2, 0, 6, budget);
    json rows = json::array();
    double worst = 0;
    for (double a : {0.5, 1.0, 1.5, 2.0}) {
      for (double b : {0.5, 1.0, 1.5, 2.0}) {
        const Q4Value cf = q4_closed_detail(a, b);
        const MeasureResult d = mahler_direct(q4, Torus({a, b}), g);
        worst = std::max(worst, std::abs(cf.value - d.value));
        rows.push_back({{"a", a}, {"b", b}, {"closed", cf.value}, {"branch", to_string(cf.branch)},
                        {"direct", d.value}, {"difference", cf.value - d.value}});
      }
    }
    json res{{"rows", rows}, {"max_abs_difference", worst}};
    write_file(dir / "q4_grid.json", envelope("reproduce", res).dump(2) + "\n");
    res["files"] = {"q4_grid.json"};
    return res;
  }
  if (target == "r8_window" || target == "r2i_window") {
    const bool r8 = target == "r8_window";
    const Complex r = r8 ? Complex(8, 0) : Complex(0, 2);
    const double lo = r8 ? 2 - std::sqrt(3.0) : (std::sqrt(5.0) - 1) / 2;
    const double hi = r8 ? 2 + std::sqrt(3.0) : (std::sqrt(5.0) + 1) / 2;
    const LaurentPoly base = tempered_family_base();
    json res{{"r", r},
             {"window", {lo, hi}},
             {"equal_radii", window_table(base, r, lo, hi, 9, false, budget)},
             {"b_sqrt_a", window_table(base, r, lo, hi, 9, true, budget)}};
    write_file(dir / (target + ".json"), envelope("reproduce", res).dump(2) + "\n");
    res["files"] = {target + ".json"};
    return res;
  }
  if (target == "smyth") {
    const double ref2 = bloch_wigner(std::polar(1.0, kPi / 3)) / kPi;
    const double ref3 = 7 * 1.2020569031595942854 / (2 * kPi * kPi);
    const MeasureResult d2 = mahler_direct(parse_poly("x + y + 1"), Torus::unit(2),
                                           make_grid(2, 0, 6, budget));
    const MeasureResult j2 = mahler_jensen(parse_poly("x + y + 1"), Torus::unit(2));
    const MeasureResult d3 = mahler_direct(parse_poly("1 + x + y + z"), Torus::unit(3),
                                           make_grid(3, 0, 6, budget));
    json res{{"x+y+1", {{"direct", d2}, {"jensen", j2}, {"reference", ref2}}},
             {"1+x+y+z", {{"direct", d3}, {"reference", ref3}}}};
    write_file(dir / "smyth.json", envelope("reproduce", res).dump(2) + "\n");
    res["files"] = {"smyth.json"};
    return res;
  }
  if (target == "cm_triangle") {
    // a = b = 1, |c| sweeping across the triangle boundary at |c| = 2.
    json rows = json::array();
    const GridSpec g = make_grid(2, 0, 6, budget);
    for (int k = 1; k <= 12; ++k) {
      const double c = 0.25 * k;
      const double cf = cassaigne_maillot(1, 1, c);
      LaurentPoly p = parse_poly("x + y", 2) + Complex(c, 0);
      const MeasureResult d = mahler_direct(p, Torus::unit(2), g);
      rows.push_back({{"c", c}, {"triangle", c < 2}, {"closed", cf}, {"direct", d.value},
                      {"difference", cf - d.value}});
    }
    json res{{"rows", rows}};
    write_file(dir / "cm_triangle.json", envelope("reproduce", res).dump(2) + "\n");
    res["files"] = {"cm_triangle.json"};
    return res;
  }
  throw UsageError("unknown reproduce target '" + target + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Mahler measures, winding indices and vanishing regions"};
  app.name("mahler");
  app.require_subcommand(1);

  Common c;
  std::string method = "direct";
  auto* measure = app.add_subcommand("measure", "Mahler measure on a torus");
  add_common(measure, c, false);
  add_grid(measure, c);
  measure->add_option("--method", method, "direct|jensen")->check(CLI::IsMember({"direct", "jensen"}));

  int wnodes = 4096;
  auto* nu = app.add_subcommand("nu", "winding indices nu^j");
  add_common(nu, c, false);
  nu->add_option("--nodes", wnodes, "contour nodes")->check(CLI::Range(8, 1 << 24));

  int probes = 64;
  std::string role = "y";
  auto* rho = app.add_subcommand("rho", "root census at probe points (constancy check)");
  add_common(rho, c, false);
  rho->add_option("--probes", probes)->check(CLI::Range(1, 1 << 20));
  rho->add_option("--role", role)->check(CLI::IsMember({"x", "y"}));

  int angles = 256, raster = 1024;
  std::string csv_out;
  auto* region = app.add_subcommand("region", "rasterized image of the torus and its complement");
  add_common(region, c, true);
  region->add_option("--angles", angles)->check(CLI::Range(256, 1 << 14));
  region->add_option("--raster", raster)->check(CLI::Range(512, 1 << 14));
  region->add_option("--out", csv_out, "CSV path for the raster (re,im,label)");

  auto* verify = app.add_subcommand("verify", "check an identity instance");
  verify->require_subcommand(1);
  std::string r_text = "0";
  double tol = 1e-5;
  std::string expect_text;
  auto* vmain = verify->add_subcommand("main", "m_t(r - q) = m(r - q) + sum nu_j log t_j");
  add_common(vmain, c, true);
  add_grid(vmain, c);
  vmain->add_option("--r", r_text, "complex parameter r")->required();
  vmain->add_option("--tol", tol)->check(CLI::PositiveNumber);
  auto* vbounded = verify->add_subcommand("bounded", "value on a bounded complement component");
  add_common(vbounded, c, true);
  vbounded->add_option("--r", r_text, "complex parameter r")->required();
  vbounded->add_option("--role", role)->check(CLI::IsMember({"x", "y"}));
  vbounded->add_option("--expect", expect_text, "expected value, checked to --tol");
  vbounded->add_option("--tol", tol)->check(CLI::PositiveNumber);
  std::vector<std::string> cm_coeffs;
  auto* vcm = verify->add_subcommand("cm", "closed form for a x + b y + c vs quadrature");
  vcm->add_option("--coeffs", cm_coeffs, "a,b,c (complex)")->delimiter(',')->expected(3)->required();
  vcm->add_option("--tol", tol)->check(CLI::PositiveNumber);
  add_grid(vcm, c);

  int terms = 40;
  bool exact = false;
  auto* series = app.add_subcommand("series", "log r - sum a_n / (n r^n)");
  series->add_option("--poly", c.poly, "Q (no constant term)")->required();
  series->add_option("--r", r_text, "complex parameter r")->required();
  series->add_option("--terms", terms)->check(CLI::Range(0, 2000));
  series->add_flag("--exact", exact, "also report a_n in exact arithmetic");

  bool check = false;
  auto* q4 = app.add_subcommand("q4", "closed form for x + 1/x + y + 1/y + 4");
  q4->add_option("--radii", c.radii, "a,b")->delimiter(',')->check(CLI::PositiveNumber)->required();
  q4->add_flag("--check", check, "compare with direct quadrature");
  add_grid(q4, c);

  std::string z_text;
  auto* dilog = app.add_subcommand("dilog", "Li2 and the Bloch-Wigner function");
  dilog->add_option("z", z_text, "complex argument, e.g. 0.3+0.4i")->required();

  std::string target, out_dir = ".";
  auto* repro = app.add_subcommand("reproduce", "write reproducible data sets");
  repro->add_option("target", target)
      ->check(CLI::IsMember({"region_10_4", "region_1p5_1p07", "q4_grid", "r8_window",
                             "r2i_window", "smyth", "cm_triangle"}))
      ->required();
  repro->add_option("--out-dir", out_dir);
  repro->add_option("--budget", c.budget)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*measure) {
      const LaurentPoly p = parse_poly(c.poly);
      const Torus t = resolve_torus(c, p.n_vars());
      MeasureResult r;
      if (method == "jensen") {
        r = mahler_jensen(p, t, make_grid(1, c.nodes, c.levels, c.budget));
      } else {
        r = mahler_direct(p, t, make_grid(p.n_vars(), c.nodes, c.levels, c.budget));
      }
      out << envelope("measure", r).dump(2) << "\n";
      return kOk;
    }
    if (*nu) {
      const LaurentPoly p = parse_poly(c.poly);
      const Torus t = resolve_torus(c, p.n_vars());
      auto v = nu_vector(p, t.radii, wnodes);
      json nus = json::array();
      for (const auto& ic : v) nus.push_back(ic.nu);
      out << envelope("nu", json{{"nu", nus}, {"detail", v}}).dump(2) << "\n";
      return kOk;
    }
    if (*rho) {
      const LaurentPoly p = parse_poly(c.poly, 2);
      const Torus t = resolve_torus(c, 2);
      out << envelope("rho", rho_constancy(p, t[0], t[1], probes, role_from_string(role))).dump(2)
          << "\n";
      return kOk;
    }
    if (*region) {
      const LaurentPoly base = resolve_base(c);
      const Torus t = resolve_torus(c, 2);
      const RegionModel m = build_region(base, t[0], t[1], angles, raster);
      if (!csv_out.empty()) write_file(csv_out, region_csv(m));
      out << envelope("region", summarize(m, c.family == "q")).dump(2) << "\n";
      return kOk;
    }
    if (*vmain) {
      const LaurentPoly base = resolve_base(c);
      const Torus t = resolve_torus(c, base.n_vars());
      VerifyOptions opt;
      if (c.nodes > 0 || c.budget > 0 || c.levels != 6) {
        opt.grid = make_grid(base.n_vars() == 2 ? 1 : base.n_vars(), c.nodes, c.levels, c.budget);
      }
      RelationReport rep = verify_main_relation(base, parse_complex(r_text), t, tol, opt);
      out << envelope("verify main", rep).dump(2) << "\n";
      return rep.pass ? kOk : kVerifyFailed;
    }
    if (*vbounded) {
      const LaurentPoly base = resolve_base(c);
      const Torus t = resolve_torus(c, 2);
      BoundedValue bv = bounded_component_value(base, parse_complex(r_text), t, role_from_string(role));
      json res = bv;
      bool pass = true;
      if (!expect_text.empty()) {
        const double expect = parse_complex(expect_text).real();
        pass = std::abs(bv.value - expect) <= tol;
        res["expected"] = expect;
        res["pass"] = pass;
      }
      out << envelope("verify bounded", res).dump(2) << "\n";
      return pass ? kOk : kVerifyFailed;
    }
    if (*vcm) {
      const Complex a = parse_complex(cm_coeffs[0]), b = parse_complex(cm_coeffs[1]),
                    cc = parse_complex(cm_coeffs[2]);
      const double closed = cassaigne_maillot(a, b, cc);
      LaurentPoly p = a * LaurentPoly::variable(2, 0) + b * LaurentPoly::variable(2, 1) + cc;
      const MeasureResult d = mahler_direct(p, Torus::unit(2), make_grid(2, c.nodes, c.levels, c.budget));
      const double A = std::abs(a), B = std::abs(b), C = std::abs(cc);
      const bool tri = A < B + C && B < A + C && C < A + B;
      const bool pass = std::abs(closed - d.value) <= tol;
      out << envelope("verify cm", json{{"closed", closed}, {"direct", d}, {"triangle", tri},
                                        {"discrepancy", std::abs(closed - d.value)},
                                        {"tol", tol}, {"pass", pass}})
                 .dump(2)
          << "\n";
      return pass ? kOk : kVerifyFailed;
    }
    if (*series) {
      const LaurentPoly q = parse_poly(c.poly);
      SeriesResult s = series_mtilde(q, parse_complex(r_text), terms);
      json res = s;
      res["measure"] = s.as_measure();
      if (exact) {
        json ex = json::array();
        for (const auto& g : series_coefficients_exact(q, terms)) ex.push_back(g.str());
        res["exact_coeffs"] = ex;
      }
      out << envelope("series", res).dump(2) << "\n";
      return kOk;
    }
    if (*q4) {
      if (c.radii.size() != 2) throw UsageError("q4 needs two radii");
      const double a = c.radii[0], b = c.radii[1];
      Q4Value v = q4_closed_detail(a, b);
      json res = v;
      res["arc_split"] = arc_split(v.params.c, v.params.d);
      if (check) {
        const MeasureResult d = mahler_direct(q4_polynomial(), Torus({a, b}),
                                              make_grid(2, c.nodes, c.levels, c.budget));
        res["check"] = {{"direct", d}, {"difference", v.value - d.value}};
      }
      out << envelope("q4", res).dump(2) << "\n";
      return kOk;
    }
    if (*dilog) {
      const Complex z = parse_complex(z_text);
      out << envelope("dilog", json{{"z", z},
                                    {"li2", li2_with_error(z)},
                                    {"bloch_wigner", bloch_wigner_with_error(z)}})
                 .dump(2)
          << "\n";
      return kOk;
    }
    if (*repro) {
      out << envelope("reproduce " + target, reproduce(target, out_dir, c.budget)).dump(2) << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionNotMet& e) {
    out << envelope("error", json{{"type", "precondition_not_met"}, {"message", e.what()}}).dump(2) << "\n";
    return kVerifyFailed;
  } catch (const MixedRoots& e) {
    out << envelope("error", json{{"type", "mixed_roots"}, {"message", e.what()}}).dump(2) << "\n";
    return kVerifyFailed;
  } catch (const NumericalFailure& e) {
    out << envelope("error", json{{"type", "numerical_failure"}, {"message", e.what()},
                                  {"residuals", e.residuals()}})
               .dump(2)
        << "\n";
    return kNumerical;
  } catch (const Error& e) {
    out << envelope("error", json{{"type", "numerical_failure"}, {"message", e.what()}}).dump(2) << "\n";
    return kNumerical;
  }
  err << app.help();
  return kUsage;
}

}  // namespace mahler::cli
