// Command-line surface for the curve toolkit. Subcommands exchange JSON on
// stdin-free file arguments and print JSON (or CSV point dumps) on stdout.
//
// Exit codes: 0 success, 1 numeric failure, 2 degenerate pair,
// 3 malformed input, 4 unsupported kind / out of range, 5 infeasible.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hypcurve/errors.hpp"
#include "hypcurve/json_io.hpp"

namespace hc = hypcurve;
using hc::Complex;
using json = nlohmann::json;

namespace {

constexpr int kExitNumeric = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitInfeasible = 5;

struct RunConfig {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int grid = 721;
  std::string out = "json";
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hc::PreconditionError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw hc::PreconditionError(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

Complex parse_complex(const std::string& s) {
  std::istringstream is(s);
  double re = 0.0, im = 0.0;
  char comma = 0;
  is >> re;
  if (is >> comma) {
    if (comma != ',' || !(is >> im))
      throw hc::PreconditionError("complex flag must be 're' or 're,im': " + s);
  }
  return Complex(re, im);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_points_csv(const hc::IntersectionReport& rep) {
  std::printf("re_lambda,im_lambda,re_mu,im_mu,region,multiplicity\n");
  for (const hc::IntersectionPoint& p : rep.points)
    std::printf("%.17g,%.17g,%.17g,%.17g,%s,%d\n", p.lambda.real(), p.lambda.imag(),
                p.mu.real(), p.mu.imag(), hc::to_string(p.region).c_str(),
                p.multiplicity);
}

int cmd_intersect(const std::string& file, const RunConfig& cfg) {
  hc::BlaschkePair pair = hc::pair_from_json(load_json(file));
  hc::SolveOptions opts;
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;
  hc::IntersectionReport rep = hc::solve_pair(pair, opts);
  if (cfg.out == "csv")
    emit_points_csv(rep);
  else
    emit(hc::to_json(rep));
  return rep.degenerate ? kExitDegenerate : 0;
}

json verification_summary(const hc::Holization& h, const hc::Connection& conn) {
  json per_functional = json::array();
  bool all_ok = true;
  for (const hc::RationalFn& comp : h.components) {
    json residuals = json::array();
    for (const hc::LocalFunctional& fn : conn.functionals) {
      Complex v = hc::apply(fn, comp);
      residuals.push_back(std::abs(v));
      if (std::abs(v) > 1e-8) all_ok = false;
    }
    per_functional.push_back(residuals);
  }
  return json{{"functional_residuals", per_functional}, {"membership", all_ok}};
}

int cmd_petal(const std::string& kind, const std::vector<std::string>& cflags,
              double cmod, const std::string& spec_file, const RunConfig& cfg) {
  (void)cfg;
  json out;
  std::string k = kind;
  std::vector<Complex> pts;
  if (!spec_file.empty()) {
    json spec = load_json(spec_file);
    k = spec.at("kind").get<std::string>();
    const json& params = spec.at("params");
    if (params.contains("points"))
      for (const json& p : params["points"]) pts.push_back(hc::complex_from_json(p));
    if (params.contains("cmod")) cmod = params["cmod"].get<double>();
    out["spec"] = spec;
  } else {
    for (const std::string& s : cflags) pts.push_back(parse_complex(s));
    json params;
    if (!pts.empty()) {
      json jp = json::array();
      for (Complex p : pts) jp.push_back(hc::to_json(p));
      params["points"] = jp;
    }
    if (cmod > 0.0) params["cmod"] = cmod;
    out["spec"] = json{{"kind", k}, {"params", params}};
  }

  hc::Holization h;
  std::optional<hc::Connection> conn;
  if (k == "neil") {
    h = hc::neil_holization(pts.at(0));
    conn = hc::cusp1_connection(pts.at(0));
  } else if (k == "crossing") {
    h = hc::single_crossing_holization(pts.at(0), pts.at(1));
    conn = hc::single_crossing_connection(pts.at(0), pts.at(1));
    out["invariant"] = hc::single_crossing_invariant(pts.at(0), pts.at(1));
  } else if (k == "triple") {
    h = hc::triple_point_embedding(pts.at(0), pts.at(1));
    conn = hc::triple_point_connection(Complex(0.0), pts.at(0), pts.at(1));
  } else if (k == "cusp2") {
    hc::Cusp2Holization c2 = hc::cusp2_holization(cmod);
    h = c2.h;
    conn = hc::cusp2_connection(c2.realized_c);
    out["alpha"] = hc::to_json(c2.alpha);
    out["realized_c"] = hc::to_json(c2.realized_c);
  } else if (k == "twocross") {
    h = hc::two_crossing_holization(pts.at(0), pts.at(1), pts.at(2), pts.at(3));
    conn = hc::two_crossing_connection(pts.at(0), pts.at(1), pts.at(2), pts.at(3));
  } else if (k == "nodal-cubic") {
    h = hc::nodal_cubic_fixture();
  } else if (k == "a3") {
    h = hc::a3_fixture();
    conn = hc::a3_connection();
  } else {
    throw hc::UnsupportedKindError("unknown petal kind: " + k);
  }
  out["holization"] = hc::to_json(h);
  out["ambient_dim"] = h.ambient_dim;
  if (conn) out["verification"] = verification_summary(h, *conn);
  emit(out);
  return 0;
}

int cmd_pick(const std::string& file, const RunConfig& cfg) {
  hc::PickProblem p = hc::pick_problem_from_json(load_json(file));
  hc::PickVerdict v = hc::solvable(p, cfg.tol);
  emit(hc::to_json(v));
  return v.solvable ? 0 : kExitInfeasible;
}

int cmd_opcheck(const std::string& file, const RunConfig& cfg) {
  json j = load_json(file);
  hc::OperatorPair T(hc::matrix_from_json(j.at("T1")), hc::matrix_from_json(j.at("T2")));
  hc::SpectralSetResult s = hc::spectral_set_test(T, cfg.grid, cfg.tol);
  hc::Matrix A = 0.5 * (T.T1 + T.T2);
  hc::Matrix B = 0.5 * (T.T1 - T.T2);
  hc::LemmaEquivalenceResult eq = hc::lemma_equivalence(A, B, cfg.grid, cfg.tol);
  emit(json{{"spectral_set", hc::to_json(s)}, {"norm_radius_equivalence", hc::to_json(eq)}});
  return 0;
}

int cmd_wold(const std::string& file, bool defect, const RunConfig& cfg) {
  (void)cfg;
  json j = load_json(file);
  hc::Matrix T1 = hc::matrix_from_json(j.at("T1"));
  hc::Matrix T2 = hc::matrix_from_json(j.at("T2"));
  if (defect) {
    emit(json{{"defect_report", true}, {"report", hc::to_json(hc::wold_defect_report(T1, T2))}});
    return 0;
  }
  hc::WoldDecomposition w = hc::wold_decompose(hc::OperatorPair(T1, T2));
  emit(hc::to_json(w));
  return 0;
}

int cmd_neil_extreme(const std::vector<double>& atoms, const RunConfig& cfg) {
  (void)cfg;
  hc::HerglotzMeasure m = hc::herglotz_masses(atoms);
  json j = hc::to_json(m);
  double re = 0.0, im = 0.0;
  for (size_t k = 0; k < m.atoms.size(); ++k) {
    re += m.masses[k] * std::cos(m.atoms[k]);
    im += m.masses[k] * std::sin(m.atoms[k]);
  }
  j["moment_residual"] = std::hypot(re, im);
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for curves holized by Blaschke-product pairs"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "numeric tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all internal randomness")
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "angle grid size")->check(CLI::Range(64, 100000))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output format")->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string pair_file;
  CLI::App* intersect = app.add_subcommand("intersect", "solve a Blaschke pair system");
  intersect->add_option("pair", pair_file, "pair JSON file")->required();

  std::string petal_kind, petal_spec;
  std::vector<std::string> petal_points;
  double petal_cmod = 0.0;
  CLI::App* petal = app.add_subcommand("petal", "construct and verify a petal holization");
  petal->add_option("kind", petal_kind,
                    "neil|crossing|triple|cusp2|twocross|nodal-cubic|a3");
  petal->add_option("--alpha,--points", petal_points,
                    "petal points as re,im (order: a1 a2 b1 b2)")
      ->expected(-1);
  petal->add_option("--cmod", petal_cmod, "target |c| for cusp2");
  petal->add_option("--spec", petal_spec, "petal spec JSON file");

  std::string pick_file;
  CLI::App* pick = app.add_subcommand("pick", "interpolation feasibility");
  pick->add_option("problem", pick_file, "problem JSON file")->required();

  std::string op_file;
  CLI::App* opcheck = app.add_subcommand("opcheck", "spectral-set and radius checks");
  opcheck->add_option("pair", op_file, "operator pair JSON file")->required();

  std::string wold_file;
  bool wold_defect = false;
  CLI::App* wold = app.add_subcommand("wold", "decompose a commuting unitary pair");
  wold->add_option("pair", wold_file, "operator pair JSON file")->required();
  wold->add_flag("--defect", wold_defect, "emit a defect report for non-unitary data");

  std::vector<double> atoms;
  CLI::App* neil_extreme =
      app.add_subcommand("neil-extreme", "extreme-point masses for given circle atoms");
  neil_extreme->add_option("--atoms", atoms, "two or three angles")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*intersect) return cmd_intersect(pair_file, cfg);
    if (*petal) {
      if (petal_kind.empty() && petal_spec.empty())
        throw hc::UnsupportedKindError("petal: kind or --spec required");
      return cmd_petal(petal_kind, petal_points, petal_cmod, petal_spec, cfg);
    }
    if (*pick) return cmd_pick(pick_file, cfg);
    if (*opcheck) return cmd_opcheck(op_file, cfg);
    if (*wold) return cmd_wold(wold_file, wold_defect, cfg);
    if (*neil_extreme) return cmd_neil_extreme(atoms, cfg);
  } catch (const hc::UnsupportedKindError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const hc::OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const hc::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const hc::DegenerateInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const hc::NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const hc::TheoryViolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const hc::ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
