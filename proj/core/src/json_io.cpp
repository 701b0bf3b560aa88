#include "hypcurve/json_io.hpp"

#include "hypcurve/errors.hpp"

namespace hypcurve {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw PreconditionError("json: complex number must be a [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json to_json(const UniPoly& p) {
  json coeffs = json::array();
  for (Complex c : p.coeffs()) coeffs.push_back(to_json(c));
  return json{{"coeffs", coeffs}};
}

UniPoly unipoly_from_json(const json& j) {
  std::vector<Complex> coeffs;
  for (const json& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
  return UniPoly(std::move(coeffs));
}

json to_json(const BiPoly& p) {
  json rows = json::array();
  for (int i = 0; i <= p.zdeg(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 <= p.wdeg(); ++j2) row.push_back(to_json(p.coeff(i, j2)));
    rows.push_back(row);
  }
  return json{{"coeffs", rows}};
}

BiPoly bipoly_from_json(const json& j) {
  std::vector<std::vector<Complex>> rows;
  for (const json& r : j.at("coeffs")) {
    std::vector<Complex> row;
    for (const json& c : r) row.push_back(complex_from_json(c));
    rows.push_back(std::move(row));
  }
  return BiPoly(std::move(rows));
}

json to_json(const BlaschkeProduct& f) {
  json zeros = json::array();
  for (Complex a : f.zeros()) zeros.push_back(to_json(a));
  return json{{"unimodular", to_json(f.unimodular())}, {"zeros", zeros}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  std::vector<Complex> zeros;
  for (const json& z : j.at("zeros")) zeros.push_back(complex_from_json(z));
  Complex u(1.0, 0.0);
  if (j.contains("unimodular")) u = complex_from_json(j.at("unimodular"));
  return BlaschkeProduct(std::move(zeros), u);
}

json to_json(const BlaschkePair& pair) {
  return json{{"f", to_json(pair.f)}, {"g", to_json(pair.g)}};
}

BlaschkePair pair_from_json(const json& j) {
  return BlaschkePair(blaschke_from_json(j.at("f")), blaschke_from_json(j.at("g")));
}

json to_json(const IntersectionReport& rep) {
  json points = json::array();
  for (const IntersectionPoint& p : rep.points)
    points.push_back(json{{"lambda", to_json(p.lambda)},
                          {"mu", to_json(p.mu)},
                          {"region", to_string(p.region)},
                          {"multiplicity", p.multiplicity}});
  json j{{"points", points},
         {"r", rep.r},
         {"degenerate", rep.degenerate}};
  if (rep.degenerate)
    j["N"] = nullptr;
  else
    j["N"] = rep.N;
  if (rep.codim)
    j["codim"] = *rep.codim;
  else
    j["codim"] = "infinite";
  return j;
}

IntersectionReport report_from_json(const json& j) {
  IntersectionReport rep;
  rep.degenerate = j.at("degenerate").get<bool>();
  rep.N = j.at("N").is_null() ? 0.0 : j.at("N").get<double>();
  rep.r = j.at("r").get<int>();
  if (j.at("codim").is_number_integer()) rep.codim = j.at("codim").get<int>();
  for (const json& p : j.at("points")) {
    IntersectionPoint pt;
    pt.lambda = complex_from_json(p.at("lambda"));
    pt.mu = complex_from_json(p.at("mu"));
    pt.multiplicity = p.at("multiplicity").get<int>();
    std::string reg = p.at("region").get<std::string>();
    pt.region = reg == "DD" ? Region::DD : (reg == "TT" ? Region::TT : Region::EE);
    pt.on_diagonal = std::abs(pt.lambda - pt.mu) <= 1e-9;
    rep.points.push_back(pt);
  }
  return rep;
}

json to_json(const PickProblem& p) {
  json nodes = json::array(), targets = json::array();
  for (Complex a : p.nodes) nodes.push_back(to_json(a));
  for (Complex b : p.targets) targets.push_back(to_json(b));
  return json{{"nodes", nodes}, {"targets", targets}};
}

PickProblem pick_problem_from_json(const json& j) {
  PickProblem p;
  for (const json& a : j.at("nodes")) p.nodes.push_back(complex_from_json(a));
  for (const json& b : j.at("targets")) p.targets.push_back(complex_from_json(b));
  return p;
}

json to_json(const PickVerdict& v) {
  return json{{"solvable", v.solvable},
              {"min_eigenvalue", v.min_eigenvalue},
              {"marginal", v.marginal}};
}

json to_json(const RationalFn& f) {
  return json{{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

RationalFn rationalfn_from_json(const json& j) {
  return {unipoly_from_json(j.at("num")), unipoly_from_json(j.at("den"))};
}

json to_json(const Holization& h) {
  json comps = json::array();
  for (const RationalFn& c : h.components) comps.push_back(to_json(c));
  return comps;
}

Holization holization_from_json(const json& j) {
  Holization h;
  for (const json& c : j) h.components.push_back(rationalfn_from_json(c));
  h.ambient_dim = static_cast<int>(h.components.size());
  return h;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j2 = 0; j2 < m.cols(); ++j2) row.push_back(to_json(m(i, j2)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw PreconditionError("json: matrix must be a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols)
      throw PreconditionError("json: ragged matrix rows");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json to_json(const SpectralSetResult& r) {
  return json{{"passes", r.passes}, {"sup_norm", r.sup_norm}, {"marginal", r.marginal}};
}

json to_json(const WoldDecomposition& w) {
  return json{{"dim_Mplus", w.basis_Mplus.cols()},
              {"dim_Mminus", w.basis_Mminus.cols()},
              {"dim_K", w.basis_K.cols()},
              {"Wplus", to_json(w.Wplus)},
              {"Wminus", to_json(w.Wminus)},
              {"orthogonality_residual", w.orthogonality_residual},
              {"reconstruction_residual", w.reconstruction_residual}};
}

json to_json(const WoldDefectReport& r) {
  return json{{"dim_Mplus", r.dim_Mplus},
              {"dim_Mminus", r.dim_Mminus},
              {"dim_K", r.dim_K},
              {"isometry_defect_T1", r.isometry_defect_T1},
              {"isometry_defect_T2", r.isometry_defect_T2},
              {"orthogonality_residual", r.orthogonality_residual},
              {"identity_residual", r.identity_residual},
              {"shift_residual_plus", r.shift_residual_plus},
              {"shift_residual_minus", r.shift_residual_minus},
              {"reconstruction_residual_T1", r.reconstruction_residual_T1},
              {"reconstruction_residual_T2", r.reconstruction_residual_T2}};
}

json to_json(const HerglotzMeasure& m) {
  return json{{"atoms", m.atoms}, {"masses", m.masses}};
}

json to_json(const LemmaEquivalenceResult& r) {
  json j{{"lhs", r.lhs},
         {"lhs_sup", r.lhs_sup},
         {"rhs_radius", r.rhs_radius},
         {"regularized", r.regularized}};
  if (r.rhs)
    j["rhs"] = *r.rhs;
  else
    j["rhs"] = nullptr;
  return j;
}

}  // namespace hypcurve
