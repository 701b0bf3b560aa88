#include "hypcurve/petals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypcurve/errors.hpp"

namespace hypcurve {

namespace {

constexpr double kPoleGuard = 1e-10;

UniPoly moebius_num(Complex a) { return UniPoly({a, Complex(-1.0)}); }
UniPoly moebius_den(Complex a) { return UniPoly({Complex(1.0), -std::conj(a)}); }
// (z - a) / (1 - conj(a) z): the factor convention under which the center
// zero gives literally (z^2, z^3)
UniPoly factor_num(Complex a) { return UniPoly({-a, Complex(1.0)}); }

void require_disk(Complex a, const char* what) {
  if (std::abs(a) >= 1.0) throw DomainError(std::string(what) + ": point outside the open disk");
}

void require_distinct(std::initializer_list<Complex> pts, const char* what) {
  std::vector<Complex> v(pts);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(v[i] - v[j]) < 1e-12)
        throw DomainError(std::string(what) + ": points must be pairwise distinct");
}

}  // namespace

Complex RationalFn::eval(Complex z) const {
  Complex d = den.eval(z);
  if (std::abs(d) < kPoleGuard * std::max(1.0, den.max_abs_coeff()))
    throw DomainError("RationalFn::eval: pole hit");
  return num.eval(z) / d;
}

RationalFn RationalFn::derivative() const {
  return {num.derivative() * den - num * den.derivative(), den * den};
}

Complex RationalFn::derivative_at(Complex z, int order) const {
  RationalFn f = *this;
  for (int k = 0; k < order; ++k) f = f.derivative();
  return f.eval(z);
}

Connection::Connection(std::vector<LocalFunctional> fns) : functionals(std::move(fns)) {
  if (functionals.empty())
    throw ContractViolation("Connection: at least one functional required");
  // Linear independence via the Gram matrix of (point, order) -> coeff maps.
  std::vector<std::pair<Complex, int>> keys;
  auto key_index = [&](Complex p, int o) {
    for (size_t k = 0; k < keys.size(); ++k)
      if (std::abs(keys[k].first - p) < 1e-12 && keys[k].second == o)
        return static_cast<int>(k);
    keys.emplace_back(p, o);
    return static_cast<int>(keys.size()) - 1;
  };
  std::vector<std::vector<Complex>> vecs;
  for (const LocalFunctional& fn : functionals) {
    if (fn.terms.empty())
      throw ContractViolation("Connection: functional without terms");
    bool nonzero = false;
    std::vector<Complex> v;
    for (const FunctionalTerm& t : fn.terms) {
      require_disk(t.point, "Connection");
      if (t.order < 0) throw ContractViolation("Connection: negative derivative order");
      if (std::abs(t.coeff) > 0.0) nonzero = true;
      int idx = key_index(t.point, t.order);
      if (idx >= static_cast<int>(v.size())) v.resize(idx + 1, Complex(0.0));
      v[idx] += t.coeff;
    }
    if (!nonzero) throw ContractViolation("Connection: zero functional");
    vecs.push_back(std::move(v));
  }
  const int n = static_cast<int>(vecs.size());
  const int d = static_cast<int>(keys.size());
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < static_cast<int>(vecs[i].size()); ++j) V(i, j) = vecs[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
  const auto& sv = svd.singularValues();
  if (sv.size() < n || sv(n - 1) < 1e-10 * std::max(sv(0), 1e-300))
    throw ContractViolation("Connection: functionals are linearly dependent");
}

std::vector<Complex> Connection::support() const {
  std::vector<Complex> pts;
  for (const LocalFunctional& fn : functionals)
    for (const FunctionalTerm& t : fn.terms) {
      bool seen = false;
      for (Complex p : pts)
        if (std::abs(p - t.point) < 1e-12) seen = true;
      if (!seen) pts.push_back(t.point);
    }
  return pts;
}

Complex apply(const LocalFunctional& fn, const RationalFn& f) {
  Complex acc(0.0);
  for (const FunctionalTerm& t : fn.terms)
    acc += t.coeff * f.derivative_at(t.point, t.order);
  return acc;
}

namespace {

Complex fd_derivative(const std::function<Complex(Complex)>& f, Complex z, int order,
                      double h) {
  if (order == 0) return f(z);
  std::function<Complex(Complex, int, double)> rec = [&](Complex y, int o,
                                                         double s) -> Complex {
    if (o == 0) return f(y);
    return (rec(y + s, o - 1, s) - rec(y - s, o - 1, s)) / (2.0 * s);
  };
  Complex d1 = rec(z, order, h);
  Complex d2 = rec(z, order, h / 2.0);
  return (4.0 * d2 - d1) / 3.0;  // one Richardson step on the O(h^2) error
}

}  // namespace

Complex apply(const LocalFunctional& fn, const std::function<Complex(Complex)>& f, double h) {
  Complex acc(0.0);
  for (const FunctionalTerm& t : fn.terms)
    acc += t.coeff * fd_derivative(f, t.point, t.order, h);
  return acc;
}

namespace {

template <typename Eval>
bool membership_impl(const Connection& conn, Eval&& value_of) {
  for (const LocalFunctional& fn : conn.functionals)
    if (!value_of(fn)) return false;
  return true;
}

}  // namespace

bool verify_membership(const RationalFn& f, const Connection& conn, double tol) {
  for (Complex p : conn.support()) {
    Complex d = f.den.eval(p);
    if (std::abs(d) < kPoleGuard * std::max(1.0, f.den.max_abs_coeff()))
      throw DomainError("verify_membership: support point is a pole");
  }
  return membership_impl(conn, [&](const LocalFunctional& fn) {
    double scale = 0.0;
    Complex acc(0.0);
    for (const FunctionalTerm& t : fn.terms) {
      Complex v = f.derivative_at(t.point, t.order);
      acc += t.coeff * v;
      scale += std::abs(t.coeff) * std::max(1.0, std::abs(v));
    }
    return std::abs(acc) <= tol * std::max(scale, 1.0);
  });
}

bool verify_membership(const std::function<Complex(Complex)>& f, const Connection& conn,
                       double tol) {
  return membership_impl(conn, [&](const LocalFunctional& fn) {
    double scale = 0.0;
    Complex acc(0.0);
    for (const FunctionalTerm& t : fn.terms) {
      Complex v = fd_derivative(f, t.point, t.order, 1e-3);
      acc += t.coeff * v;
      scale += std::abs(t.coeff) * std::max(1.0, std::abs(v));
    }
    return std::abs(acc) <= tol * std::max(scale, 1.0);
  });
}

std::vector<Complex> Holization::eval(Complex z) const {
  std::vector<Complex> out;
  out.reserve(components.size());
  for (const RationalFn& c : components) out.push_back(c.eval(z));
  return out;
}

std::vector<std::pair<Complex, Complex>> holization_identifications(const Holization& h,
                                                                    int radii, int angles,
                                                                    double rmax,
                                                                    double pair_tol) {
  std::vector<Complex> grid;
  for (int i = 1; i <= radii; ++i)
    for (int j = 0; j < angles; ++j) {
      double r = rmax * i / radii;
      double a = 2.0 * std::numbers::pi * j / angles;
      grid.emplace_back(r * std::cos(a), r * std::sin(a));
    }
  std::vector<std::vector<Complex>> values;
  values.reserve(grid.size());
  for (Complex z : grid) values.push_back(h.eval(z));
  std::vector<std::pair<Complex, Complex>> out;
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = i + 1; j < grid.size(); ++j) {
      if (std::abs(grid[i] - grid[j]) < 1e-9) continue;
      double d = 0.0;
      for (size_t k = 0; k < values[i].size(); ++k)
        d = std::max(d, std::abs(values[i][k] - values[j][k]));
      if (d <= pair_tol) out.emplace_back(grid[i], grid[j]);
    }
  return out;
}

Holization neil_holization(Complex alpha) {
  require_disk(alpha, "neil_holization");
  UniPoly n = moebius_num(alpha), d = moebius_den(alpha);
  Holization h;
  h.components = {{n * n, d * d}, {n * n * n, d * d * d}};
  h.ambient_dim = 2;
  return h;
}

Connection cusp1_connection(Complex alpha) {
  require_disk(alpha, "cusp1_connection");
  return Connection({LocalFunctional{{{alpha, 1, Complex(1.0)}}}});
}

Holization single_crossing_holization(Complex a1, Complex a2) {
  require_disk(a1, "single_crossing_holization");
  require_disk(a2, "single_crossing_holization");
  require_distinct({a1, a2}, "single_crossing_holization");
  UniPoly n = moebius_num(a1) * moebius_num(a2);
  UniPoly d = moebius_den(a1) * moebius_den(a2);
  Holization h;
  h.components = {{n, d}, {UniPoly::identity() * n, d}};
  h.ambient_dim = 2;
  return h;
}

Connection single_crossing_connection(Complex a1, Complex a2) {
  require_distinct({a1, a2}, "single_crossing_connection");
  return Connection(
      {LocalFunctional{{{a1, 0, Complex(1.0)}, {a2, 0, Complex(-1.0)}}}});
}

double single_crossing_invariant(Complex a1, Complex a2) {
  return hyperbolic_distance(a1, a2);
}

Holization triple_point_embedding(Complex a2, Complex a3) {
  require_disk(a2, "triple_point_embedding");
  require_disk(a3, "triple_point_embedding");
  require_distinct({Complex(0.0), a2, a3}, "triple_point_embedding");
  UniPoly n = UniPoly::identity() * moebius_num(a2) * moebius_num(a3);
  UniPoly d = moebius_den(a2) * moebius_den(a3);
  Holization h;
  h.components = {{n, d},
                  {UniPoly::identity() * n, d},
                  {UniPoly::identity() * UniPoly::identity() * n, d}};
  h.ambient_dim = 3;
  return h;
}

Connection triple_point_connection(Complex a1, Complex a2, Complex a3) {
  require_distinct({a1, a2, a3}, "triple_point_connection");
  return Connection({
      LocalFunctional{{{a1, 0, Complex(1.0)}, {a2, 0, Complex(-1.0)}}},
      LocalFunctional{{{a1, 0, Complex(1.0)}, {a3, 0, Complex(-1.0)}}},
  });
}

bool triple_point_isomorphic(const std::array<Complex, 3>& alphas,
                             const std::array<Complex, 3>& betas) {
  for (Complex a : alphas) require_disk(a, "triple_point_isomorphic");
  for (Complex b : betas) require_disk(b, "triple_point_isomorphic");
  std::array<int, 3> perm = {0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    Eigen::Matrix3cd M;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Complex bi = betas[perm[i]], bj = betas[perm[j]];
        M(i, j) = (1.0 - std::conj(bi) * bj) /
                  (1.0 - std::conj(alphas[i]) * alphas[j]);
      }
    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(M);
    if (svd.singularValues()(1) < 1e-8 * svd.singularValues()(0)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Connection cusp2_connection(Complex c) {
  return Connection({
      LocalFunctional{{{Complex(0.0), 1, Complex(1.0)}}},
      LocalFunctional{{{Complex(0.0), 2, Complex(1.0)}, {Complex(0.0), 3, c}}},
  });
}

bool cusp2_isomorphic(Complex c1, Complex c2) {
  return std::abs(std::abs(c1) - std::abs(c2)) < 1e-10;
}

double cusp2_min_modulus() {
  return (2.0 - std::numbers::sqrt2) / (3.0 * (4.0 * std::numbers::sqrt2 - 5.0));
}

Cusp2Holization cusp2_holization(double c_target_modulus) {
  const double bound = cusp2_min_modulus();
  if (c_target_modulus < bound)
    throw OutOfRangeError(
        "cusp2_holization: target |c| below the reachable bound (2-sqrt(2))/(3(4 sqrt(2)-5)) "
        "= 0.297268...");

  // |alpha| solving x / (3 (1 - x^2)) = |c|.
  const double x_target =
      (-1.0 + std::sqrt(1.0 + 36.0 * c_target_modulus * c_target_modulus)) /
      (6.0 * c_target_modulus);

  // On the arc phi in (pi, 5pi/4], |(1+i) + e^{i phi}| decreases
  // monotonically from 1 to sqrt(2)-1; bisect for the target modulus.
  auto alpha_at = [](double phi) {
    return Complex(1.0 + std::cos(phi), 1.0 + std::sin(phi));
  };
  double lo = std::numbers::pi, hi = 1.25 * std::numbers::pi;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (std::abs(alpha_at(mid)) > x_target)
      lo = mid;
    else
      hi = mid;
  }
  Complex alpha = alpha_at(0.5 * (lo + hi));
  Complex realized_c = alpha / (3.0 * (1.0 - std::norm(alpha)));

  UniPoly z = UniPoly::identity();
  Cusp2Holization out;
  out.h.components = {{z * z * z * z, UniPoly::constant(1.0)},
                      {z * z * moebius_num(alpha), moebius_den(alpha)}};
  out.h.ambient_dim = 2;
  out.alpha = alpha;
  out.realized_c = realized_c;

  const RationalFn& g = out.h.components[1];
  Complex g1 = g.eval(Complex(1.0, 0.0));
  Complex gi = g.eval(Complex(0.0, 1.0));
  if (std::abs(g1 - gi) > 1e-12)
    throw ConsistencyError("cusp2_holization: circle identification failed");
  Connection conn = cusp2_connection(realized_c);
  for (const RationalFn& comp : out.h.components)
    if (!verify_membership(comp, conn, 1e-10))
      throw ConsistencyError("cusp2_holization: component escapes the cusp algebra");
  return out;
}

Connection two_crossing_connection(Complex a1, Complex a2, Complex b1, Complex b2) {
  require_distinct({a1, a2, b1, b2}, "two_crossing_connection");
  return Connection({
      LocalFunctional{{{a1, 0, Complex(1.0)}, {a2, 0, Complex(-1.0)}}},
      LocalFunctional{{{b1, 0, Complex(1.0)}, {b2, 0, Complex(-1.0)}}},
  });
}

bool two_crossing_condition(Complex a1, Complex a2, Complex b1, Complex b2) {
  for (Complex p : {a1, a2, b1, b2}) require_disk(p, "two_crossing_condition");
  require_distinct({a1, a2, b1, b2}, "two_crossing_condition");
  auto level = [&](Complex b) {
    return ((a1 - b) * (a2 - b)) /
           ((1.0 - std::conj(a1) * b) * (1.0 - std::conj(a2) * b));
  };
  Complex lhs = level(b1), rhs = level(b2);
  return std::abs(lhs - rhs) <= 1e-10 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

Holization two_crossing_holization(Complex a1, Complex a2, Complex b1, Complex b2) {
  if (!two_crossing_condition(a1, a2, b1, b2))
    throw PreconditionError(
        "two_crossing_holization: the crossing level condition fails for these points");
  UniPoly fn = moebius_num(a1) * moebius_num(a2);
  UniPoly fd = moebius_den(a1) * moebius_den(a2);
  Holization h;
  h.components = {{fn, fd},
                  {UniPoly::identity() * fn * moebius_num(b1) * moebius_num(b2),
                   fd * moebius_den(b1) * moebius_den(b2)}};
  h.ambient_dim = 2;
  return h;
}

Holization nodal_cubic_fixture() {
  const double s = std::numbers::sqrt2;
  Holization h;
  h.components = {
      {UniPoly({Complex(0.0), Complex(s), Complex(0.0), Complex(-2.0 * s)}),
       UniPoly::constant(1.0)},
      {UniPoly({Complex(1.0), Complex(0.0), Complex(-2.0)}), UniPoly::constant(1.0)},
  };
  h.ambient_dim = 2;
  h.image_bound = 4.5;  // sup|sqrt2 (z - 2 z^3)| on the disk is 3 sqrt2
  return h;
}

Holization a3_fixture() {
  UniPoly num1({Complex(0.0), Complex(-0.25), Complex(0.0), Complex(1.0)});
  UniPoly num2({Complex(0.0), Complex(0.0), Complex(-0.25), Complex(0.0), Complex(1.0)});
  UniPoly den({Complex(1.0), Complex(0.0), Complex(-0.25)});
  Holization h;
  h.components = {{num1, den}, {num2, den}};
  h.ambient_dim = 2;
  return h;
}

Connection a3_connection() {
  Complex half(0.5, 0.0);
  return Connection({
      LocalFunctional{{{Complex(0.0), 0, Complex(1.0)}, {half, 0, Complex(-1.0)}}},
      LocalFunctional{{{Complex(0.0), 0, Complex(1.0)}, {-half, 0, Complex(-1.0)}}},
      LocalFunctional{{{Complex(0.0), 1, Complex(1.0)},
                       {half, 1, Complex(15.0 / 64.0)},
                       {-half, 1, Complex(15.0 / 64.0)}}},
  });
}

std::string to_string(PetalKind k) {
  switch (k) {
    case PetalKind::Cusp1: return "cusp1";
    case PetalKind::SingleCrossing: return "single-crossing";
    case PetalKind::TriplePoint: return "triple-point";
    case PetalKind::Cusp2: return "cusp2";
    case PetalKind::TwoCrossings: return "two-crossings";
    case PetalKind::TwoCusps: return "two-cusps";
    case PetalKind::CrossingWithCuspAtCrossing: return "crossing-with-cusp-at-crossing";
    case PetalKind::CrossingWithCuspApart: return "crossing-with-cusp-apart";
  }
  return "?";
}

PetalKindInfo kind_info(PetalKind k, Complex cusp2_c) {
  switch (k) {
    case PetalKind::Cusp1: return {1, true, true, 2};
    case PetalKind::SingleCrossing: return {1, true, true, 2};
    case PetalKind::TriplePoint: return {2, false, true, 3};
    case PetalKind::Cusp2:
      return {2, std::abs(cusp2_c) > 0.0, true, 2};
    case PetalKind::TwoCrossings: return {2, true, true, 2};
    case PetalKind::TwoCusps: return {2, true, false, 0};
    case PetalKind::CrossingWithCuspAtCrossing: return {2, false, false, 0};
    case PetalKind::CrossingWithCuspApart: return {2, true, false, 0};
  }
  return {0, false, false, 0};
}

}  // namespace hypcurve
