#include "hypcurve/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hypcurve/errors.hpp"

namespace hypcurve {

namespace {

constexpr double kDegeneracyTol = 1e-10;
constexpr double kFiberTol = 1e-5;
constexpr double kPairTol = 1e-6;

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1p-53;
}

Complex random_shear(std::mt19937_64& gen) {
  double r = 0.5 + 0.5 * uniform01(gen);
  double ang = 2.0 * std::numbers::pi * uniform01(gen);
  return Complex(r * std::cos(ang), r * std::sin(ang));
}

BiPoly normalized(const BiPoly& F) {
  double m = F.max_abs_coeff();
  return (1.0 / m) * F;
}

bool sylvester_rank_deficient(const BiPoly& F, const BiPoly& G, std::mt19937_64& gen) {
  for (int trial = 0; trial < 3; ++trial) {
    double ang = 2.0 * std::numbers::pi * uniform01(gen);
    double rad = 0.6 + 0.5 * uniform01(gen);
    Complex z0(rad * std::cos(ang), rad * std::sin(ang));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sylvester_w(F, G, z0));
    const auto& sv = svd.singularValues();
    double smax = sv(0);
    double smin = sv(sv.size() - 1);
    if (smin > 1e-10 * std::max(smax, 1e-300)) return false;
  }
  return true;
}

struct RawPoint {
  Complex lambda, mu;
  int multiplicity;
};

int region_of(double modulus, double band) {
  if (modulus < 1.0 - band) return 0;
  if (modulus <= 1.0 + band) return 1;
  return 2;
}

// One Newton step candidate on the full system (F, G) = (0, 0).
bool newton_polish_point(const BiPoly& F, const BiPoly& G, Complex& lambda, Complex& mu) {
  BiPoly Fz = F.dz(), Fw = F.dw(), Gz = G.dz(), Gw = G.dw();
  Complex l = lambda, m = mu;
  auto resid = [&](Complex a, Complex b) {
    return std::max(std::abs(F.eval(a, b)), std::abs(G.eval(a, b)));
  };
  double best = resid(l, m);
  for (int it = 0; it < 12; ++it) {
    Complex f = F.eval(l, m), g = G.eval(l, m);
    Complex a = Fz.eval(l, m), b = Fw.eval(l, m);
    Complex c = Gz.eval(l, m), d = Gw.eval(l, m);
    Complex det = a * d - b * c;
    if (std::abs(det) < 1e-14) break;
    Complex dl = (f * d - b * g) / det;
    Complex dm = (a * g - f * c) / det;
    Complex l2 = l - dl, m2 = m - dm;
    double r2 = resid(l2, m2);
    if (!(r2 < best)) break;
    l = l2;
    m = m2;
    best = r2;
    if (std::abs(dl) + std::abs(dm) < 1e-16 * (1.0 + std::abs(l) + std::abs(m))) break;
  }
  lambda = l;
  mu = m;
  return true;
}

// Common w of the two fiber polynomials at a fixed z, or nullopt when the
// fiber does not identify a single point (bad shear).
std::optional<Complex> fiber_common_root(const BiPoly& Ft, const BiPoly& Gt, Complex z0,
                                         double tol) {
  UniPoly A(Ft.wcoeffs_at(z0));
  UniPoly B(Gt.wcoeffs_at(z0));
  if (A.degree() < 1 || B.degree() < 1) return std::nullopt;
  std::vector<RootCluster> ra, rb;
  try {
    ra = roots(A, std::max(tol, 1e-7));
    rb = roots(B, std::max(tol, 1e-7));
  } catch (const NumericError&) {
    return std::nullopt;
  }
  std::vector<Complex> matches;
  for (const RootCluster& x : ra)
    for (const RootCluster& y : rb) {
      double lim = kFiberTol * std::max({1.0, std::abs(x.value), std::abs(y.value)});
      if (std::abs(x.value - y.value) <= lim)
        matches.push_back(0.5 * (x.value + y.value));
    }
  if (matches.empty()) return std::nullopt;
  Complex w0 = matches.front();
  for (Complex m : matches)
    if (std::abs(m - w0) > 10.0 * kFiberTol * std::max(1.0, std::abs(w0)))
      return std::nullopt;  // two distinct points share this fiber
  Complex acc(0.0);
  for (Complex m : matches) acc += m;
  return acc / static_cast<double>(matches.size());
}

}  // namespace

std::string to_string(Region r) {
  switch (r) {
    case Region::DD: return "DD";
    case Region::TT: return "TT";
    case Region::EE: return "EE";
  }
  return "??";
}

BlaschkePair::BlaschkePair(BlaschkeProduct f_, BlaschkeProduct g_)
    : f(std::move(f_)), g(std::move(g_)) {
  if (f.degree() < 2 || g.degree() < 2)
    throw DomainError("BlaschkePair: both degrees must be at least 2");
}

BiPoly coincidence_curve(const BlaschkeProduct& f) {
  if (f.degree() < 2)
    throw DomainError("coincidence_curve: degree must be at least 2");
  UniPoly pt = UniPoly::from_roots(f.zeros());
  UniPoly p = UniPoly::constant(1.0);
  for (Complex a : f.zeros()) p = p * UniPoly({Complex(1.0), -std::conj(a)});
  BiPoly numerator = BiPoly::outer(p, pt) - BiPoly::outer(pt, p);
  // the exact division cancels the top rows and columns only up to rounding
  return quotient_by_z_minus_w(numerator, 1e-10).trimmed(1e-12);
}

IntersectionReport solve_pair(const BlaschkePair& pair, const SolveOptions& opts) {
  const int m = pair.f.degree(), n = pair.g.degree();
  const double expected_N = static_cast<double>((m - 1) * (n - 1));

  BiPoly F = normalized(coincidence_curve(pair.f));
  BiPoly G = normalized(coincidence_curve(pair.g));

  std::mt19937_64 gen(opts.seed);

  UniPoly R0 = resultant_w(F, G);
  bool res_zero = R0.max_abs_coeff() < kDegeneracyTol * resultant_scale(F, G);
  if (res_zero && sylvester_rank_deficient(F, G, gen)) {
    IntersectionReport rep;
    rep.degenerate = true;
    rep.codim = std::nullopt;
    return rep;
  }

  double tol = opts.tol;
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt, tol *= 0.1) {
    Complex t = random_shear(gen);
    BiPoly Ft = shear(F, t);
    BiPoly Gt = shear(G, t);
    UniPoly R = resultant_w(Ft, Gt).trimmed(1e-10);
    if (R.degree() < 1) continue;

    std::vector<RootCluster> zroots;
    try {
      zroots = roots(R, std::max(tol, 1e-9));
    } catch (const NumericError&) {
      continue;
    }

    std::vector<RawPoint> raw;
    bool fiber_ok = true;
    for (const RootCluster& rc : zroots) {
      std::optional<Complex> w0 = fiber_common_root(Ft, Gt, rc.value, tol);
      if (!w0) {
        fiber_ok = false;
        break;
      }
      Complex lambda = rc.value + t * (*w0);
      Complex mu = *w0;
      if (rc.multiplicity == 1) newton_polish_point(F, G, lambda, mu);
      raw.push_back({lambda, mu, rc.multiplicity});
    }
    if (!fiber_ok) continue;

    IntersectionReport rep;
    for (const RawPoint& rp : raw) {
      int cl = region_of(std::abs(rp.lambda), opts.boundary_tol);
      int cm = region_of(std::abs(rp.mu), opts.boundary_tol);
      if (cl != cm)
        throw TheoryViolationError(
            "solve_pair: mixed-region solution; numerical classification failed");
      IntersectionPoint pt;
      pt.lambda = rp.lambda;
      pt.mu = rp.mu;
      pt.region = cl == 0 ? Region::DD : (cl == 1 ? Region::TT : Region::EE);
      pt.multiplicity = rp.multiplicity;
      pt.on_diagonal =
          std::abs(rp.lambda - rp.mu) <= 1e-9 * std::max(1.0, std::abs(rp.lambda));
      if (pt.region == Region::TT && pt.on_diagonal)
        throw TheoryViolationError("solve_pair: diagonal circle solution is impossible");
      rep.points.push_back(pt);
    }

    double N = 0.0;
    for (const IntersectionPoint& pt : rep.points) {
      if (pt.region == Region::DD) N += pt.multiplicity;
      if (pt.region == Region::TT) N += 0.5 * pt.multiplicity;
    }
    if (std::abs(N - expected_N) > 0.25) continue;
    rep.N = N;

    // Unordered off-diagonal circle pairs, deduplicated without weighting.
    std::vector<std::pair<Complex, Complex>> tpairs;
    for (const IntersectionPoint& pt : rep.points) {
      if (pt.region != Region::TT) continue;
      Complex a = pt.lambda, b = pt.mu;
      if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag()))
        std::swap(a, b);
      bool seen = false;
      for (const auto& [x, y] : tpairs)
        if (std::abs(x - a) < kPairTol && std::abs(y - b) < kPairTol) seen = true;
      if (!seen) tpairs.emplace_back(a, b);
    }
    rep.r = static_cast<int>(tpairs.size());

    int num = (m - 1) * (n - 1) - rep.r;
    if (num % 2 != 0)
      throw ConsistencyError("solve_pair: (m-1)(n-1) - r is odd; circle pair count is wrong");
    if (num < 0)
      throw ConsistencyError("solve_pair: negative codimension");
    rep.codim = num / 2;

    std::sort(rep.points.begin(), rep.points.end(),
              [](const IntersectionPoint& a, const IntersectionPoint& b) {
                if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
                if (a.lambda.imag() != b.lambda.imag()) return a.lambda.imag() < b.lambda.imag();
                if (a.mu.real() != b.mu.real()) return a.mu.real() < b.mu.real();
                return a.mu.imag() < b.mu.imag();
              });
    return rep;
  }
  throw NumericError("solve_pair: no shear produced a consistent solution set");
}

bool reflection_closure_check(const IntersectionReport& report, double tol) {
  if (report.degenerate)
    throw PreconditionError("reflection_closure_check: degenerate report");
  constexpr double kZeroExempt = 1e-6;
  for (const IntersectionPoint& pt : report.points) {
    if (std::abs(pt.lambda) <= kZeroExempt || std::abs(pt.mu) <= kZeroExempt) continue;
    Complex rl = 1.0 / std::conj(pt.lambda);
    Complex rm = 1.0 / std::conj(pt.mu);
    bool found = false;
    for (const IntersectionPoint& q : report.points) {
      double lim = tol * std::max({1.0, std::abs(rl), std::abs(rm)});
      if (std::abs(q.lambda - rl) <= lim && std::abs(q.mu - rm) <= lim &&
          q.multiplicity == pt.multiplicity) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<int> codim_alg(const BlaschkePair& pair, const SolveOptions& opts) {
  IntersectionReport rep = solve_pair(pair, opts);
  return rep.codim;
}

std::optional<int> separation_pairs_on_torus(const BlaschkePair& pair,
                                             const SolveOptions& opts) {
  IntersectionReport rep = solve_pair(pair, opts);
  if (rep.degenerate) return std::nullopt;
  return rep.r;
}

double infinity_multiplicity(const BlaschkePair& pair, const SolveOptions& opts) {
  const int m = pair.f.degree(), n = pair.g.degree();
  BiPoly F = coincidence_curve(pair.f);
  BiPoly G = coincidence_curve(pair.g);

  auto corner_ok = [](const BiPoly& P, int d) {
    return std::abs(P.coeff(d - 1, d - 1)) > 1e-10 * std::max(P.max_abs_coeff(), 1e-300) &&
           P.total_degree() == 2 * (d - 1);
  };
  if (!corner_ok(F, m) || !corner_ok(G, n))
    throw PreconditionError(
        "infinity_multiplicity: curve polynomial below generic degree; precompose both "
        "products with a Moebius map at a non-critical point and retry");

  IntersectionReport rep = solve_pair(pair, opts);
  if (rep.degenerate)
    throw DegenerateInputError("infinity_multiplicity: intersection is infinite");

  // r0: nonzero disk points identified with the origin by both products,
  // i.e. common roots of F(., 0) and G(., 0) inside the disk.
  std::vector<RootCluster> rf = roots(F.at_w(0.0), opts.tol);
  std::vector<RootCluster> rg = roots(G.at_w(0.0), opts.tol);
  int r0 = 0;
  for (const RootCluster& x : rf) {
    if (std::abs(x.value) <= 1e-8 || std::abs(x.value) >= 1.0 - 1e-10) continue;
    for (const RootCluster& y : rg)
      if (std::abs(x.value - y.value) <= kPairTol) {
        ++r0;
        break;
      }
  }

  // s: multiplicity of the affine intersection at the origin; clusters that
  // a high-order contact splits are re-aggregated by the wider radius.
  double s = 0.0;
  for (const IntersectionPoint& pt : rep.points)
    if (std::abs(pt.lambda) < 1e-4 && std::abs(pt.mu) < 1e-4) s += pt.multiplicity;

  return static_cast<double>((m - 1) * (n - 1)) + r0 + 0.5 * s;
}

}  // namespace hypcurve
