#include "hypcurve/blaschke.hpp"

#include <cmath>
#include <limits>

#include "hypcurve/errors.hpp"

namespace hypcurve {

namespace {
constexpr double kPoleGuard = 1e-12;
constexpr double kUnimodularTol = 1e-8;
}  // namespace

MoebiusMap::MoebiusMap(Complex a) : alpha(a) {
  if (std::abs(a) >= 1.0)
    throw DomainError("MoebiusMap: parameter must lie in the open disk");
}

Complex MoebiusMap::operator()(Complex z) const {
  Complex den = 1.0 - std::conj(alpha) * z;
  if (std::abs(den) < kPoleGuard * std::max(1.0, std::abs(std::conj(alpha) * z)))
    throw DomainError("MoebiusMap: pole hit");
  return (alpha - z) / den;
}

Complex MoebiusMap::derivative(Complex z) const {
  Complex den = 1.0 - std::conj(alpha) * z;
  if (std::abs(den) < kPoleGuard * std::max(1.0, std::abs(std::conj(alpha) * z)))
    throw DomainError("MoebiusMap: pole hit");
  return -(1.0 - std::norm(alpha)) / (den * den);
}

std::pair<UniPoly, UniPoly> MoebiusMap::num_den() const {
  return {UniPoly({alpha, Complex(-1.0)}), UniPoly({Complex(1.0), -std::conj(alpha)})};
}

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex unimodular)
    : zeros_(std::move(zeros)), unimodular_(unimodular) {
  if (zeros_.empty())
    throw DomainError("BlaschkeProduct: degree must be at least 1");
  for (Complex a : zeros_)
    if (std::abs(a) >= 1.0)
      throw DomainError("BlaschkeProduct: zeros must lie in the open disk");
  double m = std::abs(unimodular_);
  if (std::abs(m - 1.0) > kUnimodularTol)
    throw DomainError("BlaschkeProduct: front factor must be unimodular");
  unimodular_ /= m;
}

Complex BlaschkeProduct::eval(Complex z) const {
  Complex acc = unimodular_;
  for (Complex a : zeros_) {
    Complex den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < kPoleGuard * std::max(1.0, std::abs(std::conj(a) * z)))
      throw NumericError("BlaschkeProduct::eval: pole hit");
    acc *= (z - a) / den;
  }
  return acc;
}

Complex BlaschkeProduct::derivative_at(Complex z) const {
  double min_zero_dist = std::numeric_limits<double>::infinity();
  for (Complex a : zeros_) min_zero_dist = std::min(min_zero_dist, std::abs(z - a));

  if (min_zero_dist > 1e-8) {
    Complex f = eval(z);
    Complex s(0.0);
    for (Complex a : zeros_)
      s += 1.0 / (z - a) + std::conj(a) / (1.0 - std::conj(a) * z);
    return f * s;
  }

  // Product rule; exact at zeros of f where the logarithmic form blows up.
  const int n = degree();
  std::vector<Complex> fac(n), dfac(n);
  for (int i = 0; i < n; ++i) {
    Complex a = zeros_[i];
    Complex den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < kPoleGuard * std::max(1.0, std::abs(std::conj(a) * z)))
      throw NumericError("BlaschkeProduct::derivative_at: pole hit");
    fac[i] = (z - a) / den;
    dfac[i] = (1.0 - std::norm(a)) / (den * den);
  }
  Complex total(0.0);
  for (int i = 0; i < n; ++i) {
    Complex term = dfac[i];
    for (int j = 0; j < n; ++j)
      if (j != i) term *= fac[j];
    total += term;
  }
  return unimodular_ * total;
}

std::pair<UniPoly, UniPoly> BlaschkeProduct::num_den() const {
  UniPoly num = UniPoly::from_roots(zeros_, unimodular_);
  UniPoly den = UniPoly::constant(1.0);
  for (Complex a : zeros_) den = den * UniPoly({Complex(1.0), -std::conj(a)});
  return {num, den};
}

BlaschkeProduct precompose_moebius(const BlaschkeProduct& f, Complex gamma) {
  if (std::abs(gamma) >= 1.0)
    throw DomainError("precompose_moebius: gamma must lie in the open disk");
  MoebiusMap m(gamma);
  std::vector<Complex> new_zeros;
  new_zeros.reserve(f.degree());
  for (Complex a : f.zeros()) new_zeros.push_back(m(a));

  // Fix the front factor by matching values at a sample point away from
  // zeros and poles.
  static const Complex candidates[] = {
      Complex(0.0, 0.0),      Complex(0.31, 0.17),  Complex(-0.42, 0.29),
      Complex(0.23, -0.37),   Complex(-0.11, -0.4), Complex(0.05, 0.49),
  };
  for (Complex z : candidates) {
    Complex prod(1.0);
    bool usable = true;
    for (Complex a : new_zeros) {
      Complex den = 1.0 - std::conj(a) * z;
      if (std::abs(z - a) < 1e-6 || std::abs(den) < 1e-6) {
        usable = false;
        break;
      }
      prod *= (z - a) / den;
    }
    if (!usable || std::abs(prod) < 1e-8) continue;
    Complex target = f.eval(m(z));
    Complex u = target / prod;
    return BlaschkeProduct(std::move(new_zeros), u / std::abs(u));
  }
  throw NumericError("precompose_moebius: no usable sample point");
}

double pseudo_hyperbolic_distance(Complex a, Complex b) {
  if (std::abs(a) >= 1.0 || std::abs(b) >= 1.0)
    throw DomainError("pseudo_hyperbolic_distance: points must lie in the open disk");
  return std::abs((a - b) / (1.0 - std::conj(a) * b));
}

double hyperbolic_distance(Complex a, Complex b) {
  return std::atanh(pseudo_hyperbolic_distance(a, b));
}

}  // namespace hypcurve
