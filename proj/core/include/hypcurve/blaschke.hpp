#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hypcurve/poly.hpp"

namespace hypcurve {

/// Disk automorphism (alpha - z) / (1 - conj(alpha) z); an involution.
struct MoebiusMap {
  Complex alpha;

  explicit MoebiusMap(Complex a);
  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  /// Numerator/denominator as polynomials: (alpha - z, 1 - conj(alpha) z).
  std::pair<UniPoly, UniPoly> num_den() const;
};

/// Finite Blaschke product u * prod (z - a_i) / (1 - conj(a_i) z) with
/// |a_i| < 1 and |u| = 1. Zeros are stored with repetition. Immutable.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<Complex> zeros,
                           Complex unimodular = Complex(1.0, 0.0));

  int degree() const { return static_cast<int>(zeros_.size()); }
  std::span<const Complex> zeros() const { return zeros_; }
  Complex unimodular() const { return unimodular_; }

  /// Value at z. Throws DomainError when z collides with a pole
  /// (|1 - conj(a_i) z| below the relative pole guard).
  Complex eval(Complex z) const;

  /// f'(z) by the logarithmic-derivative sum, falling back to the full
  /// product rule when z sits on a zero of f.
  Complex derivative_at(Complex z) const;

  /// (numerator, denominator) with numerator = u * prod(z - a_i) and
  /// denominator = prod(1 - conj(a_i) z).
  std::pair<UniPoly, UniPoly> num_den() const;

 private:
  std::vector<Complex> zeros_;
  Complex unimodular_;
};

/// g with g(z) = f(m_gamma(z)); the zeros move to m_gamma(a_i) and the
/// degree is preserved.
BlaschkeProduct precompose_moebius(const BlaschkeProduct& f, Complex gamma);

/// arctanh |m_a(b)|; symmetric and Moebius-invariant. Arguments must lie in
/// the open disk.
double hyperbolic_distance(Complex a, Complex b);

/// |m_a(b)|, the pseudo-hyperbolic distance.
double pseudo_hyperbolic_distance(Complex a, Complex b);

}  // namespace hypcurve
