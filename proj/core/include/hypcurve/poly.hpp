#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <span>
#include <vector>

namespace hypcurve {

using Complex = std::complex<double>;

/// Dense univariate polynomial over C, coefficients stored in ascending
/// degree. The zero polynomial has an empty coefficient list and reports
/// degree() == -1; consumers are expected to branch on is_zero().
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Complex> coeffs);

  static UniPoly constant(Complex c);
  static UniPoly identity();  // z
  static UniPoly from_roots(std::span<const Complex> roots,
                            Complex leading = Complex(1.0, 0.0));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const;
  Complex leading() const;
  double max_abs_coeff() const;

  Complex eval(Complex z) const;
  UniPoly derivative() const;
  UniPoly pow(int e) const;
  /// Copy with trailing coefficients below rel_tol * max_abs_coeff removed.
  UniPoly trimmed(double rel_tol) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(Complex s, const UniPoly& p);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct RootCluster {
  Complex value;
  int multiplicity = 0;
};

/// All roots of p with multiplicities. Companion-matrix eigenvalues seed a
/// Newton polish; nearby roots are merged into clusters of summed
/// multiplicity with relative radius max(1e-7, 1e3 * eps * scale), so a
/// numerically split double root reports as one root of multiplicity two.
/// The multiplicities always sum to degree(p).
///
/// Throws DegenerateInputError on the zero polynomial and NumericError
/// (carrying the best iterates) when a residual exceeds tol.
std::vector<RootCluster> roots(const UniPoly& p, double tol = 1e-9);

/// Bivariate polynomial in (z, w); coefficient rows are indexed by z-power
/// and columns by w-power. Exact zero rows/columns are trimmed so a nonzero
/// entry appears in the last row and column unless the polynomial is zero.
class BiPoly {
 public:
  BiPoly() = default;
  /// rows[i][j] is the coefficient of z^i w^j.
  explicit BiPoly(std::vector<std::vector<Complex>> rows);

  static BiPoly constant(Complex c);
  static BiPoly var_z();
  static BiPoly var_w();
  /// Outer product a(z) * b(w).
  static BiPoly outer(const UniPoly& a, const UniPoly& b);
  static BiPoly from_unipoly_in_z(const UniPoly& p);
  static BiPoly from_unipoly_in_w(const UniPoly& p);

  bool is_zero() const { return c_.empty(); }
  int zdeg() const { return zd_; }
  int wdeg() const { return wd_; }
  int total_degree() const;
  Complex coeff(int i, int j) const;
  double max_abs_coeff() const;

  Complex eval(Complex z, Complex w) const;
  /// w-polynomial F(z0, .) (trimmed).
  UniPoly at_z(Complex z0) const;
  /// z-polynomial F(., w0) (trimmed).
  UniPoly at_w(Complex w0) const;
  /// w-coefficient list of F(z0, .) at the stored width wdeg()+1, untrimmed.
  std::vector<Complex> wcoeffs_at(Complex z0) const;

  BiPoly dz() const;
  BiPoly dw() const;

  /// Copy with entries below rel_tol * max_abs_coeff zeroed and the
  /// rectangle re-trimmed; removes cancellation noise after exact division.
  BiPoly trimmed(double rel_tol) const;

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(Complex s, const BiPoly& f);

 private:
  void trim();
  Complex& at(int i, int j) { return c_[static_cast<size_t>(i) * (wd_ + 1) + j]; }
  std::vector<Complex> c_;  // (zd_+1) x (wd_+1), row-major by z-power
  int zd_ = -1, wd_ = -1;
};

/// Homogeneous trivariate polynomial in (t, z, w): every stored monomial
/// exponent triple sums to total_degree().
class HomoPoly3 {
 public:
  HomoPoly3() = default;
  HomoPoly3(std::map<std::array<int, 3>, Complex> coeffs, int total_degree);

  int total_degree() const { return deg_; }
  const std::map<std::array<int, 3>, Complex>& coeffs() const { return c_; }
  Complex eval(Complex t, Complex z, Complex w) const;

  /// Substitute t = 1; recovers the affine polynomial in (z, w).
  BiPoly dehomogenize_t() const;
  /// Substitute z = 1; chart polynomial in (t, w).
  BiPoly dehomogenize_z() const;
  /// Substitute w = 1; chart polynomial in (t, z).
  BiPoly dehomogenize_w() const;

 private:
  std::map<std::array<int, 3>, Complex> c_;
  int deg_ = 0;
};

/// H(t,z,w) with H(1,z,w) = F(z,w), every monomial padded with t-powers to
/// the requested total degree. Throws ContractViolation if target_degree is
/// below the total degree of F.
HomoPoly3 homogenize(const BiPoly& F, int target_degree);

/// Torus reflection z^k w^l conj(F(1/conj(z), 1/conj(w))) with k = zdeg,
/// l = wdeg. Applying it twice gives back a unimodular multiple of F.
BiPoly reflect(const BiPoly& F);

/// F(z + t*w, w).
BiPoly shear(const BiPoly& F, Complex t);

/// Sylvester matrix in w of F(z0,.) and G(z0,.) built at the stored
/// w-degrees (leading entries may evaluate to zero).
Eigen::MatrixXcd sylvester_w(const BiPoly& F, const BiPoly& G, Complex z0);

/// Resultant of F and G with respect to w, a polynomial in z. Computed by
/// evaluation of the Sylvester determinant at unit-circle nodes followed by
/// inverse-DFT interpolation at the generic degree bound
/// zdeg(F)*wdeg(G) + zdeg(G)*wdeg(F).
UniPoly resultant_w(const BiPoly& F, const BiPoly& G);

/// Magnitude bound on the coefficients of resultant_w(F, G); identically
/// zero resultants are detected by comparing against this scale.
double resultant_scale(const BiPoly& F, const BiPoly& G);

/// Exact quotient N / (z - w) for numerators vanishing on the diagonal.
/// Throws NumericError if the division leaves a remainder above
/// rel_tol * scale(N).
BiPoly quotient_by_z_minus_w(const BiPoly& numerator, double rel_tol = 1e-10);

}  // namespace hypcurve
