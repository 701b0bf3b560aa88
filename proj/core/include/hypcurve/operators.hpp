#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hypcurve/poly.hpp"

namespace hypcurve {

using Matrix = Eigen::MatrixXcd;

/// Largest singular value.
double operator_norm(const Matrix& M);

/// Commuting square matrices with T1^2 = T2^2, both checked on
/// construction to relative tolerance 1e-10.
struct OperatorPair {
  OperatorPair(Matrix t1, Matrix t2);
  Matrix T1, T2;
};

struct SpectralSetResult {
  bool passes = false;
  double sup_norm = 0.0;
  bool marginal = false;  // sup within 1e-6 of the threshold 2
};

/// Sup over the angle grid (with one parabolic refinement around the grid
/// maximizer) of ||T1 + T2 + e^{i theta}(T1 - T2)||; the pair has the
/// variety as a spectral set exactly when the sup stays at or below 2.
SpectralSetResult spectral_set_test(const OperatorPair& T, int grid = 721,
                                    double tol = 1e-9);

/// Max over the rotation grid of the top eigenvalue of the Hermitian part
/// of e^{i phi} M, with parabolic refinement.
double numerical_radius(const Matrix& M, int grid = 721);

struct LemmaEquivalenceResult {
  bool lhs = false;          // sup_theta ||A + e^{i theta} B|| <= 1
  double lhs_sup = 0.0;
  std::optional<bool> rhs;   // numerical radius criterion; empty on domain error
  double rhs_radius = 0.0;
  bool regularized = false;  // middle factor was regularized and extrapolated
};

/// Both sides of the norm/numerical-radius equivalence, computed
/// independently. When I - A*A - B*B is singular the right side substitutes
/// (I - A*A - B*B + eps I)^{-1/2} over a decreasing ladder and extrapolates
/// to eps = 0. If that matrix has an eigenvalue below -tol the right side
/// is left empty (the left side is still valid).
LemmaEquivalenceResult lemma_equivalence(const Matrix& A, const Matrix& B,
                                         int grid = 721, double tol = 1e-9);

/// Orthogonal decomposition of a commuting unitary pair with T1^2 = T2^2
/// into the ranges of T1 + T2 and T1 - T2 (the residual space K is zero in
/// the unitary case): T1 acts as diag(W+, W-) and T2 as diag(W+, -W-).
struct WoldDecomposition {
  Matrix basis_Mplus, basis_Mminus, basis_K;
  Matrix Wplus, Wminus;
  Matrix Eplus, Eminus;
  double orthogonality_residual = 0.0;
  double reconstruction_residual = 0.0;
};

/// Throws UnsupportedKindError for non-unitary input and
/// TheoryViolationError when the computed subspaces fail orthogonality or
/// the block reconstruction exceeds 1e-9.
WoldDecomposition wold_decompose(const OperatorPair& T);

/// Diagnostic for isometry-like pairs that are not unitary (finite
/// truncations of shifts): every structural identity of the decomposition
/// is reported as a residual instead of a verdict.
struct WoldDefectReport {
  int dim_Mplus = 0, dim_Mminus = 0, dim_K = 0;
  double isometry_defect_T1 = 0.0;   // ||T1* T1 - I||
  double isometry_defect_T2 = 0.0;
  double orthogonality_residual = 0.0;   // ||B+* B-||
  double identity_residual = 0.0;        // ||E+*E+ + E-*E- - I_K||
  double shift_residual_plus = 0.0;      // ||W+* E+||
  double shift_residual_minus = 0.0;     // ||W-* E-||
  double reconstruction_residual_T1 = 0.0;
  double reconstruction_residual_T2 = 0.0;
};

WoldDefectReport wold_defect_report(const Matrix& T1, const Matrix& T2);

/// Probability measure on the circle given by atoms and masses.
struct HerglotzMeasure {
  std::vector<double> atoms;   // angles in [0, 2pi)
  std::vector<double> masses;  // positive, summing to 1
};

/// Masses for an extreme point of the positive-real-part family whose
/// Cayley transform has vanishing derivative at the origin. Two atoms must
/// be antipodal (masses 1/2 each); three atoms must form a triangle with
/// the origin strictly inside, and the masses solve the moment system
/// sum m_k = 1, sum m_k e^{i theta_k} = 0.
HerglotzMeasure herglotz_masses(std::span<const double> atoms);

/// Whether the listed diagonal/antidiagonal disk points are the zero set of
/// a rational inner function on the doubled disk: the products of the
/// moduli must agree.
bool min_inner_zero_check(std::span<const Complex> alphas, std::span<const Complex> betas);

/// Equality of the two normalized boundary means; a real boundary function
/// extends to the real part of a holomorphic function exactly when they
/// agree.
bool real_part_extension_check(const std::function<double(double)>& u_plus,
                               const std::function<double(double)>& u_minus,
                               int quad_points);

}  // namespace hypcurve
