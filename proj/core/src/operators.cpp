#include "hypcurve/operators.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypcurve/errors.hpp"

namespace hypcurve {

namespace {

constexpr double kRelTol = 1e-10;

Complex unit(double ang) { return Complex(std::cos(ang), std::sin(ang)); }

// Max of fn over a uniform angle grid with one parabolic refinement around
// the grid maximizer.
double grid_max(const std::function<double(double)>& fn, int grid) {
  if (grid < 3) grid = 3;
  double best = -std::numeric_limits<double>::infinity();
  int best_k = 0;
  std::vector<double> vals(grid);
  for (int k = 0; k < grid; ++k) {
    double ang = 2.0 * std::numbers::pi * k / grid;
    vals[k] = fn(ang);
    if (vals[k] > best) {
      best = vals[k];
      best_k = k;
    }
  }
  double h = 2.0 * std::numbers::pi / grid;
  double vm = vals[(best_k + grid - 1) % grid];
  double vp = vals[(best_k + 1) % grid];
  double denom = vm - 2.0 * vals[best_k] + vp;
  if (std::abs(denom) > 1e-14) {
    double delta = 0.5 * (vm - vp) / denom * h;
    if (std::abs(delta) < h) {
      double refined = fn(2.0 * std::numbers::pi * best_k / grid + delta);
      best = std::max(best, refined);
    }
  }
  return best;
}

double lambda_max_hermitian_part(const Matrix& M, double phi) {
  Matrix H = 0.5 * (unit(phi) * M + std::conj(unit(phi)) * M.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Matrix inv_sqrt_psd(const Matrix& H) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXcd d(ev.size());
  for (int i = 0; i < ev.size(); ++i) d(i) = 1.0 / std::sqrt(std::max(ev(i), 1e-300));
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

// Orthonormal basis of the range via SVD.
Matrix range_basis(const Matrix& M, double threshold) {
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeThinU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++rank;
  return svd.matrixU().leftCols(rank);
}

Matrix orth_complement(const Matrix& basis, int dim) {
  if (basis.cols() == 0) return Matrix::Identity(dim, dim);
  Eigen::JacobiSVD<Matrix> svd(basis, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(dim - basis.cols());
}

struct WoldParts {
  Matrix Bp, Bm, Bk;
  Matrix Wp, Wm, Ep, Em;
};

WoldParts wold_parts(const Matrix& T1, const Matrix& T2) {
  const int d = static_cast<int>(T1.rows());
  double scale = std::max({operator_norm(T1), operator_norm(T2), 1.0});
  WoldParts w;
  w.Bp = range_basis(T1 + T2, 1e-9 * scale);
  w.Bm = range_basis(T1 - T2, 1e-9 * scale);
  Matrix both(d, w.Bp.cols() + w.Bm.cols());
  both << w.Bp, w.Bm;
  w.Bk = orth_complement(both, d);
  w.Wp = w.Bp.adjoint() * T1 * w.Bp;
  w.Wm = w.Bm.adjoint() * T1 * w.Bm;
  w.Ep = w.Bp.adjoint() * T1 * w.Bk;
  w.Em = w.Bm.adjoint() * T1 * w.Bk;
  return w;
}

double block_reconstruction_residual(const Matrix& T, const WoldParts& w, int sign) {
  const int p = static_cast<int>(w.Bp.cols());
  const int q = static_cast<int>(w.Bm.cols());
  const int k = static_cast<int>(w.Bk.cols());
  Matrix U(w.Bp.rows(), p + q + k);
  if (p) U.leftCols(p) = w.Bp;
  if (q) U.middleCols(p, q) = w.Bm;
  if (k) U.rightCols(k) = w.Bk;
  Matrix R = U.adjoint() * T * U;
  Matrix E = Matrix::Zero(p + q + k, p + q + k);
  if (p) E.block(0, 0, p, p) = w.Wp;
  if (q) E.block(p, p, q, q) = static_cast<double>(sign) * w.Wm;
  if (p && k) E.block(0, p + q, p, k) = w.Ep;
  if (q && k) E.block(p, p + q, q, k) = static_cast<double>(sign) * w.Em;
  return (R - E).norm();
}

}  // namespace

double operator_norm(const Matrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  return svd.singularValues()(0);
}

OperatorPair::OperatorPair(Matrix t1, Matrix t2) : T1(std::move(t1)), T2(std::move(t2)) {
  if (T1.rows() != T1.cols() || T2.rows() != T2.cols() || T1.rows() != T2.rows())
    throw PreconditionError("OperatorPair: matrices must be square and of equal size");
  double scale = std::max({operator_norm(T1), operator_norm(T2), 1.0});
  if (operator_norm(T1 * T2 - T2 * T1) > kRelTol * scale * scale)
    throw PreconditionError("OperatorPair: matrices do not commute");
  if (operator_norm(T1 * T1 - T2 * T2) > kRelTol * scale * scale)
    throw PreconditionError("OperatorPair: T1^2 = T2^2 fails");
}

SpectralSetResult spectral_set_test(const OperatorPair& T, int grid, double tol) {
  Matrix S = T.T1 + T.T2;
  Matrix D = T.T1 - T.T2;
  double sup = grid_max(
      [&](double theta) { return operator_norm(S + unit(theta) * D); }, grid);
  SpectralSetResult r;
  r.sup_norm = sup;
  r.passes = sup <= 2.0 + tol;
  r.marginal = std::abs(sup - 2.0) < 1e-6;
  return r;
}

double numerical_radius(const Matrix& M, int grid) {
  return grid_max([&](double phi) { return lambda_max_hermitian_part(M, phi); }, grid);
}

LemmaEquivalenceResult lemma_equivalence(const Matrix& A, const Matrix& B, int grid,
                                         double tol) {
  LemmaEquivalenceResult r;
  r.lhs_sup = grid_max(
      [&](double theta) { return operator_norm(A + unit(theta) * B); }, grid);
  r.lhs = r.lhs_sup <= 1.0 + tol;

  const int d = static_cast<int>(A.rows());
  Matrix H = Matrix::Identity(d, d) - A.adjoint() * A - B.adjoint() * B;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (H + H.adjoint()), Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues().minCoeff();
  if (lmin < -tol) return r;  // rhs has no meaning for these inputs

  auto radius_with = [&](double eps) {
    Matrix S = inv_sqrt_psd(0.5 * (H + H.adjoint()) + eps * Matrix::Identity(d, d));
    return numerical_radius(S * A.adjoint() * B * S, grid);
  };
  double w;
  if (lmin > 1e-10) {
    w = radius_with(0.0);
  } else {
    r.regularized = true;
    // least-squares linear fit w(eps) = a + b eps over the ladder; report a
    const double eps[3] = {1e-4, 1e-6, 1e-8};
    double ws[3];
    for (int i = 0; i < 3; ++i) ws[i] = radius_with(eps[i]);
    double se = eps[0] + eps[1] + eps[2], see = 0.0, sw = 0.0, sew = 0.0;
    for (int i = 0; i < 3; ++i) {
      see += eps[i] * eps[i];
      sw += ws[i];
      sew += eps[i] * ws[i];
    }
    double b = (3.0 * sew - se * sw) / (3.0 * see - se * se);
    w = (sw - b * se) / 3.0;
  }
  r.rhs_radius = w;
  r.rhs = w <= 0.5 + tol;
  return r;
}

WoldDecomposition wold_decompose(const OperatorPair& T) {
  const int d = static_cast<int>(T.T1.rows());
  Matrix I = Matrix::Identity(d, d);
  if (operator_norm(T.T1.adjoint() * T.T1 - I) > 1e-9 ||
      operator_norm(T.T2.adjoint() * T.T2 - I) > 1e-9)
    throw UnsupportedKindError(
        "wold_decompose: only the unitary case is supported; use wold_defect_report for "
        "isometry-like data");

  WoldParts w = wold_parts(T.T1, T.T2);
  WoldDecomposition out;
  out.basis_Mplus = w.Bp;
  out.basis_Mminus = w.Bm;
  out.basis_K = w.Bk;
  out.Wplus = w.Wp;
  out.Wminus = w.Wm;
  out.Eplus = w.Ep;
  out.Eminus = w.Em;
  out.orthogonality_residual =
      (w.Bp.cols() && w.Bm.cols()) ? (w.Bp.adjoint() * w.Bm).norm() : 0.0;
  if (out.orthogonality_residual > 1e-9)
    throw TheoryViolationError("wold_decompose: range subspaces are not orthogonal");
  out.reconstruction_residual = std::max(block_reconstruction_residual(T.T1, w, +1),
                                         block_reconstruction_residual(T.T2, w, -1));
  if (out.reconstruction_residual > 1e-9)
    throw TheoryViolationError("wold_decompose: block reconstruction failed");
  return out;
}

WoldDefectReport wold_defect_report(const Matrix& T1, const Matrix& T2) {
  const int d = static_cast<int>(T1.rows());
  Matrix I = Matrix::Identity(d, d);
  WoldParts w = wold_parts(T1, T2);
  WoldDefectReport r;
  r.dim_Mplus = static_cast<int>(w.Bp.cols());
  r.dim_Mminus = static_cast<int>(w.Bm.cols());
  r.dim_K = static_cast<int>(w.Bk.cols());
  r.isometry_defect_T1 = operator_norm(T1.adjoint() * T1 - I);
  r.isometry_defect_T2 = operator_norm(T2.adjoint() * T2 - I);
  r.orthogonality_residual =
      (w.Bp.cols() && w.Bm.cols()) ? (w.Bp.adjoint() * w.Bm).norm() : 0.0;
  if (w.Bk.cols()) {
    Matrix idk = Matrix::Identity(w.Bk.cols(), w.Bk.cols());
    r.identity_residual = (w.Ep.adjoint() * w.Ep + w.Em.adjoint() * w.Em - idk).norm();
    r.shift_residual_plus = w.Bp.cols() ? (w.Wp.adjoint() * w.Ep).norm() : 0.0;
    r.shift_residual_minus = w.Bm.cols() ? (w.Wm.adjoint() * w.Em).norm() : 0.0;
  }
  r.reconstruction_residual_T1 = block_reconstruction_residual(T1, w, +1);
  r.reconstruction_residual_T2 = block_reconstruction_residual(T2, w, -1);
  return r;
}

HerglotzMeasure herglotz_masses(std::span<const double> atoms) {
  if (atoms.size() == 2) {
    double diff = std::remainder(atoms[0] - atoms[1], 2.0 * std::numbers::pi);
    if (std::abs(std::abs(diff) - std::numbers::pi) > 1e-9)
      throw InfeasibleError("herglotz_masses: two atoms must be antipodal");
    return {{atoms[0], atoms[1]}, {0.5, 0.5}};
  }
  if (atoms.size() != 3)
    throw DomainError("herglotz_masses: two or three atoms required");

  Eigen::Matrix3d M;
  for (int k = 0; k < 3; ++k) {
    M(0, k) = 1.0;
    M(1, k) = std::cos(atoms[k]);
    M(2, k) = std::sin(atoms[k]);
  }
  Eigen::PartialPivLU<Eigen::Matrix3d> lu(M);
  if (std::abs(lu.determinant()) < 1e-12)
    throw SingularSystemError("herglotz_masses: atoms are collinear on the circle");
  Eigen::Vector3d rhs(1.0, 0.0, 0.0);
  Eigen::Vector3d m = lu.solve(rhs);
  for (int k = 0; k < 3; ++k)
    if (!(m(k) > 0.0))
      throw InfeasibleError(
          "herglotz_masses: origin is not interior to the atom triangle");
  if ((M * m - rhs).norm() > 1e-12)
    throw NumericError("herglotz_masses: moment residual exceeds tolerance");
  return {{atoms[0], atoms[1], atoms[2]}, {m(0), m(1), m(2)}};
}

bool min_inner_zero_check(std::span<const Complex> alphas, std::span<const Complex> betas) {
  if (alphas.empty() || betas.empty())
    throw PreconditionError("min_inner_zero_check: zero lists must be nonempty");
  auto logprod = [](std::span<const Complex> v) {
    double s = 0.0;
    for (Complex z : v) {
      double m = std::abs(z);
      if (m < 1e-12) throw DomainError("min_inner_zero_check: zero at the origin");
      if (m >= 1.0) throw DomainError("min_inner_zero_check: zero outside the open disk");
      s += std::log(m);
    }
    return s;
  };
  double pa = std::exp(logprod(alphas));
  double pb = std::exp(logprod(betas));
  return std::abs(pa - pb) <= 1e-10;
}

bool real_part_extension_check(const std::function<double(double)>& u_plus,
                               const std::function<double(double)>& u_minus,
                               int quad_points) {
  if (quad_points < 8) quad_points = 8;
  double ip = 0.0, im = 0.0;
  for (int k = 0; k < quad_points; ++k) {
    double ang = 2.0 * std::numbers::pi * k / quad_points;
    ip += u_plus(ang);
    im += u_minus(ang);
  }
  ip /= quad_points;
  im /= quad_points;
  return std::abs(ip - im) <= 1e-8 * std::max({1.0, std::abs(ip), std::abs(im)});
}

}  // namespace hypcurve
