#include "hypcurve/pick.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hypcurve/errors.hpp"

namespace hypcurve {

namespace {

constexpr int kMaxPairs = 8;
constexpr double kMarginalFactor = 10.0;

void validate(const PickProblem& p) {
  if (p.nodes.size() != p.targets.size())
    throw PreconditionError("PickProblem: nodes and targets must have equal length");
  if (p.nodes.empty()) throw PreconditionError("PickProblem: empty problem");
  for (Complex a : p.nodes)
    if (std::abs(a) >= 1.0) throw DomainError("PickProblem: node outside the open disk");
  for (Complex b : p.targets)
    if (std::abs(b) >= 1.0) throw DomainError("PickProblem: target outside the open disk");
  for (size_t i = 0; i < p.nodes.size(); ++i)
    for (size_t j = i + 1; j < p.nodes.size(); ++j)
      if (std::abs(p.nodes[i] - p.nodes[j]) < 1e-12)
        throw PreconditionError("PickProblem: repeated node");
}

// Each functional must be c (f(x) - f(y)); returns the point pairs.
std::vector<std::pair<Complex, Complex>> double_point_pairs(const Connection& conn) {
  std::vector<std::pair<Complex, Complex>> pairs;
  for (const LocalFunctional& fn : conn.functionals) {
    if (fn.terms.size() != 2)
      throw UnsupportedKindError("petal_map_exists: connection is not pure double-point");
    const FunctionalTerm &a = fn.terms[0], &b = fn.terms[1];
    if (a.order != 0 || b.order != 0)
      throw UnsupportedKindError(
          "petal_map_exists: derivative terms are outside the supported kind");
    if (std::abs(a.coeff + b.coeff) > 1e-12 * std::max(std::abs(a.coeff), std::abs(b.coeff)))
      throw UnsupportedKindError(
          "petal_map_exists: functional is not a two-point value identification");
    pairs.emplace_back(a.point, b.point);
  }
  return pairs;
}

}  // namespace

Eigen::MatrixXcd pick_matrix(const PickProblem& p) {
  validate(p);
  const int n = static_cast<int>(p.nodes.size());
  Eigen::MatrixXcd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      M(i, j) = (1.0 - std::conj(p.targets[i]) * p.targets[j]) /
                (1.0 - std::conj(p.nodes[i]) * p.nodes[j]);
  return M;
}

PickVerdict solvable(const PickProblem& p, double tol) {
  Eigen::MatrixXcd M = pick_matrix(p);
  Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  double lmin = es.eigenvalues().minCoeff();
  double lmax = std::max(es.eigenvalues().maxCoeff(), 1.0);
  PickVerdict v;
  v.min_eigenvalue = lmin;
  v.solvable = lmin >= -tol * lmax;
  v.marginal = std::abs(lmin) < kMarginalFactor * tol * lmax;
  return v;
}

PetalMapResult petal_map_exists(const Connection& source, const Connection& target,
                                double tol) {
  auto src = double_point_pairs(source);
  auto dst = double_point_pairs(target);
  const int n = static_cast<int>(src.size());
  const int m = static_cast<int>(dst.size());
  if (n > m)
    throw PreconditionError("petal_map_exists: target connection has fewer pairs");
  if (n > kMaxPairs || m > kMaxPairs)
    throw UnsupportedKindError("petal_map_exists: assignment enumeration capped at 8 pairs");

  std::vector<int> chosen(n, -1);
  std::vector<bool> used(m, false);
  PetalMapResult result;

  std::function<bool(int)> search = [&](int level) -> bool {
    if (level == n) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        PickProblem p;
        for (int i = 0; i < n; ++i) {
          auto [t1, t2] = dst[chosen[i]];
          if (mask & (1 << i)) std::swap(t1, t2);
          p.nodes.push_back(src[i].first);
          p.nodes.push_back(src[i].second);
          p.targets.push_back(t1);
          p.targets.push_back(t2);
        }
        PickVerdict v = solvable(p, tol);
        if (v.solvable) {
          result.exists = true;
          result.verdict = v;
          result.assignment.clear();
          for (int i = 0; i < n; ++i)
            result.assignment.push_back({chosen[i], (mask & (1 << i)) != 0});
          return true;
        }
      }
      return false;
    }
    for (int j = 0; j < m; ++j) {
      if (used[j]) continue;
      used[j] = true;
      chosen[level] = j;
      if (search(level + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  search(0);
  return result;
}

}  // namespace hypcurve
