#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "hypcurve/petals.hpp"
#include "hypcurve/poly.hpp"

namespace hypcurve {

/// Interpolation data: node i in the disk must map to target i.
struct PickProblem {
  std::vector<Complex> nodes;
  std::vector<Complex> targets;
};

/// Entry (i,j) = (1 - conj(b_i) b_j) / (1 - conj(a_i) a_j). The problem is
/// solvable by a disk self-map exactly when this matrix is positive
/// semi-definite.
Eigen::MatrixXcd pick_matrix(const PickProblem& p);

struct PickVerdict {
  bool solvable = false;
  double min_eigenvalue = 0.0;
  /// Within ten times the PSD tolerance of the boundary; the equal-distance
  /// geometric case sits exactly at eigenvalue zero.
  bool marginal = false;
};

/// PSD test with tolerance relative to the largest eigenvalue.
PickVerdict solvable(const PickProblem& p, double tol = 1e-9);

struct PetalMapAssignment {
  int target_pair = -1;  // index into the target connection's pairs
  bool swapped = false;  // orientation within the pair
};

struct PetalMapResult {
  bool exists = false;
  std::vector<PetalMapAssignment> assignment;  // one entry per source pair
  PickVerdict verdict;                         // of the feasible problem found
};

/// Whether a holomorphic disk self-map pushes the first double-point
/// connection into the second. Enumerates injective pair assignments and
/// within-pair swaps (lexicographically, so the witness is deterministic)
/// and tests each induced Pick problem. Connections must consist purely of
/// two-point value identifications; at most eight pairs each.
PetalMapResult petal_map_exists(const Connection& source, const Connection& target,
                                double tol = 1e-9);

}  // namespace hypcurve
