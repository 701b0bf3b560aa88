#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypcurve/blaschke.hpp"
#include "hypcurve/poly.hpp"

namespace hypcurve {

/// Where a solution coordinate pair sits: both inside the disk, both on the
/// circle, or both outside. Mixed placements are impossible for these
/// systems and are reported as classification failures.
enum class Region { DD, TT, EE };

std::string to_string(Region r);

/// A pair of finite Blaschke products, each of degree at least two.
struct BlaschkePair {
  BlaschkePair(BlaschkeProduct f_, BlaschkeProduct g_);
  BlaschkeProduct f, g;
};

struct IntersectionPoint {
  Complex lambda;
  Complex mu;
  Region region = Region::DD;
  int multiplicity = 1;
  bool on_diagonal = false;
};

/// Classified, multiplicity-weighted common zeros of the two curve
/// polynomials. N = sum of DD multiplicities plus half the TT
/// multiplicities; codim = ((m-1)(n-1) - r) / 2 when finite
/// (std::nullopt encodes the infinite/degenerate case).
struct IntersectionReport {
  std::vector<IntersectionPoint> points;
  double N = 0.0;
  int r = 0;
  std::optional<int> codim;
  bool degenerate = false;
};

/// The polynomial (p(z) p~(w) - p(w) p~(z)) / (z - w) whose zero set is the
/// closure of the off-diagonal coincidences f(z) = f(w). The division is
/// exact; a nonzero remainder signals corrupted coefficients.
BiPoly coincidence_curve(const BlaschkeProduct& f);

struct SolveOptions {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  double boundary_tol = 1e-7;  // circle classification band
  int max_retries = 3;
};

/// Solve the simultaneous system f(lambda) = f(mu), g(lambda) = g(mu) off
/// the diagonal. Degenerate pairs (common curve component) come back with
/// degenerate = true, an infinite codimension and no points; otherwise the
/// report lists every affine common zero with its intersection
/// multiplicity, read off a randomly sheared eliminant.
IntersectionReport solve_pair(const BlaschkePair& pair, const SolveOptions& opts = {});

/// True when every solution with both coordinates off zero has a partner of
/// equal multiplicity within tol of (1/conj(lambda), 1/conj(mu)).
bool reflection_closure_check(const IntersectionReport& report, double tol);

/// Codimension of the algebra generated by the pair; std::nullopt when
/// infinite. Throws ConsistencyError if the count formula yields a
/// non-integer.
std::optional<int> codim_alg(const BlaschkePair& pair, const SolveOptions& opts = {});

/// Number of unordered off-diagonal circle pairs not separated by the pair;
/// std::nullopt for degenerate pairs (infinitely many).
std::optional<int> separation_pairs_on_torus(const BlaschkePair& pair,
                                             const SolveOptions& opts = {});

/// Intersection multiplicity of the homogenized curves at each of the two
/// points at infinity: (m-1)(n-1) + r0 + s/2, where r0 counts the nonzero
/// disk points identified with the origin by both products and s is the
/// multiplicity at (0,0). Requires both curve polynomials to reach their
/// generic degrees (nonvanishing corner coefficient).
double infinity_multiplicity(const BlaschkePair& pair, const SolveOptions& opts = {});

}  // namespace hypcurve
