#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypcurve/blaschke.hpp"
#include "hypcurve/poly.hpp"

namespace hypcurve {

/// Rational function on the disk stored as a numerator/denominator pair;
/// supports exact differentiation for membership checks.
struct RationalFn {
  UniPoly num;
  UniPoly den = UniPoly::constant(Complex(1.0));

  Complex eval(Complex z) const;
  RationalFn derivative() const;
  /// Exact j-th derivative value at z by repeated rational differentiation.
  Complex derivative_at(Complex z, int order) const;
};

struct FunctionalTerm {
  Complex point;   // in the open disk
  int order = 0;   // derivative order
  Complex coeff;
};

/// Finitely supported functional f -> sum a_ij f^(j)(alpha_i).
struct LocalFunctional {
  std::vector<FunctionalTerm> terms;
};

/// A finite-dimensional family of local functionals; the common kernel is
/// the algebra the connection describes. Functionals must be linearly
/// independent and supported in the open disk.
struct Connection {
  explicit Connection(std::vector<LocalFunctional> functionals);
  std::vector<LocalFunctional> functionals;
  std::vector<Complex> support() const;
};

Complex apply(const LocalFunctional& fn, const RationalFn& f);
/// Black-box path: central finite differences with one Richardson step.
Complex apply(const LocalFunctional& fn, const std::function<Complex(Complex)>& f,
              double h = 1e-3);

bool verify_membership(const RationalFn& f, const Connection& conn, double tol);
bool verify_membership(const std::function<Complex(Complex)>& f, const Connection& conn,
                       double tol);

/// Proper holomorphic image of the disk presented by rational components.
struct Holization {
  std::vector<RationalFn> components;
  int ambient_dim = 2;
  /// Catalog bound on component modulus over the sample grid; the algebraic
  /// fixtures carry a larger image than the Blaschke-type petals.
  double image_bound = 1.5;

  std::vector<Complex> eval(Complex z) const;
};

/// Grid collisions: index pairs of grid points the map fails to separate.
/// The grid is radii x angles points with radius up to rmax.
std::vector<std::pair<Complex, Complex>> holization_identifications(
    const Holization& h, int radii = 20, int angles = 20, double rmax = 0.95,
    double pair_tol = 1e-6);

// -- codimension-1 petals -------------------------------------------------

/// (m_a^2, m_a^3): the cusp petal inside {z^3 = w^2}.
Holization neil_holization(Complex alpha);
Connection cusp1_connection(Complex alpha);

/// (m_a1 m_a2, z m_a1 m_a2): identifies exactly a1 with a2.
Holization single_crossing_holization(Complex a1, Complex a2);
Connection single_crossing_connection(Complex a1, Complex a2);
/// Complete isomorphism invariant for single-crossing petals.
double single_crossing_invariant(Complex a1, Complex a2);

// -- codimension-2 petals -------------------------------------------------

/// Three-dimensional embedding (f, z f, z^2 f) with f = z m_a2 m_a3; a
/// triple point admits no two-dimensional holization.
Holization triple_point_embedding(Complex a2, Complex a3);
Connection triple_point_connection(Complex a1, Complex a2, Complex a3);
/// Disk automorphism carrying one triple to the other, detected through a
/// rank-one kernel matrix over all S3 reindexings.
bool triple_point_isomorphic(const std::array<Complex, 3>& alphas,
                             const std::array<Complex, 3>& betas);

/// Second-order cusp algebra {f'(0) = 0, f''(0) + c f'''(0) = 0}.
Connection cusp2_connection(Complex c);
bool cusp2_isomorphic(Complex c1, Complex c2);

/// Smallest |c| the pair construction below reaches.
double cusp2_min_modulus();

struct Cusp2Holization {
  Holization h;          // components z^4 and z^2 m_alpha
  Complex alpha;         // on the admissible circular arc
  Complex realized_c;    // alpha / (3 (1 - |alpha|^2))
};

/// Pick alpha on the arc |alpha - (1+i)| = 1 inside the disk with
/// |alpha|/(3(1-|alpha|^2)) = c_target_modulus (bisection along the arc);
/// the pair (z^4, z^2 m_alpha) generates the cusp algebra and identifies
/// the circle points 1 and i. Throws OutOfRangeError below the reachable
/// modulus bound.
Cusp2Holization cusp2_holization(double c_target_modulus);

Connection two_crossing_connection(Complex a1, Complex a2, Complex b1, Complex b2);
/// Level condition for m_a1 m_a2 to take equal values at b1 and b2; exactly
/// when it holds can the two-crossing algebra be holized by Blaschke
/// products one-to-one on the circle.
bool two_crossing_condition(Complex a1, Complex a2, Complex b1, Complex b2);
/// (m_a1 m_a2, z m_a1 m_a2 m_b1 m_b2); requires two_crossing_condition.
Holization two_crossing_holization(Complex a1, Complex a2, Complex b1, Complex b2);

// -- worked fixtures ------------------------------------------------------

/// Image of (sqrt2 (z - 2z^3), 1 - 2z^2): the nodal cubic z^2 = w^2 (1-w),
/// identifying +-1/sqrt2.
Holization nodal_cubic_fixture();

/// Pair whose components satisfy the three-point identification at
/// {0, 1/2, -1/2} together with the induced derivative relation.
Holization a3_fixture();
Connection a3_connection();

// -- classification metadata ----------------------------------------------

enum class PetalKind {
  Cusp1,
  SingleCrossing,
  TriplePoint,
  Cusp2,
  TwoCrossings,
  TwoCusps,
  CrossingWithCuspAtCrossing,
  CrossingWithCuspApart,
};

std::string to_string(PetalKind k);

struct PetalKindInfo {
  int codimension;
  /// Whether the petal admits a local two-dimensional holization; a triple
  /// point and the crossing-with-cusp-at-the-crossing do not, and the
  /// order-2 cusp with c = 0 does not either.
  bool locally_embeddable_in_c2;
  /// Whether this library ships an explicit holization.
  bool has_catalog_holization;
  /// Smallest ambient dimension of a shipped holization (0 when none).
  int catalog_ambient_dim;
};

PetalKindInfo kind_info(PetalKind k, Complex cusp2_c = Complex(1.0));

}  // namespace hypcurve
