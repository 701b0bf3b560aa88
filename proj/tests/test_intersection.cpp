#include <doctest.h>

#include <random>

#include "hypcurve/errors.hpp"
#include "hypcurve/intersection.hpp"
#include "oracles.hpp"

using namespace hypcurve;

namespace {

BlaschkeProduct monomial(int d) {
  return BlaschkeProduct(std::vector<Complex>(d, Complex(0.0)));
}

BlaschkePair thme5_pair() {
  Complex third(0.0, 1.0 / 3.0);
  BlaschkeProduct f({Complex(0.5), Complex(-0.5)});
  BlaschkeProduct g({Complex(0.0), Complex(0.5), Complex(-0.5), third, -third});
  return {f, g};
}

BlaschkePair cusp2_pair() {
  // alpha on the circle |a - (1+i)| = 1 inside the disk
  Complex alpha(0.040104308587702864, 0.719642618060255);
  return {monomial(4), BlaschkeProduct({Complex(0.0), Complex(0.0), alpha})};
}

}  // namespace

TEST_CASE("curve polynomial of z^2 is -(z+w)") {
  BiPoly F = coincidence_curve(monomial(2));
  CHECK(std::abs(F.coeff(0, 0)) < 1e-15);
  CHECK(std::abs(F.coeff(1, 0) + 1.0) < 1e-15);
  CHECK(std::abs(F.coeff(0, 1) + 1.0) < 1e-15);
  CHECK(F.total_degree() == 1);
}

TEST_CASE("curve polynomial of z^3 is -(z^2+zw+w^2)") {
  BiPoly F = coincidence_curve(monomial(3));
  CHECK(std::abs(F.coeff(2, 0) + 1.0) < 1e-15);
  CHECK(std::abs(F.coeff(1, 1) + 1.0) < 1e-15);
  CHECK(std::abs(F.coeff(0, 2) + 1.0) < 1e-15);
  CHECK(F.total_degree() == 2);
}

TEST_CASE("corner coefficient equals the negated conjugate derivative at zero") {
  std::mt19937_64 gen(101);
  for (int m : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto f = oracles::random_blaschke(gen, m);
      BiPoly F = coincidence_curve(f);
      Complex corner = F.coeff(m - 1, m - 1);
      CHECK(std::abs(corner - (-std::conj(f.derivative_at(Complex(0.0))))) < 1e-12);
    }
  }
}

TEST_CASE("diagonal identity of the curve polynomial") {
  std::mt19937_64 gen(103);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = oracles::random_blaschke(gen, 2 + trial % 3);
    BiPoly F = coincidence_curve(f);
    UniPoly p = UniPoly::constant(1.0);
    for (Complex a : f.zeros()) p = p * UniPoly({Complex(1.0), -std::conj(a)});
    for (int k = 0; k < 20; ++k) {
      Complex l = oracles::random_disk_point(gen, 0.9);
      Complex pl = p.eval(l);
      CHECK(std::abs(F.eval(l, l) + pl * pl * f.derivative_at(l)) < 1e-10);
    }
  }
}

TEST_CASE("curve polynomial is fixed by torus reflection") {
  std::mt19937_64 gen(107);
  for (int trial = 0; trial < 5; ++trial) {
    auto f = oracles::random_blaschke(gen, 2 + trial % 3);
    BiPoly F = coincidence_curve(f);
    BiPoly R = reflect(F);
    Complex u(0.0);
    double best = -1.0;
    for (int i = 0; i <= F.zdeg(); ++i)
      for (int j = 0; j <= F.wdeg(); ++j)
        if (std::abs(F.coeff(i, j)) > best) {
          best = std::abs(F.coeff(i, j));
          u = R.coeff(i, j) / F.coeff(i, j);
        }
    CHECK(std::abs(std::abs(u) - 1.0) < 1e-11);
    double dist = 0.0;
    for (int i = 0; i <= F.zdeg(); ++i)
      for (int j = 0; j <= F.wdeg(); ++j)
        dist = std::max(dist, std::abs(R.coeff(i, j) - u * F.coeff(i, j)));
    CHECK(dist < 1e-11 * std::max(1.0, F.max_abs_coeff()));
  }
}

TEST_CASE("z^2 against z^3: one double point at the origin") {
  IntersectionReport rep = solve_pair({monomial(2), monomial(3)});
  CHECK_FALSE(rep.degenerate);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].region == Region::DD);
  CHECK(rep.points[0].multiplicity == 2);
  CHECK(rep.points[0].on_diagonal);
  CHECK(std::abs(rep.points[0].lambda) < 1e-9);
  CHECK(std::abs(rep.points[0].mu) < 1e-9);
  CHECK(rep.N == 2.0);
  CHECK(rep.r == 0);
  REQUIRE(rep.codim.has_value());
  CHECK(*rep.codim == 1);
}

TEST_CASE("z^2 against z^4 is degenerate with infinite codimension") {
  IntersectionReport rep = solve_pair({monomial(2), monomial(4)});
  CHECK(rep.degenerate);
  CHECK_FALSE(rep.codim.has_value());
  CHECK(rep.points.empty());
}

TEST_CASE("a square of a product is degenerate too") {
  BlaschkeProduct f({Complex(0.3), Complex(-0.3)});
  BlaschkeProduct g({Complex(0.3), Complex(-0.3), Complex(0.3), Complex(-0.3)});
  // g = f^2 pointwise, so the curves share a component
  IntersectionReport rep = solve_pair({f, g});
  CHECK(rep.degenerate);
}

TEST_CASE("random pairs meet the exact count") {
  std::mt19937_64 gen(109);
  for (int trial = 0; trial < 20; ++trial) {
    int m = 2 + trial % 3, n = 2 + (trial / 3) % 3;
    BlaschkePair pair{oracles::random_blaschke(gen, m), oracles::random_blaschke(gen, n)};
    SolveOptions opts;
    opts.seed = 1000 + trial;
    IntersectionReport rep = solve_pair(pair, opts);
    REQUIRE_FALSE(rep.degenerate);
    CHECK(rep.N == static_cast<double>((m - 1) * (n - 1)));
    REQUIRE(rep.codim.has_value());
    CHECK(*rep.codim >= 0);
    CHECK((((m - 1) * (n - 1) - rep.r) % 2) == 0);

    // swap closure with equal multiplicity
    for (const IntersectionPoint& pt : rep.points) {
      bool found = false;
      for (const IntersectionPoint& q : rep.points) {
        double lim = 1e-7 * std::max({1.0, std::abs(pt.lambda), std::abs(pt.mu)});
        if (std::abs(q.lambda - pt.mu) <= lim && std::abs(q.mu - pt.lambda) <= lim &&
            q.multiplicity == pt.multiplicity)
          found = true;
      }
      CHECK(found);
    }
    // no mixed regions is enforced inside solve_pair; check the flags here
    for (const IntersectionPoint& pt : rep.points)
      if (pt.region == Region::TT) CHECK_FALSE(pt.on_diagonal);

    CHECK(reflection_closure_check(rep, 1e-7));
  }
}

TEST_CASE("both solver paths find the same points and multiplicities") {
  std::mt19937_64 gen(113);
  for (int trial = 0; trial < 5; ++trial) {
    int m = 2 + trial % 2, n = 2 + (trial + 1) % 2;
    BlaschkePair pair{oracles::random_blaschke(gen, m, 0.7),
                      oracles::random_blaschke(gen, n, 0.7)};
    SolveOptions opts;
    opts.seed = 77 + trial;
    IntersectionReport rep = solve_pair(pair, opts);

    // independent location path: dense-grid Newton on the raw system
    BiPoly F = coincidence_curve(pair.f);
    BiPoly G = coincidence_curve(pair.g);
    auto found = oracles::grid_newton_points(F, G);
    // every reported point is found by the grid path and vice versa
    for (const IntersectionPoint& pt : rep.points) {
      bool hit = false;
      for (auto& [l, mu] : found) {
        double lim = 1e-7 * std::max({1.0, std::abs(l), std::abs(mu)});
        if (std::abs(l - pt.lambda) <= lim && std::abs(mu - pt.mu) <= lim) hit = true;
      }
      CHECK(hit);
    }
    for (auto& [l, mu] : found) {
      bool hit = false;
      for (const IntersectionPoint& pt : rep.points) {
        double lim = 1e-7 * std::max({1.0, std::abs(l), std::abs(mu)});
        if (std::abs(l - pt.lambda) <= lim && std::abs(mu - pt.mu) <= lim) hit = true;
      }
      CHECK(hit);
    }

    // independent multiplicity read-off: a second solve under a fresh shear
    SolveOptions opts2;
    opts2.seed = 50000 + trial;
    IntersectionReport rep2 = solve_pair(pair, opts2);
    REQUIRE(rep2.points.size() == rep.points.size());
    for (const IntersectionPoint& pt : rep.points) {
      bool matched = false;
      for (const IntersectionPoint& q : rep2.points) {
        double lim = 1e-7 * std::max({1.0, std::abs(pt.lambda), std::abs(pt.mu)});
        if (std::abs(q.lambda - pt.lambda) <= lim && std::abs(q.mu - pt.mu) <= lim &&
            q.multiplicity == pt.multiplicity)
          matched = true;
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("reflection closure on the origin fixture holds vacuously") {
  IntersectionReport rep = solve_pair({monomial(2), monomial(3)});
  CHECK(reflection_closure_check(rep, 1e-7));
}

TEST_CASE("disk and exterior points pair up one to one") {
  std::mt19937_64 gen(127);
  BlaschkePair pair{oracles::random_blaschke(gen, 3), oracles::random_blaschke(gen, 4)};
  IntersectionReport rep = solve_pair(pair);
  int dd = 0, ee = 0;
  for (const IntersectionPoint& pt : rep.points) {
    if (pt.region == Region::DD) ++dd;
    if (pt.region == Region::EE) ++ee;
  }
  CHECK(dd == ee);
  CHECK(reflection_closure_check(rep, 1e-7));
}

TEST_CASE("codimension of the catalog pairs") {
  CHECK(codim_alg({monomial(2), monomial(3)}) == 1);
  CHECK(codim_alg(thme5_pair()) == 2);
  CHECK(codim_alg(cusp2_pair()) == 2);
}

TEST_CASE("circle pair counts") {
  CHECK(separation_pairs_on_torus(thme5_pair()) == 0);
  CHECK(separation_pairs_on_torus({monomial(2), monomial(3)}) == 0);
  // the degree-(4,3) cusp pair identifies exactly two circle pairs
  CHECK(separation_pairs_on_torus(cusp2_pair()) == 2);
  CHECK_FALSE(separation_pairs_on_torus({monomial(2), monomial(4)}).has_value());
}

TEST_CASE("infinity multiplicity requires generic degrees") {
  CHECK_THROWS_WITH_AS(
      (void)infinity_multiplicity({monomial(2), monomial(3)}),
      doctest::Contains("precompose"), PreconditionError);
}

TEST_CASE("infinity multiplicity after precomposition of the origin pair") {
  Complex gamma(0.4, 0.2);
  BlaschkePair pair{precompose_moebius(monomial(2), gamma),
                    precompose_moebius(monomial(3), gamma)};
  double inf_mult = infinity_multiplicity(pair);
  CHECK(inf_mult == doctest::Approx(2.0).epsilon(1e-9));

  IntersectionReport rep = solve_pair(pair);
  double affine = 0.0;
  for (const IntersectionPoint& pt : rep.points) affine += pt.multiplicity;
  // full projective count: affine plus both infinity points
  CHECK(affine + 2.0 * inf_mult == doctest::Approx(8.0));
}

TEST_CASE("infinity multiplicity is Bezout-consistent with the chart oracle") {
  std::mt19937_64 gen(131);
  for (int trial = 0; trial < 5; ++trial) {
    int m = 2 + trial % 2, n = 2 + (trial / 2) % 2;
    BlaschkePair pair{oracles::random_blaschke(gen, m), oracles::random_blaschke(gen, n)};
    if (std::abs(pair.f.derivative_at(Complex(0.0))) < 0.05 ||
        std::abs(pair.g.derivative_at(Complex(0.0))) < 0.05) {
      --trial;
      continue;
    }
    double inf_mult = infinity_multiplicity(pair);

    HomoPoly3 Fh = homogenize(coincidence_curve(pair.f), 2 * (m - 1));
    HomoPoly3 Gh = homogenize(coincidence_curve(pair.g), 2 * (n - 1));
    int i_plus = oracles::infinity_multiplicity_chart(Fh, Gh, true, 900 + trial);
    int i_minus = oracles::infinity_multiplicity_chart(Fh, Gh, false, 901 + trial);
    CHECK(i_plus == static_cast<int>(inf_mult));
    CHECK(i_minus == static_cast<int>(inf_mult));

    IntersectionReport rep = solve_pair(pair);
    double affine = 0.0;
    for (const IntersectionPoint& pt : rep.points) affine += pt.multiplicity;
    CHECK(affine + 2.0 * inf_mult == doctest::Approx(4.0 * (m - 1) * (n - 1)));
  }
}

TEST_CASE("pair construction validates the degree floor") {
  CHECK_THROWS_AS(BlaschkePair(BlaschkeProduct({Complex(0.0)}), monomial(2)), DomainError);
}
