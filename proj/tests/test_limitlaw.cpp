#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "test_helpers.hpp"
#include "wigner/bases.hpp"
#include "wigner/limitlaw.hpp"
#include "wigner/trapping.hpp"

using namespace wigner;
using wigner::testing::random_rho;
using wigner::testing::random_state;

namespace {

CoinStateVector suitable_state(HalfInt j, std::initializer_list<std::complex<double>> amps) {
  CoinStateVector h;
  h.j = j;
  h.basis = BasisTag::suitable;
  h.amps.resize(dimension(j));
  int i = 0;
  for (const auto& a : amps) h.amps(i++) = a;
  return h;
}

}  // namespace

TEST_CASE("arcsine-type density values and edge cases") {
  const double a = 0.5;
  CHECK(konno_density(0.0, a) == doctest::Approx(std::sqrt(1.0 - a * a) / (std::numbers::pi * a)));
  CHECK(konno_density(0.3, a) > 0.0);
  CHECK(konno_density(0.5, a) == 0.0);
  CHECK(konno_density(-0.7, a) == 0.0);
  // Divergence direction near the band edge.
  CHECK(konno_density(0.499, a) > konno_density(0.4, a));
  CHECK_THROWS_AS((void)konno_density(0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)konno_density(0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)konno_density(0.1, -0.4), std::invalid_argument);
}

TEST_CASE("weights for the two-component walk") {
  const double rho = 0.6;
  const HalfInt j = HalfInt::from_twice(1);
  const HalfInt half = HalfInt::from_twice(1);

  const WeightPolynomial wp = weight_polynomial(j, half, suitable_state(j, {1.0, 0.0}), rho);
  CHECK(wp.coeffs(0) == doctest::Approx(1.0));
  CHECK(wp.coeffs(1) == doctest::Approx(-1.0 / rho));
  CHECK(wp(rho) == doctest::Approx(0.0).epsilon(1e-14));  // right edge suppressed

  const WeightPolynomial wm = weight_polynomial(j, half, suitable_state(j, {0.0, 1.0}), rho);
  CHECK(wm.coeffs(1) == doctest::Approx(1.0 / rho));
  CHECK(wm(-rho) == doctest::Approx(0.0).epsilon(1e-14));  // left edge suppressed
}

TEST_CASE("closed density for the slow-free two-component state") {
  const double rho = 0.6;
  const HalfInt j = HalfInt::from_twice(1);
  const LimitDensityModel model = limit_density_model(j, rho, suitable_state(j, {0.0, 1.0}));
  CHECK(model.trapped_mass == 0.0);
  const double sig = std::sqrt(1.0 - rho * rho);
  for (const double v : {-0.55, -0.3, 0.0, 0.2, 0.45, 0.59}) {
    const double expected =
        sig * std::sqrt(rho + v) / (std::numbers::pi * rho * (1.0 - v * v) * std::sqrt(rho - v));
    CHECK(limit_density(model, v) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(limit_density(model, 0.61) == 0.0);
  CHECK(limit_density(model, -0.61) == 0.0);
}

TEST_CASE("two-component moments in closed form") {
  std::mt19937_64 rng(79);
  const HalfInt j = HalfInt::from_twice(1);
  for (const double rho : {0.4, 0.6, 0.85}) {
    const double sig = std::sqrt(1.0 - rho * rho);
    const LimitDensityModel slow_free = limit_density_model(j, rho, suitable_state(j, {0.0, 1.0}));
    CHECK(density_moment(slow_free, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(density_moment(slow_free, 1) == doctest::Approx((1.0 - sig) / rho).epsilon(1e-9));
    // The second moment does not depend on the state for this spin.
    const CoinStateVector h = to_suitable(random_state(j, rng), rho);
    const LimitDensityModel any = limit_density_model(j, rho, h);
    CHECK(density_moment(any, 2) == doctest::Approx(1.0 - sig).epsilon(1e-9));
  }
}

TEST_CASE("three-component weights against an independent standard-basis form") {
  std::mt19937_64 rng(83);
  const HalfInt j(1);
  for (int trial = 0; trial < 25; ++trial) {
    const double rho = random_rho(rng);
    const double sig = std::sqrt(1.0 - rho * rho);
    const CoinStateVector psi = random_state(j, rng);
    const std::complex<double> q1 = psi.amps(0), q0 = psi.amps(1), qm = psi.amps(2);
    const WeightPolynomial poly = weight_polynomial(j, HalfInt(1), to_suitable(psi, rho), rho);

    const double m0 = 0.5 * (std::norm(q1) + 2.0 * std::norm(q0) + std::norm(qm) -
                             2.0 * std::real(q1 * std::conj(qm)));
    const double m1 = -std::norm(q1) + std::norm(qm) +
                      (sig / (std::numbers::sqrt2 * rho)) *
                          (2.0 * std::real(q1 * std::conj(q0)) + 2.0 * std::real(q0 * std::conj(qm)));
    const double m2 = 0.5 * (std::norm(q1) - 2.0 * std::norm(q0) + std::norm(qm)) -
                      (sig / (std::numbers::sqrt2 * rho)) *
                          (2.0 * std::real(q1 * std::conj(q0)) - 2.0 * std::real(q0 * std::conj(qm))) +
                      ((2.0 - rho * rho) / (2.0 * rho * rho)) * 2.0 * std::real(q1 * std::conj(qm));
    CHECK(poly.coeffs(0) == doctest::Approx(m0).epsilon(1e-11));
    CHECK(poly.coeffs(1) == doctest::Approx(m1).epsilon(1e-11));
    CHECK(poly.coeffs(2) == doctest::Approx(m2).epsilon(1e-11));
  }
}

TEST_CASE("pure slow-mode three-component state gives a flat weight") {
  const HalfInt j(1);
  const double rho = 0.5;
  const WeightPolynomial poly = weight_polynomial(j, HalfInt(1), suitable_state(j, {0, 0, 1}), rho);
  CHECK(poly.coeffs(0) == doctest::Approx(1.0));
  CHECK(poly.coeffs(1) == doctest::Approx(0.0));
  CHECK(poly.coeffs(2) == doctest::Approx(0.0));
  // The zero-mode state pushes all continuous mass into a parabolic weight.
  const WeightPolynomial zero = weight_polynomial(j, HalfInt(1), suitable_state(j, {1, 0, 0}), rho);
  CHECK(zero.coeffs(0) == doctest::Approx(0.0));
  CHECK(zero.coeffs(1) == doctest::Approx(0.0));
  CHECK(zero.coeffs(2) == doctest::Approx(1.0 / (rho * rho)));
}

TEST_CASE("normalization identity across spins and random states") {
  std::mt19937_64 rng(89);
  for (const int tw : {1, 2, 3, 4}) {
    const HalfInt j = HalfInt::from_twice(tw);
    for (int trial = 0; trial < 6; ++trial) {
      const double rho = random_rho(rng, 0.2, 0.9);
      const CoinStateVector h = to_suitable(random_state(j, rng), rho);
      const LimitDensityModel model = limit_density_model(j, rho, h);
      CHECK(density_moment(model, 0, true) == doctest::Approx(1.0).epsilon(2e-6));
      CHECK(model.trapped_mass >= 0.0);
      if (!j.is_integer()) CHECK(model.trapped_mass == 0.0);
    }
  }
}

TEST_CASE("limit density is nonnegative") {
  std::mt19937_64 rng(97);
  for (const int tw : {1, 2, 3, 4}) {
    const HalfInt j = HalfInt::from_twice(tw);
    const double rho = random_rho(rng, 0.2, 0.9);
    const CoinStateVector h = to_suitable(random_state(j, rng), rho);
    const LimitDensityModel model = limit_density_model(j, rho, h);
    for (int i = -100; i <= 100; ++i) {
      const double v = i * 0.0099 * tw;
      CHECK(limit_density(model, v) >= -1e-10);
    }
  }
}

TEST_CASE("peak-removal families kill the advertised band edges") {
  const double rho = 0.6;
  const HalfInt j32 = HalfInt::from_twice(3);
  {
    const CoinStateVector h = special_state(j32, SpecialState::inner_free);
    const auto residuals = peak_condition_residuals(j32, h, rho);
    REQUIRE(residuals.size() == 2);
    CHECK(std::abs(residuals[0].odd) <= 1e-14);   // m = 1/2 component
    CHECK(std::abs(residuals[0].even) <= 1e-14);
    // The outer component keeps one edge: its weight vanishes at u = -rho only.
    const WeightPolynomial outer =
        weight_polynomial(j32, HalfInt::from_twice(3), h, rho);
    CHECK(outer(-rho) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(outer(rho) == doctest::Approx(2.0).epsilon(1e-12));
  }
  {
    const CoinStateVector h = special_state(j32, SpecialState::outer_free);
    const auto residuals = peak_condition_residuals(j32, h, rho);
    CHECK(std::abs(residuals[1].odd) <= 1e-14);  // m = 3/2 component
    CHECK(std::abs(residuals[1].even) <= 1e-14);
    const WeightPolynomial inner =
        weight_polynomial(j32, HalfInt::from_twice(1), h, rho);
    CHECK(inner(-rho) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(inner(rho) == doctest::Approx(2.0).epsilon(1e-12));
  }
  {
    const CoinStateVector h = special_state(HalfInt(2), SpecialState::j2_single_peak);
    for (const auto& res : peak_condition_residuals(HalfInt(2), h, rho)) {
      CHECK(std::abs(res.odd) <= 1e-14);
      CHECK(std::abs(res.even) <= 1e-14);
    }
  }
  {
    const CoinStateVector h = special_state(HalfInt(2), SpecialState::j2_no_slower);
    const WeightPolynomial m1 = weight_polynomial(HalfInt(2), HalfInt(1), h, rho);
    CHECK(m1.coeffs.cwiseAbs().maxCoeff() <= 1e-15);
    const WeightPolynomial m2 = weight_polynomial(HalfInt(2), HalfInt(2), h, rho);
    CHECK(m2.coeffs(0) == doctest::Approx(0.75));
    CHECK(m2.coeffs.tail(4).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK(trapping_total(trapping_model(HalfInt(2), rho, resolve_to_standard(h, rho))) ==
          doctest::Approx(0.25).epsilon(1e-10));
  }
}

TEST_CASE("band-edge factorization is a faithful synthetic division") {
  std::mt19937_64 rng(101);
  for (const int tw : {3, 4}) {
    const HalfInt j = HalfInt::from_twice(tw);
    const double rho = random_rho(rng, 0.2, 0.9);
    const CoinStateVector h = to_suitable(random_state(j, rng), rho);
    const HalfInt m = j.is_integer() ? HalfInt(1) : HalfInt::from_twice(1);
    const WeightPolynomial poly = weight_polynomial(j, m, h, rho);
    const EdgeFactorization fac = factor_band_edges(poly, rho);
    for (const double u : {-0.9, -0.3, 0.1, 0.62}) {
      double g = 0.0;
      for (Eigen::Index k = fac.reduced.size() - 1; k >= 0; --k) g = g * u + fac.reduced(k);
      const double rebuilt = (rho * rho - u * u) * g + fac.r1 * u + fac.r0;
      CHECK(rebuilt == doctest::Approx(poly(u)).epsilon(1e-12));
    }
  }
  // Vanishing remainder exactly when the residual pair vanishes.
  const HalfInt j32 = HalfInt::from_twice(3);
  const CoinStateVector h = special_state(j32, SpecialState::inner_free);
  const WeightPolynomial inner = weight_polynomial(j32, HalfInt::from_twice(1), h, 0.45);
  const EdgeFactorization fac = factor_band_edges(inner, 0.45);
  CHECK(std::abs(fac.r0) <= 1e-14);
  CHECK(std::abs(fac.r1) <= 1e-14);
}

TEST_CASE("weight construction validates its inputs") {
  const HalfInt j(1);
  std::mt19937_64 rng(103);
  const CoinStateVector standard = random_state(j, rng);
  CHECK_THROWS_AS(weight_polynomial(j, HalfInt(1), standard, 0.5), std::invalid_argument);

  const CoinStateVector h = to_suitable(standard, 0.5);
  CHECK_THROWS_AS(weight_polynomial(j, HalfInt(0), h, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(weight_polynomial(j, HalfInt(2), h, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(weight_polynomial(j, HalfInt::from_twice(1), h, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(weight_polynomial(j, HalfInt(1), h, 0.0), std::domain_error);

  const HalfInt j52 = HalfInt::from_twice(5);
  const CoinStateVector h52 = to_suitable(random_state(j52, rng), 0.5);
  CHECK_THROWS_AS(weight_polynomial(j52, HalfInt::from_twice(1), h52, 0.5), UnsupportedError);
  CHECK_THROWS_AS(limit_density_model(j52, 0.5, h52), UnsupportedError);
  CHECK_THROWS_AS(peak_condition_residuals(HalfInt(1), h, 0.5), UnsupportedError);
}

TEST_CASE("special-state families validate their inputs") {
  CHECK_THROWS_AS(special_state(HalfInt(1), SpecialState::inner_free, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(special_state(HalfInt::from_twice(3), SpecialState::inner_free, 0.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(special_state(HalfInt(1), SpecialState::j2_single_peak), std::invalid_argument);

  const CoinStateVector inner = special_state(HalfInt::from_twice(3), SpecialState::inner_free);
  CHECK(inner.basis == BasisTag::suitable);
  CHECK(std::abs(inner.amps.norm() - 1.0) <= 1e-14);
  CHECK(inner.amps(2) == std::complex<double>(0.0, 0.0));
  CHECK(inner.amps(3).real() == doctest::Approx(-0.5));

  const CoinStateVector outer = special_state(HalfInt::from_twice(3), SpecialState::outer_free);
  CHECK(outer.amps(2).real() == doctest::Approx(std::sqrt(3.0) / 2.0));
}
