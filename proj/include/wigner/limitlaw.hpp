#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wigner/half_int.hpp"
#include "wigner/state.hpp"

namespace wigner {

/// Arcsine-type ballistic density with parameter a in (0, 1); zero for |v| >= a.
template <typename Scalar>
Scalar konno_density(Scalar v, Scalar a) {
  if (!(a > Scalar(0) && a < Scalar(1)))
    throw std::invalid_argument("konno_density: parameter must lie in (0, 1)");
  if (std::abs(v) >= a) return Scalar(0);
  return std::sqrt(Scalar(1) - a * a) /
         (std::numbers::pi_v<Scalar> * (Scalar(1) - v * v) * std::sqrt((a - v) * (a + v)));
}

/// Weight polynomial attached to walk component m, degree 2j in the scaled velocity.
struct WeightPolynomial {
  HalfInt j;
  HalfInt m;
  Eigen::VectorXd coeffs;  ///< c0 ... c_{2j}

  double operator()(double u) const;
};

/// Weight coefficients from suitable-tagged amplitudes; closed forms cover j <= 2.
WeightPolynomial weight_polynomial(HalfInt j, HalfInt m, const CoinStateVector& h, double rho);

/// Weak-limit density model: one weight per positive component plus the
/// trapped point mass at v = 0 (integer j).
struct LimitDensityModel {
  HalfInt j;
  double rho = 0.0;
  std::vector<WeightPolynomial> components;  ///< m ascending over 0 < m <= j
  double trapped_mass = 0.0;
};

/// Builds the model (including the trapped mass) from suitable-tagged amplitudes.
LimitDensityModel limit_density_model(HalfInt j, double rho, const CoinStateVector& h);

/// Continuous part of the limit density at velocity v.
double limit_density(const LimitDensityModel& model, double v);

/// n-th moment of the continuous part; include_trapped_mass adds the point
/// mass contribution, which only affects n = 0.
double density_moment(const LimitDensityModel& model, int n, bool include_trapped_mass = false);

/// Band-edge divergence residuals of one component: both vanish exactly when
/// the component's weight cancels the density divergence at both band edges.
struct PeakResiduals {
  HalfInt m;
  double odd = 0.0;   ///< c1 + rho^2 c3
  double even = 0.0;  ///< c0 + rho^2 c2 (+ rho^4 c4 for j = 2)
};

/// Residuals for every component, m ascending; defined for j in {3/2, 2}.
std::vector<PeakResiduals> peak_condition_residuals(HalfInt j, const CoinStateVector& h, double rho);

/// Division of a weight polynomial by (rho^2 - u^2): M(u) = (rho^2 - u^2) G(u) + r1 u + r0.
/// The remainder vanishes exactly when both band-edge divergences are eliminated.
struct EdgeFactorization {
  Eigen::VectorXd reduced;  ///< coefficients of G
  double r0 = 0.0;
  double r1 = 0.0;
};
EdgeFactorization factor_band_edges(const WeightPolynomial& poly, double rho);

/// Reference states with documented peak structure, in suitable amplitudes.
enum class SpecialState {
  inner_free,      ///< j = 3/2 family h2± = -h1± / sqrt(3): inner peaks removed
  outer_free,      ///< j = 3/2 family h2± = sqrt(3) h1±: outer peaks removed
  j2_single_peak,  ///< j = 2 state with every ballistic peak removed
  j2_no_slower     ///< j = 2 state whose slower component vanishes identically
};

/// Family member for the given free amplitudes (normalized); the fixed j = 2
/// states ignore them.
CoinStateVector special_state(HalfInt j, SpecialState kind, std::complex<double> h1_plus,
                              std::complex<double> h1_minus);

/// Reference member of each family, matching the density benchmarks.
CoinStateVector special_state(HalfInt j, SpecialState kind);

}  // namespace wigner
