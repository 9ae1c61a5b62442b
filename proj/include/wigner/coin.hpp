#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <utility>

#include "wigner/half_int.hpp"

namespace wigner {

/// Dense Wigner rotation coin together with its defining parameters.
struct CoinOperator {
  HalfInt j;
  /// (2j+1) x (2j+1) unitary, rows and columns ordered m = +j ... -j.
  Eigen::MatrixXcd entries;
  /// Set for the one-parameter form; entries are then real.
  std::optional<double> rho;
  /// Set for the Euler-angle form {alpha, beta, gamma}.
  std::optional<std::array<double, 3>> euler;

  bool is_real() const { return rho.has_value(); }
};

/// n! as a double, exact through 20!, log-gamma based beyond.
double factorial(int n);

/// Valid summation range [lmin, lmax] of the rotation element sum; lmin > lmax means empty.
std::pair<int, int> gamma_factor_range(HalfInt j, HalfInt m, HalfInt n);

/// Signed square-root-of-factorials prefactor of one term of the rotation element sum.
/// Throws std::domain_error when any factorial argument would be negative.
double gamma_factor(HalfInt j, HalfInt m, HalfInt n, int l);

/// Integer power with ipow(x, 0) == 1 for any x, including x == 0.
template <typename Scalar>
Scalar ipow(Scalar x, int k) {
  Scalar r = Scalar(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

/// Single element r^(j)_{mn}(rho) of the real rotation matrix.
template <typename Scalar>
Scalar small_d_entry(HalfInt j, HalfInt m, HalfInt n, Scalar rho) {
  const auto [lmin, lmax] = gamma_factor_range(j, m, n);
  const int mn = (m - n).as_integer();
  const Scalar sigma = std::sqrt(Scalar(1) - rho * rho);
  Scalar sum = Scalar(0);
  for (int l = lmin; l <= lmax; ++l) {
    sum += static_cast<Scalar>(gamma_factor(j, m, n, l)) * ipow(rho, j.twice() + mn - 2 * l) *
           ipow(sigma, 2 * l - mn);
  }
  return sum;
}

/// Full real rotation matrix r^(j)(rho), rows and columns ordered m = +j ... -j.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> small_d_matrix(HalfInt j, Scalar rho) {
  const int d = dimension(j);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> r(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) r(a, b) = small_d_entry(j, component_m(j, a), component_m(j, b), rho);
  return r;
}

/// Coin in the one-parameter form, rho = cos(beta/2) in [0, 1].
CoinOperator wigner_coin(HalfInt j, double rho);

/// Coin in the Euler-angle form, beta in [0, pi].
CoinOperator wigner_coin_euler(HalfInt j, double alpha, double beta, double gamma);

}  // namespace wigner
