#include "wigner/coin.hpp"

#include <numbers>
#include <stdexcept>

namespace wigner {

namespace {

// n! exact in double through 20!.
constexpr double kFactorialTable[] = {1.,
                                      1.,
                                      2.,
                                      6.,
                                      24.,
                                      120.,
                                      720.,
                                      5040.,
                                      40320.,
                                      362880.,
                                      3628800.,
                                      39916800.,
                                      479001600.,
                                      6227020800.,
                                      87178291200.,
                                      1307674368000.,
                                      20922789888000.,
                                      355687428096000.,
                                      6402373705728000.,
                                      121645100408832000.,
                                      2432902008176640000.};

void validate_labels(HalfInt j, HalfInt m, HalfInt n) {
  if (j.twice() < 1) throw std::invalid_argument("coin: j must be at least 1/2");
  if ((j - m).twice() % 2 != 0 || (j - n).twice() % 2 != 0)
    throw std::invalid_argument("coin: m and n must differ from j by whole integers");
  if (m.twice() < -j.twice() || m.twice() > j.twice() || n.twice() < -j.twice() || n.twice() > j.twice())
    throw std::invalid_argument("coin: m and n must lie in [-j, j]");
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  if (n <= 20) return kFactorialTable[n];
  return std::exp(std::lgamma(double(n) + 1.0));
}

std::pair<int, int> gamma_factor_range(HalfInt j, HalfInt m, HalfInt n) {
  validate_labels(j, m, n);
  const int lmin = std::max(0, (m - n).as_integer());
  const int lmax = std::min((j + m).as_integer(), (j - n).as_integer());
  return {lmin, lmax};
}

double gamma_factor(HalfInt j, HalfInt m, HalfInt n, int l) {
  const auto [lmin, lmax] = gamma_factor_range(j, m, n);
  if (l < lmin || l > lmax)
    throw std::domain_error("gamma_factor: summation index outside the valid factorial range");
  const double num = std::sqrt(factorial((j + m).as_integer()) * factorial((j - m).as_integer()) *
                               factorial((j + n).as_integer()) * factorial((j - n).as_integer()));
  const double den = factorial((j - n).as_integer() - l) * factorial((j + m).as_integer() - l) *
                     factorial(l - (m - n).as_integer()) * factorial(l);
  return (l % 2 == 0 ? 1.0 : -1.0) * num / den;
}

CoinOperator wigner_coin(HalfInt j, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("wigner_coin: rho must lie in [0, 1]");
  CoinOperator coin;
  coin.j = j;
  coin.rho = rho;
  coin.entries = small_d_matrix<double>(j, rho).cast<std::complex<double>>();
  return coin;
}

CoinOperator wigner_coin_euler(HalfInt j, double alpha, double beta, double gamma) {
  if (!(beta >= 0.0 && beta <= std::numbers::pi))
    throw std::invalid_argument("wigner_coin_euler: beta must lie in [0, pi]");
  const int d = dimension(j);
  const Eigen::MatrixXd r = small_d_matrix<double>(j, std::cos(beta / 2.0));
  CoinOperator coin;
  coin.j = j;
  coin.euler = {alpha, beta, gamma};
  coin.entries.resize(d, d);
  const std::complex<double> i(0.0, 1.0);
  for (int a = 0; a < d; ++a) {
    const double m = component_m(j, a).value();
    for (int b = 0; b < d; ++b) {
      const double n = component_m(j, b).value();
      coin.entries(a, b) = std::exp(-i * alpha * m) * r(a, b) * std::exp(-i * gamma * n);
    }
  }
  return coin;
}

}  // namespace wigner
