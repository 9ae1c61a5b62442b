#include "wigner/limitlaw.hpp"

#include <map>
#include <mutex>

#include "wigner/bases.hpp"
#include "wigner/coin.hpp"
#include "wigner/trapping.hpp"

namespace wigner {

namespace {

void require_open_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("limitlaw: rho in {0, 1} is degenerate; the limit law needs rho in (0, 1)");
}

void require_suitable(const CoinStateVector& h, HalfInt j) {
  if (h.j != j) throw std::invalid_argument("limitlaw: spin mismatch");
  if (h.basis != BasisTag::suitable)
    throw std::invalid_argument("limitlaw: weight coefficients are defined from suitable-tagged amplitudes");
  if (h.amps.size() != dimension(j)) throw std::invalid_argument("limitlaw: wrong amplitude count");
}

// 2 Re(a conj(b)), the recurring cross term of the weight formulas.
double re2(std::complex<double> a, std::complex<double> b) { return 2.0 * std::real(a * std::conj(b)); }

// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<double, double>> rule(static_cast<size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule[static_cast<size_t>(i)] = {-x, w};
    rule[static_cast<size_t>(n - 1 - i)] = {x, w};
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

double component_moment(const WeightPolynomial& poly, double rho, int n, int nodes) {
  const double two_m = 2.0 * poly.m.value();
  const double sig2 = 1.0 - rho * rho;
  double sum = 0.0;
  for (const auto& [xi, w] : gauss_legendre(nodes)) {
    const double theta = 0.5 * std::numbers::pi * xi;
    const double u = rho * std::sin(theta);
    sum += w * ipow(u, n) * poly(u) / (1.0 - u * u);
  }
  sum *= 0.5 * std::numbers::pi;
  return ipow(two_m, n) * std::sqrt(sig2) / std::numbers::pi * sum;
}

}  // namespace

double WeightPolynomial::operator()(double u) const {
  double acc = 0.0;
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) acc = acc * u + coeffs(k);
  return acc;
}

WeightPolynomial weight_polynomial(HalfInt j, HalfInt m, const CoinStateVector& h, double rho) {
  require_open_rho(rho);
  require_suitable(h, j);
  if (m.twice() <= 0 || m.twice() > j.twice() || (j - m).twice() % 2 != 0)
    throw std::invalid_argument("weight_polynomial: m must be a positive component of j");
  WeightPolynomial poly;
  poly.j = j;
  poly.m = m;
  poly.coeffs = Eigen::VectorXd::Zero(j.twice() + 1);
  const double r1 = rho;
  const double r2 = rho * rho;
  const double r3 = r2 * rho;
  const double r4 = r2 * r2;
  const double s3 = std::sqrt(3.0);

  if (j == HalfInt::from_twice(1)) {
    const std::complex<double> h1p = h.amps(0);
    poly.coeffs(0) = 1.0;
    poly.coeffs(1) = (1.0 - 2.0 * std::norm(h1p)) / r1;
    return poly;
  }
  if (j == HalfInt(1)) {
    const std::complex<double> h0 = h.amps(0), h1p = h.amps(1), h1m = h.amps(2);
    poly.coeffs(0) = std::norm(h1p) + std::norm(h1m);
    poly.coeffs(1) = re2(h0, h1m) / r1;
    poly.coeffs(2) = (std::norm(h0) - std::norm(h1p)) / r2;
    return poly;
  }
  if (j == HalfInt::from_twice(3)) {
    const std::complex<double> h1p = h.amps(0), h1m = h.amps(1), h2p = h.amps(2), h2m = h.amps(3);
    const double d1 = std::norm(h1p) - std::norm(h1m);
    const double s1 = std::norm(h1p) + std::norm(h1m);
    const double s2sum = std::norm(h2p) + std::norm(h2m);
    const double d2 = std::norm(h2p) - std::norm(h2m);
    const double cross_diff = re2(h1p, h2p) - re2(h1m, h2m);
    const double cross_sum = re2(h1p, h2p) + re2(h1m, h2m);
    if (m == HalfInt::from_twice(1)) {
      poly.coeffs(0) = s1;
      poly.coeffs(1) = -(2.0 * d1 + (s3 / 2.0) * cross_diff) / r1;
      poly.coeffs(2) = -(s3 / (4.0 * r2)) * (s3 * (s1 - s2sum) - cross_sum);
      poly.coeffs(3) = (3.0 / (4.0 * r3)) * (3.0 * d1 + d2 + s3 * cross_diff);
    } else {
      poly.coeffs(0) = s2sum;
      poly.coeffs(1) = (s3 / (2.0 * r1)) * cross_diff;
      poly.coeffs(2) = (s3 / (4.0 * r2)) * (s3 * (s1 - s2sum) - cross_sum);
      poly.coeffs(3) = -(1.0 / (4.0 * r3)) * (3.0 * d1 + d2 + s3 * cross_diff);
    }
    return poly;
  }
  if (j == HalfInt(2)) {
    const std::complex<double> h0 = h.amps(0), h1p = h.amps(1), h1m = h.amps(2), h2p = h.amps(3),
                               h2m = h.amps(4);
    const double quartic = 3.0 * std::norm(h0) - 4.0 * std::norm(h1p) + std::norm(h2p) + s3 * re2(h0, h2p);
    if (m == HalfInt(1)) {
      poly.coeffs(0) = std::norm(h1p) + std::norm(h1m);
      poly.coeffs(1) = (re2(h1p, h2m) + re2(h2p, h1m) + s3 * re2(h0, h1m)) / r1;
      poly.coeffs(2) = (3.0 * std::norm(h0) - 4.0 * std::norm(h1p) - std::norm(h1m) + std::norm(h2p) +
                        std::norm(h2m) + s3 * re2(h0, h2p)) /
                       r2;
      poly.coeffs(3) = -(2.0 * re2(h1p, h2m) + re2(h2p, h1m) + s3 * re2(h0, h1m)) / r3;
      poly.coeffs(4) = -quartic / r4;
    } else {
      poly.coeffs(0) = std::norm(h2p) + std::norm(h2m);
      poly.coeffs(1) = -(re2(h1p, h2m) + re2(h1m, h2p)) / r1;
      poly.coeffs(2) = (std::norm(h1p) + std::norm(h1m) - std::norm(h2p) - std::norm(h2m) -
                        (s3 / 2.0) * re2(h0, h2p)) /
                       r2;
      poly.coeffs(3) = (2.0 * re2(h1p, h2m) + re2(h1m, h2p) + s3 * re2(h0, h1m)) / (2.0 * r3);
      poly.coeffs(4) = quartic / (4.0 * r4);
    }
    return poly;
  }
  throw UnsupportedError("weight_polynomial: no closed form beyond j = 2");
}

LimitDensityModel limit_density_model(HalfInt j, double rho, const CoinStateVector& h) {
  require_open_rho(rho);
  require_suitable(h, j);
  LimitDensityModel model;
  model.j = j;
  model.rho = rho;
  const int n_pairs = (j.twice() + 1) / 2;
  for (int n = 1; n <= n_pairs; ++n) {
    const HalfInt m = j.is_integer() ? HalfInt(n) : HalfInt::from_twice(2 * n - 1);
    model.components.push_back(weight_polynomial(j, m, h, rho));
  }
  if (j.is_integer()) model.trapped_mass = trapping_total(trapping_model(j, rho, h));
  return model;
}

double limit_density(const LimitDensityModel& model, double v) {
  double nu = 0.0;
  for (const WeightPolynomial& poly : model.components) {
    const double two_m = 2.0 * poly.m.value();
    const double u = v / two_m;
    if (std::abs(u) >= model.rho) continue;
    nu += konno_density(u, model.rho) * poly(u) / two_m;
  }
  return nu;
}

double density_moment(const LimitDensityModel& model, int n, bool include_trapped_mass) {
  double total = 0.0;
  for (const WeightPolynomial& poly : model.components) {
    int nodes = 256;
    double value = component_moment(poly, model.rho, n, nodes);
    for (; nodes <= 16384; nodes *= 2) {
      const double refined = component_moment(poly, model.rho, n, nodes * 2);
      const double gap = std::abs(refined - value);
      value = refined;
      if (gap < 1e-9) break;
    }
    total += value;
  }
  if (include_trapped_mass && n == 0) total += model.trapped_mass;
  return total;
}

std::vector<PeakResiduals> peak_condition_residuals(HalfInt j, const CoinStateVector& h, double rho) {
  if (j != HalfInt::from_twice(3) && j != HalfInt(2))
    throw UnsupportedError("peak_condition_residuals: defined for j in {3/2, 2}");
  const double r2 = rho * rho;
  std::vector<PeakResiduals> out;
  const int n_pairs = (j.twice() + 1) / 2;
  for (int n = 1; n <= n_pairs; ++n) {
    const HalfInt m = j.is_integer() ? HalfInt(n) : HalfInt::from_twice(2 * n - 1);
    const WeightPolynomial poly = weight_polynomial(j, m, h, rho);
    PeakResiduals res;
    res.m = m;
    res.odd = poly.coeffs(1) + r2 * poly.coeffs(3);
    res.even = poly.coeffs(0) + r2 * poly.coeffs(2);
    if (poly.coeffs.size() > 4) res.even += r2 * r2 * poly.coeffs(4);
    out.push_back(res);
  }
  return out;
}

EdgeFactorization factor_band_edges(const WeightPolynomial& poly, double rho) {
  const double r2 = rho * rho;
  Eigen::VectorXd c = poly.coeffs;
  const Eigen::Index deg = c.size() - 1;
  EdgeFactorization fac;
  fac.reduced = Eigen::VectorXd::Zero(std::max<Eigen::Index>(deg - 1, 0));
  for (Eigen::Index k = deg; k >= 2; --k) {
    fac.reduced(k - 2) = -c(k);
    c(k - 2) += r2 * c(k);
  }
  fac.r0 = c(0);
  fac.r1 = c.size() > 1 ? c(1) : 0.0;
  return fac;
}

CoinStateVector special_state(HalfInt j, SpecialState kind, std::complex<double> h1_plus,
                              std::complex<double> h1_minus) {
  CoinStateVector state;
  state.basis = BasisTag::suitable;
  switch (kind) {
    case SpecialState::inner_free:
    case SpecialState::outer_free: {
      if (j != HalfInt::from_twice(3))
        throw std::invalid_argument("special_state: the peak families require j = 3/2");
      if (std::norm(h1_plus) + std::norm(h1_minus) == 0.0)
        throw std::invalid_argument("special_state: free amplitudes must not both vanish");
      const double ratio = kind == SpecialState::inner_free ? -1.0 / std::sqrt(3.0) : std::sqrt(3.0);
      state.j = j;
      state.amps.resize(4);
      state.amps << h1_plus, h1_minus, ratio * h1_plus, ratio * h1_minus;
      break;
    }
    case SpecialState::j2_single_peak:
    case SpecialState::j2_no_slower: {
      if (j != HalfInt(2)) throw std::invalid_argument("special_state: this state requires j = 2");
      const double sign = kind == SpecialState::j2_single_peak ? 1.0 : -1.0;
      state.j = j;
      state.amps.resize(5);
      state.amps << 0.5, 0.0, 0.0, sign * std::sqrt(3.0) / 2.0, 0.0;
      break;
    }
  }
  normalize(state);
  return state;
}

CoinStateVector special_state(HalfInt j, SpecialState kind) {
  switch (kind) {
    case SpecialState::inner_free:
      return special_state(j, kind, 0.0, std::sqrt(3.0) / 2.0);
    case SpecialState::outer_free:
      return special_state(j, kind, 0.5, 0.0);
    default:
      return special_state(j, kind, 0.0, 0.0);
  }
}

}  // namespace wigner
