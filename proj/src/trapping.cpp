#include "wigner/trapping.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wigner/bases.hpp"

namespace wigner {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_open_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("trapping: rho in {0, 1} is degenerate; closed forms need rho in (0, 1)");
}

// Finite Laurent series in z = e^{2ik}; coeff[i] multiplies z^{lo + i}.
struct Laurent {
  int lo = 0;
  std::vector<std::complex<double>> coeff;

  std::complex<double> at(int power) const {
    const int i = power - lo;
    if (i < 0 || i >= static_cast<int>(coeff.size())) return {0.0, 0.0};
    return coeff[static_cast<size_t>(i)];
  }
};

// Conjugation on the unit circle: z -> 1/z with conjugated coefficients.
Laurent conj_on_circle(const Laurent& a) {
  Laurent r;
  r.lo = -(a.lo + static_cast<int>(a.coeff.size()) - 1);
  r.coeff.resize(a.coeff.size());
  for (size_t i = 0; i < a.coeff.size(); ++i) r.coeff[a.coeff.size() - 1 - i] = std::conj(a.coeff[i]);
  return r;
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.lo = a.lo + b.lo;
  r.coeff.assign(a.coeff.size() + b.coeff.size() - 1, {0.0, 0.0});
  for (size_t i = 0; i < a.coeff.size(); ++i)
    for (size_t k = 0; k < b.coeff.size(); ++k) r.coeff[i + k] += a.coeff[i] * b.coeff[k];
  return r;
}

void accumulate(Laurent& acc, const Laurent& a, std::complex<double> scale) {
  if (a.coeff.empty()) return;
  if (acc.coeff.empty()) {
    acc.lo = a.lo;
    acc.coeff.assign(a.coeff.size(), {0.0, 0.0});
  }
  const int new_lo = std::min(acc.lo, a.lo);
  const int new_hi = std::max(acc.lo + static_cast<int>(acc.coeff.size()), a.lo + static_cast<int>(a.coeff.size()));
  std::vector<std::complex<double>> merged(static_cast<size_t>(new_hi - new_lo), {0.0, 0.0});
  for (size_t i = 0; i < acc.coeff.size(); ++i) merged[static_cast<size_t>(acc.lo - new_lo) + i] += acc.coeff[i];
  for (size_t i = 0; i < a.coeff.size(); ++i)
    merged[static_cast<size_t>(a.lo - new_lo) + i] += scale * a.coeff[i];
  acc.lo = new_lo;
  acc.coeff = std::move(merged);
}

// Unnormalized stationary vector as Laurent components; the squared norm is the
// first (j = 1) or second (j = 2) power of the shared denominator, which the
// lattice integrals absorb.
std::vector<Laurent> stationary_numerator(HalfInt j, double rho) {
  const double sig = std::sqrt(1.0 - rho * rho);
  const double s2 = std::numbers::sqrt2;
  std::vector<Laurent> w;
  if (j == HalfInt(1)) {
    w.push_back({0, {s2 * sig}});
    w.push_back({-1, {-rho, rho}});
    w.push_back({-1, {s2 * sig}});
  } else if (j == HalfInt(2)) {
    const double s23 = std::sqrt(2.0 / 3.0);
    w.push_back({1, {1.0 - rho * rho}});
    w.push_back({0, {-rho * sig, rho * sig}});
    w.push_back({-1, {s23 * rho * rho / 2.0, s23 * (1.0 - 2.0 * rho * rho), s23 * rho * rho / 2.0}});
    w.push_back({-1, {-rho * sig, rho * sig}});
    w.push_back({-1, {1.0 - rho * rho}});
  } else {
    throw UnsupportedError("trapping: closed forms exist for j in {1, 2} only");
  }
  return w;
}

}  // namespace

double trapping_decay_base(double rho) {
  require_open_rho(rho);
  return (2.0 - rho * rho - 2.0 * std::sqrt(1.0 - rho * rho)) / (rho * rho);
}

double lattice_green_integral(int order, double rho, int x) {
  require_open_rho(rho);
  const double sig = std::sqrt(1.0 - rho * rho);
  const double q = trapping_decay_base(rho);
  const double qx = std::pow(q, std::abs(x));
  if (order == 1) return qx / (4.0 * sig);
  if (order == 2) return qx * (2.0 - rho * rho + 2.0 * std::abs(x) * sig) / (16.0 * sig * sig * sig);
  throw std::invalid_argument("lattice_green_integral: order must be 1 or 2");
}

Eigen::VectorXcd stationary_eigenvector(HalfInt j, double rho, double k) {
  require_open_rho(rho);
  const std::vector<Laurent> w = stationary_numerator(j, rho);
  const std::complex<double> z = std::exp(2.0 * kI * k);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(w.size()));
  for (size_t c = 0; c < w.size(); ++c) {
    std::complex<double> sum = 0.0;
    for (size_t i = 0; i < w[c].coeff.size(); ++i)
      sum += w[c].coeff[i] * std::pow(z, w[c].lo + static_cast<int>(i));
    v(static_cast<Eigen::Index>(c)) = sum;
  }
  return v / v.norm();
}

TrappingModel trapping_model(HalfInt j, double rho, const CoinStateVector& psi) {
  require_open_rho(rho);
  if (psi.j != j) throw std::invalid_argument("trapping_model: spin mismatch");
  if (j != HalfInt(1) && j != HalfInt(2))
    throw UnsupportedError("trapping_model: closed forms exist for j in {1, 2} only");
  TrappingModel model;
  model.j = j;
  model.rho = rho;
  model.Q = trapping_decay_base(rho);
  const CoinStateVector std_psi = resolve_to_standard(psi, rho);
  const BasisSet basis = j == HalfInt(1) ? suitable_basis(j, rho) : lambda_basis(j, rho);
  model.amps = to_basis(std_psi, basis).amps;
  return model;
}

double trapping_probability(const TrappingModel& model, int x) {
  const double rho = model.rho;
  const double rho2 = rho * rho;
  const double sig = std::sqrt(1.0 - rho2);
  const double Q = model.Q;
  if (model.j == HalfInt(1)) {
    const std::complex<double> h0 = model.amps(0);
    const std::complex<double> hp = model.amps(1);
    if (x == 0) return (Q / rho2) * ((1.0 - rho2) * std::norm(h0) + std::norm(hp));
    const std::complex<double> blend = x > 0 ? h0 + hp : h0 - hp;
    return std::pow(Q, 2 * std::abs(x)) * (2.0 * (1.0 - rho2) / (rho2 * rho2)) * std::norm(blend);
  }
  const std::complex<double> l0 = model.amps(0);
  const std::complex<double> lp = model.amps(1);
  const std::complex<double> lm = model.amps(2);
  if (x == 0) {
    const std::complex<double> lsum = lp + lm;
    return (9.0 * (1.0 - rho2) / (4.0 * rho2 * rho2)) * Q * Q * (std::norm(lp) + std::norm(lm)) +
           (3.0 / 8.0) * Q * Q * std::norm(lsum) +
           ((2.0 - rho2 - sig) / (4.0 * rho2)) * Q * std::norm(l0) -
           (std::sqrt(6.0) * (2.0 - rho2 + 0.5 * sig) / (8.0 * rho2)) * Q * Q *
               2.0 * std::real(lsum * std::conj(l0));
  }
  const int ax = std::abs(x);
  const double f = (std::sqrt(6.0) / rho2) * (rho2 - 2.0 + 2.0 * ax * sig);
  const std::complex<double> side = x > 0 ? lp : lm;
  return std::pow(Q, 2 * ax) * (3.0 * (1.0 - rho2) / (2.0 * rho2 * rho2)) *
         (std::norm(l0 + f * side) + std::norm(side));
}

double trapping_total(const TrappingModel& model) {
  const double Q = model.Q;
  if (model.j == HalfInt(1)) {
    const double rho2 = model.rho * model.rho;
    const std::complex<double> h0 = model.amps(0);
    const std::complex<double> hp = model.amps(1);
    const double tails = (2.0 * (1.0 - rho2) / (rho2 * rho2)) *
                         (std::norm(h0 + hp) + std::norm(h0 - hp)) * Q * Q / (1.0 - Q * Q);
    return trapping_probability(model, 0) + tails;
  }
  double total = trapping_probability(model, 0);
  for (int x = 1; x < 100000; ++x) {
    const double term = trapping_probability(model, x) + trapping_probability(model, -x);
    total += term;
    if (term < 1e-15) break;
  }
  return total;
}

Eigen::VectorXcd trapping_amplitude(HalfInt j, double rho, const CoinStateVector& psi, int x) {
  require_open_rho(rho);
  if (psi.j != j) throw std::invalid_argument("trapping_amplitude: spin mismatch");
  const int d = dimension(j);
  if (x % 2 != 0) return Eigen::VectorXcd::Zero(d);
  const CoinStateVector std_psi = resolve_to_standard(psi, rho);
  const std::vector<Laurent> w = stationary_numerator(j, rho);

  // Overlap of the unnormalized stationary vector with the coin state, then
  // the projection back onto each component, all as series in z = e^{2ik}.
  Laurent overlap;
  for (int c = 0; c < d; ++c) accumulate(overlap, conj_on_circle(w[static_cast<size_t>(c)]), std_psi.amps(c));

  const int order = j == HalfInt(1) ? 1 : 2;
  const double scale = j == HalfInt(1) ? 1.0 : 3.0;
  const int y = x / 2;
  Eigen::VectorXcd amp(d);
  for (int c = 0; c < d; ++c) {
    const Laurent series = multiply(w[static_cast<size_t>(c)], overlap);
    std::complex<double> sum = 0.0;
    for (size_t i = 0; i < series.coeff.size(); ++i) {
      const int p = series.lo + static_cast<int>(i);
      sum += series.coeff[i] * lattice_green_integral(order, rho, y + p);
    }
    amp(c) = scale * sum;
  }
  return amp;
}

}  // namespace wigner
