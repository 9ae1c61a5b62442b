#include "wigner/evolution.hpp"

#include <stdexcept>

#include "wigner/bases.hpp"

namespace wigner {

namespace {

// Double-buffered dense update. Component c of the output reads the input
// shifted by its own displacement 2m = j.twice() - 2c, so every column update
// is a unit-stride segment operation. Buffers carry a margin of one extra
// step on each side; the margin beyond the active range is re-zeroed after
// every step so stale data from the swapped buffer never enters a read.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> run_walk(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& coin,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& start, HalfInt j, int t) {
  const int d = dimension(j);
  const int tw = j.twice();
  const int ext = tw * (t + 1);
  const int rows = 2 * ext + 1;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat a = Mat::Zero(rows, d);
  Mat b = Mat::Zero(rows, d);
  a.row(ext) = start.transpose();
  for (int s = 0; s < t; ++s) {
    const int len = 2 * tw * (s + 1) + 1;
    const int lo = ext - tw * (s + 1);
    for (int c = 0; c < d; ++c) {
      const int shift = tw - 2 * c;
      auto out = b.col(c).segment(lo, len);
      out = coin(c, 0) * a.col(0).segment(lo + shift, len);
      for (int cc = 1; cc < d; ++cc) out += coin(c, cc) * a.col(cc).segment(lo + shift, len);
    }
    const int margin = 2 * tw;
    const int lo0 = std::max(0, lo - margin);
    b.block(lo0, 0, lo - lo0, d).setZero();
    const int hi = lo + len;
    const int hi1 = std::min(rows, hi + margin);
    b.block(hi, 0, hi1 - hi, d).setZero();
    std::swap(a, b);
  }
  return a;
}

}  // namespace

WalkState initial_state(HalfInt j, const CoinStateVector& psi) {
  if (psi.j != j) throw std::invalid_argument("initial_state: spin mismatch");
  if (psi.basis != BasisTag::standard)
    throw std::invalid_argument("initial_state: state must be standard-tagged");
  if (!is_normalized(psi, 1e-10)) throw std::invalid_argument("initial_state: state must be normalized");
  WalkState ws;
  ws.j = j;
  ws.t = 0;
  ws.offset = 0;
  ws.amplitudes = psi.amps.transpose();
  return ws;
}

WalkState step(const WalkState& state, const CoinOperator& coin) {
  if (coin.j != state.j) throw std::invalid_argument("step: coin and state spins differ");
  const int d = dimension(state.j);
  const int tw = state.j.twice();
  const Eigen::Index rows = state.amplitudes.rows();
  WalkState out;
  out.j = state.j;
  out.t = state.t + 1;
  out.offset = state.offset + tw;
  out.amplitudes = Eigen::MatrixXcd::Zero(rows + 2 * tw, d);
  for (int c = 0; c < d; ++c) {
    const int shift = tw - 2 * c;
    auto seg = out.amplitudes.col(c).segment(tw - shift, rows);
    for (int cc = 0; cc < d; ++cc) seg += coin.entries(c, cc) * state.amplitudes.col(cc);
  }
  return out;
}

WalkState evolve(const CoinOperator& coin, const CoinStateVector& psi, int t) {
  if (t < 0) throw std::invalid_argument("evolve: t must be non-negative");
  CoinStateVector start = psi;
  if (psi.basis != BasisTag::standard) {
    if (!coin.rho) throw std::invalid_argument("evolve: basis conversion needs the one-parameter coin");
    start = resolve_to_standard(psi, *coin.rho);
  }
  if (t == 0) return initial_state(coin.j, start);
  if (!is_normalized(start, 1e-10)) throw std::invalid_argument("evolve: state must be normalized");
  const int tw = coin.j.twice();
  WalkState ws;
  ws.j = coin.j;
  ws.t = t;
  ws.offset = tw * t;
  if (coin.is_real() && start.amps.imag().isZero(0.0)) {
    const Eigen::MatrixXd real_coin = coin.entries.real();
    const Eigen::VectorXd real_start = start.amps.real();
    const Eigen::MatrixXd res = run_walk<double>(real_coin, real_start, coin.j, t);
    ws.amplitudes = res.middleRows(tw, 2 * tw * t + 1).cast<std::complex<double>>();
  } else {
    const Eigen::MatrixXcd res = run_walk<std::complex<double>>(coin.entries, start.amps, coin.j, t);
    ws.amplitudes = res.middleRows(tw, 2 * tw * t + 1);
  }
  return ws;
}

WalkState evolve(HalfInt j, double rho, const CoinStateVector& psi, int t) {
  return evolve(wigner_coin(j, rho), psi, t);
}

ProbabilityProfile position_distribution(const WalkState& state) {
  ProbabilityProfile profile;
  profile.j = state.j;
  profile.t = state.t;
  const int tw = state.j.twice();
  const int reach = tw * state.t;
  // Occupied sites satisfy x = t * 2j (mod 2).
  for (int x = -reach; x <= reach; x += 2) {
    profile.entries[x] = state.amplitudes.row(x + state.offset).squaredNorm();
  }
  return profile;
}

double empirical_moment(const ProbabilityProfile& profile, int n) {
  if (profile.t < 1) throw std::invalid_argument("empirical_moment: requires t >= 1");
  double sum = 0.0;
  for (const auto& [x, p] : profile.entries) sum += p * ipow(double(x) / profile.t, n);
  return sum;
}

}  // namespace wigner
