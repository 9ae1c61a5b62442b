#include "wigner/state.hpp"

namespace wigner {

double normalize(CoinStateVector& psi) {
  const double norm = psi.amps.norm();
  if (norm <= 0.0) throw std::invalid_argument("normalize: zero state");
  psi.amps /= norm;
  return std::abs(1.0 - norm);
}

bool is_normalized(const CoinStateVector& psi, double tol) {
  return std::abs(1.0 - psi.amps.norm()) <= tol;
}

std::complex<double> WalkState::amplitude(int x, int c) const {
  const int i = x + offset;
  if (i < 0 || i >= amplitudes.rows()) return {0.0, 0.0};
  return amplitudes(i, c);
}

double ProbabilityProfile::at(int x) const {
  const auto it = entries.find(x);
  return it == entries.end() ? 0.0 : it->second;
}

double ProbabilityProfile::total() const {
  double sum = 0.0;
  for (const auto& [x, p] : entries) sum += p;
  return sum;
}

}  // namespace wigner
