#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>

#include "wigner/half_int.hpp"

namespace wigner {

/// Raised when a quantity has no closed form in the requested parameter range.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Basis in which coin-space amplitudes are expressed.
enum class BasisTag { standard, suitable, lambda };

/// Coin-space state: 2j + 1 amplitudes tagged with the basis they refer to.
///
/// Component order by tag: standard m = +j ... -j; suitable (chi0 first for
/// integer j,) chi1+, chi1-, chi2+, chi2-, ...; lambda for j = 1 (lambda+,
/// lambda-, chi-) and for j = 2 (lambda0, lambda+, lambda-, chi1-, chi2-).
struct CoinStateVector {
  HalfInt j;
  BasisTag basis = BasisTag::standard;
  Eigen::VectorXcd amps;
};

/// Scales to unit norm in place; returns the deviation |1 - ||amps||| found beforehand.
double normalize(CoinStateVector& psi);

bool is_normalized(const CoinStateVector& psi, double tol = 1e-12);

/// Amplitude field of the walk after t steps.
struct WalkState {
  HalfInt j;
  int t = 0;
  /// amplitudes(i, c): position x = i - offset, coin component index c (m = j - c).
  Eigen::MatrixXcd amplitudes;
  int offset = 0;

  /// Amplitude at position x, component index c; zero outside the stored window.
  std::complex<double> amplitude(int x, int c) const;

  double norm_squared() const { return amplitudes.squaredNorm(); }
};

/// Position distribution p(x, t) on the occupied sublattice.
struct ProbabilityProfile {
  HalfInt j;
  int t = 0;
  std::map<int, double> entries;  ///< x -> p(x, t), occupied parity only

  /// p at any x; zero for sites that carry no probability.
  double at(int x) const;

  double total() const;
};

}  // namespace wigner
