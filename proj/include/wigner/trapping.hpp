#pragma once

#include <Eigen/Dense>

#include <complex>

#include "wigner/half_int.hpp"
#include "wigner/state.hpp"

namespace wigner {

/// Geometric decay base Q of the trapped tail, in (0, 1) for rho in (0, 1).
double trapping_decay_base(double rho);

/// Closed form of the lattice integral of the given order (1 or 2):
/// the x-th Fourier coefficient of 1 / (4 pi (2 - rho^2 (1 + cos k))^order).
double lattice_green_integral(int order, double rho, int x);

/// Normalized eigenvalue-1 eigenvector of the Fourier-space step operator
/// Diag(e^{2imk}) R(rho); closed forms exist for j in {1, 2}.
Eigen::VectorXcd stationary_eigenvector(HalfInt j, double rho, double k);

/// Closed-form trapping profile for j in {1, 2}.
struct TrappingModel {
  HalfInt j;
  double rho = 0.0;
  double Q = 0.0;
  /// j = 1: suitable amplitudes (h0, h+, h-); j = 2: lambda amplitudes
  /// (l0, l+, l-, h1-, h2-).
  Eigen::VectorXcd amps;
};

/// Builds the model from a state in any tagged basis.
TrappingModel trapping_model(HalfInt j, double rho, const CoinStateVector& psi);

/// Limiting probability at lattice site 2x (the argument indexes even sites).
double trapping_probability(const TrappingModel& model, int x);

/// Total trapped probability, summed over all even sites.
double trapping_total(const TrappingModel& model);

/// Limiting amplitude vector at lattice site x, standard-basis components.
/// Odd x carry no trapped amplitude and return zeros.
Eigen::VectorXcd trapping_amplitude(HalfInt j, double rho, const CoinStateVector& psi, int x);

}  // namespace wigner
