#pragma once

#include "wigner/coin.hpp"
#include "wigner/state.hpp"

namespace wigner {

/// Walk state at t = 0 with all amplitude at the origin.
/// psi must be standard-tagged and normalized to 1e-10.
WalkState initial_state(HalfInt j, const CoinStateVector& psi);

/// One step: the coin acts at every site, then component m translates by -2m.
WalkState step(const WalkState& state, const CoinOperator& coin);

/// Evolves psi for t steps. Non-standard tags are converted through the
/// corresponding basis of the coin parameter (requires the one-parameter form).
WalkState evolve(const CoinOperator& coin, const CoinStateVector& psi, int t);

/// Shorthand for evolve(wigner_coin(j, rho), psi, t).
WalkState evolve(HalfInt j, double rho, const CoinStateVector& psi, int t);

/// Collapses the state to p(x, t) on the occupied sublattice.
ProbabilityProfile position_distribution(const WalkState& state);

/// n-th moment of x / t; requires t >= 1.
double empirical_moment(const ProbabilityProfile& profile, int n);

}  // namespace wigner
