#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "wigner/coin.hpp"
#include "wigner/state.hpp"

namespace wigner {

/// Conjugate eigenvector pair of the coin with its eigenphase.
struct EigenPair {
  /// Eigenphase in (0, 2pi]; the coin maps plus to e^{i phi} plus.
  double phi = 0.0;
  Eigen::VectorXcd plus;
  Eigen::VectorXcd minus;  ///< complex conjugate of plus, eigenphase -phi
};

/// Eigen decomposition of the one-parameter coin.
///
/// Pairs are ordered by increasing |m| of the generator label they descend
/// from, with the sign of m alternating (-|m|_1, +|m|_2, -|m|_3, ...), so
/// phi_n = (-2 m_n acos(rho)) mod 2pi.  Integer j adds a single eigenvalue-1
/// mode.
struct EigenSystem {
  HalfInt j;
  double rho = 0.0;
  std::vector<EigenPair> pairs;
  std::optional<Eigen::VectorXcd> zero_mode;  ///< integer j only
};

enum class EigenMethod { automatic, closed_form, generic };

/// Eigenvectors and phases of the one-parameter coin for rho in (0, 1).
///
/// closed_form uses hard-coded expressions (j <= 2); generic builds them for
/// any j from the tridiagonal rotation generator.  The generic frame is fixed
/// independently of rho: the generator eigenvector w_m (real, first nonzero
/// component positive) is mapped to u = diag(i^k) w_m and the pair vector is
/// plus = i^p u with p = 1 for integer j with odd |m|, p = 0 otherwise.
EigenSystem coin_eigensystem(HalfInt j, double rho, EigenMethod method = EigenMethod::automatic);

/// Orthonormal coin-space basis given by its standard-basis column vectors.
struct BasisSet {
  enum class Kind { suitable, lambda };
  HalfInt j;
  double rho = 0.0;
  Kind kind = Kind::suitable;
  std::vector<std::string> labels;  ///< one label per column
  Eigen::MatrixXcd vectors;         ///< columns in label order, real entries for these kinds
};

/// Real eigenbasis from the half-phase combinations
///   chi_n+ = (e^{-i phi_n/2} plus + e^{+i phi_n/2} minus) / sqrt(2),
///   chi_n- = i (e^{-i phi_n/2} plus - e^{+i phi_n/2} minus) / sqrt(2),
/// plus chi0 = zero mode for integer j.  Columns: (chi0,) chi1+, chi1-, ...
BasisSet suitable_basis(HalfInt j, double rho, EigenMethod method = EigenMethod::automatic);

/// Trapping-adapted basis for j in {1, 2}.
/// Columns: j = 1: lambda+, lambda-, chi-; j = 2: lambda0, lambda+, lambda-, chi1-, chi2-.
BasisSet lambda_basis(HalfInt j, double rho);

/// Amplitudes of a standard-tagged state in the given basis.
CoinStateVector to_basis(const CoinStateVector& psi, const BasisSet& basis);

/// Standard-basis amplitudes of a state tagged with the basis kind.
CoinStateVector to_standard(const CoinStateVector& psi, const BasisSet& basis);

/// Convenience wrapper building the suitable basis internally.
CoinStateVector to_suitable(const CoinStateVector& psi, double rho);

/// Converts a state in any tagged basis to standard amplitudes.
CoinStateVector resolve_to_standard(const CoinStateVector& psi, double rho);

}  // namespace wigner
