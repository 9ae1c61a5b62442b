#include "wigner/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wigner {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_open_rho(double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::domain_error("bases: rho in {0, 1} is degenerate; eigenbases require rho in (0, 1)");
}

double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  if (phi <= 0.0) phi += two_pi;
  return phi;
}

Eigen::VectorXcd make_vec(std::initializer_list<std::complex<double>> values) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& z : values) v(i++) = z;
  return v;
}

// Hard-coded eigenvectors for j <= 2; components are rho independent, only the
// phases carry the parameter.
EigenSystem closed_eigensystem(HalfInt j, double rho) {
  EigenSystem es;
  es.j = j;
  es.rho = rho;
  const double s2 = std::numbers::sqrt2;
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  const double s8 = std::sqrt(8.0);
  if (j == HalfInt::from_twice(1)) {
    EigenPair p1;
    p1.plus = make_vec({1.0, -kI}) / s2;
    p1.phi = std::acos(rho);
    es.pairs.push_back(std::move(p1));
  } else if (j == HalfInt(1)) {
    EigenPair p1;
    p1.plus = make_vec({kI, s2, -kI}) / 2.0;
    // acos(2 rho^2 - 1) evaluated as 2 acos(rho): same value, no precision
    // loss where the argument approaches -1.
    p1.phi = 2.0 * std::acos(rho);
    es.pairs.push_back(std::move(p1));
    es.zero_mode = make_vec({1.0, 0.0, 1.0}) / s2;
  } else if (j == HalfInt::from_twice(3)) {
    EigenPair p1;
    p1.plus = make_vec({s3, -kI, 1.0, -kI * s3}) / s8;
    p1.phi = std::acos(rho);
    es.pairs.push_back(std::move(p1));
    EigenPair p2;
    p2.plus = make_vec({1.0, kI * s3, -s3, -kI}) / s8;
    // Branch-resolved acos(rho (4 rho^2 - 3)) equals -3 acos(rho) mod 2 pi.
    p2.phi = wrap_phase(-3.0 * std::acos(rho));
    es.pairs.push_back(std::move(p2));
  } else if (j == HalfInt(2)) {
    EigenPair p1;
    p1.plus = make_vec({kI, 1.0, 0.0, 1.0, -kI}) / 2.0;
    p1.phi = 2.0 * std::acos(rho);
    es.pairs.push_back(std::move(p1));
    EigenPair p2;
    p2.plus = make_vec({1.0, 2.0 * kI, -s6, -2.0 * kI, 1.0}) / 4.0;
    // Branch-resolved acos(8 rho^4 - 8 rho^2 + 1) equals -4 acos(rho) mod 2 pi.
    p2.phi = wrap_phase(-4.0 * std::acos(rho));
    es.pairs.push_back(std::move(p2));
    es.zero_mode = make_vec({std::sqrt(3.0 / 8.0), 0.0, 0.5, 0.0, std::sqrt(3.0 / 8.0)});
  } else {
    throw std::invalid_argument("coin_eigensystem: no closed form beyond j = 2");
  }
  return es;
}

// Eigenvectors of the rotation generator, built from its real tridiagonal
// similarity transform; valid for every j.
EigenSystem generic_eigensystem(HalfInt j, double rho) {
  const int d = dimension(j);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  const double jv = j.value();
  for (int k = 0; k + 1 < d; ++k) {
    const double m = component_m(j, k).value();
    a(k, k + 1) = a(k + 1, k) = 0.5 * std::sqrt(jv * (jv + 1.0) - m * (m - 1.0));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("coin_eigensystem: eigensolver failed");

  // Eigenvalues come back ascending and equal -j + k exactly up to roundoff,
  // so column k belongs to generator label mu = -j + k.
  const auto column_for = [&](HalfInt mu) {
    const int k = (mu.twice() + j.twice()) / 2;
    Eigen::VectorXd w = solver.eigenvectors().col(k);
    for (int i = 0; i < d; ++i) {
      if (std::abs(w(i)) > 1e-9) {
        if (w(i) < 0.0) w = -w;
        break;
      }
    }
    return w;
  };
  const auto lift = [&](const Eigen::VectorXd& w) {
    Eigen::VectorXcd u(d);
    for (int i = 0; i < d; ++i) u(i) = ipow(kI, i % 4) * w(i);
    return u;
  };

  EigenSystem es;
  es.j = j;
  es.rho = rho;
  const double beta = 2.0 * std::acos(rho);
  const int n_pairs = (j.twice() + 1) / 2;
  for (int n = 1; n <= n_pairs; ++n) {
    // |m| of pair n is n for integer j and n - 1/2 for half-integer j.
    const HalfInt abs_m = j.is_integer() ? HalfInt(n) : HalfInt::from_twice(2 * n - 1);
    const HalfInt m = n % 2 == 1 ? -abs_m : abs_m;
    EigenPair pair;
    pair.plus = lift(column_for(m));
    if (j.is_integer() && abs_m.as_integer() % 2 == 1) pair.plus *= kI;
    pair.phi = wrap_phase(-beta * m.value());
    es.pairs.push_back(std::move(pair));
  }
  if (j.is_integer()) {
    // The zero mode of the generator is supported on alternating components,
    // so the lift stays real.
    es.zero_mode = lift(column_for(HalfInt(0))).real().cast<std::complex<double>>();
  }
  return es;
}

Eigen::VectorXcd realified(const Eigen::VectorXcd& v, const char* what) {
  if (v.imag().cwiseAbs().maxCoeff() > 1e-10)
    throw std::logic_error(std::string(what) + ": expected a real vector");
  return v.real().cast<std::complex<double>>();
}

int pair_count(HalfInt j) { return (j.twice() + 1) / 2; }

int suitable_column(HalfInt j, int n, bool plus) {
  const int base = j.is_integer() ? 1 : 0;
  return base + 2 * (n - 1) + (plus ? 0 : 1);
}

}  // namespace

EigenSystem coin_eigensystem(HalfInt j, double rho, EigenMethod method) {
  require_open_rho(rho);
  EigenSystem es;
  switch (method) {
    case EigenMethod::closed_form:
      es = closed_eigensystem(j, rho);
      break;
    case EigenMethod::generic:
      es = generic_eigensystem(j, rho);
      break;
    case EigenMethod::automatic:
      es = j.twice() <= 4 ? closed_eigensystem(j, rho) : generic_eigensystem(j, rho);
      break;
  }
  for (EigenPair& pair : es.pairs) pair.minus = pair.plus.conjugate();
  return es;
}

BasisSet suitable_basis(HalfInt j, double rho, EigenMethod method) {
  const EigenSystem es = coin_eigensystem(j, rho, method);
  const int d = dimension(j);
  BasisSet basis;
  basis.j = j;
  basis.rho = rho;
  basis.kind = BasisSet::Kind::suitable;
  basis.vectors.resize(d, d);
  basis.labels.resize(d);
  if (es.zero_mode) {
    basis.vectors.col(0) = realified(*es.zero_mode, "suitable_basis chi0");
    basis.labels[0] = "chi0";
  }
  const double s2 = std::numbers::sqrt2;
  for (int n = 1; n <= pair_count(j); ++n) {
    const EigenPair& pair = es.pairs[n - 1];
    const std::complex<double> half = std::exp(-kI * (pair.phi / 2.0));
    const Eigen::VectorXcd chi_p = (half * pair.plus + std::conj(half) * pair.minus) / s2;
    const Eigen::VectorXcd chi_m = kI * (half * pair.plus - std::conj(half) * pair.minus) / s2;
    basis.vectors.col(suitable_column(j, n, true)) = realified(chi_p, "suitable_basis chi+");
    basis.vectors.col(suitable_column(j, n, false)) = realified(chi_m, "suitable_basis chi-");
    basis.labels[suitable_column(j, n, true)] = "chi" + std::to_string(n) + "+";
    basis.labels[suitable_column(j, n, false)] = "chi" + std::to_string(n) + "-";
  }
  return basis;
}

BasisSet lambda_basis(HalfInt j, double rho) {
  const BasisSet s = suitable_basis(j, rho);
  BasisSet basis;
  basis.j = j;
  basis.rho = rho;
  basis.kind = BasisSet::Kind::lambda;
  const double s2 = std::numbers::sqrt2;
  if (j == HalfInt(1)) {
    basis.vectors.resize(3, 3);
    basis.vectors.col(0) = (s.vectors.col(0) + s.vectors.col(1)) / s2;
    basis.vectors.col(1) = (s.vectors.col(0) - s.vectors.col(1)) / s2;
    basis.vectors.col(2) = s.vectors.col(2);
    basis.labels = {"lambda+", "lambda-", "chi-"};
  } else if (j == HalfInt(2)) {
    basis.vectors.resize(5, 5);
    const auto chi0 = s.vectors.col(0);
    const auto chi1p = s.vectors.col(1);
    const auto chi2p = s.vectors.col(3);
    basis.vectors.col(0) = 0.5 * chi0 - (std::sqrt(3.0) / 2.0) * chi2p;
    basis.vectors.col(1) = std::sqrt(3.0 / 8.0) * chi0 + chi1p / s2 + chi2p / std::sqrt(8.0);
    basis.vectors.col(2) = std::sqrt(3.0 / 8.0) * chi0 - chi1p / s2 + chi2p / std::sqrt(8.0);
    basis.vectors.col(3) = s.vectors.col(2);
    basis.vectors.col(4) = s.vectors.col(4);
    basis.labels = {"lambda0", "lambda+", "lambda-", "chi1-", "chi2-"};
  } else {
    throw UnsupportedError("lambda_basis: defined for j in {1, 2} only");
  }
  return basis;
}

CoinStateVector to_basis(const CoinStateVector& psi, const BasisSet& basis) {
  if (psi.j != basis.j) throw std::invalid_argument("to_basis: spin mismatch");
  if (psi.basis != BasisTag::standard) throw std::invalid_argument("to_basis: input must be standard-tagged");
  CoinStateVector out;
  out.j = psi.j;
  out.basis = basis.kind == BasisSet::Kind::suitable ? BasisTag::suitable : BasisTag::lambda;
  out.amps = basis.vectors.adjoint() * psi.amps;
  return out;
}

CoinStateVector to_standard(const CoinStateVector& psi, const BasisSet& basis) {
  if (psi.j != basis.j) throw std::invalid_argument("to_standard: spin mismatch");
  const BasisTag expected = basis.kind == BasisSet::Kind::suitable ? BasisTag::suitable : BasisTag::lambda;
  if (psi.basis != expected) throw std::invalid_argument("to_standard: state tag does not match the basis");
  CoinStateVector out;
  out.j = psi.j;
  out.basis = BasisTag::standard;
  out.amps = basis.vectors * psi.amps;
  return out;
}

CoinStateVector to_suitable(const CoinStateVector& psi, double rho) {
  return to_basis(psi, suitable_basis(psi.j, rho));
}

CoinStateVector resolve_to_standard(const CoinStateVector& psi, double rho) {
  switch (psi.basis) {
    case BasisTag::standard:
      return psi;
    case BasisTag::suitable:
      return to_standard(psi, suitable_basis(psi.j, rho));
    case BasisTag::lambda:
      return to_standard(psi, lambda_basis(psi.j, rho));
  }
  throw std::logic_error("resolve_to_standard: unknown basis tag");
}

}  // namespace wigner
