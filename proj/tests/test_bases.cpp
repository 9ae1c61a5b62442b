#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "test_helpers.hpp"
#include "wigner/bases.hpp"

using namespace wigner;
using wigner::testing::random_rho;
using wigner::testing::random_state;

namespace {

const std::complex<double> kI{0.0, 1.0};

Eigen::VectorXcd cvec(std::initializer_list<std::complex<double>> values) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& z : values) v(i++) = z;
  return v;
}

Eigen::VectorXd rvec(std::initializer_list<double> values) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const double z : values) v(i++) = z;
  return v;
}

double vec_gap(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Reference eigenvector components; these do not depend on rho.
struct EigenOracle {
  std::vector<Eigen::VectorXcd> plus;
  std::vector<double> phis;  // filled per rho by phi_for
  Eigen::VectorXcd zero;     // empty for half-integer j
};

EigenOracle eigen_oracle(HalfInt j, double rho) {
  const double s2 = std::numbers::sqrt2;
  const double s3 = std::sqrt(3.0);
  const double s6 = std::sqrt(6.0);
  const double s8 = std::sqrt(8.0);
  const double two_pi = 2.0 * std::numbers::pi;
  EigenOracle o;
  if (j == HalfInt::from_twice(1)) {
    o.plus = {cvec({1.0, -kI}) / s2};
    o.phis = {std::acos(rho)};
  } else if (j == HalfInt(1)) {
    o.plus = {cvec({kI, s2, -kI}) / 2.0};
    o.phis = {std::acos(2.0 * rho * rho - 1.0)};
    o.zero = cvec({1.0, 0.0, 1.0}) / s2;
  } else if (j == HalfInt::from_twice(3)) {
    o.plus = {cvec({s3, -kI, 1.0, -kI * s3}) / s8, cvec({1.0, kI * s3, -s3, -kI}) / s8};
    const double c2 = rho * (4.0 * rho * rho - 3.0);
    o.phis = {std::acos(rho), rho <= 0.5 ? std::acos(c2) : two_pi - std::acos(c2)};
  } else if (j == HalfInt(2)) {
    o.plus = {cvec({kI, 1.0, 0.0, 1.0, -kI}) / 2.0, cvec({1.0, 2.0 * kI, -s6, -2.0 * kI, 1.0}) / 4.0};
    const double c2 = 8.0 * rho * rho * rho * rho - 8.0 * rho * rho + 1.0;
    o.phis = {std::acos(2.0 * rho * rho - 1.0),
              rho <= 1.0 / s2 ? std::acos(c2) : two_pi - std::acos(c2)};
    o.zero = cvec({std::sqrt(3.0 / 8.0), 0.0, 0.5, 0.0, std::sqrt(3.0 / 8.0)});
  }
  return o;
}

// Reference basis columns for j <= 3/2; the j = 2 columns are pinned through
// the standard-basis expansion checked in its own test case.
Eigen::MatrixXd suitable_oracle(HalfInt j, double rho) {
  const double sp = std::sqrt(1.0 + rho);
  const double sm = std::sqrt(1.0 - rho);
  const double sig = std::sqrt(1.0 - rho * rho);
  Eigen::MatrixXd v;
  if (j == HalfInt::from_twice(1)) {
    v.resize(2, 2);
    v.col(0) = rvec({sp / std::numbers::sqrt2, -sm / std::numbers::sqrt2});
    v.col(1) = rvec({sm / std::numbers::sqrt2, sp / std::numbers::sqrt2});
  } else if (j == HalfInt(1)) {
    v.resize(3, 3);
    v.col(0) = rvec({1.0, 0.0, 1.0}) / std::numbers::sqrt2;
    v.col(1) = rvec({sig / std::numbers::sqrt2, rho, -sig / std::numbers::sqrt2});
    v.col(2) = rvec({-rho / std::numbers::sqrt2, sig, rho / std::numbers::sqrt2});
  } else if (j == HalfInt::from_twice(3)) {
    const double s3 = std::sqrt(3.0);
    v.resize(4, 4);
    v.col(0) = rvec({s3 * sp, -sm, sp, -s3 * sm}) / std::sqrt(8.0);
    v.col(1) = rvec({s3 * sm, sp, sm, s3 * sp}) / std::sqrt(8.0);
    v.col(2) = rvec({sp * (1.0 - 2.0 * rho), s3 * sm * (1.0 + 2.0 * rho), -s3 * sp * (1.0 - 2.0 * rho),
                     -sm * (1.0 + 2.0 * rho)}) /
               std::sqrt(8.0);
    v.col(3) = rvec({sm * (1.0 + 2.0 * rho), -s3 * sp * (1.0 - 2.0 * rho), -s3 * sm * (1.0 + 2.0 * rho),
                     sp * (1.0 - 2.0 * rho)}) /
               std::sqrt(8.0);
  }
  return v;
}

}  // namespace

TEST_CASE("eigenpairs satisfy the eigenvalue equation") {
  std::mt19937_64 rng(53);
  for (const int tw : {1, 2, 3, 4, 5, 6}) {
    const HalfInt j = HalfInt::from_twice(tw);
    for (int trial = 0; trial < 5; ++trial) {
      const double rho = random_rho(rng);
      const CoinOperator coin = wigner_coin(j, rho);
      const EigenSystem es = coin_eigensystem(j, rho);
      for (const EigenPair& pair : es.pairs) {
        const std::complex<double> ev = std::exp(kI * pair.phi);
        CHECK(vec_gap(coin.entries * pair.plus, ev * pair.plus) <= 1e-10);
        CHECK(vec_gap(coin.entries * pair.minus, std::conj(ev) * pair.minus) <= 1e-10);
        CHECK(std::abs(pair.plus.norm() - 1.0) <= 1e-12);
        CHECK(pair.phi > 0.0);
        CHECK(pair.phi <= 2.0 * std::numbers::pi);
      }
      if (es.zero_mode) CHECK(vec_gap(coin.entries * *es.zero_mode, *es.zero_mode) <= 1e-10);
      CHECK(es.pairs.size() == static_cast<size_t>((tw + 1) / 2));
      CHECK(es.zero_mode.has_value() == j.is_integer());
    }
  }
}

TEST_CASE("eigenpairs match the reference components and phases") {
  std::mt19937_64 rng(59);
  for (const int tw : {1, 2, 3, 4}) {
    const HalfInt j = HalfInt::from_twice(tw);
    for (int trial = 0; trial < 8; ++trial) {
      const double rho = random_rho(rng);
      const EigenOracle oracle = eigen_oracle(j, rho);
      for (const EigenMethod method : {EigenMethod::closed_form, EigenMethod::generic}) {
        const EigenSystem es = coin_eigensystem(j, rho, method);
        REQUIRE(es.pairs.size() == oracle.plus.size());
        for (size_t n = 0; n < oracle.plus.size(); ++n) {
          CHECK(vec_gap(es.pairs[n].plus, oracle.plus[n]) <= 1e-10);
          CHECK(std::abs(es.pairs[n].phi - oracle.phis[n]) <= 1e-10);
        }
        if (oracle.zero.size() > 0) {
          REQUIRE(es.zero_mode.has_value());
          CHECK(vec_gap(*es.zero_mode, oracle.zero) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("generic eigenvectors work beyond the closed-form range") {
  std::mt19937_64 rng(61);
  for (const int tw : {5, 6, 7, 8}) {
    const HalfInt j = HalfInt::from_twice(tw);
    const double rho = random_rho(rng);
    const CoinOperator coin = wigner_coin(j, rho);
    const EigenSystem es = coin_eigensystem(j, rho, EigenMethod::generic);
    Eigen::MatrixXcd all(dimension(j), dimension(j));
    int col = 0;
    for (const EigenPair& pair : es.pairs) {
      CHECK(vec_gap(coin.entries * pair.plus, std::exp(kI * pair.phi) * pair.plus) <= 1e-10);
      all.col(col++) = pair.plus;
      all.col(col++) = pair.minus;
    }
    if (es.zero_mode) all.col(col++) = *es.zero_mode;
    REQUIRE(col == dimension(j));
    const Eigen::MatrixXcd gram = all.adjoint() * all;
    CHECK((gram - Eigen::MatrixXcd::Identity(col, col)).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("suitable basis matches the reference columns") {
  for (const double rho : {0.1, 0.3, 0.5, 0.62, 0.75, 0.9}) {
    for (const int tw : {1, 2, 3}) {
      const HalfInt j = HalfInt::from_twice(tw);
      const Eigen::MatrixXd expected = suitable_oracle(j, rho);
      for (const EigenMethod method :
           {EigenMethod::automatic, EigenMethod::closed_form, EigenMethod::generic}) {
        const BasisSet basis = suitable_basis(j, rho, method);
        CHECK((basis.vectors - expected.cast<std::complex<double>>()).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("suitable basis columns are real and orthonormal for all spins") {
  std::mt19937_64 rng(67);
  for (const int tw : {1, 2, 3, 4, 5, 6}) {
    const HalfInt j = HalfInt::from_twice(tw);
    const double rho = random_rho(rng);
    const BasisSet basis = suitable_basis(j, rho);
    CHECK(basis.vectors.imag().cwiseAbs().maxCoeff() <= 1e-12);
    const Eigen::MatrixXcd gram = basis.vectors.adjoint() * basis.vectors;
    CHECK((gram - Eigen::MatrixXcd::Identity(dimension(j), dimension(j))).cwiseAbs().maxCoeff() <=
          1e-12);
    CHECK(basis.labels.size() == static_cast<size_t>(dimension(j)));
  }
}

TEST_CASE("standard basis vectors expand as expected over the suitable basis") {
  // These expansions pin every column of the j = 1 and j = 2 basis, including
  // the overall sign of each column.
  for (const double rho : {0.35, 0.5, 0.8}) {
    const double sig = std::sqrt(1.0 - rho * rho);
    const double s2 = std::numbers::sqrt2;
    {
      const BasisSet basis = suitable_basis(HalfInt(1), rho);
      const auto h0 = basis.vectors.col(0), h1p = basis.vectors.col(1), h1m = basis.vectors.col(2);
      CHECK(vec_gap(h0 / s2 + (sig / s2) * h1p - (rho / s2) * h1m, cvec({1, 0, 0})) <= 1e-12);
      CHECK(vec_gap(rho * h1p + sig * h1m, cvec({0, 1, 0})) <= 1e-12);
      CHECK(vec_gap(h0 / s2 - (sig / s2) * h1p + (rho / s2) * h1m, cvec({0, 0, 1})) <= 1e-12);
    }
    {
      const BasisSet basis = suitable_basis(HalfInt(2), rho);
      const auto h0 = basis.vectors.col(0), h1p = basis.vectors.col(1), h1m = basis.vectors.col(2),
                 h2p = basis.vectors.col(3), h2m = basis.vectors.col(4);
      const double s3 = std::sqrt(3.0);
      const double c = 1.0 - 2.0 * rho * rho;
      CHECK(vec_gap((s3 / (2.0 * s2)) * h0 + (sig / s2) * h1p - (rho / s2) * h1m +
                        (c / (2.0 * s2)) * h2p + (rho * sig / s2) * h2m,
                    cvec({1, 0, 0, 0, 0})) <= 1e-12);
      CHECK(vec_gap((rho / s2) * h1p + (sig / s2) * h1m + rho * sig * s2 * h2p - (c / s2) * h2m,
                    cvec({0, 1, 0, 0, 0})) <= 1e-12);
      CHECK(vec_gap(0.5 * h0 - (s3 / 2.0) * c * h2p - rho * s3 * sig * h2m, cvec({0, 0, 1, 0, 0})) <=
            1e-12);
      CHECK(vec_gap((rho / s2) * h1p + (sig / s2) * h1m - rho * sig * s2 * h2p + (c / s2) * h2m,
                    cvec({0, 0, 0, 1, 0})) <= 1e-12);
      CHECK(vec_gap((s3 / (2.0 * s2)) * h0 - (sig / s2) * h1p + (rho / s2) * h1m +
                        (c / (2.0 * s2)) * h2p + (rho * sig / s2) * h2m,
                    cvec({0, 0, 0, 0, 1})) <= 1e-12);
    }
  }
}

TEST_CASE("trapping-adapted basis combinations and labels") {
  for (const double rho : {0.4, 0.72}) {
    {
      const BasisSet lam = lambda_basis(HalfInt(1), rho);
      const BasisSet s = suitable_basis(HalfInt(1), rho);
      CHECK(vec_gap(lam.vectors.col(0), (s.vectors.col(0) + s.vectors.col(1)) / std::numbers::sqrt2) <=
            1e-14);
      CHECK(vec_gap(lam.vectors.col(2), s.vectors.col(2)) == 0.0);
      CHECK(lam.labels[0] == "lambda+");
    }
    {
      const BasisSet lam = lambda_basis(HalfInt(2), rho);
      const Eigen::MatrixXcd gram = lam.vectors.adjoint() * lam.vectors;
      CHECK((gram - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() <= 1e-12);
      // Suitable-basis amplitudes of lambda0 and lambda+.
      const BasisSet s = suitable_basis(HalfInt(2), rho);
      CoinStateVector psi;
      psi.j = HalfInt(2);
      psi.basis = BasisTag::standard;
      psi.amps = lam.vectors.col(0);
      CHECK(vec_gap(to_basis(psi, s).amps, cvec({0.5, 0, 0, -std::sqrt(3.0) / 2.0, 0})) <= 1e-12);
      psi.amps = lam.vectors.col(1);
      CHECK(vec_gap(to_basis(psi, s).amps,
                    cvec({std::sqrt(3.0 / 8.0), 1.0 / std::numbers::sqrt2, 0, 1.0 / std::sqrt(8.0), 0})) <=
            1e-12);
    }
    CHECK_THROWS_AS(lambda_basis(HalfInt::from_twice(3), rho), UnsupportedError);
  }
}

TEST_CASE("basis conversions round-trip") {
  std::mt19937_64 rng(71);
  for (const int tw : {1, 2, 3, 4}) {
    const HalfInt j = HalfInt::from_twice(tw);
    for (int trial = 0; trial < 20; ++trial) {
      const double rho = random_rho(rng);
      const CoinStateVector psi = random_state(j, rng);
      const CoinStateVector h = to_suitable(psi, rho);
      CHECK(h.basis == BasisTag::suitable);
      CHECK(std::abs(h.amps.norm() - 1.0) <= 1e-12);
      const CoinStateVector back = resolve_to_standard(h, rho);
      CHECK(vec_gap(back.amps, psi.amps) <= 1e-12);
    }
  }
  // Lambda round-trip.
  const CoinStateVector psi = random_state(HalfInt(2), rng);
  const BasisSet lam = lambda_basis(HalfInt(2), 0.6);
  const CoinStateVector l = to_basis(psi, lam);
  CHECK(vec_gap(to_standard(l, lam).amps, psi.amps) <= 1e-12);
}

TEST_CASE("mismatched tags and degenerate parameters are rejected") {
  const HalfInt j(1);
  std::mt19937_64 rng(73);
  const CoinStateVector psi = random_state(j, rng);
  const BasisSet basis = suitable_basis(j, 0.5);

  CoinStateVector tagged = to_basis(psi, basis);
  CHECK_THROWS_AS(to_basis(tagged, basis), std::invalid_argument);  // not standard-tagged
  CoinStateVector wrong = psi;                                      // standard-tagged
  CHECK_THROWS_AS(to_standard(wrong, basis), std::invalid_argument);

  CHECK_THROWS_AS(coin_eigensystem(j, 0.0), std::domain_error);
  CHECK_THROWS_AS(coin_eigensystem(j, 1.0), std::domain_error);
  CHECK_THROWS_AS(suitable_basis(j, 0.0), std::domain_error);
  CHECK_THROWS_AS(lambda_basis(j, 1.0), std::domain_error);
}
