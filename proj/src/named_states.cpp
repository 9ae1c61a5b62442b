#include "wigner/named_states.hpp"

#include <stdexcept>

#include "wigner/limitlaw.hpp"

namespace wigner {

namespace {

CoinStateVector unit_state(HalfInt j, BasisTag basis, int index) {
  CoinStateVector state;
  state.j = j;
  state.basis = basis;
  state.amps = Eigen::VectorXcd::Zero(dimension(j));
  state.amps(index) = 1.0;
  return state;
}

int suitable_pair_column(HalfInt j, int n, bool plus) {
  return (j.is_integer() ? 1 : 0) + 2 * (n - 1) + (plus ? 0 : 1);
}

}  // namespace

CoinStateVector named_state(HalfInt j, const std::string& name) {
  const int n_pairs = (j.twice() + 1) / 2;
  if (name == "chi0") {
    if (!j.is_integer()) throw std::invalid_argument("named_state: chi0 requires integer j");
    return unit_state(j, BasisTag::suitable, 0);
  }
  if (name == "chi+" || name == "chi-") {
    return unit_state(j, BasisTag::suitable, suitable_pair_column(j, 1, name == "chi+"));
  }
  for (int n = 1; n <= n_pairs; ++n) {
    const std::string stem = "chi" + std::to_string(n);
    if (name == stem + "+" || name == stem + "-") {
      return unit_state(j, BasisTag::suitable, suitable_pair_column(j, n, name == stem + "+"));
    }
  }
  if (name == "lambda+" || name == "lambda-" || name == "lambda0") {
    if (j == HalfInt(1)) {
      if (name == "lambda0") throw std::invalid_argument("named_state: lambda0 requires j = 2");
      return unit_state(j, BasisTag::lambda, name == "lambda+" ? 0 : 1);
    }
    if (j == HalfInt(2)) {
      return unit_state(j, BasisTag::lambda, name == "lambda0" ? 0 : (name == "lambda+" ? 1 : 2));
    }
    throw std::invalid_argument("named_state: lambda states require j in {1, 2}");
  }
  if (name == "inner_free") return special_state(j, SpecialState::inner_free);
  if (name == "outer_free") return special_state(j, SpecialState::outer_free);
  if (name == "j2_single_peak") return special_state(j, SpecialState::j2_single_peak);
  if (name == "j2_no_slower") return special_state(j, SpecialState::j2_no_slower);
  throw std::invalid_argument("named_state: unknown state '" + name + "' for j = " + to_string(j));
}

std::vector<std::string> named_state_catalog(HalfInt j) {
  std::vector<std::string> names;
  if (j.is_integer()) names.push_back("chi0");
  const int n_pairs = (j.twice() + 1) / 2;
  for (int n = 1; n <= n_pairs; ++n) {
    names.push_back("chi" + std::to_string(n) + "+");
    names.push_back("chi" + std::to_string(n) + "-");
  }
  if (j == HalfInt(1)) {
    names.push_back("lambda+");
    names.push_back("lambda-");
  }
  if (j == HalfInt(2)) {
    names.push_back("lambda0");
    names.push_back("lambda+");
    names.push_back("lambda-");
    names.push_back("j2_single_peak");
    names.push_back("j2_no_slower");
  }
  if (j == HalfInt::from_twice(3)) {
    names.push_back("inner_free");
    names.push_back("outer_free");
  }
  return names;
}

}  // namespace wigner
