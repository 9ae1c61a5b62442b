#pragma once

#include <string>
#include <vector>

#include "wigner/state.hpp"

namespace wigner {

/// Resolves a state name for spin j. Names cover the suitable basis vectors
/// (chi0, chi1+, chi1-, ..., with chi+ and chi- as aliases for the first
/// pair), the lambda basis vectors (lambda0, lambda+, lambda-), and the
/// documented special states (inner_free, outer_free, j2_single_peak,
/// j2_no_slower). Throws std::invalid_argument for unknown or mismatched names.
CoinStateVector named_state(HalfInt j, const std::string& name);

/// Every name resolvable for the given j, in canonical order.
std::vector<std::string> named_state_catalog(HalfInt j);

}  // namespace wigner
