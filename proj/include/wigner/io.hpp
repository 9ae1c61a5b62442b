#pragma once

#include <map>
#include <string>
#include <vector>

#include "wigner/bases.hpp"
#include "wigner/state.hpp"
#include "wigner/verify.hpp"

namespace wigner {

/// Formats with 17 significant digits, enough to round-trip a double exactly.
std::string format_full(double value);

/// Ordered key/value header written as leading '#' comment lines.
using HeaderFields = std::vector<std::pair<std::string, std::string>>;

std::string profile_to_csv(const ProbabilityProfile& profile, const HeaderFields& header);
std::string profile_to_json(const ProbabilityProfile& profile, const HeaderFields& header);

/// Rows of (v, nu) density samples.
std::string density_to_csv(const std::vector<std::pair<double, double>>& samples,
                           const HeaderFields& header);
std::string density_to_json(const std::vector<std::pair<double, double>>& samples,
                            const HeaderFields& header);

/// Rows of (x, p_inf) over even sites.
std::string trapping_to_csv(const std::vector<std::pair<int, double>>& samples,
                            const HeaderFields& header);
std::string trapping_to_json(const std::vector<std::pair<int, double>>& samples,
                             const HeaderFields& header);

std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace wigner
