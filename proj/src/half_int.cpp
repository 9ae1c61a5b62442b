#include "wigner/half_int.hpp"

#include <charconv>

namespace wigner {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw std::invalid_argument("HalfInt: cannot parse '" + std::string(text) + "'");
  return value;
}

}  // namespace

HalfInt parse_half_int(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return HalfInt(parse_int(text));
  const int num = parse_int(std::string_view(text).substr(0, slash));
  const int den = parse_int(std::string_view(text).substr(slash + 1));
  if (den != 2) throw std::invalid_argument("HalfInt: denominator must be 2 in '" + text + "'");
  return HalfInt::from_twice(num);
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.as_integer());
  return std::to_string(h.twice()) + "/2";
}

}  // namespace wigner
