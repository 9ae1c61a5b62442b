#pragma once

#include <stdexcept>
#include <string>

namespace wigner {

/// Exact half-integer (angular momentum labels j, m, n), stored as twice the value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  /// Implicit construction from a whole integer.
  constexpr HalfInt(int whole) : twice_(2 * whole) {}

  /// Builds from twice the value, so from_twice(3) is 3/2.
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * twice_; }

  /// Exact integer value; throws std::domain_error for proper half-integers.
  constexpr int as_integer() const {
    if (!is_integer()) throw std::domain_error("HalfInt: value is not a whole integer");
    return twice_ / 2;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

 private:
  int twice_ = 0;
};

/// Number of coin components, 2j + 1.
constexpr int dimension(HalfInt j) { return j.twice() + 1; }

/// Magnetic number of the 0-based component index k, ordered m = +j, j-1, ..., -j.
constexpr HalfInt component_m(HalfInt j, int k) { return HalfInt::from_twice(j.twice() - 2 * k); }

/// 0-based component index of magnetic number m under the descending ordering.
constexpr int component_index(HalfInt j, HalfInt m) { return (j.twice() - m.twice()) / 2; }

/// Parses spin literals such as "2", "3/2" or "1/2".
HalfInt parse_half_int(const std::string& text);

/// Formats as "2" or "3/2".
std::string to_string(HalfInt h);

}  // namespace wigner
