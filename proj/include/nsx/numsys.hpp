#ifndef NSX_NUMSYS_HPP
#define NSX_NUMSYS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nsx/integers.hpp"

namespace nsx {

enum class SystemKind { base_r, factoradic, fibonacci, mixed_radix, explicit_places };

// A positional numeral system: place values a_0 = 1 < a_1 < a_2 < ...
// Base-r, factoradic and Fibonacci systems are unbounded; mixed-radix and
// explicit-places systems are finite prefixes and throw std::out_of_range
// past the data they were given.
class NumeralSystem {
 public:
  static NumeralSystem base_r(Int r);                          // r >= 2
  static NumeralSystem factoradic();                           // a_n = (n+1)!
  static NumeralSystem fibonacci();                            // a = 1, 2, 3, 5, 8, ...
  static NumeralSystem mixed_radix(std::vector<Int> radices);  // c_0 = 1, rest > 1
  static NumeralSystem explicit_places(std::vector<Int> places);

  SystemKind kind() const { return kind_; }
  Int place_value(std::size_t n) const;
  // a_0 .. a_n as one ladder.
  std::vector<Int> place_values(std::size_t n) const;
  // The shortest ladder a_0 .. a_m with a_m > bound.
  std::vector<Int> places_exceeding(const Int& bound) const;
  // Number of known places for finite-prefix systems, nullopt if unbounded.
  std::optional<std::size_t> place_count() const;
  // Radices c_0 .. c_n when the known places divide each other in sequence;
  // nullopt otherwise (e.g. Fibonacci) or past a finite prefix.
  std::optional<std::vector<Int>> radices(std::size_t n) const;

  std::string spec_string() const;

  friend bool operator==(const NumeralSystem&, const NumeralSystem&) = default;

 private:
  NumeralSystem() = default;
  SystemKind kind_ = SystemKind::base_r;
  Int base_ = 0;                // base_r
  std::vector<Int> radices_;    // mixed_radix, including the leading 1
  std::vector<Int> places_;     // explicit_places
};

// A digit string in a system, little-endian: digits[i] sits at place i.
struct Numeral {
  NumeralSystem system;
  std::vector<Int> digits;
  std::size_t width() const { return digits.size(); }
};

// Greedy division encoding; canonical by construction.  With a width the
// result is zero-padded and b must satisfy b < a_width.
Numeral encode(const NumeralSystem& s, const Int& b, std::optional<std::size_t> width = {});

// Inverse of encode on canonical numerals; throws std::invalid_argument on
// an invalid digit string.
Int decode(const Numeral& num);

// Canonical validity: every prefix sum sum_{j<=i} digits[j]*a_j < a_{i+1}.
bool is_valid(const Numeral& num);

// Big-endian rendering; "0" for the empty numeral.  Digits above 9 switch
// the whole string to comma-separated form.
std::string to_string(const Numeral& num);

// Parses plain ("10210") or comma-separated ("1,0,12") big-endian digits.
Numeral numeral_from_string(const NumeralSystem& s, const std::string& text);

// "base:R" | "factoradic" | "fib" | "mixed:c1,c2,..." | "places:a0,a1,...".
NumeralSystem parse_system_spec(const std::string& spec);

}  // namespace nsx

#endif
