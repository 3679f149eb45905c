#ifndef NSX_REFLEXIVE_HPP
#define NSX_REFLEXIVE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nsx/integers.hpp"
#include "nsx/numsys.hpp"
#include "nsx/simplex.hpp"

namespace nsx {

// A finite prefix d_0 < d_1 < ... of a candidate divisor system for a
// numeral system.
struct DivisorPrefix {
  NumeralSystem system;
  std::vector<Int> d;
};

DivisorPrefix make_divisor_prefix(NumeralSystem system, std::vector<Int> d);

// Divisor-system conditions for every 1 <= n <= n_max:
// each d_i (i < n) divides a_n, and 1 + sum_{i<n} a_n/d_i = a_n.
// Throws std::invalid_argument when the prefix is shorter than n_max.
bool check_divisor_system(const DivisorPrefix& dp, std::size_t n_max);

// The unique candidate d_n = a_{n+1} / (c_{n+1} - 1) for a mixed-radix
// system, as a verified prefix of length n_max; nullopt when some entry is
// not an integer (the system is not reflexive).  Throws when the system is
// not mixed radix.  On failure, *failure (if given) describes the first
// non-integral entry.
std::optional<DivisorPrefix> mixed_radix_divisor_system(const NumeralSystem& s,
                                                        std::size_t n_max,
                                                        std::string* failure = nullptr);

// q = (a_n/d_{n-1}, ..., a_n/d_0); normalized volume a_n.  Throws when the
// divisor conditions fail through n.
QSimplex q_from_divisors(const DivisorPrefix& dp, std::size_t n);

// omega through the digit recursion omega(b) = omega(b') + b_a(n-1)
// - floor(b / d_{n-1}); agrees with omega on q_from_divisors.
// Requires 0 <= b < a_n and the divisor conditions through n.
Int omega_recursive(const DivisorPrefix& dp, std::size_t n, const Int& b);

}  // namespace nsx

#endif
