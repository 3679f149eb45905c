#include "nsx/reflexive.hpp"

#include <stdexcept>

namespace nsx {

namespace {

Int omega_rec_impl(const DivisorPrefix& dp, std::size_t n, const Int& b,
                   const std::vector<Int>& places) {
  if (n == 1) return omega(q_from_divisors(dp, 1), b);
  const Int& a_prev = places[n - 1];
  Int digit = floor_div(b, a_prev);
  Int bprime = b - digit * a_prev;
  return omega_rec_impl(dp, n - 1, bprime, places) + digit - floor_div(b, dp.d[n - 1]);
}

}  // namespace

DivisorPrefix make_divisor_prefix(NumeralSystem system, std::vector<Int> d) {
  if (d.empty()) throw std::invalid_argument("DivisorPrefix: empty divisor prefix");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1) throw std::invalid_argument("DivisorPrefix: entries must be positive");
    if (i > 0 && d[i] <= d[i - 1])
      throw std::invalid_argument("DivisorPrefix: entries must strictly increase");
  }
  return DivisorPrefix{std::move(system), std::move(d)};
}

bool check_divisor_system(const DivisorPrefix& dp, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("check_divisor_system: n_max must be positive");
  if (dp.d.size() < n_max)
    throw std::invalid_argument("check_divisor_system: divisor prefix shorter than n_max");
  std::vector<Int> places = dp.system.place_values(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Int& an = places[n];
    Int sum = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (!divides(dp.d[i], an)) return false;
      sum += exact_div(an, dp.d[i]);
    }
    if (sum != an) return false;
  }
  return true;
}

std::optional<DivisorPrefix> mixed_radix_divisor_system(const NumeralSystem& s,
                                                        std::size_t n_max,
                                                        std::string* failure) {
  if (n_max == 0)
    throw std::invalid_argument("mixed_radix_divisor_system: n_max must be positive");
  if (auto count = s.place_count(); count && n_max >= *count)
    throw std::out_of_range("mixed_radix_divisor_system: radix prefix shorter than n_max");
  auto cs = s.radices(n_max);
  if (!cs) throw std::invalid_argument("mixed_radix_divisor_system: system is not mixed radix");
  std::vector<Int> places = s.place_values(n_max);
  std::vector<Int> d;
  d.reserve(n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    Int den = (*cs)[n + 1] - 1;
    if (!divides(den, places[n + 1])) {
      if (failure)
        *failure = "d_" + std::to_string(n) + " = " + places[n + 1].get_str() + "/" +
                   den.get_str() + " is not an integer";
      return std::nullopt;
    }
    d.push_back(exact_div(places[n + 1], den));
  }
  DivisorPrefix dp = make_divisor_prefix(s, std::move(d));
  if (!check_divisor_system(dp, n_max)) {
    if (failure) *failure = "candidate fails the divisor-system conditions";
    return std::nullopt;
  }
  return dp;
}

QSimplex q_from_divisors(const DivisorPrefix& dp, std::size_t n) {
  if (!check_divisor_system(dp, n))
    throw std::invalid_argument("q_from_divisors: divisor conditions fail");
  const Int an = dp.system.place_value(n);
  std::vector<Int> q(n);
  for (std::size_t k = 0; k < n; ++k) q[k] = exact_div(an, dp.d[n - 1 - k]);
  return QSimplex(std::move(q));
}

Int omega_recursive(const DivisorPrefix& dp, std::size_t n, const Int& b) {
  if (!check_divisor_system(dp, n))
    throw std::invalid_argument("omega_recursive: divisor conditions fail");
  std::vector<Int> places = dp.system.place_values(n);
  if (b < 0 || b >= places[n]) throw std::out_of_range("omega_recursive: b out of range");
  return omega_rec_impl(dp, n, b, places);
}

}  // namespace nsx
