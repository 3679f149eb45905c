#ifndef NSX_INTEGERS_HPP
#define NSX_INTEGERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace nsx {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an enumeration would exceed the configured work ceiling.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Default ceiling on enumeration work (candidate points, values of b, ...).
// Overridable per call; the CLI reads NS_BUDGET / --budget.
inline constexpr unsigned long long kDefaultEnumBudget = 100'000'000ULL;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Quotient a/b when b divides a exactly.
inline Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// num/den in lowest terms with positive denominator; den must be nonzero.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool fits_ulonglong(const Int& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 63;
}

inline unsigned long long to_ulonglong(const Int& x) {
  return static_cast<unsigned long long>(mpz_get_ui(x.get_mpz_t()));
}

}  // namespace nsx

#endif
