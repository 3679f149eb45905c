#ifndef NSX_POLY_HPP
#define NSX_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nsx/integers.hpp"

namespace nsx {

// Dense univariate polynomial over Z.  coeffs()[i] is the coefficient of
// z^i; the vector is empty (zero polynomial) or ends in a nonzero entry.
// Values are immutable in spirit: every operation returns a fresh value.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Int> coeffs);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of a nonzero polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  // Coefficient of z^k, 0 above the degree.
  const Int& coeff(std::size_t k) const;
  const Int& leading_coeff() const;

  // Exact evaluation at an integer point (Horner).
  Int operator()(const Int& x) const;
  // Sign of the value at a rational point, decided in integer arithmetic.
  int sign_at(const Rat& x) const;

  IntPolynomial derivative() const;
  // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  Int content() const;
  // Content divided out; the sign of the leading coefficient is kept.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const Int& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Int& c) { return a *= c; }
  friend IntPolynomial operator*(const Int& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

inline Int evaluate(const IntPolynomial& p, const Int& x) { return p(x); }

// a_i == a_{d-i} for all 0 <= i <= d, absent coefficients read as 0.
// Throws std::invalid_argument when deg(p) > d.
bool is_symmetric(const IntPolynomial& p, std::size_t d);

// Coefficients rise weakly then fall weakly.
bool is_unimodal(const IntPolynomial& p);

// a_i^2 >= a_{i-1} a_{i+1} for all interior indices.
bool is_log_concave(const IntPolynomial& p);

// The section f^<m,ell>: coefficient of z^i is the coefficient of
// z^{i*m+ell} in f.  Throws std::invalid_argument when ell >= m.
IntPolynomial section(const IntPolynomial& f, std::size_t m, std::size_t ell);

// Remainder of lc(g)^e * f modulo g with e even, so the result is a
// positive rational multiple of rem(f, g).  g must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

// Exact quotient; throws std::invalid_argument when b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient; poly_gcd(0, b) is the
// primitive part of b up to sign.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Yun decomposition: p = c * prod f_k^k with the f_k primitive, squarefree
// and pairwise coprime.  Trivial (constant) factors are omitted; the list
// is ordered by increasing multiplicity k.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Ascending human form, e.g. "1 + 19z + 34z^2 + 10z^3"; "0" for zero.
std::string to_string(const IntPolynomial& p);

}  // namespace nsx

#endif
