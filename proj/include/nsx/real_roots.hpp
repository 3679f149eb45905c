#ifndef NSX_REAL_ROOTS_HPP
#define NSX_REAL_ROOTS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nsx/poly.hpp"

namespace nsx {

// Disjoint isolating intervals for the distinct real roots of a polynomial,
// in strictly increasing order, one multiplicity per interval.  An interval
// with lo == hi pins a rational root exactly; otherwise the root lies in
// the open interval and neither endpoint is a root.
struct RootIsolation {
  std::vector<std::pair<Rat, Rat>> intervals;
  std::vector<int> multiplicities;
  std::size_t size() const { return intervals.size(); }
};

// Sturm chain of p: starts with the primitive part of p, then its
// derivative, then successive negated remainders (content-reduced, exact).
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

int sign_variations_at(const std::vector<IntPolynomial>& chain, const Rat& x);
int sign_variations_at_neg_inf(const std::vector<IntPolynomial>& chain);
int sign_variations_at_pos_inf(const std::vector<IntPolynomial>& chain);

// Number of real roots counted WITH multiplicity (Sturm count on each
// squarefree factor).  Throws std::invalid_argument on the zero polynomial.
unsigned real_root_count(const IntPolynomial& p);

// real_root_count(p) == deg(p); constants are real-rooted by convention.
bool is_real_rooted(const IntPolynomial& p);

// Throws std::invalid_argument on the zero polynomial.
RootIsolation isolate_real_roots(const IntPolynomial& p);

// Shrinks every isolating interval of p to width <= max_width (> 0).
void refine_isolation(const IntPolynomial& p, RootIsolation& iso, const Rat& max_width);

// Whether g interlaces f in the root-alternation sense: weakly (<= chain)
// or, when strict is set, strictly (< chain, which forces gcd(f, g) to be
// constant).  Both polynomials must be nonzero and real-rooted with
// deg(f) - deg(g) in {0, 1}; otherwise throws std::invalid_argument.
bool interlaces(const IntPolynomial& g, const IntPolynomial& f, bool strict);

}  // namespace nsx

#endif
