#ifndef NSX_ORACLE_HPP
#define NSX_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nsx/integers.hpp"
#include "nsx/poly.hpp"
#include "nsx/simplex.hpp"

namespace nsx {

// Exact number of lattice points in the t-th dilate of the simplex, by
// enumeration of the bounding box prod [-t q_i, t] with a barycentric
// membership test.  Throws budget_error when the box exceeds the budget.
Int count_lattice_points(const QSimplex& s, const Int& t,
                         unsigned long long budget = kDefaultEnumBudget);

// h*_k = sum_{j<=k} (-1)^j C(n+1, j) counts[k-j] for k = 0..n.  Throws
// std::invalid_argument when some h*_k comes out negative (the counts are
// not the restriction of an Ehrhart function of a lattice polytope).
IntPolynomial hstar_from_counts(const std::vector<Int>& counts, std::size_t n);

// Coefficients (constant term first, n+1 entries) of the unique polynomial
// of degree <= n through (t, counts[t]) for t = 0..n, exact rationals.
std::vector<Rat> ehrhart_polynomial(const std::vector<Int>& counts, std::size_t n);

Rat evaluate_rational(const std::vector<Rat>& coeffs, const Int& t);

// Counts for dilates 0..t_max together with the interpolated Ehrhart
// polynomial and the derived h*.
struct EhrhartTable {
  QSimplex q;
  std::vector<Int> counts;
  std::vector<Rat> ehrhart_coeffs;
  IntPolynomial hstar;
};

// Runs the whole pipeline; t_max defaults to n+1 so the out-of-sample
// prediction check can run.  Requires t_max >= n.  Throws
// std::domain_error when the counts are degenerate (not strictly
// increasing) or the interpolant misses a held-out count.
EhrhartTable build_ehrhart_table(const QSimplex& q, std::optional<Int> t_max = {},
                                 unsigned long long budget = kDefaultEnumBudget);

// Every Ehrhart coefficient is strictly positive.
bool is_ehrhart_positive(const EhrhartTable& table);

}  // namespace nsx

#endif
