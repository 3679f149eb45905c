#ifndef NSX_BASER_HPP
#define NSX_BASER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nsx/integers.hpp"
#include "nsx/poly.hpp"
#include "nsx/simplex.hpp"

namespace nsx {

// The base-r n-simplex: q = ((r-1), (r-1)r, ..., (r-1)r^{n-1}), of
// normalized volume r^n.
struct BaseRSimplex {
  Int r;
  std::size_t n;
  QSimplex q;
  BaseRSimplex(Int r, std::size_t n);
};

// f_{(r,n)} = (1 + z + ... + z^{r-1})^n.
IntPolynomial f_poly(const Int& r, std::size_t n);

// h* as the generating polynomial of nasc_r(b) over 0 <= b < r^n.
IntPolynomial hstar_nasc(const Int& r, std::size_t n,
                         unsigned long long budget = kDefaultEnumBudget);

// h* assembled from the sections of f_{(r,n)}:
// f^<r-1,0> + z * sum_{ell=1}^{r-2} f^<r-1,ell>.
IntPolynomial hstar_sections(const Int& r, std::size_t n);

// The symmetric decomposition h* = a(z) + z b(z); a is palindromic of
// degree n and b of degree n-1 (b = 0 when r = 2).
std::pair<IntPolynomial, IntPolynomial> symmetric_decomposition(const Int& r, std::size_t n);

// Number of length-t compositions of m with parts in {1, ..., max_part}.
Int comp_count(std::size_t t, const Int& m, std::size_t max_part);

// Coefficient of z^k in h*(B_{(r,n)}) through composition counts:
// comp_n(n + k(r-1); [r]) + sum_{ell=1}^{r-2} comp_n(n + (k-1)(r-1) + ell; [r]).
Int hstar_coeff_via_comps(const Int& r, std::size_t n, std::size_t k);

// Left-multiplication by the (r-1) x (r-1) matrix with z+1 on the diagonal,
// 1 above and z below; maps the section vector of f_{(r,n-1)} to that of
// f_{(r,n)}.
std::vector<IntPolynomial> apply_G(const Int& r, const std::vector<IntPolynomial>& v);

// Left-multiplication by the matrix with 1 on and above the diagonal and z
// below; on a section vector the final entry becomes h*(B_{(r,n)}).
std::vector<IntPolynomial> apply_H(const Int& r, const std::vector<IntPolynomial>& v);

// The sections of f_{(r,n)} ordered (f^<r-1,r-2>, ..., f^<r-1,1>, f^<r-1,0>).
// Construction checks the reconstruction identity
// f(z) = sum_ell z^ell f^<r-1,ell>(z^{r-1}).
struct SectionSequence {
  Int r;
  std::size_t n;
  std::vector<IntPolynomial> polys;
};

SectionSequence section_sequence(const Int& r, std::size_t n);

}  // namespace nsx

#endif
