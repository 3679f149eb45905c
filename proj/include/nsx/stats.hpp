#ifndef NSX_STATS_HPP
#define NSX_STATS_HPP

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "nsx/integers.hpp"
#include "nsx/poly.hpp"

namespace nsx {

// A permutation of [n], one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> letters);
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }  // 0-based position
  const std::vector<int>& letters() const { return letters_; }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> letters_;
};

struct DescentStats {
  std::size_t des;
  std::size_t maxdes;  // largest descent position (1-based), 0 for the identity
};

// Descents in the pi_i > pi_{i+1} convention.
DescentStats descent_stats(const Permutation& p);

// The (b+1)-th permutation of [n] in lexicographic order, built from the
// factoradic digits of b.  Requires b < n!.
Permutation perm_of_lex_rank(std::size_t n, const Int& b);

// Eulerian polynomial A_n by full S_n enumeration; throws budget_error when
// n exceeds the enumeration budget.
IntPolynomial eulerian_poly(std::size_t n, std::size_t budget = 10);

// Max-descent polynomial B_n from the closed coefficient form
// B(n,0) = 1, B(n,k) = (n)_{k-1} (n-k).
IntPolynomial maxdes_poly(std::size_t n);

// Digit statistics of a width-digit base-r numeral.
struct DigitStats {
  std::set<std::size_t> support;          // places with nonzero digit
  std::map<std::size_t, Rat> heights;     // average weighted height, on support
  std::set<std::size_t> nonascents;       // support places with height >= 0
  std::size_t nasc() const { return nonascents.size(); }
};

// Requires b < r^width.
DigitStats digit_stats(const Int& b, const Int& r, std::size_t width);

}  // namespace nsx

#endif
