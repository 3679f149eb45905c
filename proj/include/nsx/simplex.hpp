#ifndef NSX_SIMPLEX_HPP
#define NSX_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "nsx/integers.hpp"
#include "nsx/poly.hpp"

namespace nsx {

// The q-vector of the simplex conv(e_1, ..., e_n, -q): a weakly increasing
// sequence of positive integers, validated at construction.
class QSimplex {
 public:
  explicit QSimplex(std::vector<Int> q);
  std::size_t dim() const { return q_.size(); }
  const std::vector<Int>& q() const { return q_; }
  friend bool operator==(const QSimplex&, const QSimplex&) = default;

 private:
  std::vector<Int> q_;
};

// 1 + q_1 + ... + q_n.
Int normalized_volume(const QSimplex& s);

// q_i divides 1 + sum_{j != i} q_j for every i.
bool is_reflexive(const QSimplex& s);

// omega(b) = b - sum_i floor(q_i b / (1 + sum q)).  Requires 0 <= b <= sum q.
Int omega(const QSimplex& s, const Int& b);

// h*(z) = sum_{b=0}^{sum q} z^{omega(b)}; coefficients add up to the
// normalized volume.
IntPolynomial hstar(const QSimplex& s);

// Weight (1, q_1, ..., q_n) with its gcd factored out.
struct WeightData {
  std::vector<Int> weight;
  Int factor;
  std::vector<Int> reduced;
};

WeightData weight_factor(const QSimplex& s);

}  // namespace nsx

#endif
