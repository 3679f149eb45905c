#include "nsx/simplex.hpp"

#include <stdexcept>

namespace nsx {

QSimplex::QSimplex(std::vector<Int> q) : q_(std::move(q)) {
  if (q_.empty()) throw std::invalid_argument("QSimplex: q must be nonempty");
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (q_[i] < 1) throw std::invalid_argument("QSimplex: entries must be positive");
    if (i > 0 && q_[i] < q_[i - 1])
      throw std::invalid_argument("QSimplex: q must be weakly increasing");
  }
}

Int normalized_volume(const QSimplex& s) {
  Int vol = 1;
  for (const Int& qi : s.q()) vol += qi;
  return vol;
}

bool is_reflexive(const QSimplex& s) {
  const Int vol = normalized_volume(s);
  for (const Int& qi : s.q())
    if (!divides(qi, vol - qi)) return false;
  return true;
}

Int omega(const QSimplex& s, const Int& b) {
  const Int vol = normalized_volume(s);
  if (b < 0 || b > vol - 1) throw std::out_of_range("omega: b must lie in [0, sum q]");
  Int acc = b;
  Int tmp;
  for (const Int& qi : s.q()) {
    tmp = qi * b;
    mpz_fdiv_q(tmp.get_mpz_t(), tmp.get_mpz_t(), vol.get_mpz_t());
    acc -= tmp;
  }
  return acc;
}

IntPolynomial hstar(const QSimplex& s) {
  const Int vol = normalized_volume(s);
  std::vector<Int> counts(s.dim() + 1, Int(0));
  Int tmp;
  for (Int b = 0; b < vol; ++b) {
    Int w = b;
    for (const Int& qi : s.q()) {
      tmp = qi * b;
      mpz_fdiv_q(tmp.get_mpz_t(), tmp.get_mpz_t(), vol.get_mpz_t());
      w -= tmp;
    }
    const std::size_t k = w.get_ui();
    if (k >= counts.size()) counts.resize(k + 1, Int(0));
    ++counts[k];
  }
  return IntPolynomial(std::move(counts));
}

WeightData weight_factor(const QSimplex& s) {
  WeightData out;
  out.weight.reserve(s.dim() + 1);
  out.weight.emplace_back(1);
  out.weight.insert(out.weight.end(), s.q().begin(), s.q().end());
  out.factor = 0;
  for (const Int& w : out.weight) out.factor = int_gcd(out.factor, w);
  out.reduced.reserve(out.weight.size());
  for (const Int& w : out.weight) out.reduced.push_back(exact_div(w, out.factor));
  return out;
}

}  // namespace nsx
