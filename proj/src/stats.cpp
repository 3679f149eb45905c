#include "nsx/stats.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nsx/numsys.hpp"

namespace nsx {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<bool> seen(letters_.size(), false);
  for (int x : letters_) {
    if (x < 1 || static_cast<std::size_t>(x) > letters_.size() || seen[x - 1])
      throw std::invalid_argument("Permutation: letters must be a bijection on [n]");
    seen[x - 1] = true;
  }
}

DescentStats descent_stats(const Permutation& p) {
  DescentStats out{0, 0};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) {
      ++out.des;
      out.maxdes = i + 1;
    }
  }
  return out;
}

Permutation perm_of_lex_rank(std::size_t n, const Int& b) {
  if (n == 0) throw std::invalid_argument("perm_of_lex_rank: n must be positive");
  if (b < 0 || b >= factorial(static_cast<unsigned long>(n)))
    throw std::invalid_argument("perm_of_lex_rank: rank out of range");
  // Factoradic digits of b are the Lehmer code, top place first.
  Numeral code = encode(NumeralSystem::factoradic(), b, n - 1);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> letters;
  letters.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t idx = j + 1 < n ? code.digits[n - 2 - j].get_ui() : 0;
    letters.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return Permutation(std::move(letters));
}

IntPolynomial eulerian_poly(std::size_t n, std::size_t budget) {
  if (n == 0) throw std::invalid_argument("eulerian_poly: n must be positive");
  if (n > budget || n > 20) throw budget_error("eulerian_poly: enumeration budget exceeded");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<unsigned long long> counts(n, 0);
  do {
    std::size_t des = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++des;
    ++counts[des];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Int> coeffs;
  coeffs.reserve(counts.size());
  for (unsigned long long c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial maxdes_poly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("maxdes_poly: n must be positive");
  std::vector<Int> coeffs(n, Int(0));
  coeffs[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Int falling = 1;  // (n)_{k-1}
    for (std::size_t i = 0; i + 1 < k; ++i) falling *= static_cast<long>(n - i);
    coeffs[k] = falling * static_cast<long>(n - k);
  }
  return IntPolynomial(std::move(coeffs));
}

DigitStats digit_stats(const Int& b, const Int& r, std::size_t width) {
  if (r < 2) throw std::invalid_argument("digit_stats: radix must be >= 2");
  if (width == 0) throw std::invalid_argument("digit_stats: width must be positive");
  if (b < 0 || b >= int_pow(r, width)) throw std::out_of_range("digit_stats: b out of range");
  std::vector<Int> digits(width);
  Int rem = b;
  for (std::size_t i = 0; i < width; ++i) {
    Int q;
    mpz_fdiv_qr(q.get_mpz_t(), digits[i].get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t());
    rem = std::move(q);
  }
  DigitStats out;
  for (std::size_t i = 0; i < width; ++i) {
    if (digits[i] == 0) continue;
    out.support.insert(i);
    Rat height;
    if (i == 0) {
      height = 1;
    } else {
      Int num = 0;
      Int rpow = 1;
      for (std::size_t j = 0; j < i; ++j, rpow *= r) num += (digits[i] - digits[j]) * rpow;
      height = make_rat(num, Int(static_cast<long>(i)));
    }
    if (sgn(height) >= 0) out.nonascents.insert(i);
    out.heights.emplace(i, std::move(height));
  }
  return out;
}

}  // namespace nsx
