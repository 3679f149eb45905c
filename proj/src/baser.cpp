#include "nsx/baser.hpp"

#include <stdexcept>

namespace nsx {

namespace {

void require_rn(const Int& r, std::size_t n) {
  if (r < 2) throw std::invalid_argument("base-r simplex: r must be >= 2");
  if (n == 0) throw std::invalid_argument("base-r simplex: n must be positive");
}

std::vector<Int> base_r_q(const Int& r, std::size_t n) {
  require_rn(r, n);
  std::vector<Int> q(n);
  Int v = r - 1;
  for (std::size_t k = 0; k < n; ++k, v *= r) q[k] = v;
  return q;
}

}  // namespace

BaseRSimplex::BaseRSimplex(Int r_, std::size_t n_)
    : r(std::move(r_)), n(n_), q(base_r_q(r, n)) {}

IntPolynomial f_poly(const Int& r, std::size_t n) {
  require_rn(r, n);
  if (!mpz_fits_ulong_p(r.get_mpz_t()))
    throw std::overflow_error("f_poly: r too large to expand");
  IntPolynomial base(std::vector<Int>(r.get_ui(), Int(1)));
  IntPolynomial f = base;
  for (std::size_t k = 1; k < n; ++k) f *= base;
  return f;
}

IntPolynomial hstar_nasc(const Int& r, std::size_t n, unsigned long long budget) {
  require_rn(r, n);
  Int total = int_pow(r, n);
  if (!fits_ulonglong(total) || to_ulonglong(total) > budget)
    throw budget_error("hstar_nasc: r^n exceeds the enumeration budget");
  const long long R = static_cast<long long>(r.get_ui());
  const long long N = static_cast<long long>(n);
  std::vector<long long> rpow(n + 1), rep(n + 1);  // r^i and 1 + r + ... + r^{i-1}
  rpow[0] = 1;
  rep[0] = 0;
  for (long long i = 1; i <= N; ++i) {
    rpow[i] = rpow[i - 1] * R;
    rep[i] = rep[i - 1] + rpow[i - 1];
  }
  const long long count = rpow[n];
  std::vector<unsigned long long> hist(n + 1, 0);
  std::vector<long long> digit(n);
  for (long long b = 0; b < count; ++b) {
    long long bb = b;
    for (long long i = 0; i < N; ++i) {
      digit[i] = bb % R;
      bb /= R;
    }
    std::size_t nasc = digit[0] != 0 ? 1 : 0;
    for (long long i = 1; i < N; ++i) {
      // Place i is a nonascent iff d_i (1 + r + ... + r^{i-1}) >= b mod r^i,
      // the integer form of awheight(i) >= 0.
      if (digit[i] != 0 && digit[i] * rep[i] >= b % rpow[i]) ++nasc;
    }
    ++hist[nasc];
  }
  std::vector<Int> coeffs;
  coeffs.reserve(hist.size());
  for (unsigned long long c : hist) coeffs.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial hstar_sections(const Int& r, std::size_t n) {
  require_rn(r, n);
  IntPolynomial f = f_poly(r, n);
  const std::size_t m = static_cast<std::size_t>(r.get_ui()) - 1;
  IntPolynomial h = section(f, m, 0);
  for (std::size_t ell = 1; ell < m; ++ell)
    h += IntPolynomial::monomial(1, 1) * section(f, m, ell);
  return h;
}

std::pair<IntPolynomial, IntPolynomial> symmetric_decomposition(const Int& r, std::size_t n) {
  require_rn(r, n);
  IntPolynomial f = f_poly(r, n);
  const std::size_t m = static_cast<std::size_t>(r.get_ui()) - 1;
  IntPolynomial a = section(f, m, 0);
  IntPolynomial b;
  for (std::size_t ell = 1; ell < m; ++ell) b += section(f, m, ell);
  return {std::move(a), std::move(b)};
}

Int comp_count(std::size_t t, const Int& m, std::size_t max_part) {
  if (t == 0 || max_part == 0)
    throw std::invalid_argument("comp_count: t and max_part must be positive");
  if (m < static_cast<long>(t) || m > Int(static_cast<long>(t)) * static_cast<long>(max_part))
    return 0;
  const std::size_t target = static_cast<std::size_t>(m.get_ui());
  std::vector<Int> ways(target + 1, Int(0));
  ways[0] = 1;
  for (std::size_t step = 0; step < t; ++step) {
    std::vector<Int> next(target + 1, Int(0));
    for (std::size_t sum = 0; sum <= target; ++sum) {
      if (ways[sum] == 0) continue;
      for (std::size_t part = 1; part <= max_part && sum + part <= target; ++part)
        next[sum + part] += ways[sum];
    }
    ways = std::move(next);
  }
  return ways[target];
}

Int hstar_coeff_via_comps(const Int& r, std::size_t n, std::size_t k) {
  require_rn(r, n);
  if (k > n) throw std::invalid_argument("hstar_coeff_via_comps: k out of range");
  if (!mpz_fits_ulong_p(r.get_mpz_t()))
    throw std::overflow_error("hstar_coeff_via_comps: r too large");
  const std::size_t R = static_cast<std::size_t>(r.get_ui());
  const long N = static_cast<long>(n), K = static_cast<long>(k);
  Int total = comp_count(n, Int(N + K * (static_cast<long>(R) - 1)), R);
  for (std::size_t ell = 1; ell + 1 < R; ++ell)
    total += comp_count(
        n, Int(N + (K - 1) * (static_cast<long>(R) - 1) + static_cast<long>(ell)), R);
  return total;
}

std::vector<IntPolynomial> apply_G(const Int& r, const std::vector<IntPolynomial>& v) {
  if (r < 2 || !mpz_fits_ulong_p(r.get_mpz_t()) ||
      v.size() != static_cast<std::size_t>(r.get_ui()) - 1)
    throw std::invalid_argument("apply_G: expected r-1 polynomials");
  const IntPolynomial z = IntPolynomial::monomial(1, 1);
  std::vector<IntPolynomial> suffix(v.size() + 1);  // suffix[i] = sum_{j>=i} v_j
  for (std::size_t i = v.size(); i-- > 0;) suffix[i] = suffix[i + 1] + v[i];
  std::vector<IntPolynomial> out(v.size());
  IntPolynomial prefix;  // sum_{j<i} v_j
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = z * (prefix + v[i]) + suffix[i];
    prefix += v[i];
  }
  return out;
}

std::vector<IntPolynomial> apply_H(const Int& r, const std::vector<IntPolynomial>& v) {
  if (r < 2 || !mpz_fits_ulong_p(r.get_mpz_t()) ||
      v.size() != static_cast<std::size_t>(r.get_ui()) - 1)
    throw std::invalid_argument("apply_H: expected r-1 polynomials");
  const IntPolynomial z = IntPolynomial::monomial(1, 1);
  std::vector<IntPolynomial> suffix(v.size() + 1);
  for (std::size_t i = v.size(); i-- > 0;) suffix[i] = suffix[i + 1] + v[i];
  std::vector<IntPolynomial> out(v.size());
  IntPolynomial prefix;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = z * prefix + suffix[i];
    prefix += v[i];
  }
  return out;
}

SectionSequence section_sequence(const Int& r, std::size_t n) {
  require_rn(r, n);
  IntPolynomial f = f_poly(r, n);
  const std::size_t m = static_cast<std::size_t>(r.get_ui()) - 1;
  SectionSequence seq{r, n, {}};
  seq.polys.reserve(m);
  for (std::size_t ell = m; ell-- > 0;) seq.polys.push_back(section(f, m, ell));
  // Reconstruction identity: f(z) = sum_ell z^ell f^<m,ell>(z^m).
  IntPolynomial rebuilt;
  for (std::size_t ell = 0; ell < m; ++ell) {
    const IntPolynomial& sec = seq.polys[m - 1 - ell];
    std::vector<Int> inflated(ell + 1 + static_cast<std::size_t>(std::max(sec.degree(), 0)) * m,
                              Int(0));
    for (std::size_t i = 0; i < sec.coeffs().size(); ++i) inflated[i * m + ell] = sec.coeffs()[i];
    rebuilt += IntPolynomial(std::move(inflated));
  }
  if (rebuilt != f) throw std::logic_error("section_sequence: reconstruction identity failed");
  return seq;
}

}  // namespace nsx
