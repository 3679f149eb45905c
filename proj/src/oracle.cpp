#include "nsx/oracle.hpp"

#include <stdexcept>

namespace nsx {

namespace {

Int count_points_in_box(const std::vector<Int>& q, const Int& t) {
  const std::size_t n = q.size();
  Int vol = 1;
  for (const Int& qi : q) vol += qi;
  std::vector<Int> lo(n), x(n);
  Int sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = -t * q[i];
    x[i] = lo[i];
    sum += lo[i];
  }
  Int count = 0;
  for (;;) {
    const Int r0 = t - sum;
    if (r0 >= 0) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] * vol + q[i] * r0 < 0) {
          inside = false;
          break;
        }
      }
      if (inside) ++count;
    }
    std::size_t k = 0;
    while (k < n && x[k] == t) {
      sum += lo[k] - x[k];
      x[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
    ++sum;
  }
  return count;
}

}  // namespace

Int count_lattice_points(const QSimplex& s, const Int& t, unsigned long long budget) {
  if (t < 0) throw std::invalid_argument("count_lattice_points: t must be nonnegative");
  if (t == 0) return 1;
  Int box = 1;
  for (const Int& qi : s.q()) box *= t * qi + t + 1;
  if (!fits_ulonglong(box) || to_ulonglong(box) > budget)
    throw budget_error("count_lattice_points: candidate box " + box.get_str() +
                       " exceeds the enumeration budget");
  return count_points_in_box(s.q(), t);
}

IntPolynomial hstar_from_counts(const std::vector<Int>& counts, std::size_t n) {
  if (counts.size() < n + 1)
    throw std::invalid_argument("hstar_from_counts: need counts for t = 0..n");
  std::vector<Int> h(n + 1, Int(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Int acc = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      Int term = binomial(n + 1, j) * counts[k - j];
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    if (acc < 0)
      throw std::invalid_argument("hstar_from_counts: counts are not an Ehrhart restriction");
    h[k] = std::move(acc);
  }
  return IntPolynomial(std::move(h));
}

std::vector<Rat> ehrhart_polynomial(const std::vector<Int>& counts, std::size_t n) {
  if (counts.size() < n + 1)
    throw std::invalid_argument("ehrhart_polynomial: need counts for t = 0..n");
  // Newton form on the nodes 0..n: sum_k (Delta^k counts[0] / k!) * (t)_k.
  std::vector<Int> row(counts.begin(), counts.begin() + static_cast<long>(n) + 1);
  std::vector<Rat> coeffs(n + 1, Rat(0));
  std::vector<Rat> basis{Rat(1)};
  Int kfact = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) kfact *= static_cast<long>(k);
    Rat a = make_rat(row[0], kfact);
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += a * basis[i];
    if (k == n) break;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
    std::vector<Rat> next(basis.size() + 1, Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= Rat(static_cast<long>(k)) * basis[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

Rat evaluate_rational(const std::vector<Rat>& coeffs, const Int& t) {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= Rat(t);
    acc += *it;
  }
  return acc;
}

EhrhartTable build_ehrhart_table(const QSimplex& q, std::optional<Int> t_max,
                                 unsigned long long budget) {
  const std::size_t n = q.dim();
  const Int tmax = t_max.value_or(Int(static_cast<long>(n) + 1));
  if (tmax < static_cast<long>(n))
    throw std::invalid_argument("build_ehrhart_table: t_max must be at least dim");
  std::vector<Int> counts;
  for (Int t = 0; t <= tmax; ++t) counts.push_back(count_lattice_points(q, t, budget));
  for (std::size_t i = 0; i + 1 < counts.size(); ++i)
    if (counts[i] >= counts[i + 1])
      throw std::domain_error("build_ehrhart_table: counts fail to strictly increase");
  std::vector<Rat> coeffs = ehrhart_polynomial(counts, n);
  for (std::size_t t = n + 1; t < counts.size(); ++t)
    if (evaluate_rational(coeffs, Int(static_cast<long>(t))) != Rat(counts[t]))
      throw std::domain_error("build_ehrhart_table: interpolant misses a held-out count");
  IntPolynomial h = hstar_from_counts(counts, n);
  return EhrhartTable{q, std::move(counts), std::move(coeffs), std::move(h)};
}

bool is_ehrhart_positive(const EhrhartTable& table) {
  for (const Rat& c : table.ehrhart_coeffs)
    if (sgn(c) <= 0) return false;
  return true;
}

}  // namespace nsx
