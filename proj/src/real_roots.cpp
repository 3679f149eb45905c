#include "nsx/real_roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsx {

namespace {

// A single real algebraic number: the unique root of the squarefree
// polynomial `poly` in [lo, hi].  lo == hi means the root is rational and
// equals lo; otherwise the interval is open and its endpoints are not roots
// of `poly`.
struct AlgRoot {
  IntPolynomial poly;
  Rat lo, hi;
  int mult = 1;
  bool is_point() const { return lo == hi; }
};

// One bisection step; may collapse the interval to a point root.
void halve(AlgRoot& x) {
  if (x.is_point()) return;
  Rat mid = (x.lo + x.hi) / 2;
  int sm = x.poly.sign_at(mid);
  if (sm == 0) {
    x.lo = mid;
    x.hi = mid;
    return;
  }
  // The interval holds exactly one simple root, so endpoint signs differ.
  if (sm == x.poly.sign_at(x.lo))
    x.lo = mid;
  else
    x.hi = mid;
}

int distinct_roots_between(const IntPolynomial& p, const Rat& a, const Rat& b) {
  auto chain = sturm_chain(p);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// Total order on real algebraic numbers.  Refines the two intervals until
// they are disjoint, or certifies equality through a shared root of the
// gcd of the defining polynomials.
int compare(AlgRoot& x, AlgRoot& y) {
  if (&x == &y) return 0;
  bool gcd_checked = false;
  for (;;) {
    if (x.is_point() && y.is_point()) return cmp(x.lo, y.lo);
    if (x.is_point()) {
      if (x.lo <= y.lo) return -1;
      if (x.lo >= y.hi) return 1;
      if (y.poly.sign_at(x.lo) == 0) return 0;  // x is y's root
      halve(y);
      continue;
    }
    if (y.is_point()) return -compare(y, x);
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    if (!gcd_checked) {
      gcd_checked = true;
      IntPolynomial h = poly_gcd(x.poly, y.poly);
      if (h.degree() > 0) {
        Rat lo = std::max(x.lo, y.lo);
        Rat hi = std::min(x.hi, y.hi);
        // The overlap endpoints are interval endpoints, hence not roots of
        // x.poly or y.poly, hence not roots of h.
        if (distinct_roots_between(h, lo, hi) > 0) return 0;
      }
    }
    if (x.hi - x.lo >= y.hi - y.lo)
      halve(x);
    else
      halve(y);
  }
}

Int cauchy_bound(const IntPolynomial& g) {
  // All roots lie strictly inside (-B, B) for B = 1 + ceil(max|c_i|/|c_d|).
  Int maxc = 0;
  const auto& c = g.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) maxc = std::max(maxc, Int(abs(c[i])));
  Int lead = abs(g.leading_coeff());
  Int b;
  mpz_cdiv_q(b.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
  return b + 1;
}

// Isolating intervals for a squarefree polynomial, ascending.
std::vector<AlgRoot> isolate_squarefree(const IntPolynomial& g, int mult) {
  std::vector<AlgRoot> out;
  if (g.degree() <= 0) return out;
  if (g.degree() == 1) {
    Rat root = make_rat(-g.coeff(0), g.coeff(1));
    out.push_back(AlgRoot{g, root, root, mult});
    return out;
  }
  auto chain = sturm_chain(g);
  Int bound = cauchy_bound(g);
  struct Seg {
    Rat lo, hi;
    int vlo, vhi;
  };
  Rat lo(-bound), hi(bound);
  std::vector<Seg> stack{{lo, hi, sign_variations_at(chain, lo), sign_variations_at(chain, hi)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int k = s.vlo - s.vhi;
    if (k <= 0) continue;
    if (k == 1) {
      out.push_back(AlgRoot{g, s.lo, s.hi, mult});
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    if (g.sign_at(mid) == 0) {
      out.push_back(AlgRoot{g, mid, mid, mult});
      // Step off the root far enough that no second root is caught.
      Rat delta = (s.hi - s.lo) / 4;
      for (;;) {
        Rat a = mid - delta, b = mid + delta;
        if (g.sign_at(a) != 0 && g.sign_at(b) != 0 &&
            sign_variations_at(chain, a) - sign_variations_at(chain, b) == 1)
          break;
        delta /= 2;
      }
      Rat a = mid - delta, b = mid + delta;
      stack.push_back({s.lo, a, s.vlo, sign_variations_at(chain, a)});
      stack.push_back({b, s.hi, sign_variations_at(chain, b), s.vhi});
    } else {
      int vmid = sign_variations_at(chain, mid);
      stack.push_back({s.lo, mid, s.vlo, vmid});
      stack.push_back({mid, s.hi, vmid, s.vhi});
    }
  }
  std::sort(out.begin(), out.end(), [](const AlgRoot& a, const AlgRoot& b) { return a.lo < b.lo; });
  return out;
}

// All real roots of p: squarefree factors isolated, merged in increasing
// order with pairwise-disjoint intervals whose endpoints avoid every root.
std::vector<AlgRoot> alg_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("alg_roots: zero polynomial");
  std::vector<AlgRoot> roots;
  IntPolynomial radical = IntPolynomial::constant(1);
  for (auto& [factor, mult] : squarefree_decomposition(p)) {
    radical *= factor;
    for (AlgRoot& r : isolate_squarefree(factor, mult)) roots.push_back(std::move(r));
  }
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&roots](std::size_t i, std::size_t j) {
    return compare(roots[i], roots[j]) < 0;
  });
  std::vector<AlgRoot> sorted;
  sorted.reserve(roots.size());
  for (std::size_t i : order) sorted.push_back(std::move(roots[i]));
  roots = std::move(sorted);
  // Force adjacent (hence all) intervals disjoint, and clear endpoints that
  // happen to hit a root of another factor.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) compare(roots[i], roots[i + 1]);
  for (AlgRoot& r : roots) {
    while (!r.is_point() &&
           (radical.sign_at(r.lo) == 0 || radical.sign_at(r.hi) == 0))
      halve(r);
  }
  return roots;
}

}  // namespace

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
  std::vector<IntPolynomial> chain;
  chain.push_back(p.primitive_part());
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative().primitive_part());
  while (chain.back().degree() > 0) {
    IntPolynomial r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_part());
  }
  return chain;
}

int sign_variations_at(const std::vector<IntPolynomial>& chain, const Rat& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_variations_at_neg_inf(const std::vector<IntPolynomial>& chain) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.leading_coeff());
    if (q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_variations_at_pos_inf(const std::vector<IntPolynomial>& chain) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.leading_coeff());
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

unsigned real_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_count: zero polynomial");
  unsigned total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    auto chain = sturm_chain(factor);
    int distinct = sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain);
    total += static_cast<unsigned>(mult) * static_cast<unsigned>(distinct);
  }
  return total;
}

bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  return real_root_count(p) == static_cast<unsigned>(p.degree());
}

RootIsolation isolate_real_roots(const IntPolynomial& p) {
  RootIsolation iso;
  for (const AlgRoot& r : alg_roots(p)) {
    iso.intervals.emplace_back(r.lo, r.hi);
    iso.multiplicities.push_back(r.mult);
  }
  return iso;
}

void refine_isolation(const IntPolynomial& p, RootIsolation& iso, const Rat& max_width) {
  if (sgn(max_width) <= 0) throw std::invalid_argument("refine_isolation: width must be > 0");
  // Every distinct root of p is a simple root of the radical, and the
  // isolation's endpoints avoid all roots, so sign bisection applies.
  IntPolynomial radical = IntPolynomial::constant(1);
  for (const auto& [factor, mult] : squarefree_decomposition(p)) radical *= factor;
  for (auto& [lo, hi] : iso.intervals) {
    AlgRoot r{radical, lo, hi, 1};
    while (!r.is_point() && r.hi - r.lo > max_width) halve(r);
    lo = r.lo;
    hi = r.hi;
  }
}

bool interlaces(const IntPolynomial& g, const IntPolynomial& f, bool strict) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("interlaces: zero polynomial");
  const int df = f.degree(), dg = g.degree();
  if (df - dg != 0 && df - dg != 1)
    throw std::invalid_argument("interlaces: degree gap must be 0 or 1");
  if (!is_real_rooted(f) || !is_real_rooted(g))
    throw std::invalid_argument("interlaces: inputs must be real-rooted");
  if (strict && poly_gcd(f, g).degree() > 0) return false;
  if (dg == 0) return true;

  std::vector<AlgRoot> rf = alg_roots(f);
  std::vector<AlgRoot> rg = alg_roots(g);
  std::vector<AlgRoot*> a, b;  // roots listed with multiplicity, ascending
  for (AlgRoot& r : rf) a.insert(a.end(), static_cast<std::size_t>(r.mult), &r);
  for (AlgRoot& r : rg) b.insert(b.end(), static_cast<std::size_t>(r.mult), &r);

  // Ascending alternation: equal degrees interleave as b0 a0 b1 a1 ...;
  // degree gap 1 interleaves as a0 b0 a1 b1 ... a_d.
  std::vector<AlgRoot*> seq;
  if (df == dg) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      seq.push_back(b[i]);
      seq.push_back(a[i]);
    }
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) {
      seq.push_back(a[i]);
      seq.push_back(b[i]);
    }
    seq.push_back(a.back());
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    int c = compare(*seq[i], *seq[i + 1]);
    if (strict ? c >= 0 : c > 0) return false;
  }
  return true;
}

}  // namespace nsx
