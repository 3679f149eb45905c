#include "nsx/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nsx {

namespace {
const Int kZero = 0;
}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t k) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(k + 1, Int(0));
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Int& IntPolynomial::leading_coeff() const {
  if (is_zero()) throw std::invalid_argument("leading_coeff of the zero polynomial");
  return coeffs_.back();
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int IntPolynomial::sign_at(const Rat& x) const {
  if (is_zero()) return 0;
  // p(u/v) has the sign of sum c_i u^i v^{d-i}; v > 0 after canonicalization.
  const Int u = x.get_num();
  const Int v = x.get_den();
  Int acc = coeffs_.back();
  Int vpow = 1;
  for (auto it = std::next(coeffs_.rbegin()); it != coeffs_.rend(); ++it) {
    vpow *= v;
    acc *= u;
    acc += *it * vpow;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<Int> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Int g = content();
  if (g == 1) return *this;
  std::vector<Int> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = exact_div(coeffs_[i], g);
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Int& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Int& a : coeffs_) a *= c;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (Int& c : out.coeffs_) c = -c;
  return out;
}

bool is_symmetric(const IntPolynomial& p, std::size_t d) {
  if (p.degree() > static_cast<int>(d))
    throw std::invalid_argument("is_symmetric: degree exceeds d");
  for (std::size_t i = 0; 2 * i <= d; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  return true;
}

bool is_unimodal(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_log_concave(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

IntPolynomial section(const IntPolynomial& f, std::size_t m, std::size_t ell) {
  if (m == 0 || ell >= m) throw std::invalid_argument("section: require 0 <= ell < m");
  std::vector<Int> out;
  for (std::size_t k = ell; k < f.coeffs().size(); k += m) out.push_back(f.coeffs()[k]);
  return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  const Int& lg = g.leading_coeff();
  const int dg = g.degree();
  IntPolynomial r = f;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= dg) {
    const int dr = r.degree();
    Int lr = r.leading_coeff();
    r *= lg;
    r -= IntPolynomial::monomial(std::move(lr), static_cast<std::size_t>(dr - dg)) * g;
    // One multiplication by lg per elimination; keep the total power even so
    // the result is a positive multiple of the rational remainder.
    ++steps;
    if (!r.is_zero() && r.degree() == dr) throw std::logic_error("pseudo_remainder: no progress");
  }
  if (steps % 2 == 1) r *= lg;
  return r;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree()) throw std::invalid_argument("divide_exact: not divisible");
  std::vector<Int> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Int> quot(rem.size() - db, Int(0));
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const std::size_t top = shift + db;
    if (rem[top] == 0) continue;
    if (!divides(bc[db], rem[top])) throw std::invalid_argument("divide_exact: not divisible");
    Int q = exact_div(rem[top], bc[db]);
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= q * bc[j];
    quot[shift] = std::move(q);
  }
  for (const Int& c : rem)
    if (c != 0) throw std::invalid_argument("divide_exact: not divisible");
  return IntPolynomial(std::move(quot));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return IntPolynomial();
  IntPolynomial f = a.primitive_part();
  IntPolynomial g = b.primitive_part();
  if (f.is_zero()) std::swap(f, g);
  while (!g.is_zero()) {
    IntPolynomial r = pseudo_remainder(f, g).primitive_part();
    f = std::move(g);
    g = std::move(r);
  }
  if (f.leading_coeff() < 0) f = -f;
  return f;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  // Yun's algorithm on the primitive part.
  IntPolynomial f = p.primitive_part();
  IntPolynomial fp = f.derivative();
  IntPolynomial a = poly_gcd(f, fp);
  IntPolynomial b = divide_exact(f, a);
  IntPolynomial c = divide_exact(fp, a);
  int k = 1;
  while (b.degree() > 0) {
    IntPolynomial d = c - b.derivative();
    IntPolynomial g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    ++k;
  }
  return out;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Int mag = abs(c[i]);
    if (first) {
      if (c[i] < 0) os << "-";
      first = false;
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str();
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace nsx
