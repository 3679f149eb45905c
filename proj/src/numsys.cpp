#include "nsx/numsys.hpp"

#include <sstream>
#include <stdexcept>

namespace nsx {

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in integer list");
    out.emplace_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace

NumeralSystem NumeralSystem::base_r(Int r) {
  if (r < 2) throw std::invalid_argument("base_r: radix must be >= 2");
  NumeralSystem s;
  s.kind_ = SystemKind::base_r;
  s.base_ = std::move(r);
  return s;
}

NumeralSystem NumeralSystem::factoradic() {
  NumeralSystem s;
  s.kind_ = SystemKind::factoradic;
  return s;
}

NumeralSystem NumeralSystem::fibonacci() {
  NumeralSystem s;
  s.kind_ = SystemKind::fibonacci;
  return s;
}

NumeralSystem NumeralSystem::mixed_radix(std::vector<Int> radices) {
  if (radices.empty() || radices.front() != 1)
    throw std::invalid_argument("mixed_radix: first radix must be 1");
  for (std::size_t i = 1; i < radices.size(); ++i)
    if (radices[i] < 2) throw std::invalid_argument("mixed_radix: radices after c_0 must be > 1");
  NumeralSystem s;
  s.kind_ = SystemKind::mixed_radix;
  s.radices_ = std::move(radices);
  return s;
}

NumeralSystem NumeralSystem::explicit_places(std::vector<Int> places) {
  if (places.empty() || places.front() != 1)
    throw std::invalid_argument("explicit_places: a_0 must be 1");
  for (std::size_t i = 1; i < places.size(); ++i)
    if (places[i] <= places[i - 1])
      throw std::invalid_argument("explicit_places: place values must strictly increase");
  NumeralSystem s;
  s.kind_ = SystemKind::explicit_places;
  s.places_ = std::move(places);
  return s;
}

std::optional<std::size_t> NumeralSystem::place_count() const {
  switch (kind_) {
    case SystemKind::mixed_radix:
      return radices_.size();
    case SystemKind::explicit_places:
      return places_.size();
    default:
      return std::nullopt;
  }
}

Int NumeralSystem::place_value(std::size_t n) const {
  switch (kind_) {
    case SystemKind::base_r:
      return int_pow(base_, n);
    case SystemKind::factoradic:
      return factorial(static_cast<unsigned long>(n) + 1);
    case SystemKind::fibonacci: {
      Int prev = 1, cur = 1;  // F_1, F_2; a_n = F_{n+1}
      for (std::size_t i = 0; i < n; ++i) {
        Int next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    case SystemKind::mixed_radix: {
      if (n >= radices_.size()) throw std::out_of_range("place_value: past the radix prefix");
      Int a = 1;
      for (std::size_t i = 0; i <= n; ++i) a *= radices_[i];
      return a;
    }
    case SystemKind::explicit_places:
      if (n >= places_.size()) throw std::out_of_range("place_value: past the place prefix");
      return places_[n];
  }
  throw std::logic_error("unreachable");
}

std::vector<Int> NumeralSystem::place_values(std::size_t n) const {
  std::vector<Int> out;
  out.reserve(n + 1);
  switch (kind_) {
    case SystemKind::base_r: {
      Int a = 1;
      for (std::size_t i = 0; i <= n; ++i, a *= base_) out.push_back(a);
      return out;
    }
    case SystemKind::factoradic: {
      Int a = 1;
      for (std::size_t i = 0; i <= n; ++i) {
        a *= static_cast<long>(i) + 1;
        out.push_back(a);
      }
      return out;
    }
    case SystemKind::fibonacci: {
      Int prev = 1, cur = 1;
      for (std::size_t i = 0; i <= n; ++i) {
        Int next = prev + cur;
        prev = cur;
        cur = next;
        out.push_back(prev);
      }
      return out;
    }
    case SystemKind::mixed_radix: {
      if (n >= radices_.size()) throw std::out_of_range("place_values: past the radix prefix");
      Int a = 1;
      for (std::size_t i = 0; i <= n; ++i) {
        a *= radices_[i];
        out.push_back(a);
      }
      return out;
    }
    case SystemKind::explicit_places:
      if (n >= places_.size()) throw std::out_of_range("place_values: past the place prefix");
      out.assign(places_.begin(), places_.begin() + static_cast<long>(n) + 1);
      return out;
  }
  throw std::logic_error("unreachable");
}

std::vector<Int> NumeralSystem::places_exceeding(const Int& bound) const {
  const auto count = place_count();
  std::vector<Int> out{Int(1)};
  while (out.back() <= bound) {
    const std::size_t n = out.size();
    if (count && n >= *count)
      throw std::out_of_range("value exceeds the system's known place values");
    switch (kind_) {
      case SystemKind::base_r:
        out.push_back(out.back() * base_);
        break;
      case SystemKind::factoradic:
        out.push_back(out.back() * (static_cast<long>(n) + 1));
        break;
      case SystemKind::fibonacci:
        out.push_back(n == 1 ? Int(2) : out[n - 1] + out[n - 2]);
        break;
      case SystemKind::mixed_radix:
        out.push_back(out.back() * radices_[n]);
        break;
      case SystemKind::explicit_places:
        out.push_back(places_[n]);
        break;
    }
  }
  return out;
}

std::optional<std::vector<Int>> NumeralSystem::radices(std::size_t n) const {
  if (auto count = place_count(); count && n >= *count) return std::nullopt;
  std::vector<Int> as = place_values(n);
  std::vector<Int> cs;
  cs.reserve(n + 1);
  cs.emplace_back(1);
  for (std::size_t i = 1; i <= n; ++i) {
    if (!divides(as[i - 1], as[i])) return std::nullopt;
    cs.push_back(exact_div(as[i], as[i - 1]));
  }
  return cs;
}

std::string NumeralSystem::spec_string() const {
  switch (kind_) {
    case SystemKind::base_r:
      return "base:" + base_.get_str();
    case SystemKind::factoradic:
      return "factoradic";
    case SystemKind::fibonacci:
      return "fib";
    case SystemKind::mixed_radix: {
      std::string out = "mixed:";
      for (std::size_t i = 1; i < radices_.size(); ++i) {
        if (i > 1) out += ',';
        out += radices_[i].get_str();
      }
      return out;
    }
    case SystemKind::explicit_places: {
      std::string out = "places:";
      for (std::size_t i = 0; i < places_.size(); ++i) {
        if (i > 0) out += ',';
        out += places_[i].get_str();
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Numeral encode(const NumeralSystem& s, const Int& b, std::optional<std::size_t> width) {
  if (b < 0) throw std::invalid_argument("encode: value must be nonnegative");
  std::vector<Int> ladder;  // a_0 .. a_w with a_w > b
  if (width) {
    ladder = s.place_values(*width);
    if (b >= ladder.back()) throw std::invalid_argument("encode: value too large for width");
  } else {
    ladder = s.places_exceeding(b);
  }
  std::size_t w = ladder.size() - 1;
  Numeral num{s, std::vector<Int>(w, Int(0))};
  Int rem = b;
  for (std::size_t i = w; i-- > 0;) {
    Int q;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), ladder[i].get_mpz_t());
    num.digits[i] = std::move(q);
  }
  return num;
}

bool is_valid(const Numeral& num) {
  const std::size_t w = num.width();
  if (auto count = num.system.place_count(); count && w >= *count) return false;
  for (const Int& d : num.digits)
    if (d < 0) return false;
  if (w == 0) return true;
  std::vector<Int> ladder = num.system.place_values(w);
  Int prefix = 0;
  for (std::size_t i = 0; i < w; ++i) {
    prefix += num.digits[i] * ladder[i];
    if (prefix >= ladder[i + 1]) return false;
  }
  return true;
}

Int decode(const Numeral& num) {
  // One ladder walk: the decoded value is the final prefix sum of the
  // validity condition, so both are computed together.
  const std::size_t w = num.width();
  if (auto count = num.system.place_count(); count && w >= *count)
    throw std::invalid_argument("decode: invalid numeral");
  for (const Int& d : num.digits)
    if (d < 0) throw std::invalid_argument("decode: invalid numeral");
  if (w == 0) return 0;
  std::vector<Int> ladder = num.system.place_values(w);
  Int value = 0;
  for (std::size_t i = 0; i < w; ++i) {
    value += num.digits[i] * ladder[i];
    if (value >= ladder[i + 1]) throw std::invalid_argument("decode: invalid numeral");
  }
  return value;
}

std::string to_string(const Numeral& num) {
  if (num.width() == 0) return "0";
  bool wide = false;
  for (const Int& d : num.digits)
    if (d > 9 || d < 0) wide = true;
  std::string out;
  for (std::size_t i = num.width(); i-- > 0;) {
    out += num.digits[i].get_str();
    if (wide && i > 0) out += ',';
  }
  return out;
}

Numeral numeral_from_string(const NumeralSystem& s, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("numeral_from_string: empty string");
  std::vector<Int> big_endian;
  if (text.find(',') != std::string::npos) {
    big_endian = parse_int_list(text);
  } else {
    big_endian.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("numeral_from_string: digits must be 0-9 or comma-separated");
      big_endian.emplace_back(ch - '0');
    }
  }
  Numeral num{s, {}};
  num.digits.assign(big_endian.rbegin(), big_endian.rend());
  return num;
}

NumeralSystem parse_system_spec(const std::string& spec) {
  if (spec == "factoradic") return NumeralSystem::factoradic();
  if (spec == "fib" || spec == "fibonacci") return NumeralSystem::fibonacci();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);
    if (head == "base") return NumeralSystem::base_r(Int(tail));
    if (head == "mixed") {
      std::vector<Int> cs = parse_int_list(tail);
      cs.insert(cs.begin(), Int(1));
      return NumeralSystem::mixed_radix(std::move(cs));
    }
    if (head == "places") return NumeralSystem::explicit_places(parse_int_list(tail));
  }
  throw std::invalid_argument("unknown system spec: " + spec);
}

}  // namespace nsx
