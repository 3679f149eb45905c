#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsx/baser.hpp"
#include "nsx/real_roots.hpp"
#include "nsx/stats.hpp"

using namespace nsx;

namespace {

// Exhaustive composition counter, independent of the DP in comp_count.
Int comp_oracle(std::size_t t, long m, long max_part) {
  if (t == 0) return m == 0 ? 1 : 0;
  Int total = 0;
  for (long part = 1; part <= max_part; ++part) total += comp_oracle(t - 1, m - part, max_part);
  return total;
}

}  // namespace

TEST_CASE("BaseRSimplex carries the geometric q-vector") {
  BaseRSimplex b43(4, 3);
  CHECK(b43.q == QSimplex({3, 12, 48}));
  CHECK(normalized_volume(b43.q) == 64);
  BaseRSimplex b25(2, 5);
  CHECK(b25.q == QSimplex({1, 2, 4, 8, 16}));
  CHECK_THROWS_AS(BaseRSimplex(1, 3), std::invalid_argument);
}

TEST_CASE("f_poly") {
  CHECK(f_poly(4, 3) == IntPolynomial{1, 3, 6, 10, 12, 12, 10, 6, 3, 1});
  CHECK(f_poly(2, 4) == IntPolynomial{1, 4, 6, 4, 1});
  CHECK(f_poly(5, 1) == IntPolynomial{1, 1, 1, 1, 1});
}

TEST_CASE("hstar_nasc") {
  CHECK(hstar_nasc(4, 3) == IntPolynomial{1, 19, 34, 10});
  CHECK(hstar_nasc(2, 3) == IntPolynomial{1, 3, 3, 1});
  CHECK(hstar_nasc(7, 1) == IntPolynomial{1, 6});
  CHECK_THROWS_AS(hstar_nasc(10, 10, 1000), budget_error);
}

TEST_CASE("hstar_nasc agrees with per-integer digit statistics") {
  for (long r = 2; r <= 5; ++r)
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<Int> hist(n + 1, Int(0));
      for (Int b = 0; b < int_pow(r, n); ++b) ++hist[digit_stats(b, r, n).nasc()];
      CHECK(hstar_nasc(r, n) == IntPolynomial(std::move(hist)));
    }
}

TEST_CASE("hstar_sections") {
  CHECK(hstar_sections(4, 3) == IntPolynomial{1, 19, 34, 10});
  CHECK(hstar_sections(2, 6) == f_poly(2, 6));  // (1+z)^n, empty ell sum
  // r=3, n=1: f = 1+z+z^2, f<2,0> = 1+z, f<2,1> = 1, so h* = 1+2z,
  // matching the nasc count (b = 1, 2 each contribute one nonascent).
  CHECK(hstar_sections(3, 1) == IntPolynomial{1, 2});
  CHECK(hstar_sections(3, 1) == hstar_nasc(3, 1));
}

TEST_CASE("symmetric_decomposition") {
  auto [a, b] = symmetric_decomposition(4, 3);
  CHECK(a == IntPolynomial{1, 10, 10, 1});
  CHECK(b == IntPolynomial{9, 24, 9});
  CHECK(a + IntPolynomial::monomial(1, 1) * b == hstar_sections(4, 3));

  auto [a2, b2] = symmetric_decomposition(2, 4);
  CHECK(a2 == f_poly(2, 4));
  CHECK(b2.is_zero());

  auto [a3, b3] = symmetric_decomposition(3, 2);
  CHECK(a3 == IntPolynomial{1, 3, 1});
  CHECK(b3 == IntPolynomial{2, 2});
  CHECK(hstar_sections(3, 2) == IntPolynomial{1, 5, 3});
  CHECK(hstar_sections(3, 2) == hstar_nasc(3, 2));
}

TEST_CASE("decomposition parts are palindromic at degrees n and n-1") {
  for (long r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 6; ++n) {
      auto [a, b] = symmetric_decomposition(r, n);
      CHECK(is_symmetric(a, n));
      CHECK(is_symmetric(b, n - 1));
    }
}

TEST_CASE("comp_count") {
  CHECK(comp_count(3, 3, 4) == 1);
  CHECK(comp_count(3, 6, 4) == 10);
  CHECK(comp_count(3, 4, 4) == 3);
  CHECK(comp_count(3, 2, 4) == 0);
  CHECK(comp_count(3, 13, 4) == 0);
  CHECK(comp_count(1, 4, 4) == 1);
  for (std::size_t t = 1; t <= 4; ++t)
    for (long m = -1; m <= 17; ++m) CHECK(comp_count(t, m, 4) == comp_oracle(t, m, 4));
}

TEST_CASE("hstar_coeff_via_comps") {
  CHECK(hstar_coeff_via_comps(4, 3, 1) == 19);  // 10 + 3 + 6
  CHECK(hstar_coeff_via_comps(4, 3, 0) == 1);
  CHECK(hstar_coeff_via_comps(4, 3, 3) == 10);  // 1 + 6 + 3
  CHECK_THROWS_AS(hstar_coeff_via_comps(4, 3, 4), std::invalid_argument);
  for (long r = 2; r <= 5; ++r)
    for (std::size_t n = 1; n <= 6; ++n) {
      IntPolynomial h = hstar_sections(r, n);
      for (std::size_t k = 0; k <= n; ++k) CHECK(hstar_coeff_via_comps(r, n, k) == h.coeff(k));
    }
}

TEST_CASE("apply_G steps the section vector of f_(r,n-1) to f_(r,n)") {
  std::vector<IntPolynomial> v{IntPolynomial{3, 2}, IntPolynomial{2, 3}, IntPolynomial{1, 4, 1}};
  auto out = apply_G(4, v);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == IntPolynomial{6, 12, 3});
  CHECK(out[1] == IntPolynomial{3, 12, 6});
  CHECK(out[2] == IntPolynomial{1, 10, 10, 1});

  auto one = apply_G(2, {IntPolynomial{5, 7}});
  CHECK(one[0] == IntPolynomial{1, 1} * IntPolynomial{5, 7});

  auto zeros = apply_G(3, {IntPolynomial{}, IntPolynomial{}});
  CHECK(zeros[0].is_zero());
  CHECK(zeros[1].is_zero());
  CHECK_THROWS_AS(apply_G(4, {IntPolynomial{1}}), std::invalid_argument);
}

TEST_CASE("apply_H finishes the assembly: last entry is h*") {
  auto sections = section_sequence(4, 3);
  auto out = apply_H(4, sections.polys);
  CHECK(out.back() == IntPolynomial{1, 19, 34, 10});

  CHECK(apply_H(2, {IntPolynomial{4, 2}})[0] == IntPolynomial{4, 2});

  auto consts = apply_H(3, {IntPolynomial{1}, IntPolynomial{1}});
  CHECK(consts[0] == IntPolynomial{2});
  CHECK(consts[1] == IntPolynomial{1, 1});

  for (long r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 8; ++n)
      CHECK(apply_H(r, section_sequence(r, n).polys).back() == hstar_sections(r, n));
}

TEST_CASE("section_sequence") {
  auto seq = section_sequence(4, 3);
  REQUIRE(seq.polys.size() == 3);
  CHECK(seq.polys[0] == IntPolynomial{6, 12, 3});
  CHECK(seq.polys[1] == IntPolynomial{3, 12, 6});
  CHECK(seq.polys[2] == IntPolynomial{1, 10, 10, 1});

  auto seq32 = section_sequence(3, 2);
  CHECK(seq32.polys == std::vector<IntPolynomial>{IntPolynomial{2, 2}, IntPolynomial{1, 3, 1}});

  auto seq25 = section_sequence(2, 5);
  REQUIRE(seq25.polys.size() == 1);
  CHECK(seq25.polys[0] == IntPolynomial{1, 5, 10, 10, 5, 1});
}

TEST_CASE("G-recursion generates the section sequences") {
  for (long r = 2; r <= 6; ++r) {
    auto prev = section_sequence(r, 1);
    for (std::size_t n = 2; n <= 8; ++n) {
      auto next = section_sequence(r, n);
      CHECK(apply_G(r, prev.polys) == next.polys);
      prev = std::move(next);
    }
  }
}

TEST_CASE("triple agreement on small cases") {
  for (long r = 2; r <= 5; ++r)
    for (std::size_t n = 1; n <= 4; ++n) {
      IntPolynomial h = hstar_sections(r, n);
      CHECK(hstar_nasc(r, n) == h);
      CHECK(hstar(BaseRSimplex(r, n).q) == h);
    }
}

TEST_CASE("base-r h* polynomials are real-rooted hence unimodal") {
  for (long r = 2; r <= 5; ++r)
    for (std::size_t n = 1; n <= 5; ++n) {
      IntPolynomial h = hstar_sections(r, n);
      CHECK(is_real_rooted(h));
      CHECK(is_unimodal(h));
      CHECK(is_log_concave(h));
    }
}

TEST_CASE("section sequences strictly interlace") {
  for (long r = 3; r <= 5; ++r)
    for (std::size_t n = 1; n <= 4; ++n) {
      auto seq = section_sequence(r, n);
      for (std::size_t i = 0; i < seq.polys.size(); ++i)
        for (std::size_t j = i + 1; j < seq.polys.size(); ++j)
          CHECK(interlaces(seq.polys[i], seq.polys[j], true));
    }
}
