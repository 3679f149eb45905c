#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nsx/real_roots.hpp"

using namespace nsx;

namespace {

// Discriminant of c0 + c1 z + c2 z^2 + c3 z^3; positive iff three distinct
// real roots.
Int cubic_discriminant(const Int& c0, const Int& c1, const Int& c2, const Int& c3) {
  return 18 * c3 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 -
         4 * c3 * c1 * c1 * c1 - 27 * c3 * c3 * c0 * c0;
}

bool interval_within(const std::pair<Rat, Rat>& iv, const Rat& lo, const Rat& hi) {
  return iv.first >= lo && iv.second <= hi;
}

}  // namespace

TEST_CASE("real_root_count") {
  CHECK(real_root_count(IntPolynomial{1, 2, 1}) == 2);   // (z+1)^2
  CHECK(real_root_count(IntPolynomial{1, 1, 1}) == 0);   // complex pair
  CHECK(cubic_discriminant(1, 19, 34, 10) > 0);          // three distinct real roots
  CHECK(real_root_count(IntPolynomial{1, 19, 34, 10}) == 3);
  CHECK(real_root_count(IntPolynomial{5}) == 0);
  CHECK(real_root_count(IntPolynomial{0, 0, 1}) == 2);   // z^2
  CHECK(real_root_count(IntPolynomial{-1, 0, 0, 0, 1}) == 2);  // z^4 - 1
  CHECK_THROWS_AS(real_root_count(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("is_real_rooted") {
  CHECK(is_real_rooted(IntPolynomial{1, 3, 3, 1}));
  CHECK_FALSE(is_real_rooted(IntPolynomial{1, 1, 1}));
  CHECK(is_real_rooted(IntPolynomial{1, 19, 34, 10}));
  CHECK(is_real_rooted(IntPolynomial{42}));
}

TEST_CASE("isolate_real_roots on rational roots") {
  auto iso = isolate_real_roots(IntPolynomial{2, 2});
  REQUIRE(iso.size() == 1);
  CHECK(iso.intervals[0].first <= Rat(-1));
  CHECK(iso.intervals[0].second >= Rat(-1));
  CHECK(iso.multiplicities[0] == 1);

  iso = isolate_real_roots(IntPolynomial{1, 2, 1});
  REQUIRE(iso.size() == 1);
  CHECK(iso.intervals[0].first <= Rat(-1));
  CHECK(iso.intervals[0].second >= Rat(-1));
  CHECK(iso.multiplicities[0] == 2);
}

TEST_CASE("isolate_real_roots separates the roots of 1 + 3z + z^2") {
  // Quadratic formula: roots (-3 +- sqrt(5)) / 2, near -2.618 and -0.382.
  const IntPolynomial p{1, 3, 1};
  auto iso = isolate_real_roots(p);
  REQUIRE(iso.size() == 2);
  refine_isolation(p, iso, make_rat(1, 100000));
  CHECK(interval_within(iso.intervals[0], make_rat(-262, 100), make_rat(-261, 100)));
  CHECK(interval_within(iso.intervals[1], make_rat(-39, 100), make_rat(-38, 100)));
  for (auto& [lo, hi] : iso.intervals) {
    CHECK(hi - lo <= make_rat(1, 100000));
    if (lo != hi) CHECK(p.sign_at(lo) * p.sign_at(hi) < 0);
  }
}

TEST_CASE("isolation with mixed multiplicities and shared scale") {
  // (z+1)^2 (z-2)^3 (z-5)
  const IntPolynomial p =
      IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-2, 1} * IntPolynomial{-2, 1} *
      IntPolynomial{-2, 1} * IntPolynomial{-5, 1};
  auto iso = isolate_real_roots(p);
  REQUIRE(iso.size() == 3);
  CHECK(iso.multiplicities == std::vector<int>{2, 3, 1});
  CHECK(iso.intervals[0].second < iso.intervals[1].first);
  CHECK(iso.intervals[1].second < iso.intervals[2].first);
}

TEST_CASE("interlaces on the worked examples") {
  // shared root -1: weak yes, strict no
  CHECK(interlaces(IntPolynomial{1, 1}, IntPolynomial{1, 2, 1}, false));
  CHECK_FALSE(interlaces(IntPolynomial{1, 1}, IntPolynomial{1, 2, 1}, true));
  // g root -1 between roots (-3 +- sqrt(5))/2 of f
  CHECK(interlaces(IntPolynomial{2, 2}, IntPolynomial{1, 3, 1}, true));
  // equal single roots, equal degree
  CHECK(interlaces(IntPolynomial{2, 2}, IntPolynomial{1, 1}, false));
  CHECK_FALSE(interlaces(IntPolynomial{2, 2}, IntPolynomial{1, 1}, true));
  // constant g interlaces anything of degree <= 1
  CHECK(interlaces(IntPolynomial{3}, IntPolynomial{1, 1}, true));
  CHECK_THROWS_AS(interlaces(IntPolynomial{1, 1}, IntPolynomial{1, 3, 3, 1}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(interlaces(IntPolynomial{1, 1}, IntPolynomial{1, 1, 1}, false),
                  std::invalid_argument);
}

namespace {

IntPolynomial product_of_linear(const std::vector<int>& roots) {
  IntPolynomial p{1};
  for (int r : roots) p *= IntPolynomial{-r, 1};
  return p;
}

}  // namespace

TEST_CASE("Sturm soundness on random products of linear factors") {
  std::mt19937 rng(987123);
  std::uniform_int_distribution<int> count(1, 7);
  std::uniform_int_distribution<int> root(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> roots(static_cast<std::size_t>(count(rng)));
    for (int& r : roots) r = root(rng);
    IntPolynomial p = product_of_linear(roots);
    CHECK(real_root_count(p) == roots.size());
    CHECK(is_real_rooted(p));
  }
}

TEST_CASE("real-rooted with positive coefficients implies log-concave and unimodal") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> count(1, 7);
  std::uniform_int_distribution<int> root(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> roots(static_cast<std::size_t>(count(rng)));
    for (int& r : roots) r = -root(rng);  // roots at negative integers
    IntPolynomial p = product_of_linear(roots);
    REQUIRE(is_real_rooted(p));
    CHECK(is_log_concave(p));
    CHECK(is_unimodal(p));
  }
}

TEST_CASE("strict interlacing is antisymmetric in equal degree") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    // build beta_1 < alpha_1 < beta_2 < alpha_2 < ... from distinct integers
    std::uniform_int_distribution<int> count(1, 5);
    int k = count(rng);
    std::vector<int> pts(static_cast<std::size_t>(2 * k));
    std::uniform_int_distribution<int> step(1, 3);
    int cur = -12;
    for (int& p : pts) {
      cur += step(rng);
      p = cur;
    }
    std::vector<int> betas, alphas;
    for (int i = 0; i < 2 * k; i += 2) {
      betas.push_back(pts[static_cast<std::size_t>(i)]);
      alphas.push_back(pts[static_cast<std::size_t>(i + 1)]);
    }
    IntPolynomial g = product_of_linear(betas);
    IntPolynomial f = product_of_linear(alphas);
    CHECK(interlaces(g, f, true));
    CHECK_FALSE(interlaces(f, g, true));
  }
}

TEST_CASE("negative leading coefficients do not confuse the counts") {
  CHECK(real_root_count(IntPolynomial{2, 0, -1}) == 2);  // -(z^2 - 2)
  CHECK(is_real_rooted(IntPolynomial{2, 0, -1}));
  CHECK(real_root_count(IntPolynomial{-1, -1, -1}) == 0);
  CHECK(isolate_real_roots(IntPolynomial{2, 0, -1}).size() == 2);
}

TEST_CASE("clustered roots across factors get separated in the merge") {
  // roots 99/100, 1 (double), 101/100
  const IntPolynomial p = IntPolynomial{1, 1} * IntPolynomial{-99, 100} *
                          IntPolynomial{-1, 1} * IntPolynomial{-1, 1} *
                          IntPolynomial{-101, 100};
  auto iso = isolate_real_roots(p);
  REQUIRE(iso.size() == 4);
  CHECK(iso.multiplicities == std::vector<int>{1, 1, 2, 1});
  for (std::size_t i = 0; i + 1 < iso.size(); ++i)
    CHECK(iso.intervals[i].second <= iso.intervals[i + 1].first);
  // each interval brackets its root
  const Rat roots[] = {Rat(-1), make_rat(99, 100), Rat(1), make_rat(101, 100)};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(iso.intervals[i].first <= roots[i]);
    CHECK(iso.intervals[i].second >= roots[i]);
  }
}

TEST_CASE("ten integer roots isolate to ten bracketing intervals") {
  IntPolynomial p{1};
  for (long k = 1; k <= 10; ++k) p *= IntPolynomial{-k, 1};
  CHECK(real_root_count(p) == 10);
  auto iso = isolate_real_roots(p);
  REQUIRE(iso.size() == 10);
  refine_isolation(p, iso, make_rat(1, 4));
  for (long k = 1; k <= 10; ++k) {
    CHECK(iso.intervals[static_cast<std::size_t>(k - 1)].first <= Rat(k));
    CHECK(iso.intervals[static_cast<std::size_t>(k - 1)].second >= Rat(k));
  }
}

TEST_CASE("interlacing with a shared irrational root is weak only") {
  // g = z^2 - 2, f = (z^2 - 2)(z + 5): common irrational roots +-sqrt(2)
  const IntPolynomial g{-2, 0, 1};
  const IntPolynomial f = g * IntPolynomial{5, 1};
  CHECK(interlaces(g, f, false));
  CHECK_FALSE(interlaces(g, f, true));
}

TEST_CASE("sturm chain endpoints") {
  auto chain = sturm_chain(IntPolynomial{-2, 0, 1});  // z^2 - 2
  CHECK(sign_variations_at_neg_inf(chain) - sign_variations_at_pos_inf(chain) == 2);
  CHECK(sign_variations_at(chain, Rat(0)) - sign_variations_at(chain, Rat(2)) == 1);
  CHECK(sign_variations_at(chain, Rat(-2)) - sign_variations_at(chain, Rat(0)) == 1);
}
