#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsx/baser.hpp"
#include "nsx/oracle.hpp"

using namespace nsx;

TEST_CASE("count_lattice_points") {
  CHECK(count_lattice_points(QSimplex({1, 2, 4}), 0) == 1);
  CHECK(count_lattice_points(QSimplex({1, 2, 4}), 1) == 7);
  CHECK(count_lattice_points(QSimplex({1}), 2) == 5);  // segment [-2, 2]
  CHECK(count_lattice_points(QSimplex({1}), 1) == 3);
  CHECK_THROWS_AS(count_lattice_points(QSimplex({1, 2, 4}), -1), std::invalid_argument);
  CHECK_THROWS_AS(count_lattice_points(QSimplex({100, 100, 100}), 10, 1000), budget_error);
}

TEST_CASE("hand-enumerated counts for the (2,3) triangle") {
  // t=1 by direct case analysis over the box [-2,1] x [-3,1]: 7 points.
  CHECK(count_lattice_points(QSimplex({2, 3}), 1) == 7);
  // h* = 1 + 4z + z^2, so i(2) = C(4,2) + 4 C(3,2) + C(2,2) = 19.
  CHECK(hstar(QSimplex({2, 3})) == IntPolynomial{1, 4, 1});
  CHECK(count_lattice_points(QSimplex({2, 3}), 2) == 19);
}

TEST_CASE("h*_1 counts interior structure: i(1) - n - 1") {
  const QSimplex cases[] = {QSimplex({1, 2, 4}), QSimplex({3, 8, 12}), QSimplex({3, 12, 48}),
                            QSimplex({1, 1}), QSimplex({2, 3, 5})};
  for (const auto& s : cases) {
    IntPolynomial h = hstar(s);
    CHECK(h.coeff(1) ==
          count_lattice_points(s, 1) - static_cast<long>(s.dim()) - 1);
  }
}

TEST_CASE("hstar_from_counts") {
  std::vector<Int> counts;
  QSimplex q124({1, 2, 4});
  for (long t = 0; t <= 3; ++t) counts.push_back(count_lattice_points(q124, t));
  CHECK(hstar_from_counts(counts, 3) == IntPolynomial{1, 3, 3, 1});

  // a degree drop normalizes away the zero tail
  CHECK(hstar_from_counts({1, 2}, 1) == IntPolynomial{1});
  CHECK(hstar_from_counts({1, 3}, 1) == IntPolynomial{1, 1});
  // counts that shrink cannot come from a polytope
  CHECK_THROWS_AS(hstar_from_counts({1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(hstar_from_counts({1, 3}, 3), std::invalid_argument);
}

TEST_CASE("ehrhart_polynomial") {
  auto coeffs = ehrhart_polynomial({1, 3, 5}, 1);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0] == Rat(1));
  CHECK(coeffs[1] == Rat(2));

  // leading coefficient is the Euclidean volume vol = (1 + sum q)/n!
  QSimplex q124({1, 2, 4});
  std::vector<Int> counts;
  for (long t = 0; t <= 3; ++t) counts.push_back(count_lattice_points(q124, t));
  auto c = ehrhart_polynomial(counts, 3);
  REQUIRE(c.size() == 4);
  CHECK(c[3] == make_rat(8, 6));

  // constant counts interpolate to a constant; the table builder flags them
  auto flat = ehrhart_polynomial({1, 1, 1}, 2);
  CHECK(flat[0] == Rat(1));
  CHECK(flat[1] == Rat(0));
  CHECK(flat[2] == Rat(0));
}

TEST_CASE("build_ehrhart_table runs the pipeline with the held-out check") {
  auto table = build_ehrhart_table(QSimplex({1, 2, 4}));
  CHECK(table.counts.size() == 5);
  CHECK(table.counts[0] == 1);
  CHECK(table.hstar == IntPolynomial{1, 3, 3, 1});
  CHECK(evaluate_rational(table.ehrhart_coeffs, 4) == Rat(table.counts[4]));
  CHECK(is_ehrhart_positive(table));

  auto seg = build_ehrhart_table(QSimplex({1}), Int(2));
  CHECK(seg.counts == std::vector<Int>{1, 3, 5});
}

TEST_CASE("is_ehrhart_positive flags a synthetic negative coefficient") {
  EhrhartTable table{QSimplex({1}), {1, 3, 5}, {Rat(1), Rat(-2)}, IntPolynomial{1, 1}};
  CHECK_FALSE(is_ehrhart_positive(table));
}

TEST_CASE("oracle h* equals formula h* over a battery") {
  for (long a = 1; a <= 4; ++a)
    for (long b = a; b <= 4; ++b) {
      QSimplex s({a, b});
      auto table = build_ehrhart_table(s);
      CHECK(table.hstar == hstar(s));
    }
  for (long r = 2; r <= 4; ++r)
    for (std::size_t n = 1; n <= 2; ++n) {
      BaseRSimplex brn(r, n);
      CHECK(build_ehrhart_table(brn.q).hstar == hstar(brn.q));
    }
}
