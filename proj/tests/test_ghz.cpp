#include "qcorr/ghz.hpp"

#include "doctest.h"
#include "qcorr/cumulant.hpp"
#include "qcorr/errors.hpp"

using namespace qcorr;

TEST_CASE("coefficient table") {
  const std::vector<std::pair<int, Rational>> table{
      {2, Rational(1, 4)},   {4, Rational(-1, 8)},    {6, Rational(1, 4)},
      {8, Rational(-17, 16)}, {10, Rational(31, 4)},  {12, Rational(-691, 8)},
      {14, Rational(5461, 4)}, {16, Rational(-929569, 32)}};
  for (const auto& [n, expected] : table) {
    CHECK(c_coefficient_sum(n) == expected);
    CHECK(c_coefficient_derivative(n) == expected);
  }
}

TEST_CASE("odd coefficients vanish") {
  for (int n = 3; n <= 63; n += 2) {
    CHECK(c_coefficient_sum(n) == 0);
  }
}

TEST_CASE("the two formulas agree") {
  for (int n = 1; n <= 32; ++n) {
    CHECK(c_coefficient_sum(n) == c_coefficient_derivative(n));
  }
  CHECK_THROWS_AS(c_coefficient_sum(0), DomainError);
  CHECK_THROWS_AS(c_coefficient_sum(65), DomainError);
}

TEST_CASE("closed-form measures") {
  CHECK(classical_measure(2) == Rational(1, 2));
  CHECK(classical_measure(3) == 0);
  CHECK(classical_measure(8) == 136);

  CHECK(ghz_measure(3) == Rational(1, 2));
  CHECK(ghz_measure(2) == Rational(3, 4));
  for (int n = 8; n <= 40; n += 2) {
    CHECK(ghz_measure(n) == classical_measure(n));  // |c_n| >= 1/2 here
  }
  CHECK(ghz_measure(4) != classical_measure(4));
  CHECK_THROWS_AS(ghz_measure(1), DomainError);
}

TEST_CASE("dense cross-checks") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(classical_cumulant_dense_check(n) < 1e-12);
    CHECK(ghz_offdiagonal_check(n) < 1e-12);
    const double closed_ghz = mpq_get_d(ghz_measure(n).get_mpq_t());
    const double closed_classical = mpq_get_d(classical_measure(n).get_mpq_t());
    CHECK(correlation_measure(ghz_state(n)) == doctest::Approx(closed_ghz).epsilon(1e-9));
    CHECK(correlation_measure(classical_correlated_state(n)) ==
          doctest::Approx(closed_classical).epsilon(1e-9));
  }
  CHECK_THROWS_AS(classical_cumulant_dense_check(7), ResourceError);
}

TEST_CASE("measure differences at small n") {
  // GHZ minus classical: 1/2 at n=3, 1/4 at n=2.
  CHECK(ghz_measure(3) - classical_measure(3) == Rational(1, 2));
  CHECK(ghz_measure(2) - classical_measure(2) == Rational(1, 4));
}

TEST_CASE("table rows and CSV") {
  const auto rows = fig1_table(16);
  REQUIRE(rows.size() == 15);
  CHECK(rows[0].n == 2);
  CHECK(rows[0].c_n == Rational(1, 4));
  CHECK(rows[0].measure_ghz == Rational(3, 4));
  CHECK(rows[0].measure_classical == Rational(1, 2));
  CHECK(rows[1].n == 3);
  CHECK(rows[1].c_n == 0);
  CHECK(rows[1].measure_ghz == Rational(1, 2));
  CHECK(rows[1].measure_classical == 0);
  CHECK(rows[14].c_n == Rational(-929569, 32));

  const std::string csv = fig1_csv(rows);
  CHECK(csv.find("n,c_n,measure_ghz,measure_classical") == 0);
  CHECK(csv.find("\n2,1/4,3/4,1/2,") != std::string::npos);
  CHECK(csv.find("\n3,0,1/2,0,") != std::string::npos);

  CHECK_THROWS_AS(fig1_table(65), DomainError);
  CHECK_THROWS_AS(fig1_table(1), DomainError);
}
