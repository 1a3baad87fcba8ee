#include "flowvol/integer.hpp"

#include <doctest.h>

#include <vector>

using namespace flowvol;

TEST_SUITE("integer") {
  TEST_CASE("binomial handles negative upper index") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 3) == -4);  // (-2)(-3)(-4)/6
    CHECK(binomial(0, 0) == 1);
  }

  TEST_CASE("multiset coefficient") {
    CHECK(multiset_coeff(3, 2) == 6);
    CHECK(multiset_coeff(7, 0) == 1);
    CHECK(multiset_coeff(2, 3) == 4);
    CHECK(multiset_coeff(0, 0) == 1);
    CHECK(multiset_coeff(0, 4) == 0);
    CHECK_THROWS_AS(multiset_coeff(-1, 2), std::invalid_argument);
  }

  TEST_CASE("multinomial and powers") {
    const std::vector<std::int64_t> parts{2, 1, 1};
    CHECK(multinomial(parts) == 12);
    CHECK(multinomial(std::vector<std::int64_t>{}) == 1);
    CHECK(ipow(Integer(0), 0) == 1);
    CHECK(ipow(Integer(-3), 3) == -27);
    CHECK(factorial(20).get_str() == "2432902008176640000");
  }

  TEST_CASE("exact division refuses remainders") {
    CHECK(exact_div(Integer(35), Integer(5)) == 7);
    CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), NonIntegralDivision);
  }

  TEST_CASE("int64 narrowing") {
    CHECK(to_int64(parse_integer("-42")) == -42);
    CHECK_THROWS_AS(to_int64(parse_integer("100000000000000000000")), std::overflow_error);
    CHECK_THROWS(parse_integer("12x"));
  }
}
