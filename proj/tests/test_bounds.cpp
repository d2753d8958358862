#include <doctest.h>

#include "braidq/bounds.hpp"
#include "braidq/errors.hpp"

using namespace braidq;

TEST_CASE("least prime factor") {
  CHECK(lpf(2) == 2);
  CHECK(lpf(9) == 3);
  CHECK(lpf(15) == 3);
  CHECK(lpf(49) == 7);
  CHECK(lpf(97) == 97);
  CHECK_THROWS_AS(lpf(1), InvalidParameter);
  CHECK_THROWS_AS(lpf(0), InvalidParameter);
}

TEST_CASE("closed-form values") {
  CHECK(theorem_a_bound(6).value == 216);
  CHECK(theorem_a_bound(7).value == 864);
  CHECK(theorem_a_bound(8).value == 3240);
  CHECK(theorem_a_bound_p(6, 9).value == 378);
  CHECK(single_set_bound(5).value == 6);
  CHECK(single_set_bound(6).value == 54);
  CHECK(single_set_bound(10).value == 9720);
  const auto w6 = welded_bounds(6);
  CHECK(w6.wbn == 1920);
  CHECK(w6.hab_full == 23040);
  CHECK(welded_bounds(7).wbn == 23040);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("range flags") {
  CHECK(theorem_a_bound(6).in_range);
  CHECK_FALSE(theorem_a_bound(5).in_range);
  CHECK(theorem_a_bound(5).value > 0);
  CHECK_FALSE(welded_bound(5).in_range);
}

TEST_CASE("bound_by_name") {
  CHECK(bound_by_name("thmA", 6).value == 216);
  CHECK(bound_by_name("thmAp", 6, 9).value == 378);
  CHECK(bound_by_name("ck", 6).value == 54);
  CHECK(bound_by_name("wbn", 6).value == 1920);
  CHECK(bound_by_name("hab", 6).value == 23040);
  CHECK_THROWS_AS(bound_by_name("thmAp", 6), InvalidParameter);
  CHECK_THROWS_AS(bound_by_name("nope", 6), InvalidParameter);
}

TEST_CASE("Theorem A bound strictly improves the earlier bound") {
  for (int n = 6; n <= 64; ++n) {
    const auto a = theorem_a_bound(n).value;
    const auto ck = single_set_bound(n).value;
    REQUIRE(a > ck);
    const int fl = n / 2, cl = (n + 1) / 2;
    REQUIRE(a * factorial(fl) == ck * (fl + 1) * factorial(cl));
  }
}

TEST_CASE("even p gives the unrefined bound; larger lpf gives more") {
  for (int n = 2; n <= 64; ++n) {
    REQUIRE(theorem_a_bound_p(n, 2).value == theorem_a_bound(n).value);
    REQUIRE(theorem_a_bound_p(n, 12).value == theorem_a_bound(n).value);
    if (n >= 2) REQUIRE(theorem_a_bound_p(n, 9).value >= theorem_a_bound(n).value);
  }
}

TEST_CASE("symmetric groups stay admissible") {
  for (int n = 6; n <= 20; ++n) REQUIRE(factorial(n) >= theorem_a_bound(n).value);
}
