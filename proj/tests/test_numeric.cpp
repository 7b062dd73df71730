#include <doctest.h>

#include <conewright/errors.hpp>
#include <conewright/numeric.hpp>

namespace cw = conewright;

TEST_SUITE("numeric") {

TEST_CASE("integrality predicate and extraction") {
  CHECK(cw::is_integer(cw::Rat(7)));
  CHECK(cw::is_integer(cw::Rat(-3)));
  CHECK(cw::is_integer(cw::Rat(0)));
  CHECK(cw::is_integer(cw::Rat(6, 3)));  // canonicalizes to 2
  CHECK_FALSE(cw::is_integer(cw::Rat(1, 2)));
  CHECK_FALSE(cw::is_integer(cw::Rat(-5, 4)));

  CHECK(cw::to_int64(cw::Rat(42)) == 42);
  CHECK(cw::to_int64(cw::Rat(-92)) == -92);
  CHECK(cw::to_int64(cw::Rat(0)) == 0);
  CHECK_THROWS_AS(cw::to_int64(cw::Rat(1, 2)), cw::InternalError);
  CHECK_THROWS_AS(cw::to_int64(cw::Rat(-7, 3)), cw::InternalError);

  // A value far outside int64 must be refused, not truncated.
  cw::Rat huge = 1;
  for (int i = 0; i < 5; ++i) huge *= cw::Rat(1000000000);
  CHECK_THROWS_AS(cw::to_int64(huge), cw::InternalError);
}

TEST_CASE("binomial coefficients, including negative upper index") {
  CHECK(cw::binomial(0, 0) == 1);
  CHECK(cw::binomial(5, 0) == 1);
  CHECK(cw::binomial(5, 2) == 10);
  CHECK(cw::binomial(5, 5) == 1);
  CHECK(cw::binomial(3, 5) == 0);
  CHECK(cw::binomial(10, 4) == 210);

  // C(n, k) = n (n-1) ... (n-k+1) / k! extends to negative n.
  CHECK(cw::binomial(-1, 0) == 1);
  CHECK(cw::binomial(-1, 1) == -1);
  CHECK(cw::binomial(-1, 3) == -1);
  CHECK(cw::binomial(-2, 3) == -4);
  CHECK(cw::binomial(-3, 2) == 6);
  CHECK(cw::binomial(-4, 2) == 10);
}

TEST_CASE("exact rational square roots") {
  auto root = cw::exact_sqrt(cw::Rat(49, 4));
  REQUIRE(root.has_value());
  CHECK(*root == cw::Rat(7, 2));

  root = cw::exact_sqrt(cw::Rat(0));
  REQUIRE(root.has_value());
  CHECK(*root == 0);

  root = cw::exact_sqrt(cw::Rat(144));
  REQUIRE(root.has_value());
  CHECK(*root == 12);

  CHECK_FALSE(cw::exact_sqrt(cw::Rat(2)).has_value());
  CHECK_FALSE(cw::exact_sqrt(cw::Rat(49, 8)).has_value());
  CHECK_FALSE(cw::exact_sqrt(cw::Rat(-9)).has_value());
  CHECK_FALSE(cw::exact_sqrt(cw::Rat(12)).has_value());

  // The root itself can be a large exact rational.
  const cw::Rat big(cw::Int("123456789123456789"), 4);
  root = cw::exact_sqrt(big * big);
  REQUIRE(root.has_value());
  CHECK(*root == big);
}

TEST_CASE("rational rendering") {
  CHECK(cw::rat_to_string(cw::Rat(3)) == "3");
  CHECK(cw::rat_to_string(cw::Rat(-12)) == "-12");
  CHECK(cw::rat_to_string(cw::Rat(0)) == "0");
  CHECK(cw::rat_to_string(cw::Rat(-5, 2)) == "-5/2");
  CHECK(cw::rat_to_string(cw::Rat(4, 3)) == "4/3");
  CHECK(cw::rat_to_string(cw::Rat(-6, 4)) == "-3/2");
}

}  // TEST_SUITE
