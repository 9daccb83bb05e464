#include <doctest.h>

#include "treeot/error.hpp"
#include "treeot/rational.hpp"

using namespace treeot;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("0.25") == ratio(1, 4));
  CHECK(parse_rational(" 7/3 ") == ratio(7, 3));
  CHECK(to_string(ratio(6, 4)) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(parse_rational(to_string(ratio(-22, 7)))) == "-22/7");
  CHECK(to_decimal(ratio(1, 3)) == "0.333333333333");

  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.2.3", "--1"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("ratio canonicalizes") {
  CHECK(ratio(4, 2) == 2);
  CHECK(ratio(4, 2).get_den() == 1);
  CHECK(ratio(3, -6) == ratio(-1, 2));
}

TEST_CASE("integer powers") {
  CHECK(power(2, 10) == 1024);
  CHECK(power(3, -2) == ratio(1, 9));
  CHECK(power(ratio(2, 3), 0) == 1);
  CHECK_THROWS_AS(power(0, -1), Error);
}
