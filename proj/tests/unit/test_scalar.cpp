#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "hoffman/scalar.hpp"

using hoffman::Scalar;

TEST_CASE("parse accepts integers, fractions and finite decimals") {
  CHECK(Scalar::parse("3") == Scalar(3));
  CHECK(Scalar::parse("-2/7") == Scalar(-2, 7));
  CHECK(Scalar::parse("+4/6") == Scalar(2, 3));
  CHECK(Scalar::parse("0.25") == Scalar(1, 4));
  CHECK(Scalar::parse("-1.5") == Scalar(-3, 2));
  CHECK(Scalar::parse("\xE2\x88\x92" "3") == Scalar(-3));  // unicode minus
}

TEST_CASE("parse rejects junk") {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1e5", "--1", " ", "0x10", ".5/2"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(Scalar::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("canonical string form round-trips") {
  for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "123456789012345678901234567891/2"}) {
    CAPTURE(s);
    CHECK(Scalar::parse(s).str() == s);
    CHECK(Scalar::parse(Scalar::parse(s).str()) == Scalar::parse(s));
  }
  CHECK(Scalar(6, -4).str() == "-3/2");
}

TEST_CASE("arithmetic is exact") {
  const Scalar third(1, 3);
  CHECK(third + third + third == Scalar(1));
  CHECK(Scalar(1, 10) * Scalar(10) == Scalar(1));
  CHECK(Scalar(2, 3) / Scalar(4, 9) == Scalar(3, 2));
  CHECK(-Scalar(5, 2) == Scalar(-5, 2));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}

TEST_CASE("ordering and sign") {
  CHECK(Scalar(1, 3) < Scalar(1, 2));
  CHECK(Scalar(-1, 2) < Scalar(0));
  CHECK(Scalar(-3, 4).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK(Scalar(0).is_zero());
  CHECK(abs(Scalar(-7, 3)) == Scalar(7, 3));
  CHECK(Scalar(3, 4).to_double() == doctest::Approx(0.75));
  std::ostringstream os;
  os << Scalar(-1, 8);
  CHECK(os.str() == "-1/8");
}
