#include "doctest.h"

#include "conformalk/scalar.hpp"

using namespace conformalk;

TEST_CASE("gaussian rational arithmetic") {
  GaussScalar a(1), b = GaussScalar::i();
  CHECK(b * b == GaussScalar(-1));
  GaussScalar z(mpq_class(1), mpq_class(2));  // 1 + 2i
  GaussScalar w(mpq_class(3), mpq_class(-1));
  CHECK(z * w == GaussScalar(mpq_class(5), mpq_class(5)));
  CHECK(z + w == GaussScalar(mpq_class(4), mpq_class(1)));
  CHECK(z - z == GaussScalar());
  CHECK((z / w) * w == z);
  CHECK(z.conj() == GaussScalar(mpq_class(1), mpq_class(-2)));
  CHECK(z.norm() == 5);
  CHECK(z.inverse() * z == a);
}

TEST_CASE("ratio constructor canonicalizes") {
  CHECK(GaussScalar::ratio(2, 4) == GaussScalar::ratio(1, 2));
  CHECK(GaussScalar::ratio(-3, -6) == GaussScalar::ratio(1, 2));
  CHECK(GaussScalar::ratio(3, -6).re() == mpq_class(-1, 2));
  CHECK(GaussScalar::ratio(0, 7).is_zero());
}

TEST_CASE("parsing") {
  CHECK(GaussScalar::parse("3/4", "-1/2") ==
        GaussScalar(mpq_class(3, 4), mpq_class(-1, 2)));
  CHECK(GaussScalar::parse("-5") == GaussScalar(-5));
  CHECK(GaussScalar::parse("0", "1") == GaussScalar::i());
  CHECK_THROWS_AS(GaussScalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(GaussScalar::parse("1/0"), ParseError);
}

TEST_CASE("division by zero throws") {
  GaussScalar z(3);
  CHECK_THROWS_AS(z / GaussScalar(), DivisionByZero);
  CHECK_THROWS_AS(GaussScalar().inverse(), DivisionByZero);
}

TEST_CASE("string forms") {
  CHECK(GaussScalar().str() == "0");
  CHECK(GaussScalar::ratio(3, 2).str() == "3/2");
  CHECK(GaussScalar::i().str() == "i");
  CHECK((GaussScalar(-2) * GaussScalar::i()).str() == "-2i");
  CHECK(GaussScalar(mpq_class(1), mpq_class(1)).str() == "1+i");
  CHECK(GaussScalar(mpq_class(1, 2), mpq_class(-3)).str() == "1/2-3i");
  CHECK(GaussScalar::ratio(1, 2).re_str() == "1/2");
  CHECK(GaussScalar(7).re_str() == "7");
}

TEST_CASE("total order is consistent") {
  GaussScalar a = GaussScalar::ratio(1, 3), b = GaussScalar::ratio(1, 2);
  CHECK(a < b);
  CHECK(!(b < a));
  GaussScalar c(mpq_class(1, 3), mpq_class(1));
  CHECK(a < c);  // same re, im breaks the tie
}
