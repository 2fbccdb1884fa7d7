#include <doctest.h>

#include "hklat/rational.hpp"

using namespace hklat;

TEST_CASE("rationals stay reduced with positive denominators") {
    Rat r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(10, 5).is_integer());
    CHECK_THROWS_AS(Rat(1, 0), BadInput);
}

TEST_CASE("rational arithmetic is exact") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(-a == Rat(-1, 3));
    CHECK(Rat::inverse(Rat(-2, 7)) == Rat(-7, 2));
    CHECK_THROWS_AS(a / Rat(0), BadInput);
    CHECK_THROWS_AS(Rat::inverse(Rat(0)), BadInput);
    CHECK(a < Rat(1, 2));
    CHECK(Rat(-5) < Rat(-4));
}

TEST_CASE("parse and str round trip") {
    for (const char* s : {"0", "5", "-12", "7/3", "-355/113", "+4"}) {
        Rat r = Rat::parse(s);
        CHECK(Rat::parse(r.str()) == r);
    }
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(Rat::parse(""), ParseError);
    CHECK_THROWS_AS(Rat::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rat::parse("x"), ParseError);
    CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
}

TEST_CASE("binomials and factorials") {
    CHECK(Rat::binomial(26, 2) == Rat(325));
    CHECK(Rat::binomial(4, 7) == Rat(0));
    CHECK(Rat::factorial(5) == Rat(120));
}

TEST_CASE("gaussian rationals form a field") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(Rat(-1)));
    GaussRat z(Rat(1, 2), Rat(-3));
    CHECK(z.conj().conj() == z);
    CHECK(z * z.conj() == GaussRat(z.norm()));
    CHECK(z / z == GaussRat(Rat(1)));
    CHECK((z + (-z)).is_zero());
    CHECK_THROWS_AS(z / GaussRat(Rat(0)), BadInput);
    CHECK(z.norm() == Rat(1, 4) + Rat(9));
    CHECK(GaussRat(Rat(0), Rat(0)).norm() == Rat(0));
}

TEST_CASE("gaussian parse round trip") {
    for (const char* s : {"i", "-i", "3i", "-2/3i", "1+i", "1-i", "1/2-3/4i", "-7", "0"}) {
        GaussRat z = GaussRat::parse(s);
        CHECK(GaussRat::parse(z.str()) == z);
    }
    CHECK(GaussRat::parse("1+2i") == GaussRat(Rat(1), Rat(2)));
}
