#include "doctest.h"

#include "gspingj/series.hpp"

using namespace gspingj;

TEST_CASE("constructors and coefficient access") {
    TruncSeries z(4);
    CHECK(z.degree() == 4);
    for (size_t k = 0; k <= 4; ++k) CHECK(z.coeff(k) == Rational(0));

    TruncSeries o = TruncSeries::one(3);
    CHECK(o.coeff(0) == Rational(1));
    CHECK(o.coeff(3) == Rational(0));

    TruncSeries m = TruncSeries::monomial(5, 2, make_rational(7, 3));
    CHECK(m.coeff(2) == make_rational(7, 3));
    CHECK(m.coeff(1) == Rational(0));
    // a monomial beyond the truncation degree is the zero series
    CHECK(TruncSeries::monomial(2, 3, Rational(1)) == TruncSeries(2));
    CHECK_THROWS_AS(z.coeff(5), std::out_of_range);
}

TEST_CASE("geometric series") {
    TruncSeries g = TruncSeries::geometric(Rational(2), 1, 4);
    for (size_t k = 0; k <= 4; ++k) CHECK(g.coeff(k) == rational_pow(Rational(2), k));

    TruncSeries g2 = TruncSeries::geometric(make_rational(1, 3), 2, 5);
    CHECK(g2.coeff(0) == Rational(1));
    CHECK(g2.coeff(1) == Rational(0));
    CHECK(g2.coeff(2) == make_rational(1, 3));
    CHECK(g2.coeff(3) == Rational(0));
    CHECK(g2.coeff(4) == make_rational(1, 9));
    CHECK(g2.coeff(5) == Rational(0));
}

TEST_CASE("ring operations") {
    TruncSeries a = TruncSeries::geometric(Rational(5), 1, 6);
    TruncSeries lhs = TruncSeries::one(6) - TruncSeries::monomial(6, 1, Rational(5));
    CHECK(lhs * a == TruncSeries::one(6));

    TruncSeries b = TruncSeries::monomial(6, 2, Rational(3));
    CHECK((a + b) - b == a);

    TruncSeries c = a * make_rational(1, 5);
    CHECK(c.coeff(1) == Rational(1));

    TruncSeries acc = TruncSeries(6);
    acc += a;
    acc += a;
    CHECK(acc == a * Rational(2));

    TruncSeries other(3);
    CHECK_THROWS_AS(a + other, std::invalid_argument);
    CHECK_THROWS_AS(a * other, std::invalid_argument);
}

TEST_CASE("truncation in products") {
    // (1 + X)^2 truncated at degree 1 keeps only 1 + 2X
    TruncSeries s(1);
    s.coeff(0) = 1;
    s.coeff(1) = 1;
    TruncSeries sq = s * s;
    CHECK(sq.coeff(0) == Rational(1));
    CHECK(sq.coeff(1) == Rational(2));
}

TEST_CASE("inverse") {
    TruncSeries s(5);
    s.coeff(0) = make_rational(2);
    s.coeff(1) = Rational(-1);
    s.coeff(3) = make_rational(4, 7);
    CHECK(s.inverse() * s == TruncSeries::one(5));

    TruncSeries sing(3);
    sing.coeff(1) = Rational(1);
    CHECK_THROWS_AS(sing.inverse(), std::invalid_argument);
}

TEST_CASE("scale_variable") {
    TruncSeries s(3);
    s.coeff(0) = 1;
    s.coeff(1) = 2;
    s.coeff(2) = 3;
    s.coeff(3) = 4;
    TruncSeries t = s.scale_variable(make_rational(1, 2));
    CHECK(t.coeff(0) == Rational(1));
    CHECK(t.coeff(1) == Rational(1));
    CHECK(t.coeff(2) == make_rational(3, 4));
    CHECK(t.coeff(3) == make_rational(1, 2));
}
