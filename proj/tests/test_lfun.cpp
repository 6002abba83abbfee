#include "doctest.h"

#include "gspingj/lfun.hpp"

using namespace gspingj;

TEST_CASE("h_of_dim") {
    CHECK(h_of_dim(1) == 1);
    CHECK(h_of_dim(2) == 0);
    CHECK(h_of_dim(3) == 1);
    CHECK(h_of_dim(4) == 0);
    CHECK(h_of_dim(5) == 1);
    CHECK(h_of_dim(6) == 0);
}

TEST_CASE("make_satake validates shapes and omega") {
    QSpace sF = parse_space("n=1,E=F,p=3");
    SatakeData dF = make_satake(sF, {Rational(2)}, {Rational(5)});
    CHECK(dF.omega() == Rational(5));
    CHECK_THROWS_AS(make_satake(sF, {}, {Rational(5)}), std::invalid_argument);
    CHECK_THROWS_AS(make_satake(sF, {Rational(2)}, {Rational(5), Rational(7)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_satake(sF, {Rational(0)}, {Rational(5)}), std::invalid_argument);

    QSpace sS = parse_space("n=1,E=split,p=3");
    SatakeData dS = make_satake(sS, {Rational(2)}, {Rational(3), Rational(7)});
    CHECK(dS.omega() == Rational(21));
    CHECK_THROWS_AS(make_satake(sS, {Rational(2)}, {Rational(3)}), std::invalid_argument);

    QSpace sU = parse_space("n=1,E=unram:u=2,p=5");
    SatakeData dU = make_satake(sU, {Rational(2)}, {Rational(-4)});
    CHECK(dU.omega() == Rational(-4));
}

TEST_CASE("geometric_x and one_minus_x") {
    unsigned long p = 3;
    Rational a = make_rational(2, 7);

    TruncSeries g = geometric_x(a, 0, 1, 0, 5, p);
    for (int k = 0; k <= 5; ++k) CHECK(g.coeff(k) == rational_pow(a, k));

    // step c q^{(e2 - d h)/2} on x^d
    TruncSeries g2 = geometric_x(a, 2, 2, 0, 6, p);
    for (int k = 0; k <= 6; ++k) {
        if (k % 2 == 0)
            CHECK(g2.coeff(k) == rational_pow(a * 3, k / 2));
        else
            CHECK(g2.coeff(k) == Rational(0));
    }

    // h rides along: e2 = d h makes the q-power drop out
    TruncSeries g3 = geometric_x(a, 1, 1, 1, 4, p);
    CHECK(g3.coeff(1) == a);
    CHECK(g3.coeff(2) == a * a);

    CHECK_THROWS_AS(geometric_x(a, 1, 1, 0, 4, p), std::invalid_argument);
    CHECK_THROWS_AS(one_minus_x(a, 3, 2, 0, 4, p), std::invalid_argument);

    // numerator times the geometric series is one
    TruncSeries prod = one_minus_x(a, 2, 2, 0, 6, p) * geometric_x(a, 2, 2, 0, 6, p);
    CHECK(prod == TruncSeries::one(6));

    // degree below the monomial: numerator collapses to 1
    CHECK(one_minus_x(a, 0, 2, 0, 1, p) == TruncSeries::one(1));
}

TEST_CASE("dV_x fixtures") {
    unsigned long p = 3;
    Rational om = make_rational(5, 2);

    TruncSeries d1 = dV_x(1, om, 6, p);
    CHECK(d1.coeff(0) == Rational(1));
    CHECK(d1.coeff(2) == -om / 3);
    CHECK(d1.coeff(4) == Rational(0));

    CHECK(dV_x(2, om, 6, p) == TruncSeries::one(6));
    CHECK(dV_x(3, om, 6, p) == TruncSeries::one(6));

    TruncSeries d4 = dV_x(4, om, 8, p);
    for (int k = 0; k <= 8; k += 2) CHECK(d4.coeff(k) == rational_pow(om * 9, k / 2));

    TruncSeries d5 = dV_x(5, om, 8, p);
    for (int k = 0; k <= 8; k += 2) CHECK(d5.coeff(k) == rational_pow(om * 3, k / 2));

    // dim 6: zeta(omega, 2s-2) zeta(omega, 2s-4)
    TruncSeries d6 = dV_x(6, om, 6, p);
    CHECK(d6.coeff(2) == om * 9 + om * 81);
    CHECK(d6.coeff(4) == om * om * (81 + 9 * 81 + 81 * 81));
}

TEST_CASE("standard L factorizations") {
    unsigned long p = 3;
    int M = 6;

    QSpace sF = parse_space("n=1,E=F,p=3");
    SatakeData dF = make_satake(sF, {make_rational(2, 3)}, {Rational(5)});
    Rational om = dF.omega();
    TruncSeries lF = standard_L_plain(dF, M, p);
    CHECK(lF == geometric_x(dF.a[0], 0, 1, 0, M, p) *
                    geometric_x(om / dF.a[0], 0, 1, 0, M, p));
    CHECK(lF.coeff(1) == dF.a[0] + om / dF.a[0]);

    QSpace sS = parse_space("n=1,E=split,p=3");
    SatakeData dS = make_satake(sS, {Rational(2)}, {Rational(3), Rational(7)});
    TruncSeries lS = standard_L_plain(dS, M, p);
    CHECK(lS.coeff(1) == dS.a[0] + dS.omega() / dS.a[0] + dS.b[0] + dS.b[1]);
    CHECK(lS == geometric_x(dS.a[0], 0, 1, 0, M, p) *
                    geometric_x(dS.omega() / dS.a[0], 0, 1, 0, M, p) *
                    geometric_x(dS.b[0], 0, 1, 0, M, p) *
                    geometric_x(dS.b[1], 0, 1, 0, M, p));

    QSpace sU = parse_space("n=1,E=unram:u=2,p=3");
    SatakeData dU = make_satake(sU, {Rational(2)}, {Rational(-5)});
    TruncSeries lU = standard_L_plain(dU, M, p);
    CHECK(lU == geometric_x(dU.a[0], 0, 1, 0, M, p) *
                    geometric_x(dU.omega() / dU.a[0], 0, 1, 0, M, p) *
                    geometric_x(dU.b[0], 0, 2, 0, M, p));
    CHECK(lU.coeff(1) == dU.a[0] + dU.omega() / dU.a[0]);
}

TEST_CASE("shifted L is the plain L with a q-power per degree") {
    unsigned long p = 5;
    int M = 5;
    QSpace s2 = parse_space("n=2,E=split,p=5");
    SatakeData d2 = make_satake(s2, {Rational(2), make_rational(1, 2)},
                                {Rational(3), Rational(-1)});
    for (int dimV : {3, 4, 5, 6}) {
        SatakeData sd = d2;
        if (dimV == 3 || dimV == 4) {
            sd.n = 1;
            sd.a = {Rational(2)};
        }
        if (dimV == 3 || dimV == 5) {
            sd.ekind = EKind::Field;
            sd.b = {Rational(7)};
        }
        int h = h_of_dim(dimV);
        TruncSeries plain = standard_L_plain(sd, M, p);
        TruncSeries shifted = standard_L_shifted_x(sd, dimV, M, p);
        Rational step = q_pow(p, (dimV - 2 - h) / 2);
        for (int k = 0; k <= M; ++k)
            CHECK(shifted.coeff(k) == plain.coeff(k) * rational_pow(step, k));
    }
}

TEST_CASE("basic function coefficients") {
    unsigned long p = 3;
    int M = 6;

    for (int dimV : {2, 3}) {
        auto c = basic_coeffs(dimV, M, p);
        CHECK(c[0] == Rational(1));
        for (int k = 1; k <= M; ++k) CHECK(c[k] == Rational(0));
    }

    for (int dimV : {4, 5}) {
        auto c = basic_coeffs(dimV, M, p);
        for (int k = 0; k <= M; ++k) CHECK(c[k] == q_pow(p, 2 * k));
    }

    auto c6 = basic_coeffs(6, 4, p);
    CHECK(c6[0] == Rational(1));
    CHECK(c6[1] == Rational(9 + 81));
    CHECK(c6[2] == Rational(81 + 729 + 6561));

    auto cp = basic_coeffs_prime(4, 2, p);
    CHECK(cp[0] == Rational(1));
    CHECK(cp[1] == Rational(1 + 9));
    CHECK(cp[2] == Rational(1 + 9 + 81));

    // primed coefficients are the partial sums, for every relevant dimension
    for (int dimV : {2, 3, 4, 5, 6}) {
        auto plain = basic_coeffs(dimV, 10, p);
        auto prime = basic_coeffs_prime(dimV, 10, p);
        Rational acc(0);
        for (int k = 0; k <= 10; ++k) {
            acc += plain[k];
            CHECK(prime[k] == acc);
        }
    }

    CHECK_THROWS_AS(basic_coeffs(1, 3, p), std::invalid_argument);
}
