#include "doctest.h"

#include "gspingj/quadspace.hpp"

using namespace gspingj;

TEST_CASE("build_space layouts") {
    QSpace sF = build_space(2, EInfo{EKind::Field, 0}, 3);
    CHECK(sF.dim == 5);
    CHECK(sF.e_pos(1) == 0);
    CHECK(sF.e_pos(2) == 1);
    CHECK(sF.vE_pos(0) == 2);
    CHECK(sF.f_pos(2) == 3);
    CHECK(sF.f_pos(1) == 4);
    CHECK(sF.gram[0][4] == Rational(1));
    CHECK(sF.gram[1][3] == Rational(1));
    CHECK(sF.gram[0][3] == Rational(0));
    CHECK(sF.gram[2][2] == Rational(2));
    CHECK(sF.hyperbolic_index(0) == 1);
    CHECK(sF.hyperbolic_index(4) == 1);
    CHECK(sF.hyperbolic_index(3) == 2);

    QSpace sS = build_space(1, EInfo{EKind::Split, 0}, 5);
    CHECK(sS.dim == 4);
    CHECK(sS.vE_pos(0) == 1);
    CHECK(sS.vE_pos(1) == 2);
    CHECK(sS.gram[1][2] == Rational(1));
    CHECK(sS.gram[1][1] == Rational(0));

    QSpace sU = build_space(0, EInfo{EKind::UnramifiedField, Rational(2)}, 5);
    CHECK(sU.dim == 2);
    CHECK(sU.gram[0][0] == Rational(2));
    CHECK(sU.gram[1][1] == Rational(-4));
}

TEST_CASE("labels") {
    QSpace s = build_space(2, EInfo{EKind::Split, 0}, 3);
    CHECK(s.label(0) == "e1");
    CHECK(s.pos_of_label("f2") == s.f_pos(2));
    CHECK(s.pos_of_label(s.label(3)) == 3);
    CHECK_THROWS_AS(s.pos_of_label("bogus"), std::invalid_argument);
}

TEST_CASE("descriptor grammar") {
    QSpace s = parse_space("n=2,E=F,p=3");
    CHECK(s.n == 2);
    CHECK(s.e.kind == EKind::Field);
    CHECK(s.p == 3);
    CHECK(parse_space(s.descriptor()).dim == s.dim);

    QSpace s2 = parse_space("n=1,E=split,p=5");
    CHECK(s2.e.kind == EKind::Split);
    CHECK(parse_space(s2.descriptor()).descriptor() == s2.descriptor());

    QSpace s3 = parse_space("n=0,E=unram:u=2,p=5");
    CHECK(s3.e.kind == EKind::UnramifiedField);
    CHECK(s3.e.u == Rational(2));
    CHECK(parse_space(s3.descriptor()).e.u == Rational(2));

    CHECK_THROWS_AS(parse_space("n=1,E=F,p=4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("n=1,E=blah,p=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("garbage"), std::invalid_argument);
    // u must be a nonsquare unit mod p
    CHECK_THROWS_AS(parse_space("n=0,E=unram:u=4,p=5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_space("n=0,E=unram:u=5,p=5"), std::invalid_argument);
}

TEST_CASE("quadratic form and pairing") {
    QSpace s = build_space(1, EInfo{EKind::Field, 0}, 3);
    // e1 at 0, w at 1, f1 at 2
    LatticeVector e1 = lattice_vector(s, {Rational(1), Rational(0), Rational(0)});
    LatticeVector w = lattice_vector(s, {Rational(0), Rational(1), Rational(0)});
    LatticeVector f1 = lattice_vector(s, {Rational(0), Rational(0), Rational(1)});
    CHECK(quad_form(s, e1) == Rational(0));
    CHECK(quad_form(s, f1) == Rational(0));
    CHECK(quad_form(s, w) == Rational(1));
    CHECK(bilinear(s, e1, f1) == Rational(1));
    CHECK(bilinear(s, e1, w) == Rational(0));
    CHECK(bilinear(s, w, w) == Rational(2));
    // q(v + w) - q(v) - q(w) = (v, w)
    LatticeVector vw = lattice_vector(s, {Rational(1), Rational(1), Rational(0)});
    CHECK(quad_form(s, vw) - quad_form(s, e1) - quad_form(s, w) == bilinear(s, e1, w));
}

TEST_CASE("lattice and dual") {
    QSpace s = build_space(1, EInfo{EKind::UnramifiedField, Rational(2)}, 3);
    LatticeVector v = lattice_vector(s, {Rational(1), Rational(-2), Rational(0), Rational(3)});
    CHECK(in_lattice(s, v));
    LatticeVector frac =
        lattice_vector(s, {make_rational(1, 3), Rational(0), Rational(0), Rational(0)});
    CHECK_FALSE(in_lattice(s, frac));

    // the lattice is self-dual: basis vectors are in the dual, p^{-1} times not
    for (int pos = 0; pos < s.dim; ++pos) {
        std::vector<Rational> c(s.dim, Rational(0));
        c[pos] = 1;
        CHECK(dual_membership(s, lattice_vector(s, c)));
        c[pos] = make_rational(1, 3);
        CHECK_FALSE(dual_membership(s, lattice_vector(s, c)));
    }
}

TEST_CASE("coordinate size validation") {
    QSpace s = build_space(1, EInfo{EKind::Field, 0}, 3);
    CHECK_THROWS_AS(lattice_vector(s, {Rational(1)}), std::invalid_argument);
}
