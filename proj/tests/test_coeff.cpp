#include <doctest.h>

#include "helpers.hpp"

using namespace focaljet;
using namespace testutil;

TEST_SUITE_BEGIN("coeff");

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).numerator() == -1);
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational field axioms, randomized") {
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_rational(), b = rand_rational(), c = rand_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("rational mod_two lands in [0,2)") {
    CHECK(Rational(7, 2).mod_two() == Rational(3, 2));
    CHECK(Rational(-1, 2).mod_two() == Rational(3, 2));
    CHECK(Rational(4).mod_two() == Rational(0));
    for (int i = 0; i < 100; ++i) {
        Rational r = rand_rational(20, 7);
        Rational m = r.mod_two();
        CHECK(Rational(0) <= m);
        CHECK(m < Rational(2));
        CHECK(((r - m) / Rational(2)).is_integer());
    }
}

TEST_CASE("rational string round trip") {
    for (int i = 0; i < 100; ++i) {
        Rational r = rand_rational(30, 9);
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("gaussian rational arithmetic") {
    GaussRational i = GaussRational::unit_i();
    CHECK(i * i == GaussRational(-1));
    CHECK(i.conj() == -i);
    for (int k = 0; k < 100; ++k) {
        GaussRational a = rand_gauss(), b = rand_gauss();
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!a.is_zero()) CHECK(a * a.inverse() == GaussRational(1));
    }
    CHECK_THROWS_WITH_AS(GaussRational().inverse(), "zero divisor", std::domain_error);
}

TEST_CASE("gaussian rational strings") {
    CHECK(GaussRational(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4 i");
    CHECK(GaussRational(Rational(0), Rational(1)).str() == "1/1 i");
    CHECK(GaussRational(Rational(5, 3)).str() == "5/3");
    for (int k = 0; k < 100; ++k) {
        GaussRational g = rand_gauss();
        CHECK(GaussRational::parse(g.str()) == g);
    }
}

TEST_CASE("pi coefficient ring operations") {
    // (1/2 + (3/4) pi) + 1/2 = 1 + (3/4) pi
    PiCoeff a(Rational(1, 2));
    a.set(1, GaussRational(Rational(3, 4)));
    PiCoeff sum = a + PiCoeff(Rational(1, 2));
    CHECK(sum.part(0) == GaussRational(1));
    CHECK(sum.part(1) == GaussRational(Rational(3, 4)));

    // conj(i pi) = -i pi
    PiCoeff ipi = PiCoeff::pi_term(1, GaussRational::unit_i());
    CHECK(ipi.conj() == PiCoeff::pi_term(1, -GaussRational::unit_i()));

    // (2 pi) * (1/2) = pi
    PiCoeff twopi = PiCoeff::pi_term(1, GaussRational(2));
    CHECK(twopi * GaussRational(Rational(1, 2)) == PiCoeff::pi_term(1));
    CHECK(twopi.div(Rational(2)) == PiCoeff::pi_term(1));
    CHECK_THROWS_WITH_AS(twopi.div(Rational(0)), "zero divisor", std::domain_error);
}

TEST_CASE("reality and pi-freeness predicates") {
    CHECK(PiCoeff(Rational(3, 4)).is_real());
    CHECK(PiCoeff(Rational(3, 4)).is_pi_free());
    PiCoeff twopi = PiCoeff::pi_term(1, GaussRational(2));
    CHECK(twopi.is_real());
    CHECK(!twopi.is_pi_free());
    CHECK(!PiCoeff(GaussRational::unit_i()).is_real());
    CHECK(PiCoeff().is_real());
    CHECK(PiCoeff().is_pi_free());
}

TEST_CASE("pi coefficient ring laws, randomized") {
    for (int i = 0; i < 150; ++i) {
        PiCoeff a = rand_picoeff(), b = rand_picoeff(), c = rand_picoeff();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        // canonical form is unique: a - b = 0 iff identical term maps
        CHECK(((a - b).is_zero()) == (a == b));
        GaussRational d = rand_nonzero_gauss();
        CHECK((a * d).div(d) == a);
    }
}

TEST_SUITE_END();
