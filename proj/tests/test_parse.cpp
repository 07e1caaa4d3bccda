#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "rosette/laurent.hpp"
#include "rosette/parse.hpp"

using namespace rosette;

TEST_CASE("parse_laurent expands displayed polynomials") {
    auto fig1 = parse_laurent("z^2 + z^7 + z^12");
    REQUIRE(fig1);
    CHECK(fig1->coeff(2) == Complex(1.0, 0.0));
    CHECK(fig1->coeff(7) == Complex(1.0, 0.0));
    CHECK(fig1->coeff(12) == Complex(1.0, 0.0));
    CHECK(fig1->min_exponent() == 2);
    CHECK(fig1->max_exponent() == 12);

    auto rhodonea = parse_laurent("(z^3 - z^(-1))/(2i)");
    REQUIRE(rhodonea);
    CHECK(std::abs(rhodonea->coeff(-1) - Complex(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(rhodonea->coeff(3) - Complex(0.0, -0.5)) < 1e-15);

    auto cubic = parse_laurent("z*(z - 1/2)*(z - i)");
    REQUIRE(cubic);
    CHECK(std::abs(cubic->coeff(1) - Complex(0.0, 0.5)) < 1e-15);
    CHECK(std::abs(cubic->coeff(2) - Complex(-0.5, -1.0)) < 1e-15);
    CHECK(std::abs(cubic->coeff(3) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("parse_laurent reports diagnostics with offsets") {
    auto doubled = parse_laurent("z^^2");
    REQUIRE(!doubled);
    CHECK(doubled.diagnostic->offset <= 4);
    CHECK(!doubled.diagnostic->message.empty());

    auto fractional = parse_laurent("z^(1/2)");
    CHECK(!fractional);

    auto divide_by_z = parse_laurent("1/(z+1)");
    CHECK(!divide_by_z);

    auto cancels_to_zero = parse_laurent("z - z");
    CHECK(!cancels_to_zero);

    auto empty = parse_laurent("");
    CHECK(!empty);

    auto trailing = parse_laurent("z^2 $");
    REQUIRE(!trailing);
    CHECK(trailing.diagnostic->offset <= 6);
}

TEST_CASE("parse_laurent accepts scalar constants pi and sqrt") {
    auto p = parse_laurent("(pi/2)*z + sqrt(2)*z^3");
    REQUIRE(p);
    CHECK(std::abs(p->coeff(1).real() - 1.5707963267948966) < 1e-15);
    CHECK(std::abs(p->coeff(3).real() - 1.4142135623730951) < 1e-15);
}

TEST_CASE("parse_expsum reads weighted exponentials") {
    auto g = parse_expsum("2*e(1) + e(sqrt(2))");
    REQUIRE(g);
    REQUIRE(g->term_count() == 2);
    CHECK(std::abs(g->terms()[0].weight - Complex(2.0, 0.0)) == 0.0);
    CHECK(g->terms()[0].exponent == ExactReal(1));
    CHECK(g->terms()[1].exponent == ExactReal::surd_multiple(Rational(1), 2));

    auto h = parse_expsum("e(1/2) - e(3/4)");
    REQUIRE(h);
    REQUIRE(h->term_count() == 2);
    CHECK(h->terms()[0].exponent == ExactReal(Rational(1, 2)));
    CHECK(std::abs(h->terms()[1].weight - Complex(-1.0, 0.0)) == 0.0);

    CHECK(!parse_expsum("0*e(1)"));

    auto merged = parse_expsum("e(1) + e(1)");
    REQUIRE(merged);
    REQUIRE(merged->term_count() == 1);
    CHECK(std::abs(merged->terms()[0].weight - Complex(2.0, 0.0)) == 0.0);
}

TEST_CASE("format prints canonical text") {
    auto two_term = LaurentPolynomial::monomial(2, Complex(1.0, 0.0)) +
                    LaurentPolynomial::monomial(5, Complex(2.0, 0.0));
    CHECK(format(two_term) == "z^2 + 2*z^5");
    CHECK(format(LaurentPolynomial::monomial(-1, Complex(0.0, 0.5))) == "(0.5i)*z^(-1)");
    CHECK(format(LaurentPolynomial::monomial(0, Complex(-1.0, 0.0))) == "-1");
}

TEST_CASE("format round-trips dyadic polynomials exactly") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> exp_dist(-6, 10);
    std::uniform_int_distribution<int> numer(-64, 64);
    std::uniform_int_distribution<int> shift(0, 5);
    std::uniform_int_distribution<int> term_count(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        LaurentPolynomial p;
        int terms = term_count(rng);
        for (int k = 0; k < terms; ++k) {
            double re = numer(rng) / static_cast<double>(1 << shift(rng));
            double im = numer(rng) / static_cast<double>(1 << shift(rng));
            p = p + LaurentPolynomial::monomial(exp_dist(rng), Complex(re, im));
        }
        if (p.is_zero()) continue;
        auto back = parse_laurent(format(p));
        REQUIRE(back);
        CHECK(*back == p);
    }
}

TEST_CASE("parser is total on fuzzed input") {
    const std::string charset = "z^+-*/(). 0123456789ieqrtsp,";
    std::mt19937 rng(22);
    std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        int n = len(rng);
        for (int k = 0; k < n; ++k) text.push_back(charset[pick(rng)]);
        auto asPoly = parse_laurent(text);
        CHECK((asPoly.value.has_value() || asPoly.diagnostic.has_value()));
        if (asPoly.diagnostic) CHECK(asPoly.diagnostic->offset <= text.size());
        auto asSum = parse_expsum(text);
        CHECK((asSum.value.has_value() || asSum.diagnostic.has_value()));
    }
}

TEST_CASE("parse_complex accepts point literals") {
    auto plain = parse_complex("1.5");
    REQUIRE(plain);
    CHECK(*plain == Complex(1.5, 0.0));
    auto negi = parse_complex("-2i");
    REQUIRE(negi);
    CHECK(*negi == Complex(0.0, -2.0));
    auto both = parse_complex("0.3+0.4i");
    REQUIRE(both);
    CHECK(std::abs(*both - Complex(0.3, 0.4)) < 1e-15);
    auto unit = parse_complex("1-i");
    REQUIRE(unit);
    CHECK(*unit == Complex(1.0, -1.0));
    auto lone = parse_complex("i");
    REQUIRE(lone);
    CHECK(*lone == Complex(0.0, 1.0));
    CHECK(!parse_complex("z"));
    CHECK(!parse_complex("1.5 oops"));
}
