#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rosette/laurent.hpp"
#include "rosette/parse.hpp"
#include "rosette/rational.hpp"

using namespace rosette;

namespace {
LaurentPolynomial lp(const char* text) { return *parse_laurent(text); }
} // namespace

TEST_CASE("eval sums terms at a point") {
    CHECK(std::abs(eval(lp("z^2+z^7+z^12"), Complex(1.0, 0.0)) - Complex(3.0, 0.0)) < 1e-14);
    CHECK(std::abs(eval(lp("(z^3 - z^(-1))/(2i)"), Complex(1.0, 0.0))) < 1e-14);
    CHECK(std::abs(eval(lp("z*(z - 1/2)*(z - i)"), Complex(0.0, 1.0))) < 1e-14);
}

TEST_CASE("eval rejects z = 0 when a pole is present") {
    CHECK_THROWS_AS((void)eval(lp("z^(-1) + z"), Complex(0.0, 0.0)), std::domain_error);
    CHECK(std::abs(eval(lp("z^2"), Complex(0.0, 0.0))) == 0.0);
}

TEST_CASE("eval_circle evaluates on the unit circle") {
    CHECK(std::abs(eval_circle(lp("z"), 0.25) - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(eval_circle(lp("z^2+2*z^5"), 0.0) - Complex(3.0, 0.0)) < 1e-15);
    CHECK(std::abs(eval_circle(lp("z^5+5*z"), 0.5) - Complex(-6.0, 0.0)) < 1e-13);
}

TEST_CASE("derivative applies the power rule termwise") {
    CHECK(derivative(lp("z^5+5*z")) == lp("5*z^4+5"));
    CHECK(derivative(lp("3")).is_zero());
    CHECK(derivative(lp("z^(-1)")) == lp("-z^(-2)"));
}

TEST_CASE("sample takes uniform parameters") {
    auto quarter = sample(lp("z"), 4);
    REQUIRE(quarter.size() == 4);
    CHECK(std::abs(quarter[0].point - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(quarter[1].point - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(quarter[2].point - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(quarter[3].point - Complex(0.0, -1.0)) < 1e-15);

    auto square = sample(lp("z^2"), 4);
    CHECK(std::abs(square[1].point - Complex(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(square[2].point - Complex(1.0, 0.0)) < 1e-14);

    auto p = lp("z^2+z^7+z^12");
    auto dense = sample(p, 4096);
    REQUIRE(dense.size() == 4096);
    CHECK(dense[0].t == 0.0);
    CHECK(std::abs(dense[0].point - eval_circle(p, 0.0)) == 0.0);
    for (std::size_t j = 0; j < dense.size(); ++j)
        CHECK(std::abs(dense[j].point - eval_circle(p, dense[j].t)) < 1e-12);
}

TEST_CASE("to_exponential_sum carries terms over") {
    auto g = to_exponential_sum(lp("z^2+z^7"));
    REQUIRE(g.term_count() == 2);
    CHECK(g.terms()[0].exponent == ExactReal(2));
    CHECK(g.terms()[1].exponent == ExactReal(7));
    CHECK(std::abs(g.terms()[0].weight - Complex(1.0, 0.0)) == 0.0);

    auto h = to_exponential_sum(lp("2*z^(-1)"));
    REQUIRE(h.term_count() == 1);
    CHECK(h.terms()[0].exponent == ExactReal(-1));
    CHECK(std::abs(h.terms()[0].weight - Complex(2.0, 0.0)) == 0.0);

    auto r = to_exponential_sum(lp("(z^3 - z^(-1))/(2i)"));
    REQUIRE(r.term_count() == 2);
    CHECK(r.terms()[0].exponent == ExactReal(-1));
    CHECK(std::abs(r.terms()[0].weight - Complex(0.0, 0.5)) < 1e-15);
    CHECK(r.terms()[1].exponent == ExactReal(3));
    CHECK(std::abs(r.terms()[1].weight - Complex(0.0, -0.5)) < 1e-15);
}

TEST_CASE("periodicity_check solves the rational-span problem exactly") {
    auto integral = periodicity_check(to_exponential_sum(lp("z^2+z^5")));
    REQUIRE(integral.kind == PeriodicityResult::Kind::Periodic);
    CHECK(integral.period_value() == 1.0);

    ExponentialSum halves({{Complex(1.0, 0.0), ExactReal(Rational(1, 2))},
                           {Complex(1.0, 0.0), ExactReal(Rational(3, 4))}});
    auto quarters = periodicity_check(halves);
    REQUIRE(quarters.kind == PeriodicityResult::Kind::Periodic);
    CHECK(quarters.period_value() == 4.0);

    ExponentialSum surd({{Complex(1.0, 0.0), ExactReal(1)},
                         {Complex(1.0, 0.0), ExactReal::surd_multiple(Rational(1), 2)}});
    CHECK(periodicity_check(surd).kind == PeriodicityResult::Kind::Aperiodic);

    ExponentialSum opaque({{Complex(1.0, 0.0), ExactReal(1)},
                           {Complex(1.0, 0.0), ExactReal::opaque(1.4142135, false)}});
    CHECK(periodicity_check(opaque).kind == PeriodicityResult::Kind::Indeterminate);
}

TEST_CASE("curve parametrization has period one") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> td(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = oracle::random_polynomial(rng, 3, -4, 8);
        for (int j = 0; j < 10; ++j) {
            double t = td(rng);
            CHECK(std::abs(eval_circle(p, t + 1.0) - eval_circle(p, t)) <
                  1e-12 * std::max(1.0, coefficient_scale(p)));
        }
    }
}

TEST_CASE("real coefficients commute with conjugation") {
    auto p = lp("z^2+z^7+z^12");
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int j = 0; j < 50; ++j) {
        Complex z(d(rng), d(rng));
        if (std::abs(z) < 1e-3) continue;
        CHECK(std::abs(eval(p, std::conj(z)) - std::conj(eval(p, z))) < 1e-12);
    }
}

TEST_CASE("derivative is linear") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        // Disjoint supports keep the identity exact; with shared exponents
        // n*(a+b) and n*a + n*b may differ in the last ulp.
        auto p = oracle::random_polynomial(rng, 3, -5, 2);
        auto q = oracle::random_polynomial(rng, 2, 3, 9);
        CHECK(derivative(p + q) == derivative(p) + derivative(q));
    }
}

TEST_CASE("exponential-sum view agrees with circle evaluation") {
    std::mt19937 rng(14);
    std::uniform_real_distribution<double> td(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = oracle::random_polynomial(rng, 4, -6, 10);
        auto g = to_exponential_sum(p);
        for (int j = 0; j < 100; ++j) {
            double t = td(rng);
            CHECK(std::abs(g.eval(t) - eval_circle(p, t)) <
                  1e-12 * std::max(1.0, coefficient_scale(p)));
        }
    }
}

TEST_CASE("zero coefficients are never stored") {
    auto p = LaurentPolynomial::monomial(3, Complex(1.0, 0.0)) +
             LaurentPolynomial::monomial(3, Complex(-1.0, 0.0));
    CHECK(p.is_zero());
    CHECK(lp("z - z + z^2") == lp("z^2"));
}
