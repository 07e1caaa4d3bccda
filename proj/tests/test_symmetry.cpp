#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rosette/laurent.hpp"
#include "rosette/parse.hpp"
#include "rosette/symmetry.hpp"

using namespace rosette;

namespace {

LaurentPolynomial lp(const char* text) { return *parse_laurent(text); }

// Distance from q to the curve: Newton on the squared distance, seeded from
// the nearest of a few grid samples around hint_t.
double distance_to_curve(const LaurentPolynomial& p, const LaurentPolynomial& dp, Complex q,
                         double hint_t) {
    double t = hint_t;
    double best = std::abs(eval_circle(p, t) - q);
    for (int k = -3; k <= 3; ++k) {
        double cand = hint_t + k / 8192.0;
        double dist = std::abs(eval_circle(p, cand) - q);
        if (dist < best) { best = dist; t = cand; }
    }
    for (int it = 0; it < 40; ++it) {
        Complex diff = eval_circle(p, t) - q;
        Complex vel = oracle::curve_velocity(dp, t);
        double grad = 2.0 * (diff.real() * vel.real() + diff.imag() * vel.imag());
        double speed2 = std::norm(vel);
        if (speed2 < 1e-18) break;
        double step = grad / (2.0 * speed2);
        t -= step;
        if (std::abs(step) < 1e-17) break;
    }
    return std::min(best, std::abs(eval_circle(p, t) - q));
}

} // namespace

TEST_CASE("exponent gcd of the support differences") {
    CHECK(exponent_gcd_m(lp("z^2+z^7+z^12")) == 5);
    CHECK(exponent_gcd_m(lp("(z^3 - z^(-1))/(2i)")) == 4);
    CHECK(exponent_gcd_m(lp("z^5+z^10+z^15")) == 5);
    CHECK_THROWS(exponent_gcd_m(lp("z^3")));
}

TEST_CASE("symmetry type pairs the least exponent with the gcd") {
    auto fig1 = symmetry_type(lp("z^2+z^7+z^12"));
    REQUIRE(fig1.has_value());
    CHECK(fig1->first == 2);
    CHECK(fig1->second == 5);

    auto rhodonea = symmetry_type(lp("(z^3 - z^(-1))/(2i)"));
    REQUIRE(rhodonea.has_value());
    CHECK(rhodonea->first == 3);
    CHECK(rhodonea->second == 4);

    CHECK(!symmetry_type(lp("z^5+z^10+z^15")).has_value());
}

TEST_CASE("rotation order of the image") {
    CHECK(rotation_order(lp("z^2+z^7+z^12")) == 5);
    CHECK(rotation_order(lp("z^5+z^10+z^15")) == 1);
    CHECK(rotation_order(lp("z^3 + z^(-1)")) == 4);
}

TEST_CASE("mirror axes") {
    auto real_coeffs = mirror_axes(lp("z^2+z^7+z^12"));
    CHECK(!real_coeffs.continuum);
    REQUIRE(!real_coeffs.axes.empty());
    bool has_zero_axis = false;
    for (const auto& axis : real_coeffs.axes)
        if (std::abs(axis.beta) < 1e-12 && std::abs(axis.sigma) < 1e-12) has_zero_axis = true;
    CHECK(has_zero_axis);

    auto chiral = mirror_axes(lp("2*z^2 - 2i*z^7 + i*z^12"));
    CHECK(chiral.axes.empty());
    CHECK(!chiral.continuum);

    auto circle = mirror_axes(lp("(2+i)*z^3"));
    CHECK(circle.continuum);
}

TEST_CASE("group classification of the five reference curves") {
    auto dihedral = classify_group(lp("z^2+z^7+z^12"));
    CHECK(dihedral.classification == GroupClass::Dihedral);
    CHECK(dihedral.rotation_order == 5);
    CHECK(dihedral.mirrors.axes.size() == 5);
    CHECK(dihedral.verified_maximal);

    auto cyclic = classify_group(lp("2*z^2 - 2i*z^7 + i*z^12"));
    CHECK(cyclic.classification == GroupClass::Cyclic);
    CHECK(cyclic.rotation_order == 5);
    CHECK(cyclic.mirrors.axes.empty());

    auto trivial = classify_group(lp("z*(z - 1/2)*(z - i)"));
    CHECK(trivial.classification == GroupClass::Trivial);
    CHECK(trivial.rotation_order == 1);

    auto rhodonea = classify_group(lp("(z^3 - z^(-1))/(2i)"));
    REQUIRE(rhodonea.symmetry_type.has_value());
    CHECK(rhodonea.symmetry_type->first == 3);
    CHECK(rhodonea.symmetry_type->second == 4);

    CHECK(classify_group(lp("z^5+z^10+z^15")).rotation_order == 1);
}

TEST_CASE("functional identities for every reported symmetry") {
    for (const char* text : {"z^2+z^7+z^12", "2*z^2 - 2i*z^7 + i*z^12", "(z^3 - z^(-1))/(2i)",
                             "z*(z - 1/2)*(z - i)"}) {
        auto p = lp(text);
        auto report = classify_group(p);
        double scale = std::max(1.0, coefficient_scale(p));
        if (report.symmetry_type) {
            int k = report.symmetry_type->first;
            int m = report.symmetry_type->second;
            Complex phase = std::polar(1.0, kTau * k / m);
            for (int j = 0; j < 1024; ++j) {
                double t = j / 1024.0;
                CHECK(std::abs(eval_circle(p, t + 1.0 / m) - phase * eval_circle(p, t)) <=
                      1e-10 * scale);
            }
        }
        for (const auto& axis : report.mirrors.axes) {
            Complex phase = std::polar(1.0, kTau * axis.sigma);
            for (int j = 0; j < 1024; ++j) {
                double t = j / 1024.0;
                CHECK(std::abs(eval_circle(p, axis.beta - t) -
                               phase * std::conj(eval_circle(p, t))) <= 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("image is invariant under the reported rotation") {
    auto p = lp("z^2+z^7+z^12");
    auto dp = derivative(p);
    int q = rotation_order(p);
    REQUIRE(q == 5);
    Complex rot = std::polar(1.0, kTau / q);
    auto pts = sample(p, 8192);
    double worst = 0.0;
    for (const auto& s : pts) {
        // The rotation by 2 pi k/m shifts the parameter by k'/m; search near
        // the shifted parameter and polish onto the curve.
        double hint = s.t + 3.0 / 5.0;
        hint -= std::floor(hint);
        worst = std::max(worst, distance_to_curve(p, dp, rot * s.point, hint));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("symmetry type ignores coefficient values") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    auto base = lp("z^2+z^7+z^12");
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPolynomial scaled;
        for (int n : {2, 7, 12}) {
            Complex c(d(rng), d(rng));
            if (std::abs(c) < 0.2) c = Complex(1.0, 0.0);
            scaled = scaled + LaurentPolynomial::monomial(n, c);
        }
        CHECK(symmetry_type(scaled) == symmetry_type(base));
        CHECK(rotation_order(scaled) == rotation_order(base));
    }
}

TEST_CASE("zero and pole orbits close under the group") {
    auto p = lp("z^2+z^7+z^12");
    auto report = classify_group(p);
    CHECK(zero_pole_orbit_check(p, report));

    auto trivial = lp("z*(z - 1/2)*(z - i)");
    CHECK(zero_pole_orbit_check(trivial, classify_group(trivial)));

    SymmetryReport wrong;
    wrong.rotation_order = 3;
    wrong.classification = GroupClass::Cyclic;
    CHECK(!zero_pole_orbit_check(p, wrong));
}

TEST_CASE("conjugation identity for exponential sums") {
    ExponentialSum g({{Complex(2.0, 0.0), ExactReal(1)},
                      {Complex(1.0, 0.0), ExactReal::surd_multiple(Rational(1), 2)}});
    CHECK(conj_symmetry_check(g, 256));

    ExponentialSum h({{Complex(1.0, 0.0), ExactReal(1)}, {Complex(0.0, 1.0), ExactReal(2)}});
    CHECK(conj_symmetry_check(h, 256));

    ExponentialSum single({{Complex(0.4, -0.3), ExactReal(Rational(7, 3))}});
    CHECK(conj_symmetry_check(single, 64));
}

TEST_CASE("annulus bounds") {
    ExponentialSum g({{Complex(2.0, 0.0), ExactReal(1)},
                      {Complex(1.0, 0.0), ExactReal::surd_multiple(Rational(1), 2)}});
    auto est = annulus_bounds(g, 200.0, 4096);
    REQUIRE(est.analytic_r_min.has_value());
    CHECK(*est.analytic_r_min == 1.0);
    CHECK(est.r_max == 3.0);
    CHECK(est.r_max_exact);
    CHECK(est.r_min >= *est.analytic_r_min - 1e-9);

    ExponentialSum equal({{Complex(1.0, 0.0), ExactReal(1)},
                          {Complex(1.0, 0.0), ExactReal::surd_multiple(Rational(1), 2)}});
    auto disk = annulus_bounds(equal, 200.0, 4096);
    REQUIRE(disk.analytic_r_min.has_value());
    CHECK(*disk.analytic_r_min == 0.0);

    ExponentialSum single({{Complex(2.0, 0.0), ExactReal(Rational(5, 2))}});
    auto circle = annulus_bounds(single, 10.0, 512);
    CHECK(circle.r_min == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(circle.r_max == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("annulus density coverage") {
    ExponentialSum g({{Complex(2.0, 0.0), ExactReal(1)},
                      {Complex(1.0, 0.0), ExactReal::surd_multiple(Rational(1), 2)}});
    auto est = density_coverage(g, 200.0, 30, 30);
    CHECK(est.coverage_fraction >= 0.95);
    CHECK(est.radial_cells == 30);
    CHECK(est.angular_cells == 30);

    ExponentialSum rational({{Complex(1.0, 0.0), ExactReal(1)},
                             {Complex(1.0, 0.0), ExactReal(2)}});
    CHECK_THROWS_AS((void)density_coverage(rational, 100.0, 10, 10), std::invalid_argument);

    // Opaque exponents carry coverage only with the independence assertion.
    ExponentialSum opaque({{Complex(2.0, 0.0), ExactReal(1)},
                           {Complex(1.0, 0.0), ExactReal::opaque(1.41421356237, false)}});
    CHECK_THROWS_AS((void)density_coverage(opaque, 100.0, 10, 10), std::invalid_argument);
    ExponentialSum asserted({{Complex(2.0, 0.0), ExactReal(1)},
                             {Complex(1.0, 0.0), ExactReal::opaque(1.41421356237, true)}});
    CHECK(density_coverage(asserted, 200.0, 20, 20).coverage_fraction > 0.9);
}
