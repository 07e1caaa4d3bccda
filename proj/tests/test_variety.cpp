#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "rosette/laurent.hpp"
#include "rosette/parse.hpp"
#include "rosette/roots.hpp"
#include "rosette/variety.hpp"

using namespace rosette;

namespace {

LaurentPolynomial lp(const char* text) { return *parse_laurent(text); }

// Magnitude bound for S(w) = conj(c_0 - w)^n prod A(1/conj(alpha_k)): the
// absolute-coefficient polynomial evaluated at the reciprocal root moduli.
double variety_scale(const LaurentPolynomial& p, Complex w) {
    int n = p.max_exponent();
    std::vector<Complex> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = p.coeff(k);
    a[0] -= w;
    auto rs = poly_roots(a);
    double scale = std::pow(std::abs(a[0]), n);
    for (const auto& r : rs.roots) {
        double inv = 1.0 / std::abs(r.value);
        double abs_sum = 0.0;
        for (int k = 0; k <= n; ++k) abs_sum += std::abs(a[k]) * std::pow(inv, k);
        for (int m = 0; m < r.multiplicity; ++m) scale *= abs_sum;
    }
    return std::max(1.0, scale);
}

} // namespace

TEST_CASE("unit circle itself: S(w) = w conj(w) - 1") {
    // p = z, n = 1: A(z) = z - w, root alpha = w, B root 1/conj(w).
    // S(w) = -conj(-w) (1/conj(w) - w) = conj(w) w - 1 at w = 2: 3.
    Complex s = variety_eval(lp("z"), Complex(2.0, 0.0));
    CHECK(std::abs(std::abs(s) - 3.0) <= 1e-12);
    CHECK(std::abs(s.imag()) <= 1e-12);

    // Points on the unit circle are on the curve: S vanishes.
    CHECK(std::abs(variety_eval(lp("z"), Complex(0.6, 0.8))) <= 1e-12);
}

TEST_CASE("vanishing on the curve, nonvanishing off it") {
    auto p = lp("z^2 + z^7 + z^12");
    for (double t : {0.0, 0.21, 0.4, 0.77}) {
        Complex w = eval_circle(p, t);
        CHECK(std::abs(variety_eval(p, w)) <= 1e-8 * variety_scale(p, w));
    }
    // A point far from the curve: the image lies in |w| <= 3.
    CHECK(std::abs(variety_eval(lp("z^2 + z^7 + z^12"), Complex(9.0, 0.0))) > 1e-2);
}

TEST_CASE("raw product guards against roots at the origin") {
    // p - 0 = z^2 has both roots at 0.
    CHECK_THROWS_AS((void)variety_raw(lp("z^2"), Complex(0.0, 0.0)), std::runtime_error);
    // variety_eval covers the same point via the determinant: S(0) != 0 since
    // 0 is not on the image of z^2.
    Complex s0 = variety_eval(lp("z^2"), Complex(0.0, 0.0));
    CHECK(std::abs(s0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("positive rotation twist, negative control") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    auto p = lp("z^2 + z^7 + z^12"); // symmetry type (2, 5)
    for (int trial = 0; trial < 10; ++trial) {
        Complex w(box(rng), box(rng));
        CHECK(rotation_invariance_check(p, w, 5, 2) <= 1e-6);
    }
    // z + z^2 + z^4 has no 5-fold symmetry: residuals must be visibly large.
    auto q = lp("z + z^2 + z^4");
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        Complex w(box(rng), box(rng));
        worst = std::max(worst, rotation_invariance_check(q, w, 5, 1));
    }
    CHECK(worst > 1e-2);
}

TEST_CASE("positive mirror identity, negative control") {
    std::mt19937 rng(62);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    // Real coefficients: mirror across the real axis (sigma = 0).
    auto p = lp("z^2 + z^7 + z^12");
    for (int trial = 0; trial < 10; ++trial) {
        Complex w(box(rng), box(rng));
        CHECK(mirror_invariance_check(p, w, 0.0) <= 1e-6);
    }
    // The chiral variant has no mirror at sigma = 0.
    auto q = lp("2*z^2 - 2i*z^7 + i*z^12");
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        Complex w(box(rng), box(rng));
        worst = std::max(worst, mirror_invariance_check(q, w, 0.0));
    }
    CHECK(worst > 1e-2);
}

TEST_CASE("random curves vanish on their own samples") {
    std::mt19937 rng(63);
    std::uniform_int_distribution<int> deg(2, 6);
    std::uniform_int_distribution<int> terms(2, 4);
    for (int trial = 0; trial < 20; ++trial) {
        int n = deg(rng);
        auto p = oracle::random_polynomial(rng, std::min(terms(rng), n + 1), 0, n);
        if (p.max_exponent() < 1) continue;
        for (int j = 0; j < 128; ++j) {
            double t = j / 128.0;
            Complex w = eval_circle(p, t);
            CHECK(std::abs(variety_eval(p, w)) <= 1e-8 * variety_scale(p, w));
        }
    }
}

TEST_CASE("product form matches the determinant away from the fallback") {
    std::mt19937 rng(64);
    std::uniform_real_distribution<double> box(-2.5, 2.5);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        int n = deg(rng);
        auto p = oracle::random_polynomial(rng, std::min(3, n + 1), 0, n);
        if (p.max_exponent() < 1) continue;
        Complex w(box(rng), box(rng));

        // Assemble the Sylvester form directly from the definition.
        std::vector<Complex> a(p.max_exponent() + 1), b(p.max_exponent() + 1);
        for (int k = 0; k <= p.max_exponent(); ++k) a[k] = p.coeff(k);
        a[0] -= w;
        if (std::abs(a[0]) < 1e-3) continue; // stay away from the fallback region
        for (std::size_t j = 0; j < b.size(); ++j) b[j] = std::conj(a[a.size() - 1 - j]);
        Complex det = sylvester_resultant(a, b);

        Complex prod = std::pow(std::conj(a[0]), p.max_exponent()) * variety_raw(p, w);
        CHECK(std::abs(det - prod) <= 1e-6 * std::max(1.0, std::abs(det)));

        // And variety_eval agrees with both.
        Complex ev = variety_eval(p, w);
        CHECK(std::abs(ev - det) <= 1e-6 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("the variety value is real up to roundoff") {
    std::mt19937 rng(65);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = oracle::random_polynomial(rng, 3, 0, 5);
        if (p.max_exponent() < 1) continue;
        Complex w(box(rng), box(rng));
        Complex s = variety_eval(p, w);
        CHECK(std::abs(s.imag()) <= 1e-8 * std::max(1.0, std::abs(s)));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS((void)variety_eval(lp("z^(-1) + z"), Complex(0.5, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)variety_eval(lp("3"), Complex(0.5, 0.0)), std::invalid_argument);
}
