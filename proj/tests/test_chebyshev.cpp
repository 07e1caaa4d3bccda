#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "rosette/chebyshev.hpp"
#include "rosette/laurent.hpp"

using namespace rosette;

TEST_CASE("closed forms of low-degree Chebyshev values") {
    CHECK(cheb_T(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(cheb_U(2, 0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(cheb_T(0, -0.7) == 1.0);
    CHECK(cheb_T(0, 3.2) == 1.0);
    CHECK(cheb_U(-1, 0.3) == 0.0);
    CHECK(cheb_U(0, 0.3) == 1.0);
}

TEST_CASE("first kind matches cos(d theta)") {
    for (int d = 0; d <= 12; ++d) {
        for (int j = 0; j <= 1000; ++j) {
            double theta = kTau * j / 1000.0;
            CHECK(std::abs(cheb_T(d, std::cos(theta)) - std::cos(d * theta)) < 1e-10);
        }
    }
}

TEST_CASE("second kind matches sin((k+1) theta) over sin theta") {
    for (int k = -1; k <= 11; ++k) {
        for (int j = 1; j < 1000; ++j) {
            double theta = 3.14159 * j / 1000.0;
            CHECK(std::abs(std::sin(theta) * cheb_U(k, std::cos(theta)) -
                           std::sin((k + 1) * theta)) < 1e-10);
        }
    }
}

TEST_CASE("odd-degree first kind is bounded by d|y|") {
    for (int d = 1; d <= 9; d += 2) {
        for (int j = 0; j < 10000; ++j) {
            double y = -1.0 + 2.0 * j / 9999.0;
            CHECK(std::abs(cheb_T(d, y)) <= d * std::abs(y) + 1e-12);
        }
    }
}

TEST_CASE("second kind attains its range bound at the endpoints") {
    for (int d = 1; d <= 9; ++d) {
        double grid_max = 0.0;
        for (int j = 0; j <= 10000; ++j) {
            double y = -1.0 + 2.0 * j / 10000.0;
            grid_max = std::max(grid_max, std::abs(cheb_U(d - 1, y)));
        }
        CHECK(grid_max <= d + 1e-12);
        CHECK(cheb_U(d - 1, 1.0) == doctest::Approx(d).epsilon(1e-12));
        CHECK(std::abs(cheb_U(d - 1, -1.0)) == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("sine ratio at an eighth") {
    CHECK(psi(1, 2, 0.125) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("sine ratio range when a divides b") {
    // |psi| has minimum a/b = 0.2, attained at the common zeros of both sines.
    double grid_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= 4000; ++j) {
        double theta = j / 4000.0;
        double v = std::abs(psi(2, 10, theta));
        if (std::isfinite(v)) grid_min = std::min(grid_min, v);
    }
    CHECK(grid_min >= 0.2 - 1e-9);
    CHECK(grid_min <= 0.2 + 1e-9);
    // The extension value at the predicted common zero theta = 1/4.
    CHECK(std::abs(psi(2, 10, 0.25)) == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("sine ratio range when a does not divide b") {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int j = 0; j <= 200000; ++j) {
        double theta = j / 200000.0;
        double v = std::abs(psi(2, 5, theta));
        if (!std::isfinite(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(lo < 0.01);
    CHECK(hi > 100.0);
}

TEST_CASE("cosine ratio values and extension") {
    CHECK(phi(2, 5, 0.1, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phi(2, 5, 0.1, 0.35) == doctest::Approx(0.50).epsilon(0.01));
    // a | b with 2a not dividing b: common cosine zeros at t = 1/(4ac) + k/(2ac),
    // where the continuous extension has magnitude b/a.
    CHECK(std::abs(phi(1, 3, 1.0, 0.25)) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(std::abs(phi(1, 3, 1.0, 0.75)) == doctest::Approx(3.0).epsilon(1e-9));
    // The magnitude bound |phi| <= b/a holds across a dense grid in that case.
    double grid_max = 0.0;
    for (int j = 0; j <= 100000; ++j) {
        double t = j / 100000.0;
        double v = std::abs(phi(1, 3, 1.0, t));
        if (std::isfinite(v)) grid_max = std::max(grid_max, v);
    }
    CHECK(grid_max <= 3.0 + 1e-9);
}

TEST_CASE("denominator-only zeros return signed infinities") {
    // psi(2, 5, .): sin(10 pi theta) = 0 at theta = 0.1 while sin(4 pi * 0.1) != 0.
    CHECK(!std::isfinite(psi(2, 5, 0.1)));
    // phi(2, 5, 1/10, .): cos(0.4 pi t) = 0 at t = 1.25 while cos(pi t) != 0.
    CHECK(!std::isfinite(phi(2, 5, 0.1, 1.25)));
}
