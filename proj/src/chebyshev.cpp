#include "rosette/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rosette/laurent.hpp"

namespace rosette {

namespace {

constexpr double kZeroDist = 1e-10;

// distance of x to the nearest integer, and that integer
double int_dist(double x, long long* nearest = nullptr) {
    double r = std::nearbyint(x);
    if (nearest) *nearest = static_cast<long long>(r);
    return std::abs(x - r);
}

} // namespace

double cheb_T(int d, double y) {
    if (d < 0) throw std::domain_error("negative Chebyshev degree");
    if (d == 0) return 1.0;
    double tm = 1.0, t = y;
    for (int i = 1; i < d; ++i) {
        double next = 2.0 * y * t - tm;
        tm = t;
        t = next;
    }
    return t;
}

double cheb_U(int k, double y) {
    if (k < -1) throw std::domain_error("Chebyshev U degree below -1");
    if (k == -1) return 0.0;
    if (k == 0) return 1.0;
    double um = 1.0, u = 2.0 * y;
    for (int i = 1; i < k; ++i) {
        double next = 2.0 * y * u - um;
        um = u;
        u = next;
    }
    return u;
}

std::vector<double> cheb_T_coeffs(int d) {
    if (d < 0) throw std::domain_error("negative Chebyshev degree");
    std::vector<double> tm{1.0};
    if (d == 0) return tm;
    std::vector<double> t{0.0, 1.0};
    for (int i = 1; i < d; ++i) {
        std::vector<double> next(t.size() + 1, 0.0);
        for (std::size_t j = 0; j < t.size(); ++j) next[j + 1] += 2.0 * t[j];
        for (std::size_t j = 0; j < tm.size(); ++j) next[j] -= tm[j];
        tm = std::move(t);
        t = std::move(next);
    }
    return t;
}

std::vector<double> cheb_U_coeffs(int d) {
    if (d < -1) throw std::domain_error("Chebyshev U degree below -1");
    if (d == -1) return {0.0};
    std::vector<double> um{1.0};
    if (d == 0) return um;
    std::vector<double> u{0.0, 2.0};
    for (int i = 1; i < d; ++i) {
        std::vector<double> next(u.size() + 1, 0.0);
        for (std::size_t j = 0; j < u.size(); ++j) next[j + 1] += 2.0 * u[j];
        for (std::size_t j = 0; j < um.size(); ++j) next[j] -= um[j];
        um = std::move(u);
        u = std::move(next);
    }
    return u;
}

double psi(long long a, long long b, double theta) {
    if (a <= 0 || b <= 0) throw std::domain_error("psi requires positive integer indices");
    // sin(2*pi*m*theta) vanishes exactly when 2*m*theta is an integer
    bool den_zero = int_dist(2.0 * static_cast<double>(b) * theta) < kZeroDist;
    double num = std::sin(kTau * static_cast<double>(a) * theta);
    double den = std::sin(kTau * static_cast<double>(b) * theta);
    if (!den_zero) return num / den;
    bool num_zero = int_dist(2.0 * static_cast<double>(a) * theta) < kZeroDist;
    if (num_zero) {
        // two-sided limit by differentiating numerator and denominator
        return static_cast<double>(a) * std::cos(kTau * static_cast<double>(a) * theta) /
               (static_cast<double>(b) * std::cos(kTau * static_cast<double>(b) * theta));
    }
    // simple pole: marker with the sign of the limit from the right
    double den_slope = std::cos(kTau * static_cast<double>(b) * theta);
    double s = num * den_slope;
    return std::copysign(std::numeric_limits<double>::infinity(), s);
}

double phi(long long a, long long b, double c, double t) {
    if (a <= 0 || b <= 0) throw std::domain_error("phi requires positive integer indices");
    if (c <= 0.0) throw std::domain_error("phi requires positive speed");
    // cos(2*pi*m*c*t) vanishes exactly when 4*m*c*t is an odd integer
    auto odd_dist = [](double x) {
        double r = std::nearbyint((x - 1.0) / 2.0);
        return std::abs(x - (2.0 * r + 1.0));
    };
    bool den_zero = odd_dist(4.0 * static_cast<double>(a) * c * t) < kZeroDist;
    double num = std::cos(kTau * static_cast<double>(b) * c * t);
    double den = std::cos(kTau * static_cast<double>(a) * c * t);
    if (!den_zero) return num / den;
    bool num_zero = odd_dist(4.0 * static_cast<double>(b) * c * t) < kZeroDist;
    if (num_zero) {
        return static_cast<double>(b) * std::sin(kTau * static_cast<double>(b) * c * t) /
               (static_cast<double>(a) * std::sin(kTau * static_cast<double>(a) * c * t));
    }
    double den_slope = -std::sin(kTau * static_cast<double>(a) * c * t);
    double s = num * den_slope;
    return std::copysign(std::numeric_limits<double>::infinity(), s);
}

} // namespace rosette
