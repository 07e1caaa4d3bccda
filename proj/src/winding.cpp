#include "rosette/winding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rosette/roots.hpp"

namespace rosette {

namespace {

constexpr double kThresholdTol = 1e-9; // | |K| - 1 | band treated as undefined

// H(t) = B^2 cos^2(wb t) - A^2 cos^2(wa t); zeros are the |K| = 1 times.
struct CosineBalance {
    double A2, B2, wa, wb;

    double operator()(double t) const {
        double ca = std::cos(wa * t), cb = std::cos(wb * t);
        return B2 * cb * cb - A2 * ca * ca;
    }
    double derivative(double t) const {
        return -B2 * wb * std::sin(2.0 * wb * t) + A2 * wa * std::sin(2.0 * wa * t);
    }

    double refine(double lo, double hi) const {
        double flo = (*this)(lo);
        for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
            double mid = 0.5 * (lo + hi);
            double fm = (*this)(mid);
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        double t = 0.5 * (lo + hi);
        for (int it = 0; it < 4; ++it) {
            double d = derivative(t);
            if (std::abs(d) < 1e-30) break;
            double step = (*this)(t) / d;
            double next = t - step;
            if (next < lo || next > hi) break;
            t = next;
        }
        return t;
    }
};

void check_two_term_args(int a, int b, Complex c_a, Complex c_b) {
    if (a >= b) throw std::invalid_argument("two-term form requires a < b");
    if (a == 0 || b == 0) throw std::invalid_argument("two-term exponents must be nonzero");
    if (c_a == Complex(0.0, 0.0) || c_b == Complex(0.0, 0.0))
        throw std::invalid_argument("two-term coefficients must be nonzero");
}

// Distance from 2x/pi to the nearest odd integer decides whether cos(x) is an
// exact zero for our purposes.
bool cosine_vanishes(double angle) {
    double q = angle / kTau * 4.0; // cos(2 pi u) = 0 iff 4u is an odd integer
    double nearest = std::round(q);
    if (std::abs(q - nearest) > 1e-10) return false;
    return std::llround(nearest) % 2 != 0;
}

} // namespace

int winding_numeric(const std::vector<CurveSample>& samples, Complex w0) {
    if (samples.size() < 3) throw std::invalid_argument("need at least 3 samples");
    double total = 0.0;
    const std::size_t n = samples.size();
    for (std::size_t j = 0; j < n; ++j) {
        Complex from = samples[j].point - w0;
        Complex to = samples[(j + 1) % n].point - w0;
        if (std::abs(from) <= 1e-6)
            throw std::runtime_error("curve passes too close to the base point");
        double step = std::arg(to / from);
        if (std::abs(step) >= kTau / 4.0)
            throw std::runtime_error("angular step too large; resample more densely");
        total += step;
    }
    return static_cast<int>(std::lround(total / kTau));
}

int winding_argument_principle(const LaurentPolynomial& p, Complex w0) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    const int probe = 4096;
    for (int j = 0; j < probe; ++j) {
        if (std::abs(eval_circle(p, static_cast<double>(j) / probe) - w0) <= 1e-8)
            throw std::runtime_error("base point lies on the curve");
    }
    int a_min = p.min_exponent();
    int mu = std::max(0, -a_min);
    LaurentPolynomial::TermMap shifted;
    for (const auto& [n, c] : p.terms()) shifted[n + mu] = c;
    shifted[mu] -= w0;
    LaurentPolynomial q(std::move(shifted));
    if (q.is_zero()) throw std::runtime_error("base point lies on the curve");
    if (q.max_exponent() == 0) return -mu; // constant: no zeros anywhere
    RootSet roots = poly_roots(to_coefficients(q));
    int inside = 0;
    for (const auto& r : roots.roots) {
        double mod = std::abs(r.value);
        if (std::abs(mod - 1.0) <= 1e-8)
            throw std::runtime_error("root on the unit circle; winding is boundary-ambiguous");
        if (mod < 1.0) inside += r.multiplicity;
    }
    return inside - mu;
}

std::optional<int> two_term_winding(int a, int b, Complex c_a, Complex c_b, double c, double t) {
    check_two_term_args(a, b, c_a, c_b);
    double ang_a = kTau * a * c * t, ang_b = kTau * b * c * t;
    bool za = cosine_vanishes(ang_a), zb = cosine_vanishes(ang_b);
    if (za && zb) throw std::runtime_error("both factors vanish; the curve is a single point");
    if (za) return b; // |K| infinite
    if (zb) return a; // K = 0
    double mag = std::abs(c_b) * std::abs(std::cos(ang_b)) /
                 (std::abs(c_a) * std::abs(std::cos(ang_a)));
    if (std::abs(mag - 1.0) <= kThresholdTol) return std::nullopt;
    return mag < 1.0 ? a : b;
}

std::vector<double> cosine_balance_times(int a, int b, double A, double B, double c,
                                         double horizon) {
    if (a == 0 || b == 0) throw std::invalid_argument("exponents must be nonzero");
    if (c <= 0.0 || horizon <= 0.0) throw std::invalid_argument("speed and horizon must be positive");
    CosineBalance H{A * A, B * B, kTau * std::abs(a) * c, kTau * std::abs(b) * c};
    double h_scale = A * A + B * B;

    // Evaluation points: a uniform grid plus both families of cosine zeros.
    // The zeros are where the balance ratio hits 0 or infinity, so a sign dip
    // around them can be far narrower than any uniform spacing.
    std::vector<double> pts;
    const int grid_n = 16384;
    pts.reserve(grid_n + 64);
    for (int j = 0; j <= grid_n; ++j) pts.push_back(horizon * j / grid_n);
    for (int m : {std::abs(a), std::abs(b)}) {
        for (long long k = 0;; ++k) {
            double tz = (2.0 * k + 1.0) / (4.0 * m * c);
            if (tz > horizon) break;
            pts.push_back(tz);
        }
    }
    std::sort(pts.begin(), pts.end());

    std::vector<double> roots;
    double prev_t = pts.front();
    double prev_h = H(prev_t);
    if (std::abs(prev_h) <= 1e-14 * h_scale) roots.push_back(prev_t);
    for (std::size_t j = 1; j < pts.size(); ++j) {
        double cur_t = pts[j];
        if (cur_t - prev_t < 1e-15) continue;
        double cur_h = H(cur_t);
        if (std::abs(cur_h) <= 1e-14 * h_scale) {
            roots.push_back(cur_t);
        } else if ((cur_h < 0.0) != (prev_h < 0.0) && std::abs(prev_h) > 1e-14 * h_scale) {
            roots.push_back(H.refine(prev_t, cur_t));
        }
        prev_t = cur_t;
        prev_h = cur_h;
    }
    std::sort(roots.begin(), roots.end());
    double dedupe = 1e-10 * std::max(1.0, horizon);
    std::vector<double> unique_roots;
    for (double r : roots) {
        if (unique_roots.empty() || r - unique_roots.back() > dedupe) unique_roots.push_back(r);
    }
    return unique_roots;
}

WindingProfile winding_profile(int a, int b, Complex c_a, Complex c_b, double c) {
    check_two_term_args(a, b, c_a, c_b);
    if (c <= 0.0) throw std::invalid_argument("speed must be positive");
    long long g = std::gcd(static_cast<long long>(std::abs(a)), static_cast<long long>(std::abs(b)));
    double T = 1.0 / (c * static_cast<double>(g));

    WindingProfile profile;
    profile.speed = c;
    profile.period = T;

    std::vector<double> unique_roots =
        cosine_balance_times(a, b, std::abs(c_a), std::abs(c_b), c, T);
    double dedupe = 1e-10 * std::max(1.0, T);
    profile.breakpoints = unique_roots;
    profile.undefined_times = unique_roots;

    std::vector<double> edges;
    edges.push_back(0.0);
    for (double r : unique_roots) edges.push_back(r);
    edges.push_back(T);
    std::vector<double> clean;
    for (double e : edges) {
        if (clean.empty() || e - clean.back() > dedupe) clean.push_back(e);
    }
    for (std::size_t j = 0; j + 1 < clean.size(); ++j) {
        double lo = clean[j], hi = clean[j + 1];
        std::optional<int> value;
        for (double frac : {0.5, 0.381966, 0.618034, 0.25, 0.75}) {
            value = two_term_winding(a, b, c_a, c_b, c, lo + frac * (hi - lo));
            if (value) break;
        }
        if (!value)
            throw std::runtime_error("winding undefined across an entire segment");
        profile.values.push_back(*value);
    }
    return profile;
}

} // namespace rosette
