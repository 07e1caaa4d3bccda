#pragma once

// Brute-force oracles used only by the tests: self-intersections found by an
// all-pairs proximity scan with Newton refinement, independent of the
// production solvers, plus deterministic random-input generators.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "rosette/laurent.hpp"

namespace rosette::oracle {

// d/dt p(e^{2 pi i t}).
inline Complex curve_velocity(const LaurentPolynomial& dp, double t) {
    return Complex(0.0, kTau) * circle_point(t) * eval_circle(dp, t);
}

inline double wrap_unit(double t) {
    t -= std::floor(t);
    return t >= 1.0 ? t - 1.0 : t;
}

inline double cyclic_distance(double a, double b) {
    double d = std::abs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

struct OraclePair {
    double t1 = 0.0, t2 = 0.0;
    Complex point;
};

// All-pairs proximity scan on a uniform grid followed by 2D Newton on
// gamma(t1) - gamma(t2) = 0. Returns deduplicated parameter pairs (t1 < t2 in
// cyclic order) whose curve points coincide to 1e-10 * scale.
inline std::vector<OraclePair> self_intersections(const LaurentPolynomial& p, int grid = 4096) {
    LaurentPolynomial dp = derivative(p);
    std::vector<CurveSample> pts = sample(p, grid);
    double scale = std::max(1.0, coefficient_scale(p));

    // Proximity threshold: a small multiple of the largest step between
    // consecutive samples, so genuine crossings are never missed.
    double max_step = 0.0;
    for (int i = 0; i < grid; ++i) {
        double step = std::abs(pts[(i + 1) % grid].point - pts[i].point);
        max_step = std::max(max_step, step);
    }
    double near = 1.6 * max_step;
    // Parameter separation below which a close pair is just neighboring
    // samples of a slow arc rather than a candidate crossing.
    double min_sep = 3.5 / grid;

    std::vector<OraclePair> found;
    for (int i = 0; i < grid; ++i) {
        for (int j = i + 1; j < grid; ++j) {
            if (cyclic_distance(pts[i].t, pts[j].t) < min_sep) continue;
            if (std::abs(pts[i].point - pts[j].point) > near) continue;

            double t1 = pts[i].t, t2 = pts[j].t;
            for (int it = 0; it < 60; ++it) {
                Complex f = eval_circle(p, t1) - eval_circle(p, t2);
                Complex v1 = curve_velocity(dp, t1);
                Complex v2 = curve_velocity(dp, t2);
                // Solve [v1, -v2] * (d1, d2) = -f as a real 2x2 system.
                double a = v1.real(), b = -v2.real();
                double c = v1.imag(), d = -v2.imag();
                double det = a * d - b * c;
                if (std::abs(det) < 1e-14) break;
                double d1 = (-f.real() * d + f.imag() * b) / det;
                double d2 = (f.real() * c - f.imag() * a) / det;
                t1 = wrap_unit(t1 + d1);
                t2 = wrap_unit(t2 + d2);
                if (std::abs(d1) + std::abs(d2) < 1e-15) break;
            }
            if (std::abs(eval_circle(p, t1) - eval_circle(p, t2)) > 1e-10 * scale) continue;
            if (cyclic_distance(t1, t2) < 1e-4) continue;

            OraclePair pair;
            pair.t1 = std::min(t1, t2);
            pair.t2 = std::max(t1, t2);
            pair.point = 0.5 * (eval_circle(p, pair.t1) + eval_circle(p, pair.t2));
            bool duplicate = false;
            for (const OraclePair& q : found) {
                if (cyclic_distance(q.t1, pair.t1) < 1e-6 &&
                    cyclic_distance(q.t2, pair.t2) < 1e-6) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) found.push_back(pair);
        }
    }
    std::sort(found.begin(), found.end(), [](const OraclePair& x, const OraclePair& y) {
        return x.t1 != y.t1 ? x.t1 < y.t1 : x.t2 < y.t2;
    });
    return found;
}

// Distinct intersection points of the pair list, merged within tol.
inline std::vector<Complex> distinct_points(const std::vector<OraclePair>& pairs,
                                            double tol = 1e-6) {
    std::vector<Complex> pts;
    for (const OraclePair& pr : pairs) {
        bool seen = false;
        for (const Complex& q : pts)
            if (std::abs(q - pr.point) < tol) { seen = true; break; }
        if (!seen) pts.push_back(pr.point);
    }
    return pts;
}

// Symmetric Hausdorff distance between two finite point sets.
inline double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const Complex& x : a) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& y : b) best = std::min(best, std::abs(x - y));
        worst = std::max(worst, best);
    }
    for (const Complex& y : b) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& x : a) best = std::min(best, std::abs(y - x));
        worst = std::max(worst, best);
    }
    return worst;
}

// Deterministic random Laurent polynomial: term_count exponents drawn from
// [min_exp, max_exp] without repeats, coefficients uniform in the complex box
// [-mag, mag]^2 and bounded away from zero.
inline LaurentPolynomial random_polynomial(std::mt19937& rng, int term_count, int min_exp,
                                           int max_exp, double mag = 2.0) {
    std::uniform_int_distribution<int> exp_dist(min_exp, max_exp);
    std::uniform_real_distribution<double> coef(-mag, mag);
    LaurentPolynomial p;
    int placed = 0;
    while (placed < term_count) {
        int n = exp_dist(rng);
        if (p.coeff(n) != Complex(0.0, 0.0)) continue;
        Complex c(coef(rng), coef(rng));
        if (std::abs(c) < 0.2) continue;
        p = p + LaurentPolynomial::monomial(n, c);
        ++placed;
    }
    return p;
}

} // namespace rosette::oracle
