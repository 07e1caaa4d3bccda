#pragma once

#include <vector>

#include "rosette/laurent.hpp"

namespace rosette {

// Angle-split decomposition of p(e^{i theta} x) for |x| = 1 and s = cos theta:
//   p(e^{i theta} x) = h(s, x) + i sin(theta) * x * g(s, x)
// via e^{ik theta} = T_k(s) + i sin(theta) U_{k-1}(s). Self-intersection pairs
// are written (z1, z2) = (e^{i theta} x, e^{-i theta} x); the pair collides
// exactly when g(s, x) = 0, and the common value is h(s, x).

// g(s, x) = sum_{k >= 1} c_k U_{k-1}(s) x^(k-1). Throws on negative exponents.
Complex angle_split_g(const LaurentPolynomial& p, double s, Complex x);

// h(s, x) = sum_{k >= 0} c_k T_k(s) x^k. Throws on negative exponents.
Complex angle_split_h(const LaurentPolynomial& p, double s, Complex x);

// |p(e^{i theta} x) - h(cos theta, x) - i sin(theta) x g(cos theta, x)|;
// identically ~0 (<= 1e-10 * scale) and pins the angle convention.
double angle_split_residual(const LaurentPolynomial& p, double theta, Complex x);

struct SelfIntersection {
    Complex point;
    double t1 = 0.0, t2 = 0.0; // curve parameters in [0,1), t1 < t2
    double s = 0.0;            // cos of the half-angle between the preimages
    int direction_index = -1;  // two-term closed form: index of the x-ray (else -1)
    int sign_branch = 0;       // two-term closed form: equation branch +1/-1 (else 0)
    double h_modulus = 0.0;    // |point|
    int multiplicity = 1;      // parameter pairs mapping to this point
};

struct SelfIntersectionResult {
    std::vector<SelfIntersection> points;
    // Ordered parameter pairs (t1, t2) with t1 != t2 mapping to a common point:
    // twice the unordered crossing count. This is the convention under which
    // the 2(n-1)^2 degree bound is attained by z^n + eps z.
    int pair_count = 0;
    bool full_coincidence = false; // the curve retraces a lower-degree curve
    int cover_fold = 1;            // gcd of the support exponents
};

// Closed form for p = v z^a + w z^b, 1 <= a < b: per sign branch o in {+1,-1},
// the s-roots of U_{b-1}(s) + o * rho * U_{a-1}(s) = 0 in (-1,1) (rho = |v/w|)
// pair with the b-a rays x^(b-a) = o * e^{i arg(v/w)}. Requires arg(v/w) to be
// a multiple of pi/(b-a); otherwise the general solver runs. Roots with
// |s| >= 1 - 1e-9 are parametrization singularities and are discarded, as are
// common zeros of U_{a-1} and U_{b-1}.
SelfIntersectionResult self_intersections_two_term(Complex v, Complex w, int a, int b);

// General polynomial path (exponents 0..n, degree >= 2): the resultant in x of
// g(s, x) and its conjugate-reversal g*(s, x) = x^(n-1) conj(g)(s, 1/conj(x))
// is sampled at Chebyshev nodes and interpolated; its real roots s in (-1,1)
// seed near-unit-modulus roots x of g, and each (s, x) seed is polished as a
// parameter pair and kept only if the curve residual validates. Throws when
// the interpolation degree bound is exceeded.
SelfIntersectionResult self_intersections_general(const LaurentPolynomial& p);

// Two-term wave-flow curve at time t: v = c_a cos(2 pi c a t),
// w = c_b cos(2 pi c b t). Throws DegenerateTimeError when either cosine
// factor has died (|cos| <= 1e-12).
SelfIntersectionResult self_intersections_wave(int a, int b, Complex c_a, Complex c_b,
                                               double c, double t);

struct Cusp {
    double t = 0.0; // parameter in [0,1)
    Complex point;
};

// Roots of p' with modulus within 1e-8 of 1 where |p''| > 1e-6 * scale,
// projected onto the circle and polished so |p'(e^{2 pi i t})| <= 1e-9 * scale.
std::vector<Cusp> cusps(const LaurentPolynomial& p);

struct PointMultiplicity {
    int count = 0;                  // unit-modulus preimages of w0 (with multiplicity)
    std::vector<double> parameters; // sorted parameters, one per distinct preimage
    // True when every branch crosses w0 transversally: all preimages simple,
    // every branch has a nonvanishing tangent, and the tangent directions
    // (compared mod pi) are pairwise distinct.
    bool ordinary = false;
};

// Number of times the curve passes through w0: unit-modulus roots of p - w0.
PointMultiplicity point_multiplicity(const LaurentPolynomial& p, Complex w0);

} // namespace rosette
