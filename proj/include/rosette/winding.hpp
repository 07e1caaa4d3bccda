#pragma once

#include <optional>
#include <vector>

#include "rosette/laurent.hpp"

namespace rosette {

// Winding number of the sampled closed curve about w0 by unwrapped angle
// accumulation. Throws when the curve passes within 1e-6 of w0 or an angular
// step reaches pi/2 (resample more densely).
int winding_numeric(const std::vector<CurveSample>& samples, Complex w0);

// Zeros-minus-poles count: with mu = max(0, -a_min), the roots of
// z^mu (p(z) - w0) strictly inside the unit disk, minus mu. Throws when w0
// lies on the curve (min sample distance 1e-8) or a root sits within 1e-8 of
// the unit circle (boundary-ambiguous).
int winding_argument_principle(const LaurentPolynomial& p, Complex w0);

// Winding number about the origin of the two-term wave curve
// c_a cos(2 pi a c t) z^a + c_b cos(2 pi b c t) z^b at time t, from the
// factorization z^a (1 + K z^(b-a)) with
// K = c_b cos(2 pi b c t) / (c_a cos(2 pi a c t)):
// a when |K| < 1, b when |K| > 1, nullopt (curve through the origin) when
// | |K| - 1 | <= 1e-9. Throws when both cosine factors vanish (the curve is a
// point).
std::optional<int> two_term_winding(int a, int b, Complex c_a, Complex c_b, double c, double t);

struct WindingProfile {
    double speed = 0.0;
    double period = 0.0;
    std::vector<double> breakpoints; // origin-crossing times in [0, period]
    std::vector<int> values;         // one value per open segment between breakpoints
    std::vector<double> undefined_times; // = breakpoints; winding undefined there
};

// Piecewise-constant winding profile over one period of the two-term wave
// flow. Breakpoints are the real roots of
// |c_b|^2 cos^2(2 pi b c t) = |c_a|^2 cos^2(2 pi a c t) in [0, T], isolated on
// a grid refined around each cosine zero (the |K| = 1 crossings can be
// narrower than any uniform grid when one coefficient is tiny).
WindingProfile winding_profile(int a, int b, Complex c_a, Complex c_b, double c);

// Times in [0, horizon] where |B cos(2 pi b c t)| = |A cos(2 pi a c t)|,
// sorted and deduplicated within 1e-10 * max(1, horizon). The evaluation grid
// includes every zero of both cosine factors, so balance windows far narrower
// than the uniform spacing are still found.
std::vector<double> cosine_balance_times(int a, int b, double A, double B, double c,
                                         double horizon);

} // namespace rosette
