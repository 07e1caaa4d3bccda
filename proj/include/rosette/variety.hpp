#pragma once

#include "rosette/laurent.hpp"

namespace rosette {

// Implicit real-algebraic variety containing the image of the unit circle.
//
// For p(z) = sum_{k=0}^n c_k z^k (c_n != 0, n >= 1) and a point w, set
// A(z) = p(z) - w and let B(z) = z^n (pbar(1/z) - wbar) be its
// conjugate-reversal (b_j = conj(a_{n-j})). On |z| = 1, conj(z) = 1/z makes
// every curve point a common root of A and B, so the resultant
//
//   S(w) = Res_z(A, B)
//
// vanishes exactly when w lies on the curve's image (a real-valued function of
// w of degree 2n in (w, wbar)). The roots of B are the conjugate-reciprocals
// 1/conj(alpha_k) of the roots alpha_k of A, which gives the product form
//
//   S(w) = (-1)^{n^2} conj(c_0 - w)^n prod_k A(1/conj(alpha_k)).

// S(w) via the root product; falls back to the Sylvester determinant when some
// |alpha_k| <= 1e-6, where reciprocation would lose accuracy. Real up to roundoff.
// Throws std::invalid_argument for negative exponents or degree < 1.
Complex variety_eval(const LaurentPolynomial& p, Complex w);

// The bare product h(w) = (-1)^{n^2} prod_k A(1/conj(alpha_k)) without the
// conj(c_0 - w)^n prefactor. In this normalization a curve with rotation
// symmetry p(sigma z) = sigma^k p(z), sigma = e^{2 pi i/m}, satisfies the
// twist identity h(sigma^k w) = sigma^{kn} h(w). Throws when some
// |alpha_k| <= 1e-12 (no finite product value exists).
Complex variety_raw(const LaurentPolynomial& p, Complex w);

// Relative residual |h(sigma^k w) - sigma^{kn} h(w)| / max(1, |h(w)|) of the
// rotation twist identity, sigma = e^{2 pi i/m}. Small (<= 1e-6) when the
// curve has symmetry type (k, m); large otherwise (negative control).
double rotation_invariance_check(const LaurentPolynomial& p, Complex w, int m, int k);

// Relative residual |S(sigma w_bar) - S(w)| / max(1, |S(w)|) for the mirror
// reflection w -> e^{2 pi i sigma_angle} conj(w). The angle convention matches
// MirrorAxis::sigma (turns). Small when the curve has that mirror symmetry.
double mirror_invariance_check(const LaurentPolynomial& p, Complex w, double sigma_angle);

} // namespace rosette
