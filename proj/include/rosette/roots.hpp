#pragma once

#include <complex>
#include <vector>

#include "rosette/laurent.hpp"

namespace rosette {

struct RootSet {
    struct Root {
        Complex value;
        int multiplicity = 1;
    };
    std::vector<Root> roots; // one entry per root cluster
    double max_residual = 0.0;

    std::size_t total_count() const {
        std::size_t n = 0;
        for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
        return n;
    }
};

// All complex roots of sum coeffs[j] z^j (ascending order, nonzero leading
// coefficient). Deterministic Aberth-Ehrlich iteration from a fixed circular
// initial configuration, with a companion-matrix eigenvalue fallback.
RootSet poly_roots(const std::vector<Complex>& coeffs);

// Real roots of a real polynomial inside the open interval (lo, hi):
// sign-isolation on a fixed grid, bisection plus Newton refinement, duplicates
// within 1e-10 merged. Even-multiplicity roots are recovered through the
// derivative's roots.
std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi);

// Sylvester resultant determinant of two complex polynomials (ascending
// coefficients, formal degrees bounded by the vector lengths).
Complex sylvester_resultant(const std::vector<Complex>& p, const std::vector<Complex>& q);

// Coefficient vector (ascending, length max_exponent+1) of a polynomial with
// no negative exponents; throws when negative exponents are present.
std::vector<Complex> to_coefficients(const LaurentPolynomial& p);

} // namespace rosette
