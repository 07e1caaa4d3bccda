#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rosette/laurent.hpp"

namespace rosette {

// Mirror symmetry of the curve: eval_circle(p, beta - t) equals
// e^(2*pi*i*sigma) * conj(eval_circle(p, t)) for all t. Both parameters live
// in [0, 1).
struct MirrorAxis {
    double beta = 0.0;
    double sigma = 0.0;
};

struct MirrorAxisSet {
    std::vector<MirrorAxis> axes;
    // Single-term curves are circles; every axis through the center works and
    // the finite list above is meaningless.
    bool continuum = false;
};

enum class GroupClass { Trivial, Cyclic, Dihedral };

struct SymmetryReport {
    int rotation_order = 1; // order of the image rotation subgroup
    std::optional<std::pair<int, int>> symmetry_type; // (k, m), gcd(k, m) = 1
    MirrorAxisSet mirrors;
    GroupClass classification = GroupClass::Trivial;
    // True when a rotation scan over orders 2..64 found no image rotation
    // beyond the divisors of rotation_order. Exponent arithmetic alone yields
    // a subgroup; this flag records that the scan did not enlarge it.
    bool verified_maximal = false;
};

// GCD of all pairwise exponent differences. Requires at least 2 terms.
int exponent_gcd_m(const LaurentPolynomial& p);

// (a1 mod m, m) where a1 is the least exponent, when gcd(a1, m) = 1 and
// m >= 2; nullopt otherwise. Requires at least 2 terms.
std::optional<std::pair<int, int>> symmetry_type(const LaurentPolynomial& p);

// Order of the image rotation: m / gcd(a1, m). 1 means no rotation detected
// by exponent arithmetic. Requires at least 2 terms.
int rotation_order(const LaurentPolynomial& p);

// All (beta, sigma) solving c_n e^(2*pi*i*n*beta) = e^(2*pi*i*sigma) *
// conj(c_n) for every term. Candidates come from the two lowest exponents and
// are verified against every coefficient to 1e-10.
MirrorAxisSet mirror_axes(const LaurentPolynomial& p);

SymmetryReport classify_group(const LaurentPolynomial& p);

// True when every generator in the report permutes the zero set of
// z^(-a_min) * p (and fixes the pole at 0 when a_min < 0) within matching
// distance 1e-8. Requires more than one term after factoring out z^(a_min).
bool zero_pole_orbit_check(const LaurentPolynomial& p, const SymmetryReport& report);

// Samples conj(gamma(t)) against the conjugated-weight sum at -t. The
// identity conj(sum w_k e(a_k t)) = sum conj(w_k) e(a_k (-t)) holds for every
// exponential sum, so this is a harness sanity check; for real weights it
// reduces to conj(gamma(t)) = gamma(-t).
bool conj_symmetry_check(const ExponentialSum& g, int samples);

struct AnnulusEstimate {
    double r_min = 0.0;
    double r_max = 0.0;
    double coverage_fraction = 0.0;
    double horizon = 0.0;
    int radial_cells = 0;
    int angular_cells = 0;
    // Two-term closed form | |v| - |w| |; the true inner radius when the
    // exponents are rationally independent.
    std::optional<double> analytic_r_min;
    // Set when r_max is |sum of weights| by the common-phase argument rather
    // than a sampled estimate.
    bool r_max_exact = false;
};

// Radial extent of the image. r_max is exact when all weights share a phase
// (maximum attained at t = 0); otherwise both bounds are sampled over
// [0, horizon].
AnnulusEstimate annulus_bounds(const ExponentialSum& g, double horizon, int samples);

// Fraction of polar grid cells between the annulus bounds visited by
// gamma([0, horizon]), stepped so consecutive samples move less than half a
// cell. Requires rationally independent exponents: decided exactly for
// rational and rational-multiple-of-sqrt(k) forms, by the user's assertion
// flag for opaque ones; throws std::invalid_argument otherwise.
AnnulusEstimate density_coverage(const ExponentialSum& g, double horizon, int radial_cells,
                                 int angular_cells);

} // namespace rosette
