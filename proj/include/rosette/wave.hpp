#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rosette/laurent.hpp"
#include "rosette/rational.hpp"

namespace rosette {

// Thrown when an operation is requested at a time where the evolved curve has
// collapsed (both factors of a two-term curve vanish, or a needed coefficient
// died).
struct DegenerateTimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficients of the evolved curve at time t: each c_n becomes
// c_n cos(2 pi n c t). Terms whose cosine factor has magnitude <= 1e-12 are
// dropped (an exact zero of cos at a representable double argument is not
// attainable, so a hard threshold stands in for "the term died").
LaurentPolynomial wave_coefficients(const LaurentPolynomial& p, double c, double t);

// Direct evaluation of the evolved field u(x, t) = sum c_n cos(2 pi n c t)
// e^(2 pi i n x); x is the circle parameter in [0, 1).
Complex wave_eval(const LaurentPolynomial& p, double c, double x, double t);

// Time period of the evolution: 1 / (c * gcd of |support exponents|). Throws
// std::invalid_argument when the support has no nonzero exponent (constant
// curve; no time dependence).
double wave_period(const LaurentPolynomial& p, double c);

struct TimelineEvent {
    enum class Kind { DegenerateCircle, DegeneratePoint, WindingTransition, CuspTime };
    double time = 0.0;
    Kind kind = Kind::DegenerateCircle;
    // DegenerateCircle: the exponent of the single surviving term.
    std::optional<int> surviving_exponent;
    // WindingTransition: the winding value on the segment that starts here.
    std::optional<int> winding_value;
    // CuspTime: the balance-ratio threshold (|c_a| / |c_b|) * (a / b).
    std::optional<double> threshold;
    // Set when the speed is recognized as rational and the time is exact.
    std::optional<Rational> exact_time;
};

struct DegenerateTimes {
    std::vector<TimelineEvent> events; // circle/point collapses in [0, T]
    bool always_degenerate = false;    // single-term curve: a circle at every time
};

// All times in [0, period] where at most one term of the evolved curve
// survives: one survivor is a circle (multiply traced), zero survivors a
// point at the origin. When the speed c is recognized as rational the
// candidate times and the survivor test are evaluated in exact rational
// arithmetic and events carry exact_time; otherwise the test uses
// |cos| <= 1e-9 with times deduplicated within 1e-10.
DegenerateTimes degenerate_times(const LaurentPolynomial& p, double c);

struct Timeline {
    double speed = 0.0;
    double period = 0.0;
    std::vector<TimelineEvent> events; // sorted by (time, kind)
};

// Merged event timeline of the two-term wave flow over one period: winding
// transitions (from the winding profile), cusp times (where
// |b c_b cos(2 pi b c t)| = |a c_a cos(2 pi a c t)|), and degenerate times.
// Events are sorted by time and deduplicated within 1e-10 per kind.
Timeline wave_timeline(int a, int b, Complex c_a, Complex c_b, double c);

struct WaveSnapshot {
    double t = 0.0;
    LaurentPolynomial coefficients;
    std::vector<CurveSample> samples;
};

// frames snapshots at t_j = j * period / frames, j = 0 .. frames-1, each with
// samples_per_frame curve samples of the evolved coefficients.
std::vector<WaveSnapshot> wave_snapshots(const LaurentPolynomial& p, double c, int frames,
                                         int samples_per_frame);

} // namespace rosette
