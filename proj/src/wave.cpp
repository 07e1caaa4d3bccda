#include "rosette/wave.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rosette/winding.hpp"

namespace rosette {

namespace {

constexpr double kDropTol = 1e-12;  // cosine factor magnitude below which a term died
constexpr double kDeadTol = 1e-9;   // survivor test threshold for irrational speeds
constexpr double kTimeDedupe = 1e-10;

void check_speed(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("wave speed must be positive");
}

long long checked_support_gcd(const LaurentPolynomial& p) {
    long long g = support_gcd(p);
    if (g == 0)
        throw std::invalid_argument("wave evolution is time-independent for a constant curve");
    return g;
}

} // namespace

LaurentPolynomial wave_coefficients(const LaurentPolynomial& p, double c, double t) {
    check_speed(c);
    LaurentPolynomial::TermMap out;
    for (const auto& [n, coeff] : p.terms()) {
        double factor = std::cos(kTau * n * c * t);
        if (std::abs(factor) <= kDropTol) continue;
        out[n] = coeff * factor;
    }
    return LaurentPolynomial(std::move(out));
}

Complex wave_eval(const LaurentPolynomial& p, double c, double x, double t) {
    check_speed(c);
    Complex acc{0.0, 0.0};
    for (const auto& [n, coeff] : p.terms()) {
        double factor = std::cos(kTau * n * c * t);
        acc += coeff * factor * std::polar(1.0, kTau * n * x);
    }
    return acc;
}

double wave_period(const LaurentPolynomial& p, double c) {
    check_speed(c);
    return 1.0 / (c * static_cast<double>(checked_support_gcd(p)));
}

DegenerateTimes degenerate_times(const LaurentPolynomial& p, double c) {
    check_speed(c);
    long long g = checked_support_gcd(p);
    double T = 1.0 / (c * static_cast<double>(g));

    std::vector<int> exponents;
    for (const auto& [n, coeff] : p.terms()) exponents.push_back(n);

    DegenerateTimes result;
    result.always_degenerate = exponents.size() == 1;

    auto classify = [&](double time, const std::vector<int>& survivors,
                        std::optional<Rational> exact) -> std::optional<TimelineEvent> {
        if (survivors.size() > 1) return std::nullopt;
        TimelineEvent ev;
        ev.time = time;
        ev.exact_time = exact;
        if (survivors.size() == 1) {
            ev.kind = TimelineEvent::Kind::DegenerateCircle;
            ev.surviving_exponent = survivors.front();
        } else {
            ev.kind = TimelineEvent::Kind::DegeneratePoint;
        }
        return ev;
    };

    std::optional<Rational> speed = Rational::from_double(c);
    if (speed && std::abs(speed->value() - c) <= 1e-12 * std::max(1.0, std::abs(c))) {
        // Exact path: candidate times are (2k+1) Q / (4|n| P) for speed P/Q;
        // a term of exponent m dies exactly when 4|m| c t is an odd integer.
        Rational exact_period(speed->den, Rational::checked(static_cast<__int128>(speed->num) * g));
        std::set<Rational> candidates;
        for (int n : exponents) {
            if (n == 0) continue;
            long long mod = std::abs(static_cast<long long>(n));
            Rational base(speed->den, Rational::checked(static_cast<__int128>(4) * mod * speed->num));
            for (long long k = 0;; ++k) {
                Rational t = Rational(2 * k + 1) * base;
                if (exact_period < t) break;
                candidates.insert(t);
            }
        }
        for (const Rational& t : candidates) {
            std::vector<int> survivors;
            for (int m : exponents) {
                if (m == 0) {
                    survivors.push_back(m);
                    continue;
                }
                Rational phase = Rational(4 * std::abs(static_cast<long long>(m))) * *speed * t;
                bool dead = phase.is_integer() && (phase.num % 2 != 0);
                if (!dead) survivors.push_back(m);
            }
            if (auto ev = classify(t.value(), survivors, t)) result.events.push_back(*ev);
        }
    } else {
        std::vector<double> candidates;
        for (int n : exponents) {
            if (n == 0) continue;
            int mod = std::abs(n);
            for (long long k = 0;; ++k) {
                double t = (2.0 * k + 1.0) / (4.0 * mod * c);
                if (t > T * (1.0 + 1e-12)) break;
                candidates.push_back(t);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        double last = -1.0;
        for (double t : candidates) {
            if (last >= 0.0 && t - last <= kTimeDedupe) continue;
            last = t;
            std::vector<int> survivors;
            for (int m : exponents) {
                if (m == 0 || std::abs(std::cos(kTau * m * c * t)) > kDeadTol)
                    survivors.push_back(m);
            }
            if (auto ev = classify(t, survivors, std::nullopt)) result.events.push_back(*ev);
        }
    }
    std::sort(result.events.begin(), result.events.end(),
              [](const TimelineEvent& x, const TimelineEvent& y) { return x.time < y.time; });
    return result;
}

Timeline wave_timeline(int a, int b, Complex c_a, Complex c_b, double c) {
    WindingProfile profile = winding_profile(a, b, c_a, c_b, c);
    double T = profile.period;

    Timeline timeline;
    timeline.speed = c;
    timeline.period = T;

    const auto& bps = profile.breakpoints;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        TimelineEvent ev;
        ev.time = bps[i];
        ev.kind = TimelineEvent::Kind::WindingTransition;
        if (T - bps[i] <= 1e-9) {
            if (!profile.values.empty()) ev.winding_value = profile.values.front();
        } else {
            double next = (i + 1 < bps.size()) ? bps[i + 1] : T;
            for (double frac : {0.5, 0.381966, 0.618034}) {
                try {
                    auto v = two_term_winding(a, b, c_a, c_b, c, bps[i] + frac * (next - bps[i]));
                    if (v) {
                        ev.winding_value = *v;
                        break;
                    }
                } catch (const std::runtime_error&) {
                }
            }
        }
        timeline.events.push_back(ev);
    }

    double thr = (std::abs(c_a) / std::abs(c_b)) *
                 (static_cast<double>(std::abs(a)) / static_cast<double>(std::abs(b)));
    for (double t : cosine_balance_times(a, b, std::abs(a) * std::abs(c_a),
                                         std::abs(b) * std::abs(c_b), c, T)) {
        TimelineEvent ev;
        ev.time = t;
        ev.kind = TimelineEvent::Kind::CuspTime;
        ev.threshold = thr;
        timeline.events.push_back(ev);
    }

    LaurentPolynomial base({{a, c_a}, {b, c_b}});
    for (const TimelineEvent& ev : degenerate_times(base, c).events)
        timeline.events.push_back(ev);

    std::sort(timeline.events.begin(), timeline.events.end(),
              [](const TimelineEvent& x, const TimelineEvent& y) {
                  if (x.time != y.time) return x.time < y.time;
                  return static_cast<int>(x.kind) < static_cast<int>(y.kind);
              });
    std::vector<TimelineEvent> deduped;
    for (const TimelineEvent& ev : timeline.events) {
        bool dup = false;
        for (auto it = deduped.rbegin(); it != deduped.rend(); ++it) {
            if (ev.time - it->time > kTimeDedupe) break;
            if (it->kind == ev.kind) {
                dup = true;
                break;
            }
        }
        if (!dup) deduped.push_back(ev);
    }
    timeline.events = std::move(deduped);
    return timeline;
}

std::vector<WaveSnapshot> wave_snapshots(const LaurentPolynomial& p, double c, int frames,
                                         int samples_per_frame) {
    if (frames < 1) throw std::invalid_argument("need at least one frame");
    if (samples_per_frame < 2) throw std::invalid_argument("need at least two samples per frame");
    double T = wave_period(p, c);
    std::vector<WaveSnapshot> out;
    out.reserve(frames);
    for (int j = 0; j < frames; ++j) {
        WaveSnapshot snap;
        snap.t = T * j / frames;
        snap.coefficients = wave_coefficients(p, c, snap.t);
        snap.samples = sample(snap.coefficients, samples_per_frame);
        out.push_back(std::move(snap));
    }
    return out;
}

} // namespace rosette
