#include "rosette/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace rosette {

Complex ipow(Complex z, long long n) {
    if (n == 0) return Complex(1.0, 0.0);
    bool inv = n < 0;
    unsigned long long e = inv ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
    Complex acc(1.0, 0.0);
    Complex base = z;
    while (e > 0) {
        if (e & 1ull) acc *= base;
        base *= base;
        e >>= 1ull;
    }
    return inv ? Complex(1.0, 0.0) / acc : acc;
}

Complex circle_point(double t) {
    double frac = t - std::floor(t);
    double angle = kTau * frac;
    return Complex(std::cos(angle), std::sin(angle));
}

Complex eval(const LaurentPolynomial& p, Complex z) {
    if (p.is_zero()) return Complex(0.0, 0.0);
    if (z == Complex(0.0, 0.0)) {
        if (p.min_exponent() < 0) throw std::domain_error("pole at z = 0");
        Complex acc(0.0, 0.0);
        for (const auto& [n, c] : p.terms()) acc += (n == 0) ? c : Complex(0.0, 0.0);
        return acc;
    }
    Complex acc(0.0, 0.0);
    int prev = p.min_exponent();
    Complex power = ipow(z, prev);
    for (const auto& [n, c] : p.terms()) {
        if (n != prev) {
            power *= ipow(z, n - prev);
            prev = n;
        }
        acc += c * power;
    }
    return acc;
}

Complex eval_circle(const LaurentPolynomial& p, double t) { return eval(p, circle_point(t)); }

LaurentPolynomial derivative(const LaurentPolynomial& p) {
    LaurentPolynomial::TermMap m;
    for (const auto& [n, c] : p.terms())
        if (n != 0) m[n - 1] = static_cast<double>(n) * c;
    return LaurentPolynomial(std::move(m));
}

std::vector<CurveSample> sample(const LaurentPolynomial& p, int n) {
    if (n <= 0) throw std::invalid_argument("sample count must be positive");
    std::vector<CurveSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        double t = static_cast<double>(j) / static_cast<double>(n);
        out.push_back({t, eval_circle(p, t)});
    }
    return out;
}

double coefficient_scale(const LaurentPolynomial& p) {
    double s = 0.0;
    for (const auto& [n, c] : p.terms()) s += std::abs(c);
    return s;
}

long long support_gcd(const LaurentPolynomial& p) {
    long long g = 0;
    for (const auto& [n, c] : p.terms()) g = std::gcd(g, static_cast<long long>(n < 0 ? -n : n));
    return g;
}

ExponentialSum::ExponentialSum(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().exponent == t.exponent) {
            terms_.back().weight += t.weight;
        } else {
            terms_.push_back(t);
        }
    }
    for (const auto& t : terms_)
        if (t.weight == Complex(0.0, 0.0))
            throw std::invalid_argument("exponential sum with zero weight");
}

Complex ExponentialSum::eval(double t) const {
    Complex acc(0.0, 0.0);
    for (const auto& term : terms_) acc += term.weight * circle_point(term.exponent.value() * t);
    return acc;
}

double ExponentialSum::max_speed() const {
    double s = 0.0;
    for (const auto& term : terms_) s += std::abs(term.weight) * std::abs(term.exponent.value());
    return kTau * s;
}

double ExponentialSum::weight_magnitude_sum() const {
    double s = 0.0;
    for (const auto& term : terms_) s += std::abs(term.weight);
    return s;
}

ExponentialSum to_exponential_sum(const LaurentPolynomial& p) {
    std::vector<ExponentialSum::Term> terms;
    for (const auto& [n, c] : p.terms()) terms.push_back({c, ExactReal(Rational(n))});
    return ExponentialSum(std::move(terms));
}

PeriodicityResult periodicity_check(const ExponentialSum& g) {
    PeriodicityResult res;
    std::vector<ExactReal> nonzero;
    bool opaque_unflagged = false;
    bool opaque_flagged = false;
    for (const auto& term : g.terms()) {
        if (term.exponent.is_opaque()) {
            (term.exponent.independence_asserted() ? opaque_flagged : opaque_unflagged) = true;
        }
        if (!term.exponent.is_zero()) nonzero.push_back(term.exponent);
    }
    if (nonzero.empty()) {
        res.kind = PeriodicityResult::Kind::Constant;
        return res;
    }
    if (nonzero.size() == 1) {
        // a single frequency always spans a one-dimensional rational space
        res.kind = PeriodicityResult::Kind::Periodic;
        const ExactReal& a = nonzero.front();
        if (a.is_opaque()) {
            res.period = ExactReal::opaque(1.0 / std::abs(a.value()), false);
        } else if (a.is_rational()) {
            const Rational& r = a.rational_part();
            res.period = ExactReal(Rational(r.den, r.num < 0 ? -r.num : r.num));
        } else {
            Rational r = a.rational_part();
            if (r.num < 0) r = -r;
            res.period = ExactReal::surd_multiple(Rational(r.den, r.num) / Rational(a.radicand()),
                                                  a.radicand());
        }
        return res;
    }
    if (opaque_unflagged) {
        res.kind = PeriodicityResult::Kind::Indeterminate;
        return res;
    }
    if (opaque_flagged) {
        // asserted independent of the rationals, so the span has dimension >= 2
        res.kind = PeriodicityResult::Kind::Aperiodic;
        return res;
    }
    // all symbolic: ratios rational iff all share one class (rational, or same surd)
    for (std::size_t i = 1; i < nonzero.size(); ++i) {
        if (!nonzero[i].rational_ratio(nonzero[0])) {
            res.kind = PeriodicityResult::Kind::Aperiodic;
            return res;
        }
    }
    // all are (p_j/q_j) * s where s = 1 or sqrt(k); smallest T with a_j*T integral
    // is lcm(q_j)/gcd(p_j) divided by s.
    long long L = 1, G = 0;
    for (const auto& e : nonzero) {
        const Rational& r = e.rational_part();
        L = rational_lcm(L, r.den);
        G = std::gcd(G, r.num < 0 ? -r.num : r.num);
    }
    Rational t(L, G);
    res.kind = PeriodicityResult::Kind::Periodic;
    if (nonzero.front().is_rational()) {
        res.period = ExactReal(t);
    } else {
        long long k = nonzero.front().radicand();
        res.period = ExactReal::surd_multiple(t / Rational(k), k);
    }
    return res;
}

} // namespace rosette
