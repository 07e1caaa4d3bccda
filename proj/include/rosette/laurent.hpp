#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rosette/rational.hpp"

namespace rosette {

using Complex = std::complex<double>;

inline constexpr double kTau = 6.283185307179586476925286766559;

// z^n for integer n by binary powering; avoids the exp/log path of std::pow.
Complex ipow(Complex z, long long n);

// Unit-circle point e^(2*pi*i*t); the argument is reduced mod 1 first.
Complex circle_point(double t);

struct CurveSample {
    double t = 0.0;
    Complex point;
};

// Finite Laurent polynomial sum c_n z^n held as an ordered exponent -> coefficient
// map. Zero coefficients are never stored; the empty map is the distinguished
// zero polynomial produced by operations such as differentiating a constant.
class LaurentPolynomial {
  public:
    using TermMap = std::map<int, Complex>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(TermMap terms) : terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == Complex(0.0, 0.0)) ? terms_.erase(it) : std::next(it);
    }

    static LaurentPolynomial monomial(int exponent, Complex coefficient) {
        TermMap m;
        if (coefficient != Complex(0.0, 0.0)) m[exponent] = coefficient;
        return LaurentPolynomial(std::move(m));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int min_exponent() const {
        require_nonzero();
        return terms_.begin()->first;
    }
    int max_exponent() const {
        require_nonzero();
        return terms_.rbegin()->first;
    }
    Complex coeff(int n) const {
        auto it = terms_.find(n);
        return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        TermMap m = a.terms_;
        for (const auto& [n, c] : b.terms_) m[n] += c;
        return LaurentPolynomial(std::move(m));
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        TermMap m = a.terms_;
        for (const auto& [n, c] : b.terms_) m[n] -= c;
        return LaurentPolynomial(std::move(m));
    }
    LaurentPolynomial operator-() const {
        TermMap m;
        for (const auto& [n, c] : terms_) m[n] = -c;
        return LaurentPolynomial(std::move(m));
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        TermMap m;
        for (const auto& [n1, c1] : a.terms_)
            for (const auto& [n2, c2] : b.terms_) m[n1 + n2] += c1 * c2;
        return LaurentPolynomial(std::move(m));
    }
    friend LaurentPolynomial operator*(Complex s, const LaurentPolynomial& p) {
        TermMap m;
        if (s != Complex(0.0, 0.0))
            for (const auto& [n, c] : p.terms_) m[n] = s * c;
        return LaurentPolynomial(std::move(m));
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

  private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
    }

    TermMap terms_;
};

// Evaluation at z, summed in increasing-exponent order. z = 0 with a negative
// exponent present is a domain error.
Complex eval(const LaurentPolynomial& p, Complex z);

// Evaluation at e^(2*pi*i*t).
Complex eval_circle(const LaurentPolynomial& p, double t);

LaurentPolynomial derivative(const LaurentPolynomial& p);

// n samples at t = j/n, j = 0..n-1.
std::vector<CurveSample> sample(const LaurentPolynomial& p, int n);

// Largest curve magnitude bound sum |c_n|.
double coefficient_scale(const LaurentPolynomial& p);

// GCD of |n| over the support (0 contributes nothing); 0 for the zero polynomial.
long long support_gcd(const LaurentPolynomial& p);

// Finite sum of weights times unit-frequency exponentials w_k e^(2*pi*i*a_k*t)
// with strictly increasing exact-real exponents and nonzero weights.
class ExponentialSum {
  public:
    struct Term {
        Complex weight;
        ExactReal exponent;
    };

    ExponentialSum() = default;
    explicit ExponentialSum(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Complex eval(double t) const;

    // Upper bound for |d/dt gamma(t)|.
    double max_speed() const;

    double weight_magnitude_sum() const;

  private:
    std::vector<Term> terms_;
};

ExponentialSum to_exponential_sum(const LaurentPolynomial& p);

struct PeriodicityResult {
    enum class Kind { Periodic, Aperiodic, Indeterminate, Constant };
    Kind kind = Kind::Indeterminate;
    std::optional<ExactReal> period; // set when Periodic
    double period_value() const { return period ? period->value() : 0.0; }
};

// Smallest T > 0 making every exponent times T an integer, when the exponents
// span a one-dimensional rational space; Aperiodic when a ratio is exactly
// irrational; Indeterminate when opaque exponents lack the independence flag.
PeriodicityResult periodicity_check(const ExponentialSum& g);

} // namespace rosette
