#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <cmath>

namespace rosette {

struct RationalOverflow : std::overflow_error {
    RationalOverflow() : std::overflow_error("rational arithmetic overflow") {}
};

// Exact fraction with int64 parts. Always normalized: den > 0, gcd(num, den) = 1.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw RationalOverflow();
        return static_cast<long long>(v);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return reduced(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }
    Rational operator-() const { return Rational(-num, den); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduced(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return reduced(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }

    static Rational reduced(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num = checked(n);
        r.den = checked(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Continued-fraction reconstruction of the nearest fraction with den <= max_den,
    // accepted only when it matches x to within tol.
    static std::optional<Rational> from_double(double x, double tol = 1e-12, long long max_den = 1000000) {
        if (!std::isfinite(x)) return std::nullopt;
        double a = x;
        long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
        for (int it = 0; it < 64; ++it) {
            double fl = std::floor(a);
            if (fl > 9e17 || fl < -9e17) return std::nullopt;
            long long ai = static_cast<long long>(fl);
            __int128 p2 = static_cast<__int128>(ai) * p1 + p0;
            __int128 q2 = static_cast<__int128>(ai) * q1 + q0;
            if (q2 > max_den) break;
            p0 = p1; q0 = q1;
            p1 = static_cast<long long>(p2); q1 = static_cast<long long>(q2);
            double approx = static_cast<double>(p1) / static_cast<double>(q1);
            if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) return Rational(p1, q1);
            double frac = a - fl;
            if (frac < 1e-15) break;
            a = 1.0 / frac;
        }
        return std::nullopt;
    }
};

inline long long rational_lcm(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
    return Rational::checked(l < 0 ? -l : l);
}

// Exact real number in one of three forms: rational p/q, rational multiple of a
// square-free surd r*sqrt(k), or an opaque float carrying a user-asserted
// rational-independence flag.
class ExactReal {
  public:
    enum class Kind { Rational, Surd, Opaque };

    ExactReal() : kind_(Kind::Rational), r_(0) {}
    ExactReal(Rational r) : kind_(Kind::Rational), r_(r) {}
    ExactReal(long long n) : kind_(Kind::Rational), r_(n) {}

    static ExactReal surd_multiple(Rational r, long long k) {
        if (k < 0) throw std::domain_error("negative surd radicand");
        // extract square factors so the radicand is square-free
        long long s = 1;
        for (long long f = 2; f * f <= k; ++f) {
            while (k % (f * f) == 0) { k /= f * f; s *= f; }
        }
        ExactReal e;
        e.r_ = r * Rational(s);
        if (k <= 1 || e.r_.is_zero()) {
            e.kind_ = Kind::Rational;
            if (k == 0) e.r_ = Rational(0);
        } else {
            e.kind_ = Kind::Surd;
            e.k_ = k;
        }
        return e;
    }

    static ExactReal opaque(double v, bool independent_asserted) {
        ExactReal e;
        e.kind_ = Kind::Opaque;
        e.opaque_ = v;
        e.independent_ = independent_asserted;
        return e;
    }

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_opaque() const { return kind_ == Kind::Opaque; }
    bool independence_asserted() const { return independent_; }
    const Rational& rational_part() const { return r_; }
    long long radicand() const { return k_; }

    double value() const {
        switch (kind_) {
            case Kind::Rational: return r_.value();
            case Kind::Surd: return r_.value() * std::sqrt(static_cast<double>(k_));
            default: return opaque_;
        }
    }

    bool is_zero() const { return kind_ != Kind::Opaque ? r_.is_zero() && kind_ == Kind::Rational : opaque_ == 0.0; }

    // Exact structural equality for the symbolic forms; value equality for opaque.
    friend bool operator==(const ExactReal& a, const ExactReal& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Rational: return a.r_ == b.r_;
            case Kind::Surd: return a.r_ == b.r_ && a.k_ == b.k_;
            default: return a.opaque_ == b.opaque_;
        }
    }
    friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }

    // Strict order consistent with numeric value; exact for the symbolic forms.
    friend bool operator<(const ExactReal& a, const ExactReal& b) {
        if (a.kind_ != Kind::Opaque && b.kind_ != Kind::Opaque) {
            // compare r_a * sqrt(k_a) with r_b * sqrt(k_b) exactly via signs and squares
            int sa = a.sign(), sb = b.sign();
            if (sa != sb) return sa < sb;
            if (sa == 0) return false;
            __int128 lhs = static_cast<__int128>(a.r_.num) * a.r_.num * a.effective_k() *
                           (static_cast<__int128>(b.r_.den) * b.r_.den);
            __int128 rhs = static_cast<__int128>(b.r_.num) * b.r_.num * b.effective_k() *
                           (static_cast<__int128>(a.r_.den) * a.r_.den);
            return sa > 0 ? lhs < rhs : rhs < lhs;
        }
        return a.value() < b.value();
    }

    int sign() const {
        if (kind_ == Kind::Opaque) return opaque_ > 0 ? 1 : (opaque_ < 0 ? -1 : 0);
        return r_.num > 0 ? 1 : (r_.num < 0 ? -1 : 0);
    }

    std::optional<ExactReal> add(const ExactReal& o) const {
        if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) return ExactReal(r_ + o.r_);
        if (kind_ == Kind::Surd && o.kind_ == Kind::Surd && k_ == o.k_)
            return surd_multiple(r_ + o.r_, k_);
        if (kind_ == Kind::Rational && r_.is_zero()) return o;
        if (o.kind_ == Kind::Rational && o.r_.is_zero()) return *this;
        return std::nullopt;
    }

    std::optional<ExactReal> scaled(const Rational& f) const {
        switch (kind_) {
            case Kind::Rational: return ExactReal(r_ * f);
            case Kind::Surd: return surd_multiple(r_ * f, k_);
            default: return std::nullopt;
        }
    }

    // Ratio this/other when it is exactly decidable as a rational.
    std::optional<Rational> rational_ratio(const ExactReal& o) const {
        if (o.is_zero_symbolic()) return std::nullopt;
        if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) return r_ / o.r_;
        if (kind_ == Kind::Surd && o.kind_ == Kind::Surd && k_ == o.k_) return r_ / o.r_;
        if (kind_ == Kind::Rational && r_.is_zero()) return Rational(0);
        return std::nullopt;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Rational: return r_.str();
            case Kind::Surd:
                if (r_ == Rational(1)) return "sqrt(" + std::to_string(k_) + ")";
                return r_.str() + "*sqrt(" + std::to_string(k_) + ")";
            default: return std::to_string(opaque_);
        }
    }

  private:
    bool is_zero_symbolic() const { return kind_ != Kind::Opaque && r_.is_zero(); }
    long long effective_k() const { return kind_ == Kind::Surd ? k_ : 1; }

    Kind kind_ = Kind::Rational;
    Rational r_;
    long long k_ = 1;
    double opaque_ = 0.0;
    bool independent_ = false;
};

} // namespace rosette
