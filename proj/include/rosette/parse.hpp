#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rosette/laurent.hpp"

namespace rosette {

struct ParseDiagnostic {
    std::size_t offset = 0;
    std::string message;
    std::string expected;
};

template <class T>
struct Parsed {
    std::optional<T> value;
    std::optional<ParseDiagnostic> diagnostic;
    explicit operator bool() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

struct SourceExpression {
    enum class Kind { Laurent, ExponentialSum };
    std::string text;
    Kind kind = Kind::Laurent;
};

// Expression grammar over +, -, *, /, ^ with atoms z, i, pi, sqrt(k), decimal
// and integer literals. Coefficient arithmetic is exact complex-rational until
// an irrational constant or an overflow forces a float; cancellations of exact
// coefficients therefore eliminate terms exactly. Total: every failure is a
// diagnostic with a byte offset, never an exception.
Parsed<LaurentPolynomial> parse_laurent(std::string_view text);

// Sums of scalar multiples of e(A) with exact exponents: A is built from
// rationals and sqrt(k) under * and /. Duplicate exponents merge; a zero
// weight is rejected.
Parsed<ExponentialSum> parse_expsum(std::string_view text);

// Complex literal for CLI flags: forms like "1.5", "-2i", "0.3+0.4i",
// "1-i", "i". Whitespace around tokens is accepted; nothing may follow.
Parsed<Complex> parse_complex(std::string_view text);

// Canonical text form, ascending exponents; parse_laurent(format(p)) == p for
// exactly-representable coefficients.
std::string format(const LaurentPolynomial& p);

std::string format(const ExponentialSum& g);

// Shortest round-trip decimal for a double.
std::string format_double(double x);

} // namespace rosette
