#include "rosette/parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <vector>

namespace rosette {

namespace {

// Complex coefficient that stays an exact rational pair until an irrational
// constant or an overflow forces the float fallback.
struct ECoef {
    bool exact = true;
    Rational re, im;
    Complex approx;

    static ECoef from_rational(Rational r) {
        ECoef c;
        c.re = r;
        c.approx = Complex(r.value(), 0.0);
        return c;
    }
    static ECoef from_imaginary(Rational r) {
        ECoef c;
        c.im = r;
        c.approx = Complex(0.0, r.value());
        return c;
    }
    static ECoef from_double(Complex v) {
        ECoef c;
        c.exact = false;
        c.approx = v;
        return c;
    }
    bool is_zero() const { return exact ? (re.is_zero() && im.is_zero()) : approx == Complex(0.0, 0.0); }
    Complex value() const { return exact ? Complex(re.value(), im.value()) : approx; }
};

ECoef ec_add(const ECoef& a, const ECoef& b) {
    if (a.exact && b.exact) {
        try {
            ECoef c;
            c.re = a.re + b.re;
            c.im = a.im + b.im;
            c.approx = Complex(c.re.value(), c.im.value());
            return c;
        } catch (const RationalOverflow&) {
        }
    }
    return ECoef::from_double(a.value() + b.value());
}

ECoef ec_neg(const ECoef& a) {
    if (a.exact) {
        ECoef c;
        c.re = -a.re;
        c.im = -a.im;
        c.approx = Complex(c.re.value(), c.im.value());
        return c;
    }
    return ECoef::from_double(-a.approx);
}

ECoef ec_mul(const ECoef& a, const ECoef& b) {
    if (a.exact && b.exact) {
        try {
            ECoef c;
            c.re = a.re * b.re - a.im * b.im;
            c.im = a.re * b.im + a.im * b.re;
            c.approx = Complex(c.re.value(), c.im.value());
            return c;
        } catch (const RationalOverflow&) {
        }
    }
    return ECoef::from_double(a.value() * b.value());
}

ECoef ec_div(const ECoef& a, const ECoef& b) {
    if (a.exact && b.exact) {
        try {
            Rational n = b.re * b.re + b.im * b.im;
            ECoef c;
            c.re = (a.re * b.re + a.im * b.im) / n;
            c.im = (a.im * b.re - a.re * b.im) / n;
            c.approx = Complex(c.re.value(), c.im.value());
            return c;
        } catch (const RationalOverflow&) {
        }
    }
    return ECoef::from_double(a.value() / b.value());
}

using EPoly = std::map<int, ECoef>; // parser-side polynomial, exact coefficients

void ep_set(EPoly& p, int n, const ECoef& c) {
    if (c.is_zero())
        p.erase(n);
    else
        p[n] = c;
}

EPoly ep_add(const EPoly& a, const EPoly& b, bool negate_b) {
    EPoly out = a;
    for (const auto& [n, c] : b) {
        auto it = out.find(n);
        ECoef rhs = negate_b ? ec_neg(c) : c;
        ep_set(out, n, it == out.end() ? rhs : ec_add(it->second, rhs));
    }
    return out;
}

EPoly ep_mul(const EPoly& a, const EPoly& b) {
    EPoly out;
    for (const auto& [n1, c1] : a)
        for (const auto& [n2, c2] : b) {
            auto it = out.find(n1 + n2);
            ECoef prod = ec_mul(c1, c2);
            ep_set(out, n1 + n2, it == out.end() ? prod : ec_add(it->second, prod));
        }
    return out;
}

struct ExactProd { // product of rationals and square roots, exactly
    Rational r{1};
    long long k = 1; // radicand, 1 when rational
    bool ok = true;

    void mul_rational(const Rational& x) {
        try {
            r = r * x;
        } catch (const RationalOverflow&) {
            ok = false;
        }
    }
    void div_rational(const Rational& x) {
        if (x.is_zero()) {
            ok = false;
            return;
        }
        try {
            r = r / x;
        } catch (const RationalOverflow&) {
            ok = false;
        }
    }
    void mul_surd(long long kk, bool divide) {
        // sqrt(k)*sqrt(kk) handled by combining radicands; division uses
        // 1/sqrt(kk) = sqrt(kk)/kk
        try {
            if (divide) r = r / Rational(kk);
            if (k > (1ll << 30) || kk > (1ll << 30)) {
                ok = false;
                return;
            }
            k *= kk;
        } catch (const RationalOverflow&) {
            ok = false;
        }
    }
    std::optional<ExactReal> finish() const {
        if (!ok) return std::nullopt;
        return ExactReal::surd_multiple(r, k);
    }
};

struct Parser {
    std::string_view text;
    std::size_t pos = 0;
    std::optional<ParseDiagnostic> diag;
    bool expsum_mode = false;

    void fail(std::size_t at, std::string message, std::string expected = "") {
        if (!diag) diag = ParseDiagnostic{at, std::move(message), std::move(expected)};
    }
    bool failed() const { return diag.has_value(); }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                     text[pos] == '\r'))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool at_end() { return peek() == '\0'; }

    bool lookahead_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        std::size_t after = pos + w.size();
        if (after < text.size() && (std::isalnum(static_cast<unsigned char>(text[after])) ||
                                    text[after] == '_'))
            return false;
        return true;
    }
    bool consume_word(std::string_view w) {
        if (!lookahead_word(w)) return false;
        pos += w.size();
        return true;
    }

    // unsigned integer literal
    std::optional<long long> parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        long long v = 0;
        auto [p, ec] = std::from_chars(text.data() + start, text.data() + pos, v);
        if (ec != std::errc()) {
            fail(start, "integer literal too large");
            return std::nullopt;
        }
        (void)p;
        return v;
    }

    struct NumberTok {
        Rational exact;
        double approx = 0.0;
        bool is_exact = true;
        bool imaginary = false;
    };

    // digits [ . digits ] [i]
    std::optional<NumberTok> parse_number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        std::size_t int_end = pos;
        std::size_t frac_start = 0, frac_end = 0;
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            frac_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            frac_end = pos;
            if (frac_end == frac_start) {
                fail(pos, "expected digits after decimal point");
                return std::nullopt;
            }
        }
        NumberTok tok;
        long long ip = 0;
        auto [p1, e1] = std::from_chars(text.data() + start, text.data() + int_end, ip);
        (void)p1;
        bool ok = e1 == std::errc();
        Rational val(ip);
        if (ok && frac_end > frac_start) {
            long long fp = 0;
            auto [p2, e2] = std::from_chars(text.data() + frac_start, text.data() + frac_end, fp);
            (void)p2;
            std::size_t digits = frac_end - frac_start;
            if (e2 == std::errc() && digits <= 17) {
                long long den = 1;
                for (std::size_t j = 0; j < digits && ok; ++j) {
                    if (den > INT64_MAX / 10) ok = false;
                    den *= 10;
                }
                if (ok) {
                    try {
                        val = val + Rational(fp, den);
                    } catch (const RationalOverflow&) {
                        ok = false;
                    }
                }
            } else {
                ok = false;
            }
        }
        if (ok) {
            tok.exact = val;
            tok.approx = val.value();
        } else {
            tok.is_exact = false;
            std::string buf(text.substr(start, pos - start));
            tok.approx = std::strtod(buf.c_str(), nullptr);
        }
        if (pos < text.size() && text[pos] == 'i' &&
            !(pos + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos + 1])) ||
                                        text[pos + 1] == '_'))) {
            ++pos;
            tok.imaginary = true;
        }
        return tok;
    }

    // signed integer exponent, optionally parenthesized
    std::optional<int> parse_int_exponent() {
        skip_ws();
        bool paren = consume('(');
        skip_ws();
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        std::size_t at = pos;
        auto v = parse_uint();
        if (!v) {
            fail(at, "expected integer exponent", "integer");
            return std::nullopt;
        }
        if (*v > 1000000) {
            fail(at, "exponent out of range");
            return std::nullopt;
        }
        if (paren && !consume(')')) {
            fail(pos, "expected ')' after exponent", ")");
            return std::nullopt;
        }
        return sign * static_cast<int>(*v);
    }

    // ---- Laurent expression values -------------------------------------

    std::optional<EPoly> parse_expression() {
        auto lhs = parse_term();
        if (!lhs) return std::nullopt;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            auto rhs = parse_term();
            if (!rhs) return std::nullopt;
            lhs = ep_add(*lhs, *rhs, c == '-');
        }
        return lhs;
    }

    std::optional<EPoly> parse_term() {
        auto lhs = parse_unary();
        if (!lhs) return std::nullopt;
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') break;
            std::size_t at = pos;
            ++pos;
            auto rhs = parse_unary();
            if (!rhs) return std::nullopt;
            if (c == '*') {
                lhs = ep_mul(*lhs, *rhs);
            } else {
                if (rhs->size() != 1 || rhs->begin()->first != 0) {
                    fail(at, "division requires a nonzero constant divisor", "constant");
                    return std::nullopt;
                }
                if (rhs->begin()->second.is_zero()) {
                    fail(at, "division by zero");
                    return std::nullopt;
                }
                EPoly out;
                for (const auto& [n, c2] : *lhs) ep_set(out, n, ec_div(c2, rhs->begin()->second));
                lhs = out;
            }
        }
        return lhs;
    }

    std::optional<EPoly> parse_unary() {
        bool neg = false;
        while (true) {
            char c = peek();
            if (c == '-') {
                neg = !neg;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        auto v = parse_power();
        if (!v) return std::nullopt;
        if (neg) {
            EPoly out;
            for (const auto& [n, c] : *v) out[n] = ec_neg(c);
            return out;
        }
        return v;
    }

    std::optional<EPoly> parse_power() {
        auto base = parse_atom();
        if (!base) return std::nullopt;
        if (peek() != '^') return base;
        std::size_t caret = pos;
        ++pos;
        auto e = parse_int_exponent();
        if (!e) return std::nullopt;
        int exp = *e;
        if (exp == 0) {
            EPoly one;
            one[0] = ECoef::from_rational(Rational(1));
            return one;
        }
        if (exp < 0) {
            // only monomials are invertible
            if (base->size() != 1) {
                fail(caret, "negative power requires a monomial base such as z", "monomial");
                return std::nullopt;
            }
            auto [n, c] = *base->begin();
            ECoef one = ECoef::from_rational(Rational(1));
            ECoef inv = ec_div(one, c);
            EPoly acc;
            acc[0] = one;
            EPoly mono;
            mono[-n] = inv;
            for (int j = 0; j < -exp; ++j) acc = ep_mul(acc, mono);
            return acc;
        }
        EPoly acc;
        acc[0] = ECoef::from_rational(Rational(1));
        EPoly sq = *base;
        int e2 = exp;
        while (e2 > 0) {
            if (e2 & 1) acc = ep_mul(acc, sq);
            sq = ep_mul(sq, sq);
            e2 >>= 1;
        }
        return acc;
    }

    std::optional<EPoly> parse_atom() {
        skip_ws();
        std::size_t at = pos;
        char c = peek();
        if (c == '\0') {
            fail(at, "unexpected end of expression", "operand");
            return std::nullopt;
        }
        if (consume('(')) {
            auto inner = parse_expression();
            if (!inner) return std::nullopt;
            if (!consume(')')) {
                fail(pos, "expected ')'", ")");
                return std::nullopt;
            }
            return inner;
        }
        if (consume_word("z")) {
            EPoly p;
            p[1] = ECoef::from_rational(Rational(1));
            return p;
        }
        if (consume_word("pi")) {
            EPoly p;
            p[0] = ECoef::from_double(Complex(3.14159265358979323846, 0.0));
            return p;
        }
        if (consume_word("sqrt")) {
            if (!consume('(')) {
                fail(pos, "expected '(' after sqrt", "(");
                return std::nullopt;
            }
            auto v = parse_uint();
            if (!v) {
                fail(pos, "expected a nonnegative integer radicand", "integer");
                return std::nullopt;
            }
            if (!consume(')')) {
                fail(pos, "expected ')'", ")");
                return std::nullopt;
            }
            ExactReal s = ExactReal::surd_multiple(Rational(1), *v);
            EPoly p;
            ECoef coef = s.is_rational() ? ECoef::from_rational(s.rational_part())
                                         : ECoef::from_double(Complex(s.value(), 0.0));
            ep_set(p, 0, coef);
            return p;
        }
        if (consume_word("i")) {
            EPoly p;
            p[0] = ECoef::from_imaginary(Rational(1));
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto tok = parse_number();
            if (!tok) return std::nullopt;
            EPoly p;
            ECoef coef;
            if (tok->is_exact) {
                coef = tok->imaginary ? ECoef::from_imaginary(tok->exact)
                                      : ECoef::from_rational(tok->exact);
            } else {
                coef = ECoef::from_double(tok->imaginary ? Complex(0.0, tok->approx)
                                                         : Complex(tok->approx, 0.0));
            }
            ep_set(p, 0, coef);
            return p;
        }
        if (expsum_mode && lookahead_word("e")) {
            fail(at, "exponential factor is not allowed here", "scalar");
            return std::nullopt;
        }
        fail(at, std::string("unexpected character '") + c + "'", "operand");
        return std::nullopt;
    }

    // ---- exponential sums ----------------------------------------------

    struct ETerm {
        ECoef weight;
        ExactReal exponent; // defaults to rational 0
        bool has_exponential = false;
    };

    std::optional<ExactReal> parse_exact_real() {
        skip_ws();
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        ExactProd prod;
        bool first = true;
        bool divide = false;
        while (true) {
            skip_ws();
            std::size_t at = pos;
            if (consume_word("sqrt")) {
                if (!consume('(')) {
                    fail(pos, "expected '(' after sqrt", "(");
                    return std::nullopt;
                }
                auto v = parse_uint();
                if (!v || !consume(')')) {
                    fail(pos, "expected integer radicand and ')'");
                    return std::nullopt;
                }
                prod.mul_surd(*v, divide);
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                auto tok = parse_number();
                if (!tok) return std::nullopt;
                if (tok->imaginary || !tok->is_exact) {
                    fail(at, "exponent must be an exact real", "rational or sqrt(k)");
                    return std::nullopt;
                }
                if (divide)
                    prod.div_rational(tok->exact);
                else
                    prod.mul_rational(tok->exact);
            } else {
                if (first) {
                    fail(at, "expected an exact real exponent", "rational or sqrt(k)");
                    return std::nullopt;
                }
                fail(at, "expected a factor after '*' or '/'", "rational or sqrt(k)");
                return std::nullopt;
            }
            first = false;
            char op = peek();
            if (op == '*' || op == '/') {
                ++pos;
                divide = op == '/';
                continue;
            }
            break;
        }
        auto fin = prod.finish();
        if (!fin) {
            fail(pos, "exponent arithmetic overflowed or divided by zero");
            return std::nullopt;
        }
        if (sign < 0) {
            auto neg = fin->scaled(Rational(-1));
            if (!neg) {
                fail(pos, "exponent arithmetic failed");
                return std::nullopt;
            }
            return *neg;
        }
        return *fin;
    }

    std::optional<ETerm> parse_expsum_product() {
        ETerm term;
        term.weight = ECoef::from_rational(Rational(1));
        bool neg = false;
        while (true) {
            char c = peek();
            if (c == '-') {
                neg = !neg;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        bool first = true;
        bool divide = false;
        while (true) {
            skip_ws();
            std::size_t at = pos;
            if (lookahead_word("e")) {
                pos += 1;
                if (!consume('(')) {
                    fail(pos, "expected '(' after e", "(");
                    return std::nullopt;
                }
                if (divide) {
                    fail(at, "cannot divide by an exponential factor");
                    return std::nullopt;
                }
                auto a = parse_exact_real();
                if (!a) return std::nullopt;
                if (!consume(')')) {
                    fail(pos, "expected ')'", ")");
                    return std::nullopt;
                }
                if (term.has_exponential) {
                    auto sum = term.exponent.add(*a);
                    if (!sum) {
                        fail(at, "cannot combine exponents of different irrational forms");
                        return std::nullopt;
                    }
                    term.exponent = *sum;
                } else {
                    term.exponent = *a;
                    term.has_exponential = true;
                }
            } else {
                auto atom = parse_power();
                if (!atom) return std::nullopt;
                if (atom->size() > 1 || (atom->size() == 1 && atom->begin()->first != 0)) {
                    fail(at, "the variable z is not allowed in an exponential sum", "scalar");
                    return std::nullopt;
                }
                ECoef v = atom->empty() ? ECoef::from_rational(Rational(0)) : atom->begin()->second;
                if (divide) {
                    if (v.is_zero()) {
                        fail(at, "division by zero");
                        return std::nullopt;
                    }
                    term.weight = ec_div(term.weight, v);
                } else {
                    term.weight = ec_mul(term.weight, v);
                }
            }
            first = false;
            char op = peek();
            if (op == '*' || op == '/') {
                ++pos;
                divide = op == '/';
                continue;
            }
            break;
        }
        (void)first;
        if (neg) term.weight = ec_neg(term.weight);
        return term;
    }

    std::optional<std::vector<ETerm>> parse_expsum_expression() {
        std::vector<ETerm> terms;
        auto t0 = parse_expsum_product();
        if (!t0) return std::nullopt;
        terms.push_back(*t0);
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos;
            auto t = parse_expsum_product();
            if (!t) return std::nullopt;
            if (c == '-') t->weight = ec_neg(t->weight);
            terms.push_back(*t);
        }
        return terms;
    }
};

std::string exponent_text(int n) {
    if (n == 0) return "";
    if (n == 1) return "z";
    if (n < 0) return "z^(" + std::to_string(n) + ")";
    return "z^" + std::to_string(n);
}

std::string coefficient_text(Complex c) {
    double re = c.real(), im = c.imag();
    if (im == 0.0) return format_double(re);
    if (re == 0.0) return "(" + format_double(im) + "i)";
    std::string s = "(" + format_double(re);
    s += im < 0.0 ? " - " : " + ";
    s += format_double(std::abs(im)) + "i)";
    return s;
}

std::string term_text(int n, Complex c) {
    std::string e = exponent_text(n);
    if (e.empty()) return coefficient_text(c);
    if (c == Complex(1.0, 0.0)) return e;
    if (c == Complex(-1.0, 0.0)) return "-" + e;
    return coefficient_text(c) + "*" + e;
}

} // namespace

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, p);
}

Parsed<LaurentPolynomial> parse_laurent(std::string_view text) {
    Parser parser;
    parser.text = text;
    Parsed<LaurentPolynomial> out;
    auto poly = parser.parse_expression();
    if (!poly || parser.failed()) {
        out.diagnostic = parser.diag.value_or(
            ParseDiagnostic{parser.pos, "invalid expression", ""});
        return out;
    }
    parser.skip_ws();
    if (!parser.at_end()) {
        out.diagnostic = ParseDiagnostic{parser.pos, "unexpected trailing input", "end of input"};
        return out;
    }
    LaurentPolynomial::TermMap m;
    for (const auto& [n, c] : *poly) {
        if (!c.is_zero()) m[n] = c.value();
    }
    if (m.empty()) {
        out.diagnostic = ParseDiagnostic{0, "expression reduces to the zero polynomial", ""};
        return out;
    }
    out.value = LaurentPolynomial(std::move(m));
    return out;
}

Parsed<ExponentialSum> parse_expsum(std::string_view text) {
    Parser parser;
    parser.text = text;
    parser.expsum_mode = true;
    Parsed<ExponentialSum> out;
    auto terms = parser.parse_expsum_expression();
    if (!terms || parser.failed()) {
        out.diagnostic = parser.diag.value_or(
            ParseDiagnostic{parser.pos, "invalid expression", ""});
        return out;
    }
    parser.skip_ws();
    if (!parser.at_end()) {
        out.diagnostic = ParseDiagnostic{parser.pos, "unexpected trailing input", "end of input"};
        return out;
    }
    // merge duplicate exponents with exact coefficient addition
    std::vector<Parser::ETerm> merged;
    for (const auto& t : *terms) {
        bool found = false;
        for (auto& m : merged) {
            if (m.exponent == t.exponent) {
                m.weight = ec_add(m.weight, t.weight);
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(t);
    }
    std::vector<ExponentialSum::Term> sum_terms;
    for (const auto& t : merged) {
        if (t.weight.is_zero()) {
            out.diagnostic = ParseDiagnostic{0, "zero weight on exponent " + t.exponent.str(), ""};
            return out;
        }
        sum_terms.push_back({t.weight.value(), t.exponent});
    }
    out.value = ExponentialSum(std::move(sum_terms));
    return out;
}

Parsed<Complex> parse_complex(std::string_view text) {
    Parser parser;
    parser.text = text;
    Parsed<Complex> out;
    auto poly = parser.parse_expression();
    if (!poly || parser.failed()) {
        out.diagnostic = parser.diag.value_or(
            ParseDiagnostic{parser.pos, "invalid expression", ""});
        return out;
    }
    parser.skip_ws();
    if (!parser.at_end()) {
        out.diagnostic = ParseDiagnostic{parser.pos, "unexpected trailing input", "end of input"};
        return out;
    }
    Complex v{0.0, 0.0};
    for (const auto& [n, c] : *poly) {
        if (c.is_zero()) continue;
        if (n != 0) {
            out.diagnostic = ParseDiagnostic{0, "a point literal cannot contain z", ""};
            return out;
        }
        v = c.value();
    }
    out.value = v;
    return out;
}

std::string format(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, c] : p.terms()) {
        if (first) {
            out = term_text(n, c);
            first = false;
            continue;
        }
        if (c.imag() == 0.0 && c.real() < 0.0) {
            out += " - " + term_text(n, -c);
        } else {
            out += " + " + term_text(n, c);
        }
    }
    return out;
}

std::string format(const ExponentialSum& g) {
    std::string out;
    bool first = true;
    for (const auto& term : g.terms()) {
        Complex w = term.weight;
        std::string e = "e(" + term.exponent.str() + ")";
        std::string t;
        if (w == Complex(1.0, 0.0))
            t = e;
        else if (w == Complex(-1.0, 0.0))
            t = "-" + e;
        else
            t = coefficient_text(w) + "*" + e;
        if (first) {
            out = t;
            first = false;
        } else if (w.imag() == 0.0 && w.real() < 0.0) {
            out += " - " + (w == Complex(-1.0, 0.0) ? e : coefficient_text(-w) + "*" + e);
        } else {
            out += " + " + t;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace rosette
