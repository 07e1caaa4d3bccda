#include "rosette/variety.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rosette/roots.hpp"

namespace rosette {

namespace {

constexpr double kReciprocalGuard = 1e-12;
// Roots this small are reciprocated with so much relative error that the
// product form loses all accuracy; switch to the determinant early instead.
constexpr double kProductSafety = 1e-6;

// Coefficients of A(z) = p(z) - w, ascending, validated.
std::vector<Complex> shifted_coefficients(const LaurentPolynomial& p, Complex w) {
    if (p.is_zero()) throw std::invalid_argument("variety needs a nonconstant curve");
    if (p.min_exponent() < 0)
        throw std::invalid_argument("variety is defined for polynomial curves (exponents >= 0)");
    if (p.max_exponent() < 1) throw std::invalid_argument("variety needs degree >= 1");
    std::vector<Complex> a = to_coefficients(p);
    a[0] -= w;
    return a;
}

// (-1)^{n^2} prod_k A(1/conj(alpha_k)); false when a reciprocal would blow up.
bool raw_product(const std::vector<Complex>& a, Complex& out, double guard) {
    const int n = static_cast<int>(a.size()) - 1;
    RootSet rs = poly_roots(a);
    Complex prod{1.0, 0.0};
    for (const auto& root : rs.roots) {
        if (std::abs(root.value) <= guard) return false;
        Complex rec = 1.0 / std::conj(root.value);
        Complex val{0.0, 0.0};
        for (int k = n; k >= 0; --k) val = val * rec + a[k];
        for (int m = 0; m < root.multiplicity; ++m) prod *= val;
    }
    if (n % 2 != 0) prod = -prod; // (-1)^{n^2} = (-1)^n
    out = prod;
    return true;
}

std::vector<Complex> conjugate_reversal(const std::vector<Complex>& a) {
    std::vector<Complex> b(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) b[j] = std::conj(a[a.size() - 1 - j]);
    return b;
}

} // namespace

Complex variety_eval(const LaurentPolynomial& p, Complex w) {
    std::vector<Complex> a = shifted_coefficients(p, w);
    const int n = static_cast<int>(a.size()) - 1;
    Complex raw;
    if (!raw_product(a, raw, kProductSafety))
        return sylvester_resultant(a, conjugate_reversal(a));
    Complex prefactor = ipow(std::conj(a[0]), n); // conj(c_0 - w)^n
    return prefactor * raw;
}

Complex variety_raw(const LaurentPolynomial& p, Complex w) {
    std::vector<Complex> a = shifted_coefficients(p, w);
    Complex raw;
    if (!raw_product(a, raw, kReciprocalGuard))
        throw std::runtime_error("a root of p - w lies at the origin; the product form diverges");
    return raw;
}

double rotation_invariance_check(const LaurentPolynomial& p, Complex w, int m, int k) {
    if (m < 1) throw std::invalid_argument("rotation order must be >= 1");
    const int n = p.max_exponent();
    Complex sigma_k = std::polar(1.0, kTau * static_cast<double>(k) / m);
    Complex twist = std::polar(1.0, kTau * static_cast<double>(k) * n / m); // sigma^{kn}
    Complex base = variety_raw(p, w);
    Complex rotated = variety_raw(p, sigma_k * w);
    return std::abs(rotated - twist * base) / std::max(1.0, std::abs(base));
}

double mirror_invariance_check(const LaurentPolynomial& p, Complex w, double sigma_angle) {
    Complex sigma = std::polar(1.0, kTau * sigma_angle);
    Complex base = variety_eval(p, w);
    Complex mirrored = variety_eval(p, sigma * std::conj(w));
    return std::abs(mirrored - base) / std::max(1.0, std::abs(base));
}

} // namespace rosette
