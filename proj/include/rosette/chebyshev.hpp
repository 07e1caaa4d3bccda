#pragma once

#include <vector>

namespace rosette {

// Chebyshev polynomial of the first kind, T_d(cos x) = cos(d x).
double cheb_T(int d, double y);

// Chebyshev polynomial of the second kind with the convention
// sin(x) U_{k-1}(cos x) = sin(k x); U_{-1} = 0, U_0 = 1.
double cheb_U(int k, double y);

struct ChebyshevEval {
    enum class Kind { First, Second };
    Kind kind = Kind::First;
    int degree = 0;
    double operator()(double y) const {
        return kind == Kind::First ? cheb_T(degree, y) : cheb_U(degree, y);
    }
};

// Monomial coefficients (ascending) of T_d / U_d.
std::vector<double> cheb_T_coeffs(int d);
std::vector<double> cheb_U_coeffs(int d);

// sin(2*pi*a*theta) / sin(2*pi*b*theta). At a common zero of numerator and
// denominator the true two-sided limit is returned (it carries a sign, e.g.
// -a/b on alternating branches); at a simple denominator zero a signed
// infinity marker is returned (sign of the limit from the right).
double psi(long long a, long long b, double theta);

// cos(2*pi*b*c*t) / cos(2*pi*a*c*t), with the same limit/marker conventions.
double phi(long long a, long long b, double c, double t);

} // namespace rosette
