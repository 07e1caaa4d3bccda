#include "rosette/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace rosette {

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

// evaluates p and p' together
std::pair<Complex, Complex> horner2(const std::vector<Complex>& c, Complex z) {
    Complex p(0.0, 0.0), d(0.0, 0.0);
    for (std::size_t j = c.size(); j-- > 0;) {
        d = d * z + p;
        p = p * z + c[j];
    }
    return {p, d};
}

double eval_scale(const std::vector<Complex>& c, double r) {
    double s = 0.0, pw = 1.0;
    for (const auto& cj : c) {
        s += std::abs(cj) * pw;
        pw *= r;
    }
    return s;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& monic) {
    const int n = static_cast<int>(monic.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -monic[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

double poly_real(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * x + c[j];
    return acc;
}

double poly_real_scale(const std::vector<double>& c, double x) {
    double acc = 0.0, pw = 1.0, ax = std::abs(x);
    for (double cj : c) {
        acc += std::abs(cj) * pw;
        pw *= ax;
    }
    return acc;
}

std::vector<double> derive_real(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t j = 1; j < c.size(); ++j) d.push_back(static_cast<double>(j) * c[j]);
    return d;
}

double refine_bisect(const std::vector<double>& c, double a, double b) {
    double fa = poly_real(c, a);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        double m = 0.5 * (a + b);
        double fm = poly_real(c, m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) == (fm < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    double x = 0.5 * (a + b);
    std::vector<double> d = derive_real(c);
    for (int it = 0; it < 4; ++it) {
        double fx = poly_real(c, x);
        double dx = poly_real(d, x);
        if (dx == 0.0) break;
        double step = fx / dx;
        if (!std::isfinite(step) || std::abs(step) > (b - a) + 1e-12) break;
        x -= step;
        if (x < a || x > b) {
            x = std::clamp(x, a, b);
            break;
        }
    }
    return x;
}

void real_roots_impl(const std::vector<double>& coeffs, double lo, double hi, int depth,
                     std::vector<double>& out) {
    std::vector<double> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() <= 1) return;
    if (c.size() == 2) {
        double r = -c[0] / c[1];
        if (r > lo && r < hi) out.push_back(r);
        return;
    }
    constexpr int kGrid = 2048;
    double prev_x = lo + (hi - lo) * 1e-12;
    double prev_f = poly_real(c, prev_x);
    std::vector<double> found;
    if (prev_f == 0.0) found.push_back(prev_x);
    for (int i = 1; i <= kGrid; ++i) {
        double x = lo + (hi - lo) * (static_cast<double>(i) / kGrid);
        if (i == kGrid) x = hi - (hi - lo) * 1e-12;
        double f = poly_real(c, x);
        if (f == 0.0) {
            found.push_back(x);
        } else if ((prev_f < 0.0) != (f < 0.0) && prev_f != 0.0) {
            found.push_back(refine_bisect(c, prev_x, x));
        }
        prev_x = x;
        prev_f = f;
    }
    if (depth > 0) {
        // even-multiplicity roots of c are roots of c' where c itself vanishes
        std::vector<double> dr;
        real_roots_impl(derive_real(c), lo, hi, depth - 1, dr);
        for (double r : dr) {
            double sc = poly_real_scale(c, r);
            if (std::abs(poly_real(c, r)) <= 1e-9 * std::max(1.0, sc)) found.push_back(r);
        }
    }
    std::sort(found.begin(), found.end());
    for (double r : found) {
        if (out.empty() || std::abs(r - out.back()) > 1e-10) out.push_back(r);
    }
}

} // namespace

RootSet poly_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0.0, 0.0)) c.pop_back();
    if (c.size() <= 1) throw std::invalid_argument("root finding needs degree >= 1");

    std::size_t zero_mult = 0;
    while (zero_mult + 1 < c.size() && c[zero_mult] == Complex(0.0, 0.0)) ++zero_mult;
    std::vector<Complex> q(c.begin() + static_cast<std::ptrdiff_t>(zero_mult), c.end());

    const int n = static_cast<int>(q.size()) - 1;
    std::vector<Complex> roots;
    if (n >= 1) {
        std::vector<Complex> monic(q.size());
        for (std::size_t j = 0; j < q.size(); ++j) monic[j] = q[j] / q.back();
        if (n == 1) {
            roots.push_back(-monic[0]);
        } else {
            double u = std::pow(std::max(std::abs(monic[0]), 1e-300), 1.0 / n);
            u = std::clamp(u, 1e-3, 1e3);
            std::vector<Complex> z(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) {
                double ang = kTau * (static_cast<double>(j) / n) + 0.4;
                z[static_cast<std::size_t>(j)] = u * Complex(std::cos(ang), std::sin(ang));
            }
            std::vector<bool> done(static_cast<std::size_t>(n), false);
            bool converged = false;
            for (int it = 0; it < 500 && !converged; ++it) {
                converged = true;
                for (int j = 0; j < n; ++j) {
                    if (done[static_cast<std::size_t>(j)]) continue;
                    Complex zj = z[static_cast<std::size_t>(j)];
                    auto [p, d] = horner2(monic, zj);
                    double sc = eval_scale(monic, std::abs(zj));
                    if (std::abs(p) <= 1e-14 * std::max(1.0, sc)) {
                        done[static_cast<std::size_t>(j)] = true;
                        continue;
                    }
                    converged = false;
                    Complex newton = (d == Complex(0.0, 0.0)) ? Complex(1e-8, 1e-8) : p / d;
                    Complex rep(0.0, 0.0);
                    for (int k = 0; k < n; ++k) {
                        if (k == j) continue;
                        Complex diff = zj - z[static_cast<std::size_t>(k)];
                        if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
                        rep += Complex(1.0, 0.0) / diff;
                    }
                    Complex denom = Complex(1.0, 0.0) - newton * rep;
                    Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
                    z[static_cast<std::size_t>(j)] = zj - step;
                }
            }
            if (!converged) {
                bool all_ok = true;
                for (int j = 0; j < n && all_ok; ++j) {
                    double sc = eval_scale(monic, std::abs(z[static_cast<std::size_t>(j)]));
                    all_ok = std::abs(horner(monic, z[static_cast<std::size_t>(j)])) <=
                             1e-10 * std::max(1.0, sc);
                }
                if (!all_ok) z = companion_roots(monic);
            }
            for (auto& zj : z) {
                for (int it = 0; it < 3; ++it) {
                    auto [p, d] = horner2(monic, zj);
                    if (d == Complex(0.0, 0.0)) break;
                    Complex step = p / d;
                    if (!std::isfinite(std::abs(step)) || std::abs(step) > 0.5 * (1.0 + std::abs(zj)))
                        break;
                    zj -= step;
                }
            }
            roots = std::move(z);
        }
    }

    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    RootSet out;
    for (std::size_t i = 0; i < zero_mult; ++i) {
        if (out.roots.empty() || out.roots.back().value != Complex(0.0, 0.0))
            out.roots.push_back({Complex(0.0, 0.0), 1});
        else
            ++out.roots.back().multiplicity;
    }
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex centroid = roots[i];
        int mult = 1;
        used[i] = true;
        double tol = 1e-7 * (1.0 + std::abs(roots[i]));
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (!used[j] && std::abs(roots[j] - roots[i]) <= tol) {
                centroid += roots[j];
                ++mult;
                used[j] = true;
            }
        }
        out.roots.push_back({centroid / static_cast<double>(mult), mult});
    }

    double coeff_mag = 0.0;
    for (const auto& cj : c) coeff_mag = std::max(coeff_mag, std::abs(cj));
    for (const auto& r : out.roots) {
        double res = std::abs(horner(c, r.value));
        out.max_residual = std::max(out.max_residual, res / std::max(1.0, coeff_mag));
    }
    return out;
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty real-root interval");
    std::vector<double> out;
    real_roots_impl(coeffs, lo, hi, 2, out);
    std::sort(out.begin(), out.end());
    std::vector<double> dedup;
    for (double r : out)
        if (dedup.empty() || std::abs(r - dedup.back()) > 1e-10) dedup.push_back(r);
    return dedup;
}

Complex sylvester_resultant(const std::vector<Complex>& p, const std::vector<Complex>& q) {
    const int m = static_cast<int>(p.size()) - 1;
    const int n = static_cast<int>(q.size()) - 1;
    if (m < 0 || n < 0) throw std::invalid_argument("resultant of empty polynomial");
    if (m == 0 && n == 0) return Complex(1.0, 0.0);
    const int size = m + n;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s(row, row + j) = p[static_cast<std::size_t>(m - j)];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s(n + row, row + j) = q[static_cast<std::size_t>(n - j)];
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(s).determinant();
}

std::vector<Complex> to_coefficients(const LaurentPolynomial& p) {
    if (p.is_zero()) return {};
    if (p.min_exponent() < 0) throw std::domain_error("negative exponent in polynomial context");
    std::vector<Complex> c(static_cast<std::size_t>(p.max_exponent()) + 1, Complex(0.0, 0.0));
    for (const auto& [n, coeff] : p.terms()) c[static_cast<std::size_t>(n)] = coeff;
    return c;
}

} // namespace rosette
