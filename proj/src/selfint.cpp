#include "rosette/selfint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rosette/chebyshev.hpp"
#include "rosette/roots.hpp"
#include "rosette/wave.hpp"

namespace rosette {

namespace {

constexpr double kPi = kTau / 2.0;

void require_polynomial(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.min_exponent() < 0)
        throw std::invalid_argument("angle-split method needs nonnegative exponents");
}

double wrap_unit(double t) {
    t = std::fmod(t, 1.0);
    return t < 0.0 ? t + 1.0 : t;
}

double circle_dist(double u, double v) {
    double d = std::abs(u - v);
    d = std::fmod(d, 1.0);
    return std::min(d, 1.0 - d);
}

// gamma(t) = p(e^{2 pi i t}) together with its t-derivative.
struct Curve {
    LaurentPolynomial poly;
    LaurentPolynomial angular; // coefficients 2 pi i n c_n

    explicit Curve(const LaurentPolynomial& p) : poly(p) {
        LaurentPolynomial::TermMap m;
        for (const auto& [n, c] : p.terms()) m[n] = c * Complex(0.0, kTau * n);
        angular = LaurentPolynomial(std::move(m));
    }
    Complex at(double t) const { return eval_circle(poly, t); }
    Complex vel(double t) const { return eval_circle(angular, t); }
};

// Newton iteration on F(t1, t2) = gamma(t1) - gamma(t2) = 0 (two real
// equations, two unknowns). Leaves the pair unchanged when the Jacobian is
// singular (tangential contact).
void polish_pair(const Curve& curve, double& t1, double& t2, double scale) {
    double u = t1, v = t2;
    for (int it = 0; it < 12; ++it) {
        Complex f = curve.at(u) - curve.at(v);
        if (std::abs(f) <= 1e-15 * scale) break;
        Complex g1 = curve.vel(u), g2 = curve.vel(v);
        double a11 = g1.real(), a12 = -g2.real();
        double a21 = g1.imag(), a22 = -g2.imag();
        double det = a11 * a22 - a12 * a21;
        if (std::abs(det) <= 1e-18 * scale * scale) return;
        double d1 = (-f.real() * a22 + f.imag() * a12) / det;
        double d2 = (f.real() * a21 - f.imag() * a11) / det;
        double cap = 0.01;
        d1 = std::clamp(d1, -cap, cap);
        d2 = std::clamp(d2, -cap, cap);
        u += d1;
        v += d2;
    }
    t1 = wrap_unit(u);
    t2 = wrap_unit(v);
}

struct RawPair {
    double t1, t2, s;
    Complex point;
    int direction_index;
    int sign_branch;
};

bool same_pair(const RawPair& a, const RawPair& b) {
    const double tol = 1e-7;
    bool direct = circle_dist(a.t1, b.t1) <= tol && circle_dist(a.t2, b.t2) <= tol;
    bool swapped = circle_dist(a.t1, b.t2) <= tol && circle_dist(a.t2, b.t1) <= tol;
    return direct || swapped;
}

// Dedupe parameter pairs, enforce the count bound, merge coincident points
// into multiplicity, and sort for determinism.
std::vector<SelfIntersection> finalize_pairs(std::vector<RawPair> raw, double scale,
                                             int degree) {
    std::sort(raw.begin(), raw.end(), [](const RawPair& a, const RawPair& b) {
        if (a.s != b.s) return a.s < b.s;
        if (a.sign_branch != b.sign_branch) return a.sign_branch > b.sign_branch;
        if (a.direction_index != b.direction_index) return a.direction_index < b.direction_index;
        return a.t1 < b.t1;
    });
    std::vector<RawPair> pairs;
    for (const RawPair& cand : raw) {
        bool dup = false;
        for (const RawPair& kept : pairs) {
            if (same_pair(cand, kept)) {
                dup = true;
                break;
            }
        }
        if (!dup) pairs.push_back(cand);
    }
    // The 2(n-1)^2 bound counts ordered parameter pairs (t1, t2) and (t2, t1)
    // separately; `pairs` holds unordered pairs, so the cap is (n-1)^2.
    std::size_t bound = static_cast<std::size_t>(degree - 1) * (degree - 1);
    if (pairs.size() > bound)
        throw std::runtime_error("self-intersection count exceeds the 2(n-1)^2 bound");

    std::vector<SelfIntersection> out;
    double merge_tol = 1e-7 * std::max(1.0, scale);
    for (const RawPair& pr : pairs) {
        bool merged = false;
        for (SelfIntersection& si : out) {
            if (std::abs(si.point - pr.point) <= merge_tol) {
                si.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if (merged) continue;
        SelfIntersection si;
        si.point = pr.point;
        si.t1 = std::min(pr.t1, pr.t2);
        si.t2 = std::max(pr.t1, pr.t2);
        si.s = pr.s;
        si.direction_index = pr.direction_index;
        si.sign_branch = pr.sign_branch;
        si.h_modulus = std::abs(pr.point);
        out.push_back(si);
    }
    return out;
}

// Ordered pair count: every unordered crossing {t1, t2} corresponds to the two
// ordered parameter pairs (t1, t2) and (t2, t1), which is the convention under
// which the 2(n-1)^2 bound is sharp.
int ordered_pair_count(const std::vector<SelfIntersection>& points) {
    int total = 0;
    for (const SelfIntersection& si : points) total += si.multiplicity;
    return 2 * total;
}

// Validated (t1, t2) pair -> RawPair, or false when the candidate fails the
// intersection residual or parameter-separation requirements.
bool make_pair(const Curve& curve, double t1, double t2, double scale, int dir, int branch,
               RawPair& out) {
    polish_pair(curve, t1, t2, scale);
    if (std::abs(curve.at(t1) - curve.at(t2)) > 1e-8 * std::max(1.0, scale)) return false;
    if (circle_dist(t1, t2) < 1e-6) return false;
    out.t1 = t1;
    out.t2 = t2;
    out.s = std::cos(kPi * wrap_unit(t1 - t2));
    out.point = 0.5 * (curve.at(t1) + curve.at(t2));
    out.direction_index = dir;
    out.sign_branch = branch;
    return true;
}

} // namespace

Complex angle_split_g(const LaurentPolynomial& p, double s, Complex x) {
    require_polynomial(p);
    Complex acc{0.0, 0.0};
    for (const auto& [k, c] : p.terms()) {
        if (k == 0) continue;
        acc += c * cheb_U(k - 1, s) * ipow(x, k - 1);
    }
    return acc;
}

Complex angle_split_h(const LaurentPolynomial& p, double s, Complex x) {
    require_polynomial(p);
    Complex acc{0.0, 0.0};
    for (const auto& [k, c] : p.terms()) acc += c * cheb_T(k, s) * ipow(x, k);
    return acc;
}

double angle_split_residual(const LaurentPolynomial& p, double theta, Complex x) {
    require_polynomial(p);
    double s = std::cos(theta);
    Complex lhs = eval(p, std::polar(1.0, theta) * x);
    Complex rhs = angle_split_h(p, s, x) +
                  Complex(0.0, std::sin(theta)) * x * angle_split_g(p, s, x);
    return std::abs(lhs - rhs);
}

SelfIntersectionResult self_intersections_two_term(Complex v, Complex w, int a, int b) {
    if (!(1 <= a && a < b)) throw std::invalid_argument("need 1 <= a < b");
    if (v == Complex(0.0, 0.0) || w == Complex(0.0, 0.0))
        throw std::invalid_argument("coefficients must be nonzero");

    int d = std::gcd(a, b);
    if (d > 1) {
        SelfIntersectionResult res = self_intersections_two_term(v, w, a / d, b / d);
        res.cover_fold = d;
        res.full_coincidence = true;
        for (SelfIntersection& si : res.points) {
            si.t1 /= d;
            si.t2 /= d;
        }
        return res;
    }

    int q = b - a;
    Complex ratio = v / w;
    double phi = std::arg(ratio);
    double m = phi * q / kPi;
    if (std::abs(m - std::round(m)) > 1e-9) {
        // Root equation is not real; the resultant path handles it.
        return self_intersections_general(LaurentPolynomial({{a, v}, {b, w}}));
    }
    double rho = std::abs(ratio);
    double scale = std::abs(v) + std::abs(w);
    Curve curve(LaurentPolynomial({{a, v}, {b, w}}));

    std::vector<RawPair> raw;
    for (int branch : {+1, -1}) {
        // s-roots of U_{b-1}(s) + branch * rho * U_{a-1}(s) = 0.
        std::vector<double> coeffs = cheb_U_coeffs(b - 1);
        std::vector<double> low = cheb_U_coeffs(a - 1);
        for (std::size_t k = 0; k < low.size(); ++k) coeffs[k] += branch * rho * low[k];
        for (double s : real_roots(coeffs, -1.0, 1.0)) {
            // Recurrence-based Newton polish (the monomial form used for
            // isolation degrades for large b).
            for (int it = 0; it < 6 && std::abs(s) < 1.0 - 1e-12; ++it) {
                double f = cheb_U(b - 1, s) + branch * rho * cheb_U(a - 1, s);
                double denom = s * s - 1.0;
                double df = (b * cheb_T(b, s) - s * cheb_U(b - 1, s)) / denom +
                            branch * rho * (a * cheb_T(a, s) - s * cheb_U(a - 1, s)) / denom;
                if (std::abs(df) < 1e-14) break;
                double next = s - f / df;
                if (std::abs(next - s) > 1e-2) break;
                s = next;
            }
            if (std::abs(s) >= 1.0 - 1e-9) continue; // parametrization singularity
            if (std::abs(cheb_U(a - 1, s)) <= 1e-9 * a && std::abs(cheb_U(b - 1, s)) <= 1e-9 * b)
                continue; // common zero of both kernels: no intersection
            double theta = std::acos(std::clamp(s, -1.0, 1.0));
            for (int j = 0; j < q; ++j) {
                double xphase = (phi + (branch == 1 ? 0.0 : kPi) + kTau * j) / q;
                double t1 = wrap_unit((theta + xphase) / kTau);
                double t2 = wrap_unit((xphase - theta) / kTau);
                RawPair pr;
                if (make_pair(curve, t1, t2, scale, j, branch, pr)) raw.push_back(pr);
            }
        }
    }

    SelfIntersectionResult result;
    result.points = finalize_pairs(std::move(raw), scale, b);
    result.pair_count = ordered_pair_count(result.points);
    return result;
}

SelfIntersectionResult self_intersections_general(const LaurentPolynomial& p) {
    require_polynomial(p);
    if (p.max_exponent() < 2) throw std::invalid_argument("degree must be at least 2");

    long long d = support_gcd(p);
    if (d > 1) {
        LaurentPolynomial::TermMap reindexed;
        for (const auto& [k, c] : p.terms()) reindexed[static_cast<int>(k / d)] = c;
        LaurentPolynomial primitive(std::move(reindexed));
        SelfIntersectionResult res;
        if (primitive.max_exponent() >= 2) res = self_intersections_general(primitive);
        res.cover_fold = static_cast<int>(d);
        res.full_coincidence = true;
        for (SelfIntersection& si : res.points) {
            si.t1 /= static_cast<double>(d);
            si.t2 /= static_cast<double>(d);
        }
        return res;
    }

    const int n = p.max_exponent();
    std::vector<Complex> c = to_coefficients(p); // c[0..n]
    double scale = coefficient_scale(p);
    Curve curve(p);

    // g(s, x) = sum_{k=0}^{n-1} c[k+1] U_k(s) x^k; g* is its conjugate-reversal.
    auto g_coeffs = [&](double s) {
        std::vector<Complex> gc(n);
        for (int k = 0; k < n; ++k) gc[k] = c[k + 1] * cheb_U(k, s);
        return gc;
    };

    // Resultant in x of (g, g*), sampled at Chebyshev nodes.
    const int m_nodes = 4 * n * n + 1;
    std::vector<double> r_vals(m_nodes);
    double max_abs = 0.0, max_imag = 0.0;
    for (int j = 0; j < m_nodes; ++j) {
        double s = std::cos(kPi * (j + 0.5) / m_nodes);
        std::vector<Complex> gc = g_coeffs(s);
        std::vector<Complex> gs(gc.size());
        for (int k = 0; k < n; ++k) gs[k] = std::conj(gc[n - 1 - k]);
        Complex r = sylvester_resultant(gc, gs);
        r_vals[j] = r.real();
        max_abs = std::max(max_abs, std::abs(r));
        max_imag = std::max(max_imag, std::abs(r.imag()));
    }
    if (max_abs == 0.0)
        throw std::runtime_error("intersection resultant vanished identically");
    if (max_imag > 1e-8 * max_abs)
        throw std::runtime_error("intersection resultant is not real");

    // Chebyshev interpolation coefficients.
    std::vector<double> a_coef(m_nodes);
    for (int k = 0; k < m_nodes; ++k) {
        double acc = 0.0;
        for (int j = 0; j < m_nodes; ++j)
            acc += r_vals[j] * std::cos(k * kPi * (j + 0.5) / m_nodes);
        a_coef[k] = 2.0 * acc / m_nodes;
    }
    a_coef[0] *= 0.5;
    double a_max = 0.0;
    for (double a : a_coef) a_max = std::max(a_max, std::abs(a));
    const int degree_bound = 2 * (n - 1) * (n - 1);
    for (int k = degree_bound + 1; k < m_nodes; ++k) {
        if (std::abs(a_coef[k]) > 1e-8 * a_max)
            throw std::runtime_error("resultant interpolation degree bound exceeded");
    }
    for (double& a : a_coef) a /= a_max;
    double coef_sum = 0.0;
    for (double a : a_coef) coef_sum += std::abs(a);

    auto clenshaw = [&](double s) {
        double b1 = 0.0, b2 = 0.0;
        for (int k = m_nodes - 1; k >= 1; --k) {
            double b0 = 2.0 * s * b1 - b2 + a_coef[k];
            b2 = b1;
            b1 = b0;
        }
        return a_coef[0] + s * b1 - b2;
    };

    // Candidate s values: sign changes and near-zero local minima of |R|.
    std::vector<double> candidates;
    const int grid = 16384;
    std::vector<double> gs_vals(grid + 1), gs_pts(grid + 1);
    for (int i = 0; i <= grid; ++i) {
        gs_pts[i] = -1.0 + 2.0 * i / grid;
        gs_vals[i] = clenshaw(gs_pts[i]);
    }
    for (int i = 0; i < grid; ++i) {
        double f0 = gs_vals[i], f1 = gs_vals[i + 1];
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = gs_pts[i], hi = gs_pts[i + 1], flo = f0;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi), fm = clenshaw(mid);
                if ((fm < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            candidates.push_back(0.5 * (lo + hi));
        }
    }
    for (int i = 1; i < grid; ++i) {
        double f = std::abs(gs_vals[i]);
        if (f <= std::abs(gs_vals[i - 1]) && f <= std::abs(gs_vals[i + 1]) &&
            f <= 1e-5 * coef_sum) {
            // Even-multiplicity roots (several x-rays sharing one s) leave no
            // sign change; refine the local minimum of |R| instead.
            double lo = gs_pts[i - 1], hi = gs_pts[i + 1];
            for (int it = 0; it < 200; ++it) {
                double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
                if (std::abs(clenshaw(m1)) <= std::abs(clenshaw(m2)))
                    hi = m2;
                else
                    lo = m1;
            }
            double s = 0.5 * (lo + hi);
            if (std::abs(clenshaw(s)) <= 1e-5 * coef_sum) candidates.push_back(s);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<double> s_list;
    for (double s : candidates) {
        if (std::abs(s) >= 1.0 - 1e-9) continue;
        if (s_list.empty() || s - s_list.back() > 1e-9) s_list.push_back(s);
    }

    std::vector<RawPair> raw;
    for (double s : s_list) {
        std::vector<Complex> gc = g_coeffs(s);
        std::vector<Complex> stripped = gc;
        double top = 0.0;
        for (const Complex& gk : stripped) top = std::max(top, std::abs(gk));
        while (stripped.size() > 1 && std::abs(stripped.back()) <= 1e-13 * top)
            stripped.pop_back();
        if (stripped.size() < 2) continue;
        RootSet xr = poly_roots(stripped);
        for (const auto& root : xr.roots) {
            Complex x = root.value;
            double mod = std::abs(x);
            // Loose gate only: near even-multiplicity resultant roots the
            // refined s can be off by ~1e-2, which displaces |x| by a similar
            // amount. The Newton polish inside make_pair restores full
            // precision and its residual check rejects spurious seeds.
            if (std::abs(mod - 1.0) > 3e-2) continue;
            x /= mod;
            double theta = std::acos(std::clamp(s, -1.0, 1.0));
            double xphase = std::arg(x);
            double t1 = wrap_unit((theta + xphase) / kTau);
            double t2 = wrap_unit((xphase - theta) / kTau);
            RawPair pr;
            if (make_pair(curve, t1, t2, scale, -1, 0, pr)) raw.push_back(pr);
        }
    }

    SelfIntersectionResult result;
    result.points = finalize_pairs(std::move(raw), scale, n);
    result.pair_count = ordered_pair_count(result.points);
    return result;
}

SelfIntersectionResult self_intersections_wave(int a, int b, Complex c_a, Complex c_b,
                                               double c, double t) {
    if (!(1 <= a && a < b)) throw std::invalid_argument("need 1 <= a < b");
    double fa = std::cos(kTau * c * a * t);
    double fb = std::cos(kTau * c * b * t);
    if (std::abs(fa) <= 1e-12 || std::abs(fb) <= 1e-12)
        throw DegenerateTimeError("a coefficient factor died at this time");
    return self_intersections_two_term(c_a * fa, c_b * fb, a, b);
}

std::vector<Cusp> cusps(const LaurentPolynomial& p) {
    if (p.is_zero() || (p.min_exponent() == 0 && p.max_exponent() == 0))
        throw std::invalid_argument("cusps need a non-constant curve");
    LaurentPolynomial dp = derivative(p);
    LaurentPolynomial ddp = derivative(dp);
    double scale = coefficient_scale(p);

    int mu = std::max(0, -dp.min_exponent());
    LaurentPolynomial::TermMap shifted;
    for (const auto& [k, ck] : dp.terms()) shifted[k + mu] = ck;
    LaurentPolynomial shifted_dp(std::move(shifted));
    std::vector<Cusp> out;
    if (shifted_dp.max_exponent() == 0) return out; // derivative never vanishes

    Curve dcurve(dp);
    RootSet roots = poly_roots(to_coefficients(shifted_dp));
    for (const auto& root : roots.roots) {
        double mod = std::abs(root.value);
        if (mod == 0.0 || std::abs(mod - 1.0) > 1e-8) continue;
        double t = wrap_unit(std::arg(root.value) / kTau);
        // Minimize |p'(e^{2 pi i t})|^2 along the circle.
        for (int it = 0; it < 8; ++it) {
            Complex f = dcurve.at(t);
            Complex df = dcurve.vel(t);
            double g1 = 2.0 * (std::conj(f) * df).real();
            double g2 = 2.0 * std::norm(df);
            if (g2 <= 1e-30) break;
            double step = std::clamp(g1 / g2, -1e-3, 1e-3);
            t = wrap_unit(t - step);
        }
        if (std::abs(eval_circle(dp, t)) > 1e-9 * scale) continue;
        if (std::abs(eval_circle(ddp, t)) <= 1e-6 * scale) continue;
        out.push_back(Cusp{t, eval_circle(p, t)});
    }
    std::sort(out.begin(), out.end(), [](const Cusp& a, const Cusp& b) { return a.t < b.t; });
    std::vector<Cusp> dedup;
    for (const Cusp& cu : out) {
        if (dedup.empty() || cu.t - dedup.back().t > 1e-10) dedup.push_back(cu);
    }
    return dedup;
}

PointMultiplicity point_multiplicity(const LaurentPolynomial& p, Complex w0) {
    LaurentPolynomial::TermMap diff(p.terms().begin(), p.terms().end());
    diff[0] -= w0;
    LaurentPolynomial q(std::move(diff));
    if (q.is_zero()) throw std::invalid_argument("curve is constantly equal to the point");

    PointMultiplicity result;
    result.ordinary = true;
    int mu = std::max(0, -q.min_exponent());
    LaurentPolynomial::TermMap shifted;
    for (const auto& [k, ck] : q.terms()) shifted[k + mu] = ck;
    LaurentPolynomial sq(std::move(shifted));
    if (sq.max_exponent() == 0) return result;

    LaurentPolynomial dp = derivative(p);
    std::vector<double> tangents; // direction of the curve's tangent, mod pi
    double dscale = std::max(1.0, coefficient_scale(dp));
    RootSet roots = poly_roots(to_coefficients(sq));
    for (const auto& root : roots.roots) {
        double mod = std::abs(root.value);
        if (mod == 0.0 || std::abs(mod - 1.0) > 1e-8) continue;
        double t = wrap_unit(std::arg(root.value) / kTau);
        result.count += root.multiplicity;
        result.parameters.push_back(t);
        if (root.multiplicity > 1) result.ordinary = false;
        // Velocity of t -> p(e^{2 pi i t}) is 2 pi i e^{2 pi i t} p'(e^{2 pi i t});
        // the crossing is ordinary only if each branch has a genuine tangent
        // line and no two branches share one (direction compared mod pi).
        Complex vel = Complex(0.0, 1.0) * std::polar(1.0, kTau * t) * eval_circle(dp, t);
        if (std::abs(vel) <= 1e-9 * dscale) {
            result.ordinary = false;
        } else {
            double dir = std::arg(vel);
            dir -= kPi * std::floor(dir / kPi);
            tangents.push_back(dir);
        }
    }
    std::sort(result.parameters.begin(), result.parameters.end());
    for (std::size_t i = 0; i < tangents.size() && result.ordinary; ++i) {
        for (std::size_t j = i + 1; j < tangents.size(); ++j) {
            double diff = std::abs(tangents[i] - tangents[j]);
            diff = std::min(diff, kPi - diff);
            if (diff <= 1e-8) {
                result.ordinary = false;
                break;
            }
        }
    }
    return result;
}

} // namespace rosette
