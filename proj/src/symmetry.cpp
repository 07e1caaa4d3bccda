#include "rosette/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rosette/roots.hpp"

namespace rosette {

namespace {

std::vector<int> support(const LaurentPolynomial& p) {
    std::vector<int> out;
    out.reserve(p.term_count());
    for (const auto& [n, c] : p.terms()) out.push_back(n);
    return out;
}

void require_two_terms(const LaurentPolynomial& p) {
    if (p.term_count() < 2)
        throw std::invalid_argument("symmetry analysis requires at least two terms");
}

double wrap_unit(double x) {
    double f = x - std::floor(x);
    return f >= 1.0 ? f - 1.0 : f;
}

// gamma(t) together with filtered derivative polynomials for Newton
// projection onto the curve.
struct CurveFrame {
    const LaurentPolynomial* p;
    LaurentPolynomial d1, d2; // coefficients (2 pi i n) c_n and (2 pi i n)^2 c_n

    explicit CurveFrame(const LaurentPolynomial& poly) : p(&poly) {
        LaurentPolynomial::TermMap m1, m2;
        for (const auto& [n, c] : poly.terms()) {
            Complex w = Complex(0.0, kTau * n);
            if (n != 0) {
                m1[n] = w * c;
                m2[n] = w * w * c;
            }
        }
        d1 = LaurentPolynomial(std::move(m1));
        d2 = LaurentPolynomial(std::move(m2));
    }

    // Distance from x to the curve: nearest of the precomputed samples, then
    // Newton steps on the derivative of |gamma(t) - x|^2.
    double distance(Complex x, const std::vector<CurveSample>& samples,
                    std::size_t nearest_index) const {
        double t = samples[nearest_index].t;
        double best = std::abs(samples[nearest_index].point - x);
        for (int it = 0; it < 12; ++it) {
            Complex gamma = eval_circle(*p, t);
            Complex g1 = eval_circle(d1, t);
            Complex g2 = eval_circle(d2, t);
            Complex diff = gamma - x;
            double f1 = 2.0 * (diff.real() * g1.real() + diff.imag() * g1.imag());
            double f2 = 2.0 * (g1.real() * g1.real() + g1.imag() * g1.imag()) +
                        2.0 * (diff.real() * g2.real() + diff.imag() * g2.imag());
            if (std::abs(f2) < 1e-30) break;
            double step = f1 / f2;
            step = std::clamp(step, -1e-2, 1e-2);
            t -= step;
            double d = std::abs(eval_circle(*p, t) - x);
            if (d < best) best = d;
            if (std::abs(step) < 1e-16) break;
        }
        return best;
    }
};

// Spatial hash over curve samples for nearest-sample queries.
struct SampleGrid {
    double cell = 1.0;
    std::unordered_map<long long, std::vector<std::size_t>> bins;
    const std::vector<CurveSample>* samples = nullptr;

    static long long key(long long ix, long long iy) { return ix * 73856093ll ^ iy * 19349663ll; }

    explicit SampleGrid(const std::vector<CurveSample>& s, double scale) : samples(&s) {
        cell = std::max(scale / 64.0, 1e-12);
        for (std::size_t j = 0; j < s.size(); ++j) {
            long long ix = static_cast<long long>(std::floor(s[j].point.real() / cell));
            long long iy = static_cast<long long>(std::floor(s[j].point.imag() / cell));
            bins[key(ix, iy)].push_back(j);
        }
    }

    std::size_t nearest(Complex x) const {
        long long ix = static_cast<long long>(std::floor(x.real() / cell));
        long long iy = static_cast<long long>(std::floor(x.imag() / cell));
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (int ring = 0; ring < 3 && best_d == std::numeric_limits<double>::infinity(); ++ring) {
            for (long long dx = -ring; dx <= ring; ++dx)
                for (long long dy = -ring; dy <= ring; ++dy) {
                    if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
                    auto it = bins.find(key(ix + dx, iy + dy));
                    if (it == bins.end()) continue;
                    for (std::size_t j : it->second) {
                        double d = std::abs((*samples)[j].point - x);
                        if (d < best_d) {
                            best_d = d;
                            best = j;
                        }
                    }
                }
        }
        if (best_d == std::numeric_limits<double>::infinity()) {
            for (std::size_t j = 0; j < samples->size(); ++j) {
                double d = std::abs((*samples)[j].point - x);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
        }
        return best;
    }
};

// True when rotating the image by 2*pi/order maps it onto itself within
// tol, measured by projecting rotated probe points back onto the curve.
bool rotation_fits(const LaurentPolynomial& p, int order, const CurveFrame& frame,
                   const std::vector<CurveSample>& samples, const SampleGrid& grid, double tol) {
    Complex rot = std::polar(1.0, kTau / order);
    const int probes = 257;
    for (int i = 0; i < probes; ++i) {
        double t = (i + 0.31) / probes;
        Complex x = rot * eval_circle(p, t);
        double d = frame.distance(x, samples, grid.nearest(x));
        if (d > tol) return false;
    }
    return true;
}

struct IndependenceClass {
    long long k = 1; // 1 for the rational class, else the square-free radicand
    bool opaque = false;
    double opaque_value = 0.0;
};

} // namespace

int exponent_gcd_m(const LaurentPolynomial& p) {
    require_two_terms(p);
    auto exps = support(p);
    long long g = 0;
    for (std::size_t j = 1; j < exps.size(); ++j)
        g = std::gcd(g, static_cast<long long>(exps[j]) - exps[j - 1]);
    return static_cast<int>(g);
}

std::optional<std::pair<int, int>> symmetry_type(const LaurentPolynomial& p) {
    require_two_terms(p);
    int m = exponent_gcd_m(p);
    if (m < 2) return std::nullopt;
    int a1 = p.min_exponent();
    if (std::gcd(static_cast<long long>(a1), static_cast<long long>(m)) != 1) return std::nullopt;
    int k = ((a1 % m) + m) % m;
    return std::make_pair(k, m);
}

int rotation_order(const LaurentPolynomial& p) {
    require_two_terms(p);
    int m = exponent_gcd_m(p);
    if (m < 1) return 1;
    long long g = std::gcd(static_cast<long long>(p.min_exponent()), static_cast<long long>(m));
    return static_cast<int>(m / g);
}

MirrorAxisSet mirror_axes(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("mirror_axes requires a nonzero polynomial");
    MirrorAxisSet out;
    if (p.term_count() == 1) {
        out.continuum = true;
        return out;
    }
    auto it = p.terms().begin();
    auto [n1, c1] = *it;
    ++it;
    auto [n2, c2] = *it;
    int d = n2 - n1;
    // e^(2 pi i (n1 - n2) beta) = conj(c1) c2 / (c1 conj(c2)); unit modulus by
    // construction, so only the argument matters.
    Complex ratio = (std::conj(c1) * c2) / (c1 * std::conj(c2));
    double rho = std::arg(ratio) / kTau; // (n1 - n2) beta = rho (mod 1)
    for (int j = 0; j < d; ++j) {
        double beta = wrap_unit(-(rho + j) / d);
        Complex phase = c1 * std::polar(1.0, kTau * n1 * beta) / std::conj(c1);
        double sigma = wrap_unit(std::arg(phase) / kTau);
        bool ok = true;
        for (const auto& [n, c] : p.terms()) {
            Complex lhs = c * std::polar(1.0, kTau * n * beta);
            Complex rhs = std::polar(1.0, kTau * sigma) * std::conj(c);
            if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(c))) {
                ok = false;
                break;
            }
        }
        if (ok) out.axes.push_back({beta, sigma});
    }
    // The image isometry w -> e^(2 pi i sigma) conj(w) is determined by sigma
    // alone; domain phases differing by 1/m can realize the same mirror.
    std::sort(out.axes.begin(), out.axes.end(), [](const MirrorAxis& a, const MirrorAxis& b) {
        return a.sigma != b.sigma ? a.sigma < b.sigma : a.beta < b.beta;
    });
    std::vector<MirrorAxis> unique;
    for (const auto& axis : out.axes) {
        bool dup = false;
        for (const auto& kept : unique) {
            double diff = std::abs(axis.sigma - kept.sigma);
            diff = std::min(diff, 1.0 - diff);
            if (diff < 1e-9) dup = true;
        }
        if (!dup) unique.push_back(axis);
    }
    out.axes = std::move(unique);
    std::sort(out.axes.begin(), out.axes.end(),
              [](const MirrorAxis& a, const MirrorAxis& b) { return a.beta < b.beta; });
    return out;
}

SymmetryReport classify_group(const LaurentPolynomial& p) {
    require_two_terms(p);
    SymmetryReport report;
    report.rotation_order = rotation_order(p);
    report.symmetry_type = symmetry_type(p);
    report.mirrors = mirror_axes(p);
    if (!report.mirrors.axes.empty())
        report.classification = GroupClass::Dihedral;
    else if (report.rotation_order >= 2)
        report.classification = GroupClass::Cyclic;
    else
        report.classification = GroupClass::Trivial;

    // Scan image rotations of order 2..64; exponent arithmetic only ever
    // certifies a subgroup of the full isometry group.
    const int n_samples = 8192;
    auto samples = sample(p, n_samples);
    double scale = coefficient_scale(p);
    CurveFrame frame(p);
    SampleGrid grid(samples, std::max(scale, 1e-6));
    double tol = 1e-6 * std::max(scale, 1e-6);
    bool extra = false;
    for (int order = 2; order <= 64 && !extra; ++order) {
        if (report.rotation_order % order == 0) continue; // already certified
        if (rotation_fits(p, order, frame, samples, grid, tol)) extra = true;
    }
    report.verified_maximal = !extra;
    return report;
}

bool zero_pole_orbit_check(const LaurentPolynomial& p, const SymmetryReport& report) {
    require_two_terms(p);
    int a_min = p.min_exponent();
    LaurentPolynomial::TermMap shifted;
    for (const auto& [n, c] : p.terms()) shifted[n - a_min] = c;
    RootSet roots = poly_roots(to_coefficients(LaurentPolynomial(std::move(shifted))));

    auto permutes = [&roots](auto&& map) {
        std::vector<bool> used(roots.roots.size(), false);
        for (const auto& r : roots.roots) {
            Complex image = map(r.value);
            bool matched = false;
            for (std::size_t j = 0; j < roots.roots.size(); ++j) {
                if (used[j] || roots.roots[j].multiplicity != r.multiplicity) continue;
                if (std::abs(roots.roots[j].value - image) <=
                    1e-8 * (1.0 + std::abs(image))) {
                    used[j] = true;
                    matched = true;
                    break;
                }
            }
            if (!matched) return false;
        }
        return true;
    };

    if (report.rotation_order >= 2) {
        Complex w = std::polar(1.0, kTau / report.rotation_order);
        if (!permutes([w](Complex z) { return w * z; })) return false;
    }
    for (const auto& axis : report.mirrors.axes) {
        Complex w = std::polar(1.0, kTau * axis.beta);
        if (!permutes([w](Complex z) { return w * std::conj(z); })) return false;
    }
    // The pole at the origin (present when a_min < 0) is fixed by every
    // rotation and mirror through the origin; nothing further to verify.
    return true;
}

bool conj_symmetry_check(const ExponentialSum& g, int samples) {
    if (samples < 1) throw std::invalid_argument("sample count must be positive");
    std::vector<ExponentialSum::Term> conj_terms;
    for (const auto& term : g.terms()) conj_terms.push_back({std::conj(term.weight), term.exponent});
    ExponentialSum conj_sum(std::move(conj_terms));
    double tol = 1e-10 * std::max(1.0, g.weight_magnitude_sum());
    for (int j = 0; j < samples; ++j) {
        double t = static_cast<double>(j) / samples;
        if (std::abs(std::conj(g.eval(t)) - conj_sum.eval(-t)) > tol) return false;
    }
    return true;
}

AnnulusEstimate annulus_bounds(const ExponentialSum& g, double horizon, int samples) {
    if (horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    AnnulusEstimate est;
    est.horizon = horizon;

    const auto& terms = g.terms();
    if (terms.empty()) return est;

    bool common_phase = true;
    for (const auto& term : terms) {
        Complex r = term.weight * std::conj(terms.front().weight);
        if (std::abs(r.imag()) > 1e-12 * std::abs(r) || r.real() <= 0.0) {
            common_phase = false;
            break;
        }
    }
    Complex weight_sum = 0.0;
    for (const auto& term : terms) weight_sum += term.weight;

    if (terms.size() == 1) {
        est.r_min = est.r_max = std::abs(terms.front().weight);
        est.r_max_exact = true;
        est.analytic_r_min = est.r_min;
        return est;
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int j = 0; j < samples; ++j) {
        double t = horizon * j / (samples - 1);
        double r = std::abs(g.eval(t));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    est.r_min = lo;
    if (common_phase) {
        est.r_max = std::abs(weight_sum);
        est.r_max_exact = true;
    } else {
        est.r_max = hi;
    }
    if (terms.size() == 2) {
        est.analytic_r_min =
            std::abs(std::abs(terms[0].weight) - std::abs(terms[1].weight));
    }
    return est;
}

AnnulusEstimate density_coverage(const ExponentialSum& g, double horizon, int radial_cells,
                                 int angular_cells) {
    if (horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
    if (radial_cells < 1 || angular_cells < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    const auto& terms = g.terms();
    if (terms.empty()) throw std::invalid_argument("empty exponential sum");

    // Rational independence: at most one exponent in the rational class and
    // in each sqrt(k) class; opaque exponents need the assertion flag.
    std::vector<IndependenceClass> seen;
    for (const auto& term : terms) {
        const ExactReal& a = term.exponent;
        if (a.is_opaque()) {
            if (!a.independence_asserted())
                throw std::invalid_argument(
                    "cannot establish rational independence of a numeric exponent; "
                    "it must be asserted");
            seen.push_back({1, true, a.value()});
            continue;
        }
        if (a.rational_part().is_zero() && a.is_rational())
            throw std::invalid_argument("zero exponent is rationally dependent");
        IndependenceClass cls;
        cls.k = a.is_rational() ? 1 : a.radicand();
        for (const auto& other : seen) {
            if (!other.opaque && other.k == cls.k)
                throw std::invalid_argument(
                    "exponents are rationally dependent; density requires independence");
        }
        seen.push_back(cls);
    }

    AnnulusEstimate est;
    est.horizon = horizon;
    est.radial_cells = radial_cells;
    est.angular_cells = angular_cells;

    double r_lo, r_hi;
    if (terms.size() == 1) {
        r_lo = r_hi = std::abs(terms.front().weight);
    } else if (terms.size() == 2) {
        double v = std::abs(terms[0].weight), w = std::abs(terms[1].weight);
        r_lo = std::abs(v - w);
        r_hi = v + w;
        est.analytic_r_min = r_lo;
        est.r_max_exact = true;
    } else {
        AnnulusEstimate bounds = annulus_bounds(g, horizon, 8192);
        r_lo = bounds.r_min;
        r_hi = bounds.r_max;
        est.r_max_exact = bounds.r_max_exact;
        if (est.r_max_exact) r_hi = bounds.r_max;
    }
    est.r_min = r_lo;
    est.r_max = r_hi;

    double dr = (r_hi - r_lo) / radial_cells;
    double dtheta = kTau / angular_cells;
    if (r_hi - r_lo <= 1e-12 * std::max(1.0, r_hi)) {
        // Degenerate annulus (a circle): only the angular direction matters.
        radial_cells = 1;
        est.radial_cells = 1;
        dr = 0.0;
    }

    double speed = g.max_speed();
    double arc = std::max(r_lo, dr > 0.0 ? dr : r_hi) * dtheta;
    double cell = dr > 0.0 ? std::min(dr, arc) : arc;
    if (cell <= 0.0) cell = std::max(r_hi, 1.0) * dtheta;
    double dt = speed > 0.0 ? 0.5 * cell / speed : horizon;

    std::vector<char> visited(static_cast<std::size_t>(radial_cells) * angular_cells, 0);
    long long steps = static_cast<long long>(std::ceil(horizon / dt));
    for (long long j = 0; j <= steps; ++j) {
        double t = std::min(horizon, j * dt);
        Complex z = g.eval(t);
        double r = std::abs(z);
        int ri = 0;
        if (dr > 0.0) {
            ri = static_cast<int>(std::floor((r - r_lo) / dr));
            ri = std::clamp(ri, 0, radial_cells - 1);
        }
        double theta = std::arg(z);
        if (theta < 0.0) theta += kTau;
        int ai = static_cast<int>(std::floor(theta / dtheta));
        ai = std::clamp(ai, 0, angular_cells - 1);
        visited[static_cast<std::size_t>(ri) * angular_cells + ai] = 1;
    }
    long long count = std::count(visited.begin(), visited.end(), char(1));
    est.coverage_fraction = static_cast<double>(count) / static_cast<double>(visited.size());
    return est;
}

} // namespace rosette
