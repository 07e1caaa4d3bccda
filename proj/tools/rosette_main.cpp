// Command-line front end: expression analysis, SVG/CSV rendering, wave-flow
// evolution, winding, self-intersection, annulus-density, and implicit-variety
// reports. Exit codes: 0 success, 1 expression/usage parse error, 2 numeric
// failure during analysis or serialization.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "rosette/parse.hpp"
#include "rosette/render.hpp"
#include "rosette/report.hpp"
#include "rosette/roots.hpp"
#include "rosette/selfint.hpp"
#include "rosette/symmetry.hpp"
#include "rosette/variety.hpp"
#include "rosette/wave.hpp"
#include "rosette/winding.hpp"

namespace {

using namespace rosette;

bool use_color() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(fileno(stderr)) != 0;
}

void print_error(const std::string& message) {
    if (use_color())
        std::fprintf(stderr, "\x1b[31merror:\x1b[0m %s\n", message.c_str());
    else
        std::fprintf(stderr, "error: %s\n", message.c_str());
}

void print_diagnostic(const std::string& text, const ParseDiagnostic& diag) {
    std::string msg = diag.message;
    if (!diag.expected.empty()) msg += " (expected " + diag.expected + ")";
    print_error("at offset " + std::to_string(diag.offset) + ": " + msg);
    std::fprintf(stderr, "  %s\n  %*s^\n", text.c_str(), static_cast<int>(diag.offset), "");
}

int write_output(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return 0;
    }
    std::FILE* f = std::fopen(output_path.c_str(), "wb");
    if (f == nullptr) {
        print_error("cannot open output file: " + output_path);
        return 2;
    }
    std::fwrite(payload.data(), 1, payload.size(), f);
    std::fclose(f);
    return 0;
}

struct Input {
    std::string text;
    std::optional<LaurentPolynomial> poly;
    std::optional<ExponentialSum> sum;
};

// Expressions containing the e(...) atom are exponential sums; everything
// else parses under the Laurent grammar.
std::optional<Input> parse_input(const std::string& text) {
    Input in;
    in.text = text;
    if (text.find("e(") != std::string::npos) {
        Parsed<ExponentialSum> parsed = parse_expsum(text);
        if (!parsed) {
            print_diagnostic(text, *parsed.diagnostic);
            return std::nullopt;
        }
        in.sum = *parsed;
        return in;
    }
    Parsed<LaurentPolynomial> parsed = parse_laurent(text);
    if (!parsed) {
        print_diagnostic(text, *parsed.diagnostic);
        return std::nullopt;
    }
    in.poly = *parsed;
    return in;
}

ExponentialSum as_exponential_sum(const Input& in) {
    if (in.sum) return *in.sum;
    return to_exponential_sum(*in.poly);
}

// Two-term decomposition v z^a + w z^b with 1 <= a < b, when p has that shape.
struct TwoTerm {
    int a = 0, b = 0;
    Complex v, w;
};
std::optional<TwoTerm> two_term_shape(const LaurentPolynomial& p) {
    if (p.is_zero() || p.terms().size() != 2) return std::nullopt;
    auto it = p.terms().begin();
    TwoTerm tt;
    tt.a = it->first;
    tt.v = it->second;
    ++it;
    tt.b = it->first;
    tt.w = it->second;
    if (!(1 <= tt.a && tt.a < tt.b)) return std::nullopt;
    return tt;
}

Json selfint_or_null(const LaurentPolynomial& p) {
    if (p.is_zero() || p.min_exponent() < 0 || p.max_exponent() < 2) return nullptr;
    if (auto tt = two_term_shape(p))
        return selfint_json(self_intersections_two_term(tt->v, tt->w, tt->a, tt->b));
    return selfint_json(self_intersections_general(p));
}

Json cusps_or_empty(const LaurentPolynomial& p) {
    if (p.is_zero() || (p.min_exponent() == 0 && p.max_exponent() == 0)) return Json::array();
    return cusps_json(cusps(p));
}

std::vector<double> mirror_axis_angles(const SymmetryReport& report) {
    std::vector<double> angles;
    if (report.mirrors.continuum) return angles;
    // The reflection w -> e^(2 pi i sigma) conj(w) fixes the line at angle
    // pi * sigma radians.
    for (const MirrorAxis& axis : report.mirrors.axes)
        angles.push_back(kTau / 2.0 * axis.sigma);
    return angles;
}

std::vector<CurveSample> sample_input(const Input& in, int samples, double aperiodic_horizon) {
    if (in.poly) return sample(*in.poly, samples);
    ExponentialSum g = *in.sum;
    PeriodicityResult pr = periodicity_check(g);
    double horizon = pr.kind == PeriodicityResult::Kind::Periodic ? pr.period_value()
                                                                  : aperiodic_horizon;
    std::vector<CurveSample> out;
    out.reserve(samples);
    for (int j = 0; j < samples; ++j) {
        double t = horizon * j / samples;
        out.push_back({t, g.eval(t)});
    }
    return out;
}

// ---------------------------------------------------------------- analyze --

int cmd_analyze(const Input& in, int samples, const std::string& output, bool timing) {
    auto start = std::chrono::steady_clock::now();
    Json report = report_envelope("analyze", in.text);
    if (in.poly) {
        const LaurentPolynomial& p = *in.poly;
        report["kind"] = "laurent";
        report["canonical"] = format(p);
        SymmetryReport sym = classify_group(p);
        report["symmetry"] = symmetry_json(sym);
        try {
            report["zero_pole_orbit"] = zero_pole_orbit_check(p, sym);
        } catch (const std::invalid_argument&) {
            report["zero_pole_orbit"] = nullptr;
        }
        report["cusps"] = cusps_or_empty(p);
        report["self_intersections"] = selfint_or_null(p);
    } else {
        const ExponentialSum& g = *in.sum;
        report["kind"] = "exponential_sum";
        report["canonical"] = format(g);
        PeriodicityResult pr = periodicity_check(g);
        Json pj;
        switch (pr.kind) {
        case PeriodicityResult::Kind::Periodic: pj["kind"] = "periodic"; break;
        case PeriodicityResult::Kind::Aperiodic: pj["kind"] = "aperiodic"; break;
        case PeriodicityResult::Kind::Indeterminate: pj["kind"] = "indeterminate"; break;
        case PeriodicityResult::Kind::Constant: pj["kind"] = "constant"; break;
        }
        pj["period"] = pr.period ? Json(pr.period_value()) : Json(nullptr);
        pj["period_exact"] = pr.period ? Json(pr.period->str()) : Json(nullptr);
        report["periodicity"] = std::move(pj);
        report["conj_symmetry"] = conj_symmetry_check(g, samples);
        report["annulus_bounds"] = annulus_json(annulus_bounds(g, 100.0, samples));
    }
    if (timing) {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        report["timing"] = Json{{"seconds", secs}};
    }
    return write_output(report_json(report), output);
}

// ----------------------------------------------------------------- render --

int cmd_render(const Input& in, int samples, const std::string& fmt, const std::string& output) {
    std::vector<CurveSample> pts = sample_input(in, samples, 100.0);
    if (fmt == "csv") return write_output(export_csv(pts), output);

    RenderFrame frame;
    frame.points.reserve(pts.size());
    for (const CurveSample& s : pts) frame.points.push_back(s.point);
    if (in.poly) {
        const LaurentPolynomial& p = *in.poly;
        frame.axis_angles = mirror_axis_angles(classify_group(p));
        if (p.min_exponent() >= 0 && p.max_exponent() >= 2) {
            SelfIntersectionResult si;
            if (auto tt = two_term_shape(p))
                si = self_intersections_two_term(tt->v, tt->w, tt->a, tt->b);
            else
                si = self_intersections_general(p);
            if (!si.full_coincidence)
                for (const SelfIntersection& x : si.points) frame.intersections.push_back(x.point);
        }
        if (!(p.min_exponent() == 0 && p.max_exponent() == 0))
            for (const Cusp& cu : cusps(p)) frame.cusp_points.push_back(cu.point);
    }
    RenderOptions opt;
    opt.samples = samples;
    return write_output(render_svg({frame}, opt), output);
}

// ----------------------------------------------------------------- evolve --

int cmd_evolve(const Input& in, double speed, int frames, int samples, const std::string& fmt,
               const std::string& output) {
    if (!in.poly) {
        print_error("evolve requires a Laurent-polynomial curve");
        return 2;
    }
    const LaurentPolynomial& p = *in.poly;

    if (fmt == "svg") {
        std::vector<WaveSnapshot> snaps = wave_snapshots(p, speed, frames, samples);
        std::vector<RenderFrame> rf;
        auto tt = two_term_shape(p);
        for (const WaveSnapshot& snap : snaps) {
            RenderFrame f;
            f.label = "t = " + format_double(snap.t);
            for (const CurveSample& s : snap.samples) f.points.push_back(s.point);
            if (tt) {
                try {
                    SelfIntersectionResult si =
                        self_intersections_wave(tt->a, tt->b, tt->v, tt->w, speed, snap.t);
                    if (!si.full_coincidence)
                        for (const SelfIntersection& x : si.points)
                            f.intersections.push_back(x.point);
                } catch (const DegenerateTimeError&) {
                    // circle/point frame: nothing to mark
                }
            }
            rf.push_back(std::move(f));
        }
        RenderOptions opt;
        opt.samples = samples;
        opt.draw_axes = false;
        opt.mark_cusps = false;
        return write_output(render_svg(rf, opt), output);
    }

    if (fmt == "csv") {
        std::vector<WaveSnapshot> snaps = wave_snapshots(p, speed, frames, samples);
        std::string out;
        for (const WaveSnapshot& snap : snaps) {
            for (const CurveSample& s : snap.samples) {
                out += format_double(snap.t);
                out += ',';
                out += format_double(s.t);
                out += ',';
                out += format_double(s.point.real());
                out += ',';
                out += format_double(s.point.imag());
                out += "\r\n";
            }
        }
        return write_output(out, output);
    }

    Json report = report_envelope("evolve", in.text);
    report["speed"] = speed;
    report["period"] = wave_period(p, speed);
    if (auto tt = two_term_shape(p))
        report["timeline"] = timeline_json(wave_timeline(tt->a, tt->b, tt->v, tt->w, speed));
    else
        report["timeline"] = nullptr;
    DegenerateTimes dt = degenerate_times(p, speed);
    Json degen;
    degen["always_degenerate"] = dt.always_degenerate;
    Json evs = Json::array();
    for (const TimelineEvent& e : dt.events) {
        Json ev;
        ev["time"] = e.time;
        ev["kind"] = e.kind == TimelineEvent::Kind::DegeneratePoint ? "degenerate_point"
                                                                    : "degenerate_circle";
        ev["surviving_exponent"] =
            e.surviving_exponent ? Json(*e.surviving_exponent) : Json(nullptr);
        ev["exact_time"] = e.exact_time ? Json(e.exact_time->str()) : Json(nullptr);
        evs.push_back(std::move(ev));
    }
    degen["events"] = std::move(evs);
    report["degenerate_times"] = std::move(degen);
    std::vector<WaveSnapshot> snaps = wave_snapshots(p, speed, frames, 2);
    Json sj = Json::array();
    for (const WaveSnapshot& snap : snaps) {
        Json one;
        one["t"] = snap.t;
        Json terms = Json::array();
        for (const auto& [n, c] : snap.coefficients.terms())
            terms.push_back(Json{{"n", n}, {"weight", complex_json(c)}});
        one["terms"] = std::move(terms);
        sj.push_back(std::move(one));
    }
    report["snapshots"] = std::move(sj);
    return write_output(report_json(report), output);
}

// ---------------------------------------------------------------- selfint --

int cmd_selfint(const Input& in, const std::string& point_text, std::optional<double> speed,
                int times, const std::string& output) {
    if (!in.poly) {
        print_error("selfint requires a Laurent-polynomial curve");
        return 2;
    }
    const LaurentPolynomial& p = *in.poly;
    Json report = report_envelope("selfint", in.text);

    if (!point_text.empty()) {
        Parsed<Complex> w0 = parse_complex(point_text);
        if (!w0) {
            print_diagnostic(point_text, *w0.diagnostic);
            return 1;
        }
        report["point"] = complex_json(*w0);
        report["point_multiplicity"] = point_multiplicity_json(point_multiplicity(p, *w0));
        return write_output(report_json(report), output);
    }

    if (speed) {
        auto tt = two_term_shape(p);
        if (!tt) {
            print_error("time-resolved self-intersections need a two-term curve v z^a + w z^b");
            return 2;
        }
        double period = wave_period(p, *speed);
        report["speed"] = *speed;
        report["period"] = period;
        Json rows = Json::array();
        for (int j = 0; j < times; ++j) {
            double t = period * j / times;
            Json row;
            row["t"] = t;
            try {
                SelfIntersectionResult si =
                    self_intersections_wave(tt->a, tt->b, tt->v, tt->w, *speed, t);
                row["degenerate"] = false;
                row["self_intersections"] = selfint_json(si);
            } catch (const DegenerateTimeError& e) {
                row["degenerate"] = true;
                row["reason"] = e.what();
                row["self_intersections"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
        report["times"] = std::move(rows);
        return write_output(report_json(report), output);
    }

    report["self_intersections"] = selfint_or_null(p);
    report["cusps"] = cusps_or_empty(p);
    return write_output(report_json(report), output);
}

// ---------------------------------------------------------------- winding --

int cmd_winding(const Input& in, const std::string& point_text, std::optional<double> speed,
                int samples, const std::string& output) {
    if (!in.poly) {
        print_error("winding requires a Laurent-polynomial curve");
        return 2;
    }
    const LaurentPolynomial& p = *in.poly;
    Json report = report_envelope("winding", in.text);

    if (!point_text.empty()) {
        Parsed<Complex> w0 = parse_complex(point_text);
        if (!w0) {
            print_diagnostic(point_text, *w0.diagnostic);
            return 1;
        }
        int exact = winding_argument_principle(p, *w0);
        int numeric = winding_numeric(sample(p, samples), *w0);
        report["point"] = complex_json(*w0);
        report["winding"] = exact;
        report["winding_numeric"] = numeric;
        report["agreement"] = exact == numeric;
        return write_output(report_json(report), output);
    }

    if (speed) {
        auto tt = two_term_shape(p);
        if (!tt) {
            print_error("the winding profile needs a two-term curve v z^a + w z^b");
            return 2;
        }
        report["profile"] = winding_profile_json(
            winding_profile(tt->a, tt->b, tt->v, tt->w, *speed));
        return write_output(report_json(report), output);
    }

    print_error("winding needs either --point or --speed");
    return 1;
}

// ---------------------------------------------------------------- annulus --

int cmd_annulus(const Input& in, double horizon, int grid, int samples,
                const std::string& output) {
    ExponentialSum g = as_exponential_sum(in);
    Json report = report_envelope("annulus", in.text);
    report["bounds"] = annulus_json(annulus_bounds(g, horizon, samples));
    try {
        report["coverage"] = annulus_json(density_coverage(g, horizon, grid, grid));
        report["coverage_error"] = nullptr;
    } catch (const std::invalid_argument& e) {
        report["coverage"] = nullptr;
        report["coverage_error"] = e.what();
    }
    return write_output(report_json(report), output);
}

// ---------------------------------------------------------------- variety --

int cmd_variety(const Input& in, const std::string& point_text, int grid,
                const std::string& fmt, const std::string& output) {
    if (!in.poly) {
        print_error("variety requires a Laurent-polynomial curve");
        return 2;
    }
    const LaurentPolynomial& p = *in.poly;

    if (!point_text.empty()) {
        Parsed<Complex> w0 = parse_complex(point_text);
        if (!w0) {
            print_diagnostic(point_text, *w0.diagnostic);
            return 1;
        }
        Complex value = variety_eval(p, *w0);
        Json report = report_envelope("variety", in.text);
        report["point"] = complex_json(*w0);
        report["value"] = complex_json(value);
        report["abs"] = std::abs(value);
        return write_output(report_json(report), output);
    }

    // Grid evaluation over the curve's bounding box with a 20% margin.
    std::vector<CurveSample> pts = sample(p, 2048);
    double x0 = pts[0].point.real(), x1 = x0, y0 = pts[0].point.imag(), y1 = y0;
    for (const CurveSample& s : pts) {
        x0 = std::min(x0, s.point.real());
        x1 = std::max(x1, s.point.real());
        y0 = std::min(y0, s.point.imag());
        y1 = std::max(y1, s.point.imag());
    }
    double mx = 0.2 * std::max(x1 - x0, 1e-6), my = 0.2 * std::max(y1 - y0, 1e-6);
    x0 -= mx;
    x1 += mx;
    y0 -= my;
    y1 += my;

    if (fmt == "json") {
        Json report = report_envelope("variety", in.text);
        report["grid"] = grid;
        report["window"] = Json{{"x0", x0}, {"x1", x1}, {"y0", y0}, {"y1", y1}};
        Json values = Json::array();
        for (int iy = 0; iy < grid; ++iy) {
            Json row = Json::array();
            double wy = y0 + (y1 - y0) * (iy + 0.5) / grid;
            for (int ix = 0; ix < grid; ++ix) {
                double wx = x0 + (x1 - x0) * (ix + 0.5) / grid;
                row.push_back(std::abs(variety_eval(p, Complex(wx, wy))));
            }
            values.push_back(std::move(row));
        }
        report["abs_values"] = std::move(values);
        return write_output(report_json(report), output);
    }

    std::string out;
    for (int iy = 0; iy < grid; ++iy) {
        double wy = y0 + (y1 - y0) * (iy + 0.5) / grid;
        for (int ix = 0; ix < grid; ++ix) {
            double wx = x0 + (x1 - x0) * (ix + 0.5) / grid;
            double h = std::abs(variety_eval(p, Complex(wx, wy)));
            out += format_double(wx);
            out += ',';
            out += format_double(wy);
            out += ',';
            out += format_double(h);
            out += "\r\n";
        }
    }
    return write_output(out, output);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar curves from polynomials on the unit circle: symmetry, winding, "
                 "cusps, self-intersections, implicit varieties, wave flow, annulus density"};
    app.require_subcommand(1);

    std::string expr, output, point_text;
    std::string render_fmt = "svg", evolve_fmt = "json", variety_fmt = "csv";
    int samples = 4096;
    bool timing = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("expression", expr, "curve expression")->required();
        cmd->add_option("-o,--output", output, "write to file instead of standard output");
        cmd->add_option("--samples", samples, "curve sampling density")
            ->check(CLI::Range(16, 1 << 22));
        return cmd;
    };

    CLI::App* analyze = add_common(app.add_subcommand("analyze", "full curve report"));
    analyze->add_flag("--timing", timing, "include wall-clock timing in the report");

    CLI::App* render = add_common(app.add_subcommand("render", "draw the curve"));
    render->add_option("--format", render_fmt, "output format")
        ->check(CLI::IsMember({"svg", "csv"}));

    double speed = 0.1;
    int frames = 16;
    CLI::App* evolve = add_common(app.add_subcommand("evolve", "wave-flow evolution"));
    evolve->add_option("--format", evolve_fmt, "output format")
        ->check(CLI::IsMember({"json", "svg", "csv"}));
    evolve->add_option("--speed", speed, "wave speed c")->required();
    evolve->add_option("--frames", frames, "snapshot count")->check(CLI::Range(1, 4096));

    int times = 0;
    double selfint_speed = 0.0;
    CLI::App* selfint = add_common(app.add_subcommand("selfint", "self-intersections and cusps"));
    CLI::Option* si_speed =
        selfint->add_option("--speed", selfint_speed, "wave speed for time-resolved lists");
    selfint->add_option("--times", times, "evaluation times per period")
        ->check(CLI::Range(1, 65536))
        ->needs(si_speed);
    selfint->add_option("--point", point_text, "complex point X+Yi: report how often the curve passes through it")
        ->excludes(si_speed);

    double wind_speed = 0.0;
    CLI::App* winding = add_common(app.add_subcommand("winding", "winding numbers"));
    CLI::Option* w_point = winding->add_option("--point", point_text, "complex point X+Yi");
    CLI::Option* w_speed =
        winding->add_option("--speed", wind_speed, "two-term wave speed for the full profile")
            ->excludes(w_point);

    double horizon = 200.0;
    int grid = 30;
    CLI::App* annulus = add_common(app.add_subcommand("annulus", "annulus bounds and density"));
    annulus->add_option("--horizon", horizon, "time horizon")->required();
    annulus->add_option("--grid", grid, "polar grid cells per dimension")
        ->check(CLI::Range(1, 4096));

    int vgrid = 64;
    CLI::App* variety = add_common(app.add_subcommand("variety", "implicit variety values"));
    variety->add_option("--format", variety_fmt, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    variety->add_option("--point", point_text, "evaluate at one complex point");
    variety->add_option("--grid", vgrid, "grid cells per dimension")->check(CLI::Range(1, 4096));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    std::optional<Input> in = parse_input(expr);
    if (!in) return 1;

    try {
        if (*analyze) return cmd_analyze(*in, samples, output, timing);
        if (*render) return cmd_render(*in, samples, render_fmt, output);
        if (*evolve) return cmd_evolve(*in, speed, frames, samples, evolve_fmt, output);
        if (*selfint)
            return cmd_selfint(*in, point_text,
                               si_speed->count() > 0 ? std::optional<double>(selfint_speed)
                                                     : std::nullopt,
                               times > 0 ? times : 64, output);
        if (*winding)
            return cmd_winding(*in, point_text,
                               w_speed->count() > 0 ? std::optional<double>(wind_speed)
                                                    : std::nullopt,
                               samples, output);
        if (*annulus) return cmd_annulus(*in, horizon, grid, samples, output);
        if (*variety) return cmd_variety(*in, point_text, vgrid, variety_fmt, output);
    } catch (const std::exception& e) {
        print_error(e.what());
        return 2;
    }
    return 0;
}
