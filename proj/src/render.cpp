#include "rosette/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rosette/parse.hpp"

namespace rosette {

namespace {

struct Box {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    bool any = false;
    void add(Complex z) {
        if (!any) {
            x0 = x1 = z.real();
            y0 = y1 = z.imag();
            any = true;
            return;
        }
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    }
};

void append_attr(std::string& out, const char* name, double v) {
    out += ' ';
    out += name;
    out += "=\"";
    out += format_double(v);
    out += '"';
}

} // namespace

std::string render_svg(const std::vector<RenderFrame>& frames, const RenderOptions& options) {
    if (options.width <= 0 || options.height <= 0)
        throw std::invalid_argument("render dimensions must be positive");
    if (options.samples < 16) throw std::invalid_argument("need at least 16 samples");

    Box box;
    for (const RenderFrame& f : frames) {
        for (Complex z : f.points) box.add(z);
        if (options.mark_self_intersections)
            for (Complex z : f.intersections) box.add(z);
        if (options.mark_cusps)
            for (Complex z : f.cusp_points) box.add(z);
        if (options.mark_origin || (options.draw_axes && !f.axis_angles.empty()))
            box.add(Complex(0.0, 0.0));
    }
    if (!box.any) throw std::invalid_argument("nothing to render: no frame has points");

    double spanx = box.x1 - box.x0, spany = box.y1 - box.y0;
    if (spanx < 1e-12) {
        box.x0 -= 1.0;
        box.x1 += 1.0;
        spanx = box.x1 - box.x0;
    }
    if (spany < 1e-12) {
        box.y0 -= 1.0;
        box.y1 += 1.0;
        spany = box.y1 - box.y0;
    }

    const int n_frames = static_cast<int>(frames.size());
    int cols = options.grid_columns > 0
                   ? options.grid_columns
                   : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_frames))));
    cols = std::max(1, std::min(cols, n_frames));
    int rows = (n_frames + cols - 1) / cols;

    const double cw = options.width, ch = options.height;
    const double usable_w = cw * (1.0 - 2.0 * options.margin_fraction);
    const double usable_h = ch * (1.0 - 2.0 * options.margin_fraction);
    const double scale = std::min(usable_w / spanx, usable_h / spany);
    const double midx = 0.5 * (box.x0 + box.x1);
    const double midy = 0.5 * (box.y0 + box.y1);

    const double total_w = cw * cols, total_h = ch * rows;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(total_w) +
           "\" height=\"" + format_double(total_h) + "\" viewBox=\"0 0 " + format_double(total_w) +
           " " + format_double(total_h) + "\">\n";
    svg += "<rect width=\"" + format_double(total_w) + "\" height=\"" + format_double(total_h) +
           "\" fill=\"#ffffff\"/>\n";

    for (int idx = 0; idx < n_frames; ++idx) {
        const RenderFrame& f = frames[idx];
        const double ox = cw * (idx % cols);
        const double oy = ch * (idx / cols);
        auto map = [&](Complex z) {
            double px = ox + 0.5 * cw + (z.real() - midx) * scale;
            double py = oy + 0.5 * ch - (z.imag() - midy) * scale; // y axis up
            return std::pair<double, double>(px, py);
        };

        svg += "<clipPath id=\"cell" + std::to_string(idx) + "\"><rect";
        append_attr(svg, "x", ox);
        append_attr(svg, "y", oy);
        append_attr(svg, "width", cw);
        append_attr(svg, "height", ch);
        svg += "/></clipPath>\n";
        svg += "<g clip-path=\"url(#cell" + std::to_string(idx) + ")\">\n";

        if (options.draw_axes) {
            auto [cx, cy] = map(Complex(0.0, 0.0));
            double reach = cw + ch;
            for (double angle : f.axis_angles) {
                double dx = std::cos(angle) * reach, dy = -std::sin(angle) * reach;
                svg += "<line";
                append_attr(svg, "x1", cx - dx);
                append_attr(svg, "y1", cy - dy);
                append_attr(svg, "x2", cx + dx);
                append_attr(svg, "y2", cy + dy);
                svg += " stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
            }
        }

        if (!f.points.empty()) {
            svg += "<path d=\"";
            for (std::size_t j = 0; j < f.points.size(); ++j) {
                auto [px, py] = map(f.points[j]);
                svg += (j == 0 ? "M" : " L");
                svg += format_double(px);
                svg += ' ';
                svg += format_double(py);
            }
            svg += " Z\" fill=\"none\" stroke=\"#1a5fb4\" stroke-width=\"" +
                   format_double(options.stroke_width) + "\"/>\n";
        }

        if (options.mark_origin) {
            auto [cx, cy] = map(Complex(0.0, 0.0));
            svg += "<circle";
            append_attr(svg, "cx", cx);
            append_attr(svg, "cy", cy);
            svg += " r=\"2\" fill=\"#333333\"/>\n";
        }

        if (options.mark_self_intersections) {
            for (Complex z : f.intersections) {
                auto [px, py] = map(z);
                svg += "<circle";
                append_attr(svg, "cx", px);
                append_attr(svg, "cy", py);
                svg += " r=\"4\" fill=\"none\" stroke=\"#c01c28\" stroke-width=\"1.2\"/>\n";
            }
        }

        if (options.mark_cusps) {
            for (Complex z : f.cusp_points) {
                auto [px, py] = map(z);
                const double h = 4.5;
                svg += "<path d=\"M" + format_double(px - h) + " " + format_double(py - h) +
                       " L" + format_double(px + h) + " " + format_double(py + h) + " M" +
                       format_double(px - h) + " " + format_double(py + h) + " L" +
                       format_double(px + h) + " " + format_double(py - h) +
                       "\" stroke=\"#e66100\" stroke-width=\"1.2\"/>\n";
            }
        }

        if (!f.label.empty()) {
            svg += "<text";
            append_attr(svg, "x", ox + 8.0);
            append_attr(svg, "y", oy + 18.0);
            svg += " font-family=\"monospace\" font-size=\"13\" fill=\"#444444\">";
            for (char cch : f.label) {
                switch (cch) {
                case '<': svg += "&lt;"; break;
                case '>': svg += "&gt;"; break;
                case '&': svg += "&amp;"; break;
                default: svg += cch;
                }
            }
            svg += "</text>\n";
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string export_csv(const std::vector<CurveSample>& samples) {
    std::string out;
    for (const CurveSample& s : samples) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.point.real());
        out += ',';
        out += format_double(s.point.imag());
        out += "\r\n";
    }
    return out;
}

} // namespace rosette
