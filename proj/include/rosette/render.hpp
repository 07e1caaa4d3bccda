#pragma once

#include <string>
#include <vector>

#include "rosette/laurent.hpp"

namespace rosette {

struct RenderOptions {
    int samples = 4096;           // default curve sampling density for callers
    int width = 800;              // cell width in px
    int height = 800;             // cell height in px
    double stroke_width = 1.5;
    double margin_fraction = 0.05;
    bool mark_self_intersections = true;
    bool mark_cusps = true;
    bool draw_axes = true;
    bool mark_origin = true;
    int grid_columns = 0; // frames per row; 0 = ceil(sqrt(frame count))
};

// One curve cell in the output document. Multi-frame documents (wave-flow
// grids) share a single global coordinate fit so frames are comparable.
struct RenderFrame {
    std::vector<Complex> points;          // closed polyline, in order
    std::vector<Complex> intersections;   // circle markers
    std::vector<Complex> cusp_points;     // cross markers
    std::vector<double> axis_angles;      // dashed lines through 0, radians
    std::string label;                    // optional caption, e.g. "t = 0.5"
};

// Deterministic SVG 1.1 document: byte-identical output for identical inputs.
// Y axis points up (flipped from SVG device coordinates), the scale is
// isotropic, and the viewport auto-fits all frame content plus the margin.
// Throws std::invalid_argument when no frame has any points.
std::string render_svg(const std::vector<RenderFrame>& frames, const RenderOptions& options);

// RFC 4180 rows "t,re,im" (no header), one per sample, shortest round-trip
// number text.
std::string export_csv(const std::vector<CurveSample>& samples);

} // namespace rosette
