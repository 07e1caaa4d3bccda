#include "rosette/report.hpp"

#include <cmath>

namespace rosette {

namespace {

void require_finite(const Json& j) {
    if (j.is_number_float()) {
        double v = j.get<double>();
        if (!std::isfinite(v)) throw NumericFailure("report contains a non-finite number");
        return;
    }
    if (j.is_object() || j.is_array())
        for (const auto& item : j) require_finite(item);
}

const char* kind_name(TimelineEvent::Kind kind) {
    switch (kind) {
    case TimelineEvent::Kind::DegenerateCircle: return "degenerate_circle";
    case TimelineEvent::Kind::DegeneratePoint: return "degenerate_point";
    case TimelineEvent::Kind::WindingTransition: return "winding_transition";
    case TimelineEvent::Kind::CuspTime: return "cusp_time";
    }
    return "unknown";
}

} // namespace

Json complex_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json symmetry_json(const SymmetryReport& report) {
    Json j;
    j["rotation_order"] = report.rotation_order;
    if (report.symmetry_type)
        j["symmetry_type"] = Json{{"k", report.symmetry_type->first},
                                  {"m", report.symmetry_type->second}};
    else
        j["symmetry_type"] = nullptr;
    switch (report.classification) {
    case GroupClass::Trivial: j["classification"] = "trivial"; break;
    case GroupClass::Cyclic: j["classification"] = "cyclic"; break;
    case GroupClass::Dihedral: j["classification"] = "dihedral"; break;
    }
    Json axes = Json::array();
    for (const MirrorAxis& axis : report.mirrors.axes)
        axes.push_back(Json{{"beta", axis.beta}, {"sigma", axis.sigma}});
    j["mirror_axes"] = std::move(axes);
    j["mirror_continuum"] = report.mirrors.continuum;
    j["verified_maximal"] = report.verified_maximal;
    return j;
}

Json winding_profile_json(const WindingProfile& profile) {
    Json j;
    j["speed"] = profile.speed;
    j["period"] = profile.period;
    j["breakpoints"] = profile.breakpoints;
    j["values"] = profile.values;
    j["undefined_times"] = profile.undefined_times;
    return j;
}

Json timeline_json(const Timeline& timeline) {
    Json j;
    j["speed"] = timeline.speed;
    j["period"] = timeline.period;
    Json events = Json::array();
    for (const TimelineEvent& e : timeline.events) {
        Json ev;
        ev["time"] = e.time;
        ev["kind"] = kind_name(e.kind);
        ev["surviving_exponent"] =
            e.surviving_exponent ? Json(*e.surviving_exponent) : Json(nullptr);
        ev["winding_value"] = e.winding_value ? Json(*e.winding_value) : Json(nullptr);
        ev["threshold"] = e.threshold ? Json(*e.threshold) : Json(nullptr);
        ev["exact_time"] = e.exact_time ? Json(e.exact_time->str()) : Json(nullptr);
        events.push_back(std::move(ev));
    }
    j["events"] = std::move(events);
    return j;
}

Json selfint_json(const SelfIntersectionResult& result) {
    Json j;
    j["pair_count"] = result.pair_count;
    j["full_coincidence"] = result.full_coincidence;
    j["cover_fold"] = result.cover_fold;
    Json pts = Json::array();
    for (const SelfIntersection& si : result.points) {
        Json p;
        p["point"] = complex_json(si.point);
        p["t1"] = si.t1;
        p["t2"] = si.t2;
        p["s"] = si.s;
        p["multiplicity"] = si.multiplicity;
        p["direction_index"] = si.direction_index;
        p["sign_branch"] = si.sign_branch;
        p["modulus"] = si.h_modulus;
        pts.push_back(std::move(p));
    }
    j["points"] = std::move(pts);
    return j;
}

Json cusps_json(const std::vector<Cusp>& cusps) {
    Json arr = Json::array();
    for (const Cusp& c : cusps) arr.push_back(Json{{"t", c.t}, {"point", complex_json(c.point)}});
    return arr;
}

Json annulus_json(const AnnulusEstimate& estimate) {
    Json j;
    j["r_min"] = estimate.r_min;
    j["r_max"] = estimate.r_max;
    j["r_max_exact"] = estimate.r_max_exact;
    j["analytic_r_min"] =
        estimate.analytic_r_min ? Json(*estimate.analytic_r_min) : Json(nullptr);
    j["coverage_fraction"] = estimate.coverage_fraction;
    j["horizon"] = estimate.horizon;
    j["radial_cells"] = estimate.radial_cells;
    j["angular_cells"] = estimate.angular_cells;
    return j;
}

Json point_multiplicity_json(const PointMultiplicity& pm) {
    Json j;
    j["count"] = pm.count;
    j["parameters"] = pm.parameters;
    j["ordinary"] = pm.ordinary;
    return j;
}

Json report_envelope(const std::string& command, const std::string& expression) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["expression"] = expression;
    j["timing"] = nullptr;
    return j;
}

std::string report_json(const Json& report) {
    require_finite(report);
    return report.dump(2) + "\n";
}

} // namespace rosette
