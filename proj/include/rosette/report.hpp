#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rosette/laurent.hpp"
#include "rosette/selfint.hpp"
#include "rosette/symmetry.hpp"
#include "rosette/wave.hpp"
#include "rosette/winding.hpp"

namespace rosette {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Raised when a report would contain a non-finite number; the CLI maps it to
// the numeric-failure exit code.
struct NumericFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json complex_json(Complex z);
Json symmetry_json(const SymmetryReport& report);
Json winding_profile_json(const WindingProfile& profile);
Json timeline_json(const Timeline& timeline);
Json selfint_json(const SelfIntersectionResult& result);
Json cusps_json(const std::vector<Cusp>& cusps);
Json annulus_json(const AnnulusEstimate& estimate);
Json point_multiplicity_json(const PointMultiplicity& pm);

// Common envelope: schema_version, tool version, command, expression echo,
// and a null timing slot (filled only on request, to keep default output
// byte-stable).
Json report_envelope(const std::string& command, const std::string& expression);

// Serialized document with trailing newline. Walks the tree first and throws
// NumericFailure if any number is NaN or infinite.
std::string report_json(const Json& report);

} // namespace rosette
