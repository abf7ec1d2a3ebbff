#pragma once

#include <json.hpp>

#include <string>

#include "labeling.hpp"
#include "verification.hpp"

namespace mmagic {

using Json = nlohmann::ordered_json;

/// Labeling document: `kind`, `n`, `scale_exp`, a `units` block (authoritative
/// integer arrays) and a `decimals` block for human reading.
Json labeling_to_json(const PathLabeling& labeling);
Json labeling_to_json(const BipolarPathLabeling& labeling);
Json labeling_to_json(const Labeling& labeling);

/// Accepts a labeling object or any document carrying one under "labeling".
/// Only the units arrays are read back; decimals are ignored.
Labeling labeling_from_json(const Json& doc);
Labeling parse_labeling_text(std::string_view text);

Json report_to_json(const CheckReport& report);
Json spectrum_to_json(const MagicSpectrum& spectrum, bool bipolar);
Json admissibility_to_json(const AdmissibilityReport& report);

/// DOT drawing of the labeled path, vertices left to right.
std::string render_dot(const Labeling& labeling);

}  // namespace mmagic
