#pragma once

#include <json.hpp>

#include "hecsbox/analysis.hpp"
#include "hecsbox/jacobian.hpp"
#include "hecsbox/sbox_gen.hpp"

namespace hecsbox {

/// JSON forms use ordered objects so that parse -> dump round-trips
/// byte-identically. Big integers are rendered as decimal strings.
using Json = nlohmann::ordered_json;

/// {"u": [coeff strings ascending], "v": [...]}.
Json divisor_to_json(const MumfordDivisor& d);

/// {"sbox": hex, "table": [16 ints], "metadata": {...}}.
Json gen_result_to_json(const GenResult& result);

/// Exact rationals appear both as "k/16" strings and as floats.
Json report_to_json(const AnalysisReport& report);

Json curve_to_json(const HyperellipticCurve& curve);

}  // namespace hecsbox
