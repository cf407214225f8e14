#include "hecsbox/serialize.hpp"

namespace hecsbox {

namespace {

Json coeff_strings(const Polynomial& poly) {
  Json out = Json::array();
  for (const FieldElement& c : poly.coefficients()) out.push_back(c.value().get_str());
  return out;
}

std::string sixteenths(int numerator) { return std::to_string(numerator) + "/16"; }

}  // namespace

Json divisor_to_json(const MumfordDivisor& d) {
  Json out;
  out["u"] = coeff_strings(d.u());
  out["v"] = coeff_strings(d.v());
  return out;
}

Json gen_result_to_json(const GenResult& result) {
  Json out;
  out["sbox"] = result.sbox.to_hex();
  Json table = Json::array();
  for (std::uint8_t v : result.sbox.table) table.push_back(static_cast<int>(v));
  out["table"] = table;
  Json meta;
  meta["fold_rule"] = to_string(result.fold_rule);
  meta["completion_used"] = result.completion_used;
  meta["key"] = result.key.get_str();
  meta["curve_hash"] = result.curve_hash;
  out["metadata"] = meta;
  return out;
}

Json report_to_json(const AnalysisReport& report) {
  Json out;
  out["bijective"] = report.bijective;
  out["nonlinearity"] = report.nonlinearity;
  out["algebraic_degree"] = report.algebraic_degree;
  out["differential_uniformity"] = report.differential_uniformity;

  Json matrix = Json::array();
  Json matrix_float = Json::array();
  for (const auto& row : report.sac.ones) {
    Json r = Json::array();
    Json rf = Json::array();
    for (int count : row) {
      r.push_back(sixteenths(count));
      rf.push_back(count / 16.0);
    }
    matrix.push_back(r);
    matrix_float.push_back(rf);
  }
  out["sac_matrix"] = matrix;
  out["sac_matrix_float"] = matrix_float;
  out["sac_max_deviation"] = sixteenths(report.sac_max_deviation_sixteenths);
  out["sac_max_deviation_float"] = report.sac_max_deviation_sixteenths / 16.0;
  return out;
}

Json curve_to_json(const HyperellipticCurve& curve) {
  Json out;
  out["prime"] = curve.field().modulus().get_str();
  out["genus"] = curve.genus();
  out["h"] = coeff_strings(curve.h());
  out["f"] = coeff_strings(curve.f());
  out["nonsingularity_verified"] = curve.nonsingularity_verified();
  out["curve_hash"] = curve_hash(curve);
  return out;
}

}  // namespace hecsbox
