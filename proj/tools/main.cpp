#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hecsbox/analysis.hpp"
#include "hecsbox/sbox_gen.hpp"
#include "hecsbox/serialize.hpp"

namespace {

using hecsbox::Json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

/// Raised for semantic config problems; the message names the offending field.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& field, const std::string& detail)
      : std::runtime_error(field + ": " + detail) {}
};

struct RunConfig {
  std::string prime;
  int genus = 2;
  std::vector<std::string> h_coeffs;              // ascending; empty = zero polynomial
  std::vector<std::string> f_coeffs;              // ascending
  std::vector<std::string> point_xs = {"0", "1"};  // find_point start values
  std::vector<unsigned long> mults;               // empty = all 1
  std::string key;                                // empty = not provided
  bool wide_key = false;
  int family_size = 1;
  bool analyze_family = false;
  std::string format = "table";
};

const char* kExample1Prime = "11";
const char* kExample2Prime = "10000000000000000000000000000001233";

void apply_preset(RunConfig& cfg, const std::string& name) {
  if (name == "example1") {
    cfg.prime = kExample1Prime;
  } else if (name == "example2") {
    cfg.prime = kExample2Prime;
  } else {
    throw ConfigError("preset", "unknown preset \"" + name + "\"");
  }
  cfg.genus = 2;
  cfg.h_coeffs = {};
  cfg.f_coeffs = {"3", "1", "2", "0", "0", "1"};  // y^2 = x^5 + 2x^2 + x + 3
}

std::vector<std::string> json_string_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected a JSON array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (item.is_string()) {
      out.push_back(item.get<std::string>());
    } else if (item.is_number_integer()) {
      out.push_back(std::to_string(item.get<long long>()));
    } else {
      throw ConfigError(field, "entries must be strings or integers");
    }
  }
  return out;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config", "top level must be a JSON object");
  if (j.contains("preset")) apply_preset(cfg, j["preset"].get<std::string>());
  if (j.contains("prime")) {
    cfg.prime = j["prime"].is_string() ? j["prime"].get<std::string>()
                                       : std::to_string(j["prime"].get<long long>());
  }
  if (j.contains("genus")) cfg.genus = j["genus"].get<int>();
  if (j.contains("h")) cfg.h_coeffs = json_string_list(j["h"], "h");
  if (j.contains("f")) cfg.f_coeffs = json_string_list(j["f"], "f");
  if (j.contains("points")) cfg.point_xs = json_string_list(j["points"], "points");
  if (j.contains("mults")) {
    cfg.mults.clear();
    for (const auto& m : j["mults"]) cfg.mults.push_back(m.get<unsigned long>());
  }
  if (j.contains("key")) {
    cfg.key = j["key"].is_string() ? j["key"].get<std::string>()
                                   : std::to_string(j["key"].get<long long>());
  }
  if (j.contains("wide_key")) cfg.wide_key = j["wide_key"].get<bool>();
  if (j.contains("family")) cfg.family_size = j["family"].get<int>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
}

mpz_class parse_field(const std::string& text, const std::string& field) {
  try {
    return hecsbox::parse_integer(text);
  } catch (const hecsbox::ParseError& e) {
    throw ConfigError(field, e.what());
  }
}

hecsbox::HyperellipticCurve build_curve(const RunConfig& cfg) {
  if (cfg.prime.empty()) throw ConfigError("prime", "required (or use --preset/--config)");
  if (cfg.f_coeffs.empty()) throw ConfigError("f", "required (or use --preset/--config)");
  parse_field(cfg.prime, "prime");  // name the field before PrimeField rejects it
  hecsbox::PrimeField field = [&] {
    try {
      return hecsbox::PrimeField::from_string(cfg.prime);
    } catch (const hecsbox::InvalidModulus& e) {
      throw ConfigError("prime", e.what());
    }
  }();
  hecsbox::Polynomial h = [&] {
    try {
      return hecsbox::Polynomial::from_strings(field, cfg.h_coeffs);
    } catch (const hecsbox::ParseError& e) {
      throw ConfigError("h", e.what());
    }
  }();
  hecsbox::Polynomial f = [&] {
    try {
      return hecsbox::Polynomial::from_strings(field, cfg.f_coeffs);
    } catch (const hecsbox::ParseError& e) {
      throw ConfigError("f", e.what());
    }
  }();
  try {
    return hecsbox::HyperellipticCurve(field, std::move(h), std::move(f), cfg.genus);
  } catch (const hecsbox::InvalidCurve& e) {
    throw ConfigError("curve", e.what());
  }
}

hecsbox::GenParams build_gen_params(const RunConfig& cfg) {
  hecsbox::HyperellipticCurve curve = build_curve(cfg);
  if (cfg.point_xs.empty()) throw ConfigError("points", "at least one start x required");
  std::vector<unsigned long> mults = cfg.mults;
  if (mults.empty()) mults.assign(cfg.point_xs.size(), 1);
  if (mults.size() != cfg.point_xs.size()) {
    throw ConfigError("mults", "length " + std::to_string(mults.size()) +
                                   " does not match points length " +
                                   std::to_string(cfg.point_xs.size()));
  }
  hecsbox::DivisorInput input;
  for (std::size_t i = 0; i < cfg.point_xs.size(); ++i) {
    if (mults[i] == 0) throw ConfigError("mults", "multiplicities must be >= 1");
    const mpz_class start = parse_field(cfg.point_xs[i], "points");
    input.emplace_back(hecsbox::find_point(curve, start), mults[i]);
  }

  if (cfg.key.empty()) throw ConfigError("key", "required (the generation key is explicit input)");
  const mpz_class key = parse_field(cfg.key, "key");
  if (key < 0) throw ConfigError("key", "must be nonnegative");
  if (!cfg.wide_key && key > 15) {
    throw ConfigError("key", cfg.key + " does not fit in 4 bits (pass --wide-key to allow)");
  }
  if (cfg.family_size < 1 || cfg.family_size > 16) {
    throw ConfigError("family", "must be in [1, 16]");
  }
  return hecsbox::GenParams{curve, std::move(input), key, cfg.family_size};
}

void require_format(const RunConfig& cfg) {
  if (cfg.format != "table" && cfg.format != "json" && cfg.format != "csv") {
    throw ConfigError("format", "must be one of table, json, csv");
  }
}

// ---------------------------------------------------------------- rendering

std::string sixteenths(int numerator) { return std::to_string(numerator) + "/16"; }

void print_sbox_table(std::ostream& out, const hecsbox::SBox4& sbox) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  out << " in :";
  for (int i = 0; i < 16; ++i) out << ' ' << kHex[i];
  out << "\n out:";
  for (int i = 0; i < 16; ++i) out << ' ' << kHex[sbox.table[static_cast<std::size_t>(i)]];
  out << "\n";
}

void print_report_table(std::ostream& out, const hecsbox::AnalysisReport& report) {
  out << "bijective: " << (report.bijective ? "true" : "false") << "\n";
  out << "nonlinearity: " << report.nonlinearity << "\n";
  out << "algebraic_degree: " << report.algebraic_degree << "\n";
  out << "differential_uniformity: " << report.differential_uniformity << "\n";
  out << "sac_max_deviation: " << sixteenths(report.sac_max_deviation_sixteenths) << "\n";
  out << "sac_matrix:\n";
  for (const auto& row : report.sac.ones) {
    out << " ";
    for (int count : row) out << " " << sixteenths(count);
    out << "\n";
  }
}

void emit_report_csv_rows(std::ostream& out, const std::string& prefix,
                          const hecsbox::AnalysisReport& report) {
  out << prefix << "bijective," << (report.bijective ? "true" : "false") << "\n";
  out << prefix << "nonlinearity," << report.nonlinearity << "\n";
  out << prefix << "algebraic_degree," << report.algebraic_degree << "\n";
  out << prefix << "differential_uniformity," << report.differential_uniformity << "\n";
  out << prefix << "sac_max_deviation," << sixteenths(report.sac_max_deviation_sixteenths) << "\n";
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      out << prefix << "sac_" << i << "_" << j << "," << sixteenths(report.sac.ones[i][j]) << "\n";
    }
  }
}

Json report_json_with_sbox(const hecsbox::SBox4& sbox, const hecsbox::AnalysisReport& report) {
  Json j;
  j["sbox"] = sbox.to_hex();
  Json r = hecsbox::report_to_json(report);
  for (auto& [k, v] : r.items()) j[k] = v;
  return j;
}

// ----------------------------------------------------------------- commands

int cmd_generate(const RunConfig& cfg) {
  require_format(cfg);
  const hecsbox::GenResult result = hecsbox::generate_sbox(build_gen_params(cfg));
  if (cfg.format == "json") {
    std::cout << hecsbox::gen_result_to_json(result).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "index,value\n";
    for (int i = 0; i < 16; ++i) {
      std::cout << i << "," << static_cast<int>(result.sbox.table[static_cast<std::size_t>(i)])
                << "\n";
    }
  } else {
    std::cout << "sbox: " << result.sbox.to_hex() << "\n";
    print_sbox_table(std::cout, result.sbox);
    std::cout << "fold_rule: " << hecsbox::to_string(result.fold_rule) << "\n";
    std::cout << "completion_used: " << (result.completion_used ? "true" : "false") << "\n";
    std::cout << "key: " << result.key.get_str() << "\n";
    std::cout << "curve_hash: " << result.curve_hash << "\n";
  }
  return kExitOk;
}

int cmd_family(const RunConfig& cfg) {
  require_format(cfg);
  const hecsbox::GenResult result = hecsbox::generate_sbox(build_gen_params(cfg));
  const std::vector<hecsbox::SBox4> family =
      hecsbox::shift_family(result.sbox, cfg.family_size);

  if (cfg.format == "json") {
    Json out;
    Json boxes = Json::array();
    for (std::size_t i = 0; i < family.size(); ++i) {
      Json entry;
      entry["index"] = i + 1;
      entry["sbox"] = family[i].to_hex();
      if (cfg.analyze_family) {
        entry["analysis"] = hecsbox::report_to_json(hecsbox::analyze(family[i]));
      }
      boxes.push_back(entry);
    }
    out["family"] = boxes;
    Json meta;
    meta["fold_rule"] = hecsbox::to_string(result.fold_rule);
    meta["completion_used"] = result.completion_used;
    meta["key"] = result.key.get_str();
    meta["curve_hash"] = result.curve_hash;
    out["metadata"] = meta;
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    if (cfg.analyze_family) {
      std::cout << "index,sbox,bijective,nonlinearity,algebraic_degree,differential_uniformity,"
                   "sac_max_deviation\n";
      for (std::size_t i = 0; i < family.size(); ++i) {
        const hecsbox::AnalysisReport r = hecsbox::analyze(family[i]);
        std::cout << i + 1 << "," << family[i].to_hex() << "," << (r.bijective ? "true" : "false")
                  << "," << r.nonlinearity << "," << r.algebraic_degree << ","
                  << r.differential_uniformity << "," << sixteenths(r.sac_max_deviation_sixteenths)
                  << "\n";
      }
    } else {
      std::cout << "index,sbox\n";
      for (std::size_t i = 0; i < family.size(); ++i) {
        std::cout << i + 1 << "," << family[i].to_hex() << "\n";
      }
    }
  } else {
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::cout << "Sb" << i + 1 << ": " << family[i].to_hex() << "\n";
      if (cfg.analyze_family) print_report_table(std::cout, hecsbox::analyze(family[i]));
    }
    std::cout << "fold_rule: " << hecsbox::to_string(result.fold_rule) << "\n";
    std::cout << "completion_used: " << (result.completion_used ? "true" : "false") << "\n";
    std::cout << "key: " << result.key.get_str() << "\n";
    std::cout << "curve_hash: " << result.curve_hash << "\n";
  }
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, const std::string& sbox_hex) {
  require_format(cfg);
  const hecsbox::SBox4 sbox = [&] {
    try {
      return hecsbox::SBox4::from_hex(sbox_hex);
    } catch (const hecsbox::ParseError& e) {
      throw ConfigError("sbox", e.what());
    }
  }();
  const hecsbox::AnalysisReport report = hecsbox::analyze(sbox);
  if (cfg.format == "json") {
    std::cout << report_json_with_sbox(sbox, report).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "metric,value\n";
    emit_report_csv_rows(std::cout, "", report);
  } else {
    std::cout << "sbox: " << sbox.to_hex() << "\n";
    print_report_table(std::cout, report);
  }
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg) {
  require_format(cfg);
  const hecsbox::GenResult result = hecsbox::generate_sbox(build_gen_params(cfg));
  const hecsbox::SBox4& reference = hecsbox::reference_box();
  const hecsbox::AnalysisReport gen = hecsbox::analyze(result.sbox);
  const hecsbox::AnalysisReport ref = hecsbox::analyze(reference);

  if (cfg.format == "json") {
    Json out;
    out["generated"] = report_json_with_sbox(result.sbox, gen);
    out["reference"] = report_json_with_sbox(reference, ref);
    Json delta;
    delta["nonlinearity"] = gen.nonlinearity - ref.nonlinearity;
    delta["algebraic_degree"] = gen.algebraic_degree - ref.algebraic_degree;
    delta["differential_uniformity"] = gen.differential_uniformity - ref.differential_uniformity;
    delta["sac_max_deviation_sixteenths"] =
        gen.sac_max_deviation_sixteenths - ref.sac_max_deviation_sixteenths;
    out["delta"] = delta;
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "metric,generated,reference\n";
    std::cout << "sbox," << result.sbox.to_hex() << "," << reference.to_hex() << "\n";
    std::cout << "bijective," << (gen.bijective ? "true" : "false") << ","
              << (ref.bijective ? "true" : "false") << "\n";
    std::cout << "nonlinearity," << gen.nonlinearity << "," << ref.nonlinearity << "\n";
    std::cout << "algebraic_degree," << gen.algebraic_degree << "," << ref.algebraic_degree << "\n";
    std::cout << "differential_uniformity," << gen.differential_uniformity << ","
              << ref.differential_uniformity << "\n";
    std::cout << "sac_max_deviation," << sixteenths(gen.sac_max_deviation_sixteenths) << ","
              << sixteenths(ref.sac_max_deviation_sixteenths) << "\n";
  } else {
    const auto row = [](const std::string& name, const std::string& a, const std::string& b,
                        const std::string& delta) {
      std::ostringstream line;
      line << name;
      for (std::size_t i = name.size(); i < 26; ++i) line << ' ';
      line << a;
      for (std::size_t i = a.size(); i < 20; ++i) line << ' ';
      line << b;
      for (std::size_t i = b.size(); i < 20; ++i) line << ' ';
      line << delta;
      return line.str();
    };
    std::cout << row("metric", "generated", "reference", "delta") << "\n";
    std::cout << row("sbox", result.sbox.to_hex(), reference.to_hex(), "-") << "\n";
    std::cout << row("bijective", gen.bijective ? "true" : "false",
                     ref.bijective ? "true" : "false", "-")
              << "\n";
    std::cout << row("nonlinearity", std::to_string(gen.nonlinearity),
                     std::to_string(ref.nonlinearity),
                     std::to_string(gen.nonlinearity - ref.nonlinearity))
              << "\n";
    std::cout << row("algebraic_degree", std::to_string(gen.algebraic_degree),
                     std::to_string(ref.algebraic_degree),
                     std::to_string(gen.algebraic_degree - ref.algebraic_degree))
              << "\n";
    std::cout << row("differential_uniformity", std::to_string(gen.differential_uniformity),
                     std::to_string(ref.differential_uniformity),
                     std::to_string(gen.differential_uniformity - ref.differential_uniformity))
              << "\n";
    std::cout << row("sac_max_deviation", sixteenths(gen.sac_max_deviation_sixteenths),
                     sixteenths(ref.sac_max_deviation_sixteenths),
                     std::to_string(gen.sac_max_deviation_sixteenths -
                                    ref.sac_max_deviation_sixteenths) +
                         "/16")
              << "\n";
  }
  return kExitOk;
}

int cmd_curve_info(const RunConfig& cfg) {
  require_format(cfg);
  const hecsbox::HyperellipticCurve curve = build_curve(cfg);
  const mpz_class& p = curve.field().modulus();

  std::optional<std::uint64_t> points;
  if (p < hecsbox::kEnumerationBound) points = hecsbox::count_points(curve);
  std::optional<std::uint64_t> order;
  if (curve.genus() == 2 && p < hecsbox::kJacobianOrderBound) {
    order = hecsbox::jacobian_order_by_enumeration(curve);
  }

  if (cfg.format == "json") {
    Json out = hecsbox::curve_to_json(curve);
    if (points) out["affine_points"] = *points;
    if (order) out["jacobian_order"] = *order;
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "field,value\n";
    std::cout << "prime," << p.get_str() << "\n";
    std::cout << "genus," << curve.genus() << "\n";
    std::cout << "h," << curve.h().to_string() << "\n";
    std::cout << "f," << curve.f().to_string() << "\n";
    std::cout << "nonsingularity_verified," << (curve.nonsingularity_verified() ? "true" : "false")
              << "\n";
    if (points) std::cout << "affine_points," << *points << "\n";
    if (order) std::cout << "jacobian_order," << *order << "\n";
    std::cout << "curve_hash," << hecsbox::curve_hash(curve) << "\n";
  } else {
    std::cout << "prime: " << p.get_str() << "\n";
    std::cout << "genus: " << curve.genus() << "\n";
    std::cout << "h: " << curve.h().to_string() << "\n";
    std::cout << "f: " << curve.f().to_string() << "\n";
    std::cout << "nonsingularity: "
              << (curve.nonsingularity_verified() ? "verified (exhaustive)"
                                                  : "unverified (p too large; curve trusted)")
              << "\n";
    if (points) std::cout << "affine_points: " << *points << "\n";
    if (order) std::cout << "jacobian_order: " << *order << "\n";
    std::cout << "curve_hash: " << hecsbox::curve_hash(curve) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key-dependent 4-bit S-box generation from hyperelliptic-curve "
               "Jacobian arithmetic, with a cryptanalytic evaluation suite"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");  // frees -h / --h for the curve polynomial

  RunConfig cli;  // values as given on the command line
  std::string config_path;
  std::string preset;
  std::string sbox_hex;

  const auto add_curve_options = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "Print help");
    cmd->add_option("--prime", cli.prime, "Field characteristic (decimal or 0x hex)");
    cmd->add_option("--genus", cli.genus, "Curve genus (default 2)");
    cmd->add_option("--h", cli.h_coeffs, "h(x) coefficients, ascending degree")
        ->delimiter(',');
    cmd->add_option("--f", cli.f_coeffs, "f(x) coefficients, ascending degree (monic, deg 2g+1)")
        ->delimiter(',');
    cmd->add_option("--config", config_path, "JSON config file; explicit flags override it");
    cmd->add_option("--preset", preset, "Built-in curve preset")
        ->check(CLI::IsMember({"example1", "example2"}));
    cmd->add_option("--format", cli.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };
  const auto add_gen_options = [&](CLI::App* cmd) {
    cmd->add_option("--points", cli.point_xs, "find_point start x values (default 0,1)")
        ->delimiter(',');
    cmd->add_option("--mults", cli.mults, "Point multiplicities (default all 1)")->delimiter(',');
    cmd->add_option("--key", cli.key, "Generation key (decimal or 0x hex)");
    cmd->add_flag("--wide-key", cli.wide_key, "Allow keys wider than 4 bits");
  };

  CLI::App* generate = app.add_subcommand("generate", "Generate one S-box");
  add_curve_options(generate);
  add_gen_options(generate);

  CLI::App* family = app.add_subcommand("family", "Generate the circular-shift S-box family");
  add_curve_options(family);
  add_gen_options(family);
  family->add_option("--family", cli.family_size, "Family size N in [1, 16]");
  family->add_flag("--analyze", cli.analyze_family, "Analyze every family member");

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze an S-box given as 16 hex digits");
  analyze->add_option("sbox", sbox_hex, "S-box, 16 hex digits, entry for input 0 first")
      ->required();
  analyze->add_option("--format", cli.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  CLI::App* compare =
      app.add_subcommand("compare", "Generate an S-box and compare it with the reference box");
  add_curve_options(compare);
  add_gen_options(compare);

  CLI::App* curve_info = app.add_subcommand("curve-info", "Describe the configured curve");
  add_curve_options(curve_info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    // Precedence: explicit flags > --preset > --config file > defaults.
    RunConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (!preset.empty()) apply_preset(cfg, preset);

    CLI::App* cmd = app.get_subcommands().front();
    const auto given = [&](const std::string& name) {
      const CLI::Option* opt = cmd->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--prime")) cfg.prime = cli.prime;
    if (given("--genus")) cfg.genus = cli.genus;
    if (given("--h")) cfg.h_coeffs = cli.h_coeffs;
    if (given("--f")) cfg.f_coeffs = cli.f_coeffs;
    if (given("--points")) cfg.point_xs = cli.point_xs;
    if (given("--mults")) cfg.mults = cli.mults;
    if (given("--key")) cfg.key = cli.key;
    if (given("--wide-key")) cfg.wide_key = cli.wide_key;
    if (given("--family")) cfg.family_size = cli.family_size;
    if (given("--analyze")) cfg.analyze_family = cli.analyze_family;
    if (given("--format")) cfg.format = cli.format;

    if (cmd == generate) return cmd_generate(cfg);
    if (cmd == family) return cmd_family(cfg);
    if (cmd == analyze) return cmd_analyze(cfg, sbox_hex);
    if (cmd == compare) return cmd_compare(cfg);
    if (cmd == curve_info) return cmd_curve_info(cfg);
    std::cerr << "error: unknown subcommand\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const hecsbox::DegenerateResult& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const hecsbox::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
