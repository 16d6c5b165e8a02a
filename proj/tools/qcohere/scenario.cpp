#include "scenario.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace qcohere::cli {

using nlohmann::json;

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw CliError(ExitCode::Validation, "format must be csv or json, got '" + text + "'");
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(ExitCode::Io, "cannot open scenario file " + path);

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(ExitCode::Validation, "scenario " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw CliError(ExitCode::Validation, "scenario must be a JSON object");

  static const std::set<std::string> known{
      "state", "states", "observable", "povm", "dim", "lambda", "seed", "mc_samples", "workers",
      "grid", "tol_witness", "eps", "refine", "out_dir", "format"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw CliError(ExitCode::Validation, "unknown scenario key '" + key + "'");
  }
  if (doc.contains("state") && doc.contains("states")) {
    throw CliError(ExitCode::Validation, "scenario may set 'state' or 'states', not both");
  }

  Scenario s;
  try {
    if (doc.contains("state")) s.states = {doc["state"].get<std::string>()};
    if (doc.contains("states")) s.states = doc["states"].get<std::vector<std::string>>();
    if (doc.contains("observable")) s.observable = doc["observable"].get<std::string>();
    if (doc.contains("povm")) s.povm = doc["povm"].get<std::string>();
    if (doc.contains("dim")) s.dim = doc["dim"].get<std::size_t>();
    if (doc.contains("lambda")) s.lambda = doc["lambda"].get<double>();
    if (doc.contains("seed")) s.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("mc_samples")) s.mc_samples = doc["mc_samples"].get<std::size_t>();
    if (doc.contains("workers")) s.workers = doc["workers"].get<std::size_t>();
    if (doc.contains("grid")) s.grid = doc["grid"].get<std::size_t>();
    if (doc.contains("tol_witness")) s.tol_witness = doc["tol_witness"].get<double>();
    if (doc.contains("eps")) s.eps = doc["eps"].get<double>();
    if (doc.contains("refine")) s.refine = doc["refine"].get<bool>();
    if (doc.contains("out_dir")) s.out_dir = doc["out_dir"].get<std::string>();
    if (doc.contains("format")) s.format = parse_format(doc["format"].get<std::string>());
  } catch (const json::exception& e) {
    throw CliError(ExitCode::Validation, std::string("bad scenario value: ") + e.what());
  }
  if (s.states.empty()) throw CliError(ExitCode::Validation, "scenario lists no states");
  return s;
}

}  // namespace qcohere::cli
