#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcohere::cli {

enum class ExitCode : int { Ok = 0, Validation = 2, Io = 3 };

// Failure carrying the process exit status it maps to.
class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

enum class Format { Csv, Json };

struct Scenario {
  std::vector<std::string> states{"plus"};
  std::string observable = "linear";
  std::string povm = "phase";
  std::optional<std::size_t> dim;
  double lambda = 1e-2;
  std::optional<std::uint64_t> seed;
  std::size_t mc_samples = 0;
  std::size_t workers = 1;
  std::size_t grid = 256;
  double tol_witness = 1e-9;
  double eps = 1e-10;
  bool refine = false;
  std::string out_dir;
  Format format = Format::Csv;
};

/// Reads a scenario JSON file. Unknown keys and mistyped values are
/// validation errors; an unreadable file is an I/O error.
Scenario load_scenario(const std::string& path);

Format parse_format(const std::string& text);

}  // namespace qcohere::cli
