// qcohere: scenario runner over the qcohere C API.
//
//   qcohere all --state plus --state mixed --observable linear --dim 2
//   qcohere witness --scenario scenario.json --out-dir results
//
// Exit status: 0 success, 2 validation failure, 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcohere/qcohere.h"
#include "scenario.hpp"

namespace qcohere::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct StateDeleter {
  void operator()(qc_state* s) const { qc_state_destroy(s); }
};
struct ObservableDeleter {
  void operator()(qc_observable* o) const { qc_observable_destroy(o); }
};
struct PovmDeleter {
  void operator()(qc_povm* p) const { qc_povm_destroy(p); }
};
using State = std::unique_ptr<qc_state, StateDeleter>;
using Observable = std::unique_ptr<qc_observable, ObservableDeleter>;
using PovmHandle = std::unique_ptr<qc_povm, PovmDeleter>;

void check(qc_status status, const std::string& context) {
  if (status != QC_OK) {
    throw CliError(ExitCode::Validation, context + ": " + qc_last_error());
  }
}

std::string num(double v) {
  if (std::isnan(v)) return "NA";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json num_json(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

json read_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw CliError(ExitCode::Io, std::string("cannot open ") + what + " file " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(ExitCode::Validation, std::string(what) + " file " + path + " is not valid JSON: " + e.what());
  }
}

// Row-major real/imag planes of a JSON matrix; returns (rows, cols).
std::pair<std::size_t, std::size_t> read_planes(const json& doc, const char* re_key, const char* im_key,
                                                std::vector<double>& re, std::vector<double>& im) {
  const auto re_rows = doc.at(re_key).get<std::vector<std::vector<double>>>();
  std::vector<std::vector<double>> im_rows;
  if (doc.contains(im_key)) im_rows = doc.at(im_key).get<std::vector<std::vector<double>>>();
  const std::size_t rows = re_rows.size();
  const std::size_t cols = rows ? re_rows.front().size() : 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (re_rows[r].size() != cols) {
      throw CliError(ExitCode::Validation, std::string("NonSquare: ragged rows in '") + re_key + "'");
    }
    if (!im_rows.empty() && (im_rows.size() != rows || im_rows[r].size() != cols)) {
      throw CliError(ExitCode::Validation, std::string("NonSquare: '") + im_key + "' shape differs from '" + re_key + "'");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      re.push_back(re_rows[r][c]);
      im.push_back(im_rows.empty() ? 0.0 : im_rows[r][c]);
    }
  }
  return {rows, cols};
}

std::string sanitize(const std::string& id) {
  std::string out;
  for (char c : id) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-') ? c : '-';
  return out;
}

struct LoadedState {
  State handle;
  std::string id;
  std::size_t dim = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::uint64_t parse_uint(const std::string& text, const std::string& context) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw CliError(ExitCode::Validation, "expected a non-negative integer in " + context + ", got '" + text + "'");
  }
}

LoadedState load_state(const std::string& spec, const Scenario& sc) {
  LoadedState out;
  out.id = spec;
  const std::size_t dim = sc.dim.value_or(2);
  qc_state* raw = nullptr;
  const auto parts = split(spec, ':');

  if (spec == "mixed") {
    check(qc_state_mixed(dim, &raw), "state 'mixed'");
  } else if (spec == "plus") {
    check(qc_state_plus(dim, &raw), "state 'plus'");
  } else if (!parts.empty() && parts[0] == "random" && parts.size() <= 3) {
    const std::uint64_t seed = parts.size() >= 2 ? parse_uint(parts[1], spec) : *sc.seed;
    const std::size_t rank = parts.size() == 3 ? parse_uint(parts[2], spec) : dim;
    check(qc_state_random(dim, rank, seed, &raw), "state '" + spec + "'");
  } else {
    const json doc = read_json_file(spec, "state");
    std::vector<double> re, im;
    std::size_t rows = 0, cols = 0;
    try {
      if (!doc.is_object()) throw CliError(ExitCode::Validation, "state file must hold a JSON object");
      for (const auto& [key, value] : doc.items()) {
        if (key != "dim" && key != "re" && key != "im") {
          throw CliError(ExitCode::Validation, "unknown state key '" + key + "' in " + spec);
        }
      }
      std::tie(rows, cols) = read_planes(doc, "re", "im", re, im);
      if (doc.contains("dim") && doc.at("dim").get<std::size_t>() != rows) {
        throw CliError(ExitCode::Validation, "DimensionMismatch: 'dim' disagrees with matrix size in " + spec);
      }
    } catch (const json::exception& e) {
      throw CliError(ExitCode::Validation, "malformed state file " + spec + ": " + e.what());
    }
    qc_validation report{};
    check(qc_validate_state(rows, cols, re.data(), im.data(), &report), "state " + spec);
    if (report.failure != QC_OK) {
      std::ostringstream os;
      os << "state " << spec << " fails " << qc_status_name(report.failure);
      if (report.failure == QC_ERR_NON_HERMITIAN) os << " (violation " << report.hermiticity_violation << ")";
      if (report.failure == QC_ERR_TRACE_NOT_ONE) os << " (violation " << report.trace_violation << ")";
      if (report.failure == QC_ERR_NOT_PSD) os << " (min eigenvalue " << report.min_eigenvalue << ")";
      throw CliError(ExitCode::Validation, os.str());
    }
    check(qc_state_create(rows, re.data(), im.data(), &raw), "state " + spec);
    out.id = std::filesystem::path(spec).stem().string();
  }
  out.handle.reset(raw);
  out.dim = qc_state_dim(raw);
  if (sc.dim && *sc.dim != out.dim) {
    throw CliError(ExitCode::Validation, "DimensionMismatch: state " + spec + " has dimension " +
                                             std::to_string(out.dim) + ", --dim is " + std::to_string(*sc.dim));
  }
  return out;
}

Observable load_observable(const std::string& spec, std::size_t dim, std::uint64_t seed) {
  qc_observable* raw = nullptr;
  const auto parts = split(spec, ':');
  if (spec == "computational") {
    check(qc_observable_computational(dim, &raw), "observable 'computational'");
  } else if (spec == "linear") {
    check(qc_observable_linear(dim, &raw), "observable 'linear'");
  } else if (spec == "hadamard") {
    check(qc_observable_hadamard(dim, &raw), "observable 'hadamard'");
  } else if (!parts.empty() && parts[0] == "random" && parts.size() <= 2) {
    const std::uint64_t s = parts.size() == 2 ? parse_uint(parts[1], spec) : seed;
    check(qc_observable_random(dim, s, &raw), "observable '" + spec + "'");
  } else {
    const json doc = read_json_file(spec, "observable");
    try {
      for (const auto& [key, value] : doc.items()) {
        if (key != "dim" && key != "eigenvalues" && key != "basis_re" && key != "basis_im") {
          throw CliError(ExitCode::Validation, "unknown observable key '" + key + "' in " + spec);
        }
      }
      const auto g = doc.at("eigenvalues").get<std::vector<double>>();
      if (doc.contains("dim") && doc.at("dim").get<std::size_t>() != g.size()) {
        throw CliError(ExitCode::Validation, "DimensionMismatch: 'dim' disagrees with eigenvalue count in " + spec);
      }
      if (doc.contains("basis_re")) {
        std::vector<double> re, im;
        const auto [rows, cols] = read_planes(doc, "basis_re", "basis_im", re, im);
        if (rows != g.size() || cols != g.size()) {
          throw CliError(ExitCode::Validation, "DimensionMismatch: basis shape vs eigenvalues in " + spec);
        }
        check(qc_observable_create(g.size(), g.data(), re.data(), im.data(), &raw), "observable " + spec);
      } else {
        check(qc_observable_create(g.size(), g.data(), nullptr, nullptr, &raw), "observable " + spec);
      }
    } catch (const json::exception& e) {
      throw CliError(ExitCode::Validation, "malformed observable file " + spec + ": " + e.what());
    }
  }
  Observable obs(raw);
  if (qc_observable_dim(raw) != dim) {
    throw CliError(ExitCode::Validation, "DimensionMismatch: observable " + spec + " has dimension " +
                                             std::to_string(qc_observable_dim(raw)) + ", state has " + std::to_string(dim));
  }
  return obs;
}

PovmHandle load_povm(const std::string& spec, std::size_t dim) {
  qc_povm* raw = nullptr;
  if (spec == "phase") {
    check(qc_povm_phase(dim, &raw), "POVM 'phase'");
  } else if (spec == "computational" || spec == "hadamard") {
    Observable basis = load_observable(spec, dim, 0);
    check(qc_povm_projective(basis.get(), &raw), "POVM '" + spec + "'");
  } else {
    const json doc = read_json_file(spec, "POVM");
    std::vector<double> re, im;
    std::size_t count = 0;
    try {
      for (const auto& element : doc.at("outcomes")) {
        const auto [rows, cols] = read_planes(element, "re", "im", re, im);
        if (rows != dim || cols != dim) {
          throw CliError(ExitCode::Validation, "DimensionMismatch: POVM element shape in " + spec);
        }
        ++count;
      }
    } catch (const json::exception& e) {
      throw CliError(ExitCode::Validation, "malformed POVM file " + spec + ": " + e.what());
    }
    check(qc_povm_create(dim, count, re.data(), im.data(), &raw), "POVM " + spec);
  }
  return PovmHandle(raw);
}

struct Artifact {
  std::string name;
  std::string content;
};

struct Analyses {
  bool coherence = false;
  bool witness = false;
  bool phase = false;
  bool resolution = false;
};

ordered_json certificate_json(const qc_witness& w) {
  ordered_json j;
  if (w.nonclassical) {
    j["pair"] = {w.subspace.j, w.subspace.k};
    j["phi"] = w.subspace.phi;
    j["gamma"] = {w.gamma.y, w.gamma.z, w.gamma.yz};
    j["y"] = w.y;
    j["z"] = w.z;
    j["p"] = w.p;
  } else {
    j["verdict"] = "classical";
    j["min_p"] = w.min_p;
  }
  return j;
}

class Runner {
 public:
  Runner(const Scenario& sc, Analyses which) : sc_(sc), which_(which) {}

  std::vector<Artifact> run() {
    std::vector<Artifact> artifacts;
    std::ostringstream coherence_csv, terms_csv, witness_jsonl, phase_csv, metrology_csv, distance_csv;
    ordered_json coherence_js = ordered_json::array(), phase_js = ordered_json::array(),
                 metrology_js = ordered_json::array();
    coherence_csv << "state_id,basis_id,dim,C_HS,commutator_norm,purity,coherent_basis,eps_out\n";
    terms_csv << "state_id,j,k,re,im\n";
    phase_csv << "state_id,basis_id,C_HS,renyi_integral,renyi_mc\n";
    metrology_csv << "state_id,basis_id,C_HS,witness_p_min,delta2_lambda,d2_coeff,D2_coeff,bound_lhs,bound_rhs\n";
    distance_csv << "state_id,basis_id,lambda,d2_exact,D2_exact\n";

    for (const auto& spec : sc_.states) {
      LoadedState st = load_state(spec, sc_);
      Observable obs = load_observable(sc_.observable, st.dim, *sc_.seed);
      const std::string& sid = st.id;
      const std::string& bid = sc_.observable;
      const std::size_t n = st.dim;

      double chs = 0.0;
      check(qc_hilbert_schmidt_coherence(st.handle.get(), obs.get(), &chs), "C_HS");

      if (which_.coherence) {
        double comm = 0.0;
        check(qc_commutator_norm(st.handle.get(), obs.get(), &comm), "commutator norm");
        std::vector<double> re(n * n), im(n * n);
        check(qc_coherence_matrix(st.handle.get(), obs.get(), re.data(), im.data()), "coherence terms");
        double purity = 0.0;
        for (std::size_t i = 0; i < n * n; ++i) purity += re[i] * re[i] + im[i] * im[i];
        int found = 0;
        double eps_out = 0.0;
        qc_observable* coherent = nullptr;
        check(qc_find_coherent_basis(st.handle.get(), sc_.eps, &found, &coherent, &eps_out), "coherent basis");
        Observable coherent_basis(coherent);

        coherence_csv << sid << ',' << bid << ',' << n << ',' << num(chs) << ',' << num(comm) << ','
                      << num(purity) << ',' << (found ? "found" : "none") << ',' << num(eps_out) << '\n';
        ordered_json terms = ordered_json::array();
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            terms_csv << sid << ',' << j << ',' << k << ',' << num(re[j * n + k]) << ',' << num(im[j * n + k]) << '\n';
            terms.push_back({j, k, re[j * n + k], im[j * n + k]});
          }
        }
        ordered_json entry;
        entry["state_id"] = sid;
        entry["basis_id"] = bid;
        entry["dim"] = n;
        entry["C_HS"] = chs;
        entry["commutator_norm"] = comm;
        entry["purity"] = purity;
        entry["coherent_basis"] = found ? "found" : "none";
        entry["eps_out"] = eps_out;
        entry["terms"] = terms;
        coherence_js.push_back(entry);
      }

      qc_witness w{};
      if (which_.witness || which_.resolution) {
        check(qc_witness_search(st.handle.get(), obs.get(), sc_.tol_witness, sc_.refine, &w), "witness search");
      }
      if (which_.witness) {
        ordered_json line;
        line["state_id"] = sid;
        line.update(certificate_json(w));
        witness_jsonl << line.dump() << '\n';
      }

      if (which_.phase) {
        double renyi = 0.0;
        check(qc_renyi_integral(st.handle.get(), obs.get(), &renyi), "Renyi integral");
        double renyi_mc = std::nan("");
        if (sc_.mc_samples > 0) {
          check(qc_renyi_integral_sampled(st.handle.get(), obs.get(), sc_.mc_samples, *sc_.seed, sc_.workers, &renyi_mc),
                "sampled Renyi integral");
        }
        phase_csv << sid << ',' << bid << ',' << num(chs) << ',' << num(renyi) << ',' << num(renyi_mc) << '\n';

        std::vector<double> gre(2 * n - 1), gim(2 * n - 1);
        check(qc_mutual_coherence(st.handle.get(), obs.get(), gre.data(), gim.data()), "coherence function");
        std::ostringstream gamma_csv, p_csv;
        gamma_csv << "tau,re,im\n";
        ordered_json gammas = ordered_json::array(), curve = ordered_json::array();
        for (std::size_t i = 0; i < gre.size(); ++i) {
          const long tau = static_cast<long>(i) - static_cast<long>(n - 1);
          gamma_csv << tau << ',' << num(gre[i]) << ',' << num(gim[i]) << '\n';
          gammas.push_back({tau, gre[i], gim[i]});
        }
        p_csv << "phi,value\n";
        const std::size_t grid = std::max<std::size_t>(sc_.grid, 1);
        for (std::size_t i = 0; i < grid; ++i) {
          const double phi = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(grid);
          double value = 0.0;
          check(qc_single_phase_evaluate(st.handle.get(), obs.get(), phi, &value), "P(phi)");
          p_csv << num(phi) << ',' << num(value) << '\n';
          curve.push_back({phi, value});
        }
        if (sc_.format == Format::Csv) {
          artifacts.push_back({"gamma_" + sanitize(sid) + ".csv", gamma_csv.str()});
          artifacts.push_back({"phase_" + sanitize(sid) + ".csv", p_csv.str()});
        }
        ordered_json entry;
        entry["state_id"] = sid;
        entry["basis_id"] = bid;
        entry["C_HS"] = chs;
        entry["renyi_integral"] = renyi;
        entry["renyi_mc"] = num_json(renyi_mc);
        entry["gamma"] = gammas;
        entry["P"] = curve;
        phase_js.push_back(entry);
      }

      if (which_.resolution) {
        qc_resolution res{};
        check(qc_wiener_kintchine(st.handle.get(), obs.get(), &res), "Wiener-Kintchine resolution");
        PovmHandle povm = load_povm(sc_.povm, n);
        double d2_coeff = 0.0;
        check(qc_small_signal_quadratic(st.handle.get(), obs.get(), povm.get(), &d2_coeff), "small-signal coefficient");
        qc_density_distance dd{};
        check(qc_density_matrix_distance(st.handle.get(), obs.get(), sc_.lambda, &dd), "density-matrix distance");
        double d2_exact = 0.0;
        check(qc_statistical_distance(st.handle.get(), obs.get(), sc_.lambda, povm.get(), &d2_exact), "statistical distance");

        double lhs = std::nan(""), rhs = std::nan("");
        qc_bound bound{};
        const qc_status bs = qc_uncertainty_bound(st.handle.get(), obs.get(), povm.get(), &bound);
        if (bs == QC_OK) {
          lhs = bound.lhs;
          rhs = bound.applicable ? bound.rhs : std::nan("");
        } else if (bs != QC_ERR_ETA_MISSING) {
          check(bs, "uncertainty bound");
        }

        const double witness_p = w.nonclassical ? w.p : w.min_p;
        metrology_csv << sid << ',' << bid << ',' << num(chs) << ',' << num(witness_p) << ','
                      << num(res.delta2_lambda) << ',' << num(d2_coeff) << ',' << num(dd.quadratic_coefficient) << ','
                      << num(lhs) << ',' << num(rhs) << '\n';
        distance_csv << sid << ',' << bid << ',' << num(sc_.lambda) << ',' << num(d2_exact) << ',' << num(dd.exact) << '\n';

        ordered_json entry;
        entry["state_id"] = sid;
        entry["basis_id"] = bid;
        entry["C_HS"] = chs;
        entry["witness_p_min"] = witness_p;
        entry["delta2_lambda"] = res.delta2_lambda;
        entry["flat"] = res.flat != 0;
        entry["d2_coeff"] = d2_coeff;
        entry["D2_coeff"] = dd.quadratic_coefficient;
        entry["bound_lhs"] = num_json(lhs);
        entry["bound_rhs"] = num_json(rhs);
        entry["lambda"] = sc_.lambda;
        entry["d2_exact"] = d2_exact;
        entry["D2_exact"] = dd.exact;
        metrology_js.push_back(entry);
      }
    }

    const bool csv = sc_.format == Format::Csv;
    if (which_.coherence) {
      if (csv) {
        artifacts.push_back({"coherence.csv", coherence_csv.str()});
        artifacts.push_back({"coherence_terms.csv", terms_csv.str()});
      } else {
        artifacts.push_back({"coherence.json", coherence_js.dump(2) + "\n"});
      }
    }
    if (which_.witness) artifacts.push_back({"witness.jsonl", witness_jsonl.str()});
    if (which_.phase) {
      if (csv) {
        artifacts.push_back({"phase.csv", phase_csv.str()});
      } else {
        artifacts.push_back({"phase.json", phase_js.dump(2) + "\n"});
      }
    }
    if (which_.resolution) {
      if (csv) {
        artifacts.push_back({"metrology.csv", metrology_csv.str()});
        artifacts.push_back({"distance.csv", distance_csv.str()});
      } else {
        artifacts.push_back({"metrology.json", metrology_js.dump(2) + "\n"});
      }
    }
    return artifacts;
  }

 private:
  const Scenario& sc_;
  Analyses which_;
};

void write_artifacts(const std::vector<Artifact>& artifacts, const std::string& out_dir) {
  if (out_dir.empty()) {
    for (const auto& a : artifacts) std::cout << "# " << a.name << '\n' << a.content;
    std::cout.flush();
    if (!std::cout) throw CliError(ExitCode::Io, "failed writing to stdout");
    return;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw CliError(ExitCode::Io, "cannot create output directory " + out_dir + ": " + ec.message());
  for (const auto& a : artifacts) {
    const auto path = std::filesystem::path(out_dir) / a.name;
    std::ofstream out(path, std::ios::binary);
    out << a.content;
    if (!out) throw CliError(ExitCode::Io, "cannot write " + path.string());
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Coherence, nonclassicality and metrological resolution of finite-dimensional states"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::vector<std::string> states;
  std::string observable, povm, out_dir, format;
  std::size_t dim = 0, mc_samples = 0, workers = 0, grid = 0;
  double lambda = 0.0, tol_witness = 0.0;
  std::uint64_t seed = 0;
  bool refine = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario_path, "Scenario JSON file");
    sub->add_option("--state", states, "State: mixed, plus, random[:seed[:rank]] or a JSON file (repeatable)");
    sub->add_option("--observable", observable, "Observable: computational, linear, hadamard, random[:seed] or a JSON file");
    sub->add_option("--povm", povm, "POVM for resolution: phase, computational, hadamard or a JSON file");
    sub->add_option("--dim", dim, "Dimension for builtin states")->check(CLI::PositiveNumber);
    sub->add_option("--lambda", lambda, "Signal value for finite-lambda distances");
    sub->add_option("--seed", seed, "Seed (falls back to QCOHERE_SEED)");
    sub->add_option("--mc-samples", mc_samples, "Monte-Carlo samples for the Renyi cross-check (0 disables)");
    sub->add_option("--workers", workers, "Monte-Carlo worker threads");
    sub->add_option("--grid", grid, "Points of the P(phi) grid")->check(CLI::PositiveNumber);
    sub->add_option("--tol-witness", tol_witness, "Coherence threshold for the witness")->check(CLI::PositiveNumber);
    sub->add_flag("--refine", refine, "Refine the witness gamma by golden-section search");
    sub->add_option("--out-dir", out_dir, "Directory for output files (stdout when omitted)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  std::vector<std::pair<CLI::App*, Analyses>> commands{
      {app.add_subcommand("coherence", "Coherence terms, C_HS, commutator norm"), {true, false, false, false}},
      {app.add_subcommand("witness", "Joint-distribution negativity witness"), {false, true, false, false}},
      {app.add_subcommand("phase", "Phase distributions, Renyi integral, coherence function"), {false, false, true, false}},
      {app.add_subcommand("resolution", "Metrological resolution table"), {false, false, false, true}},
      {app.add_subcommand("all", "Every analysis"), {true, true, true, true}},
  };
  for (auto& [sub, _] : commands) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Validation);
  }

  Analyses which;
  CLI::App* active = nullptr;
  for (auto& [sub, analyses] : commands) {
    if (sub->parsed()) {
      which = analyses;
      active = sub;
    }
  }

  try {
    Scenario sc = scenario_path.empty() ? Scenario{} : load_scenario(scenario_path);
    if (!states.empty()) sc.states = states;
    if (active->count("--observable")) sc.observable = observable;
    if (active->count("--povm")) sc.povm = povm;
    if (active->count("--dim")) sc.dim = dim;
    if (active->count("--lambda")) sc.lambda = lambda;
    if (active->count("--seed")) sc.seed = seed;
    if (active->count("--mc-samples")) sc.mc_samples = mc_samples;
    if (active->count("--workers")) sc.workers = workers;
    if (active->count("--grid")) sc.grid = grid;
    if (active->count("--tol-witness")) sc.tol_witness = tol_witness;
    if (refine) sc.refine = true;
    if (active->count("--out-dir")) sc.out_dir = out_dir;
    if (active->count("--format")) sc.format = parse_format(format);
    if (!sc.seed) {
      const char* env = std::getenv("QCOHERE_SEED");
      sc.seed = env ? parse_uint(env, "QCOHERE_SEED") : 0;
    }

    write_artifacts(Runner(sc, which).run(), sc.out_dir);
  } catch (const CliError& e) {
    std::cerr << "qcohere: " << e.what() << '\n';
    return static_cast<int>(e.code());
  }
  return 0;
}

}  // namespace
}  // namespace qcohere::cli

int main(int argc, char** argv) { return qcohere::cli::run(argc, argv); }
