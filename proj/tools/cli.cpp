#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinwire/chain.hpp"
#include "spinwire/error.hpp"
#include "spinwire/logical.hpp"
#include "spinwire/mqc.hpp"
#include "spinwire/propagator.hpp"
#include "spinwire/states.hpp"

namespace spinwire::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string exact(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string render() const {
    std::string text;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) text += ',';
      text += header[i];
    }
    text += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) text += ',';
        text += format_number(row[i]);
      }
      text += '\n';
    }
    return text;
  }
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

// Options shared by the data-producing commands.
struct ChainOptions {
  int n = 21;
  double d = 1.0;
  std::string family = "engineered";
  std::string model = "xx";
  std::string grid = "0:0:0";
  std::uint64_t seed = 0;
  double sigma = 0.0;
  double r_min = 1.0;
  double prefactor = 1.0;
  std::string out;
};

void add_chain_options(CLI::App& app, ChainOptions& o) {
  app.add_option("--n", o.n, "number of spins");
  app.add_option("--d", o.d, "coupling scale d");
  app.add_option("--family", o.family, "homogeneous | engineered | dipolar")
      ->check(CLI::IsMember({"homogeneous", "engineered", "dipolar"}));
  app.add_option("--model", o.model, "xx | dq")->check(CLI::IsMember({"xx", "dq"}));
  app.add_option("--grid", o.grid, "time grid start:end:steps")->required();
  app.add_option("--seed", o.seed, "seed for --sigma coupling disorder");
  app.add_option("--sigma", o.sigma, "relative Gaussian coupling disorder");
  app.add_option("--r-min", o.r_min, "dipolar family: minimum spacing");
  app.add_option("--prefactor", o.prefactor, "dipolar family: coupling prefactor");
  app.add_option("--out", o.out, "CSV output path (stdout when omitted)");
}

void record_chain_options(const ChainOptions& o, std::map<std::string, std::string>& p) {
  p["n"] = std::to_string(o.n);
  p["d"] = exact(o.d);
  p["family"] = o.family;
  p["model"] = o.model;
  p["grid"] = o.grid;
  p["seed"] = std::to_string(o.seed);
  p["sigma"] = exact(o.sigma);
  p["r-min"] = exact(o.r_min);
  p["prefactor"] = exact(o.prefactor);
}

ChainSpec build_chain(const ChainOptions& o) {
  const Model model = parse_model(o.model);
  ChainSpec spec = [&] {
    switch (parse_family(o.family)) {
      case Family::kHomogeneous: return homogeneous_couplings(o.n, o.d, model);
      case Family::kEngineered: return engineered_couplings(o.n, o.d, model);
      case Family::kDipolar:
        return dipolar_couplings({implant_spacings(o.n, o.r_min), o.prefactor},
                                 Truncation::kNearestNeighbor, model);
      default: throw UsageError("unsupported family '" + o.family + "'");
    }
  }();
  return perturb_couplings(spec, o.sigma, o.seed);
}

struct Emission {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string out;
};

void emit(const Emission& e, const Table& table, std::ostream& out) {
  const std::string csv = table.render();
  if (e.out.empty()) {
    out << csv;
    return;
  }
  write_file(e.out, csv);
  RunManifest manifest;
  manifest.command = e.command;
  manifest.parameters = e.parameters;
  manifest.artifact_version = SPINWIRE_VERSION;
  manifest.timestamp = utc_timestamp();
  manifest.output_files = {e.out};
  write_file(manifest_path_for(e.out), manifest.to_json());
}

void cmd_transfer(const ChainOptions& o, int source, std::ostream& out) {
  const ChainSpec spec = build_chain(o);
  if (source < 1 || source > o.n) throw UsageError("--j must lie in 1..n");
  const Model model = parse_model(o.model);
  Table table{{"t", "tau", "site", "correlation"}, {}};
  for (double t : TimeGrid::parse(o.grid).points()) {
    const Propagator prop = propagate(spec, t);
    const double tau = normalized_time(o.n, o.d, t);
    for (int l = 1; l <= o.n; ++l) {
      table.rows.push_back({t, tau, static_cast<double>(l),
                            polarization_correlation(prop, source, l, model)});
    }
  }
  Emission e{"transfer", {}, o.out};
  record_chain_options(o, e.parameters);
  e.parameters["j"] = std::to_string(source);
  emit(e, table, out);
}

void cmd_logical(const ChainOptions& o, const std::string& engine, std::ostream& out) {
  const Model model = parse_model(o.model);
  const auto times = TimeGrid::parse(o.grid).points();
  Table table{{"t", "C_x", "C_y", "C_z", "C_1", "F"}, {}};
  if (engine == "analytic") {
    if (o.family == "dipolar" || o.sigma != 0.0) {
      throw UsageError("analytic logical engine needs an undisturbed homogeneous or engineered chain");
    }
    const auto curve = logical_transport_curve(o.n, o.d, parse_family(o.family), times);
    for (std::size_t i = 0; i < times.size(); ++i) {
      table.rows.push_back({times[i], curve.values[0][i], curve.values[1][i], curve.values[2][i],
                            curve.values[3][i], curve.fidelity[i]});
    }
  } else {
    const ChainSpec spec = build_chain(o);
    const bool correct = model == Model::kDQ && dq_parity_correction(o.n);
    for (double t : times) {
      const auto c = logical_correlations(spec, t, model, correct);
      table.rows.push_back({t, c.values[0], c.values[1], c.values[2], c.values[3], c.fidelity()});
    }
  }
  Emission e{"logical", {}, o.out};
  record_chain_options(o, e.parameters);
  e.parameters["engine"] = engine;
  emit(e, table, out);
}

void cmd_mqc(const ChainOptions& o, const std::string& initial, const std::string& engine,
             int phase_steps, std::ostream& out) {
  const StateKind kind = parse_state_kind(initial);
  const auto times = TimeGrid::parse(o.grid).points();
  Table table{{"t", "J0", "J2"}, {}};
  if (engine == "analytic") {
    if (o.family != "homogeneous" || o.model != "dq" || o.sigma != 0.0) {
      throw UsageError("analytic MQC engine covers the homogeneous nearest-neighbour dq chain only");
    }
    for (double t : times) {
      const MqcSpectrum s = mqc_analytic(o.n, o.d, kind, t);
      table.rows.push_back({t, s.normalized(0), s.normalized(2)});
    }
  } else {
    const MqcOracle oracle(build_chain(o), prepare_state(o.n, kind));
    for (double t : times) {
      const MqcSpectrum s = oracle.spectrum(t, phase_steps);
      table.rows.push_back({t, s.normalized(0), s.normalized(2)});
    }
  }
  Emission e{"mqc", {}, o.out};
  record_chain_options(o, e.parameters);
  e.parameters["initial"] = initial;
  e.parameters["engine"] = engine;
  e.parameters["phase-steps"] = std::to_string(phase_steps);
  emit(e, table, out);
}

void cmd_autocorr(const ChainOptions& o, std::ostream& out) {
  const ChainSpec spec = build_chain(o);
  const Model model = parse_model(o.model);
  Table table{{"t", "tau", "C_z_ends", "C_y_logical"}, {}};
  for (double t : TimeGrid::parse(o.grid).points()) {
    const Propagator prop = propagate(spec, t);
    table.rows.push_back({t, normalized_time(o.n, o.d, t),
                          end_autocorrelation(prop, StateKind::kZEnds, model),
                          end_autocorrelation(prop, StateKind::kYLogical, model)});
  }
  Emission e{"autocorr", {}, o.out};
  record_chain_options(o, e.parameters);
  emit(e, table, out);
}

int cmd_verify(const VerifyOptions& options, const std::string& path, std::ostream& out) {
  if (options.max_n < 2 || options.max_n > 12) throw UsageError("--max-n must lie in 2..12");
  if (!(options.tolerance >= 0.0)) throw UsageError("--tolerance must be >= 0");
  const VerifyReport report = run_verification(options);
  out << report.to_text();
  if (!path.empty()) {
    write_file(path, report.to_json());
    RunManifest manifest;
    manifest.command = "verify";
    manifest.parameters = {{"max-n", std::to_string(options.max_n)},
                           {"seed", std::to_string(options.seed)},
                           {"tolerance", exact(options.tolerance)}};
    manifest.artifact_version = SPINWIRE_VERSION;
    manifest.timestamp = utc_timestamp();
    manifest.output_files = {path};
    write_file(manifest_path_for(path), manifest.to_json());
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

TimeGrid TimeGrid::parse(const std::string& text) {
  TimeGrid grid;
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw UsageError("grid must be start:end:steps, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, first);
    const std::string b = text.substr(first + 1, second - first - 1);
    const std::string c = text.substr(second + 1);
    grid.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    grid.end = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    grid.steps = std::stoi(c, &used);
    if (used != c.size()) throw std::invalid_argument(c);
  } catch (const std::logic_error&) {
    throw UsageError("grid must be start:end:steps, got '" + text + "'");
  }
  if (grid.steps < 0 || !std::isfinite(grid.start) || !std::isfinite(grid.end)) {
    throw UsageError("grid needs finite endpoints and steps >= 0");
  }
  return grid;
}

std::vector<double> TimeGrid::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) out.push_back(start);
  for (int i = 0; steps > 1 && i < steps; ++i) {
    out.push_back(i + 1 == steps ? end : start + (end - start) * i / (steps - 1));
  }
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

std::string RunManifest::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["artifact_version"] = artifact_version;
  j["timestamp"] = timestamp;
  j["output_files"] = output_files;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  RunManifest m;
  try {
    const auto j = nlohmann::json::parse(text);
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    m.artifact_version = j.value("artifact_version", "");
    m.timestamp = j.value("timestamp", "");
    m.output_files = j.value("output_files", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("bad manifest: ") + ex.what());
  }
  return m;
}

std::vector<std::string> RunManifest::replay_arguments() const {
  std::vector<std::string> args{command};
  for (const auto& [key, value] : parameters) {
    args.push_back("--" + key);
    args.push_back(value);
  }
  if (!output_files.empty()) {
    args.push_back("--out");
    args.push_back(output_files.front());
  }
  return args;
}

std::string manifest_path_for(const std::string& output_path) {
  return output_path + ".manifest.json";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum state transfer in pure- and mixed-state spin chains", "spinwire"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SPINWIRE_VERSION);

  ChainOptions transfer_opts;
  int source = 1;
  auto* transfer = app.add_subcommand("transfer", "polarization correlation from site j to every site");
  add_chain_options(*transfer, transfer_opts);
  transfer->add_option("--j", source, "source site");

  ChainOptions logical_opts;
  std::string logical_engine = "analytic";
  auto* logical = app.add_subcommand("logical", "logical-qubit transport correlations and fidelity");
  add_chain_options(*logical, logical_opts);
  logical->add_option("--engine", logical_engine, "analytic | exact")
      ->check(CLI::IsMember({"analytic", "exact"}));

  ChainOptions mqc_opts;
  mqc_opts.family = "homogeneous";
  mqc_opts.model = "dq";
  std::string initial = "z_ends";
  std::string mqc_engine = "analytic";
  int phase_steps = kDefaultPhaseSteps;
  auto* mqc = app.add_subcommand("mqc", "multiple-quantum-coherence intensities J0, J2");
  add_chain_options(*mqc, mqc_opts);
  mqc->add_option("--initial", initial, "z_ends | y_logical | x_logical | full_z")
      ->check(CLI::IsMember({"z_ends", "y_logical", "x_logical", "full_z"}));
  mqc->add_option("--engine", mqc_engine, "analytic | oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}));
  mqc->add_option("--phase-steps", phase_steps, "phase-cycling steps for the oracle engine");

  ChainOptions autocorr_opts;
  autocorr_opts.model = "dq";
  auto* autocorr = app.add_subcommand("autocorr", "end-state autocorrelation C(t) for z_ends and y_logical");
  add_chain_options(*autocorr, autocorr_opts);

  VerifyOptions verify_opts;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run the oracle-equivalence suite");
  verify->add_option("--max-n", verify_opts.max_n, "largest oracle chain");
  verify->add_option("--seed", verify_opts.seed, "sampling seed");
  verify->add_option("--tolerance", verify_opts.tolerance, "pass threshold (strict)");
  verify->add_option("--out", verify_out, "JSON report path");

  std::string manifest_path;
  std::string replay_out;
  auto* replay = app.add_subcommand("replay", "re-run a command from its manifest");
  replay->add_option("manifest", manifest_path, "manifest JSON")->required();
  replay->add_option("--out", replay_out, "override the output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << SPINWIRE_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "spinwire: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*transfer) cmd_transfer(transfer_opts, source, out);
    if (*logical) cmd_logical(logical_opts, logical_engine, out);
    if (*mqc) cmd_mqc(mqc_opts, initial, mqc_engine, phase_steps, out);
    if (*autocorr) cmd_autocorr(autocorr_opts, out);
    if (*verify) return cmd_verify(verify_opts, verify_out, out);
    if (*replay) {
      RunManifest manifest = RunManifest::from_json(read_file(manifest_path));
      if (!replay_out.empty()) manifest.output_files = {replay_out};
      if (manifest.command == "replay") throw UsageError("a manifest cannot replay itself");
      return run(manifest.replay_arguments(), out, err);
    }
  } catch (const UsageError& ex) {
    err << "spinwire: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const Error& ex) {
    err << "spinwire: " << to_string(ex.code()) << ": " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace spinwire::cli
