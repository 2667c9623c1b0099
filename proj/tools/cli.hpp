#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace spinwire::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// start:end:steps, endpoints included; steps = 0 is an empty grid.
struct TimeGrid {
  double start = 0.0;
  double end = 0.0;
  int steps = 0;

  static TimeGrid parse(const std::string& text);
  std::vector<double> points() const;
};

// 15 significant digits, C locale, no negative zero.
std::string format_number(double value);

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string artifact_version;
  std::string timestamp;
  std::vector<std::string> output_files;

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);
  // Argument vector that re-executes the run, without the program name.
  std::vector<std::string> replay_arguments() const;
};

std::string manifest_path_for(const std::string& output_path);

struct VerifyOptions {
  int max_n = 8;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
};

struct VerifyCase {
  std::string name;
  std::string inputs;  // compact JSON, enough to replay the case
  double deviation = 0.0;
  bool passed = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<VerifyCase> cases;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

VerifyReport run_verification(const VerifyOptions& options);

// Entry point shared by the executable and the tests; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinwire::cli
