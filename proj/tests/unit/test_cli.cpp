#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "spinwire/error.hpp"

using namespace spinwire::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("spinwire_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(TimeGrid, Parse) {
  const auto g = TimeGrid::parse("0:2:5");
  EXPECT_EQ(g.points(), (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
  EXPECT_TRUE(TimeGrid::parse("0:1:0").points().empty());
  EXPECT_EQ(TimeGrid::parse("3:3:1").points(), std::vector<double>{3.0});
  for (const char* bad : {"", "0:1", "a:1:2", "0:1:-1", "0:1:2:3", "0:nan:4"}) {
    EXPECT_THROW(TimeGrid::parse(bad), std::exception) << bad;
  }
}

TEST(FormatNumber, FifteenDigits) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_number(3.14159265358979323), "3.14159265358979");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(Manifest, JsonRoundTrip) {
  RunManifest m;
  m.command = "transfer";
  m.parameters = {{"n", "5"}, {"grid", "0:1:3"}};
  m.artifact_version = "0.1.0";
  m.timestamp = "2026-01-01T00:00:00Z";
  m.output_files = {"a.csv"};
  const auto back = RunManifest::from_json(m.to_json());
  EXPECT_EQ(back.command, m.command);
  EXPECT_EQ(back.parameters, m.parameters);
  EXPECT_EQ(back.output_files, m.output_files);
  EXPECT_EQ(back.replay_arguments(), (std::vector<std::string>{"transfer", "--grid", "0:1:3", "--n", "5", "--out", "a.csv"}));
  EXPECT_EQ(manifest_path_for("x/y.csv"), "x/y.csv.manifest.json");
  EXPECT_THROW(RunManifest::from_json("[]"), spinwire::Error);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"transfer"}).code, kExitUsage);
  EXPECT_EQ(invoke({"transfer", "--grid", "0:1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"transfer", "--grid", "0:1:2", "--family", "random"}).code, kExitUsage);
  EXPECT_EQ(invoke({"transfer", "--grid", "0:1:2", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"logical", "--grid", "0:1:2", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"mqc", "--grid", "0:1:2", "--n", "14", "--engine", "oracle"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--max-n", "13"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, EmptyGridIsHeaderOnly) {
  const auto r = invoke({"transfer", "--grid", "0:1:0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "t,tau,site,correlation\n");
}

TEST(Cli, TransferMirrorRow) {
  const double t_star = 3.14159265358979323846 * 21 / 4;
  const auto r = invoke({"transfer", "--grid", format_number(t_star) + ":" + format_number(t_star) + ":1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 22u);
  const auto last = rows.back();
  EXPECT_NEAR(std::stod(last.substr(last.rfind(',') + 1)), 1.0, 1e-9);
  EXPECT_EQ(last.substr(last.find(',', last.find(',') + 1) + 1, 3), "21,");
}

TEST(Cli, TransferDQSignAlternates) {
  const auto r = invoke({"transfer", "--model", "dq", "--grid", "4:4:1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = lines(r.out);
  for (std::size_t l = 1; l < rows.size(); ++l) {
    const double value = std::stod(rows[l].substr(rows[l].rfind(',') + 1));
    if (std::abs(value) > 1e-12) {
      EXPECT_EQ(value > 0, l % 2 == 1) << rows[l];
    }
  }
}

TEST(Cli, LogicalInitialRow) {
  const auto r = invoke({"logical", "--n", "20", "--grid", "0:0:1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).at(0), "t,C_x,C_y,C_z,C_1,F");
  EXPECT_EQ(lines(r.out).at(1), "0,0,0,0,0.5,0.125");
}

TEST(Cli, MqcEnginesAgree) {
  const auto a = invoke({"mqc", "--n", "8", "--grid", "0:6:7", "--engine", "analytic"});
  const auto b = invoke({"mqc", "--n", "8", "--grid", "0:6:7", "--engine", "oracle"});
  ASSERT_EQ(a.code, kExitOk);
  ASSERT_EQ(b.code, kExitOk);
  const auto ra = lines(a.out), rb = lines(b.out);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 1; i < ra.size(); ++i) {
    std::istringstream sa(ra[i]), sb(rb[i]);
    for (std::string x, y; std::getline(sa, x, ',') && std::getline(sb, y, ',');) {
      EXPECT_NEAR(std::stod(x), std::stod(y), 1e-8);
    }
  }
  EXPECT_EQ(lines(a.out).at(1).substr(0, 4), "0,1,");
}

TEST(Cli, ManifestReplayIsByteIdentical) {
  const auto dir = scratch_dir("replay");
  const auto csv = (dir / "run.csv").string();
  ASSERT_EQ(invoke({"logical", "--n", "9", "--sigma", "0.05", "--seed", "17", "--grid", "0:5:11", "--engine", "exact", "--out", csv}).code, kExitOk);
  const std::string first = slurp(csv);
  const auto manifest = manifest_path_for(csv);
  ASSERT_TRUE(fs::exists(manifest));
  const auto replayed = (dir / "again.csv").string();
  ASSERT_EQ(invoke({"replay", manifest, "--out", replayed}).code, kExitOk);
  EXPECT_EQ(slurp(replayed), first);
  EXPECT_FALSE(first.empty());
}

TEST(Verify, DeterministicAndPassing) {
  const VerifyOptions options{5, 3, 1e-8};
  const auto a = run_verification(options);
  const auto b = run_verification(options);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(Verify, ZeroToleranceReportsReplayableFailures) {
  const auto dir = scratch_dir("verify");
  const auto path = (dir / "report.json").string();
  const auto r = invoke({"verify", "--max-n", "4", "--tolerance", "0", "--out", path});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  const std::string json = slurp(path);
  EXPECT_NE(json.find("\"inputs\""), std::string::npos);
  EXPECT_NE(json.find("\"passed\": false"), std::string::npos);
}
