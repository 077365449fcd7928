// Exercises the prosa_sim binary end to end; the path comes from the
// PROSA_SIM_BIN environment variable set by the test harness.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "prosa/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int status = -1;
  std::string output;  // stdout + stderr
};

CommandResult run_command(const std::string& args) {
  const char* binary = std::getenv("PROSA_SIM_BIN");
  REQUIRE_MESSAGE(binary != nullptr, "PROSA_SIM_BIN must point at the prosa_sim binary");
  const std::string command = std::string(binary) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 512> buffer;
  while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    result.output += buffer.data();
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Small, fast experiment for CLI runs.
const char* kSmallConfig =
    "nodes = 30\n"
    "queries_per_node = 3\n"
    "topics = 6\n"
    "topics_per_peer = 2\n"
    "apl_window = 20\n"
    "apl_step = 10\n";

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("run writes all four artifacts") {
  TempDir dir("prosa_cli_run");
  const fs::path config_path = dir.path / "exp.cfg";
  std::ofstream(config_path) << kSmallConfig;
  const fs::path out = dir.path / "out";

  const CommandResult result =
      run_command("run --config " + config_path.string() + " --out " + out.string());
  CHECK_MESSAGE(result.status == 0, result.output);
  for (const char* name : {"metrics.csv", "trace.csv", "edges.txt", "manifest.json"}) {
    CHECK_MESSAGE(fs::exists(out / name), "missing ", name);
  }

  // metrics parse back through the project loader
  std::ifstream metrics(out / "metrics.csv");
  const prosa::MetricsReport report = prosa::io::load_metrics_csv(metrics);
  CHECK(report.node_count == 30);

  // manifest checksums match the files on disk
  const auto manifest = nlohmann::json::parse(read_file(out / "manifest.json"));
  CHECK(manifest["command"] == "run");
  CHECK(manifest["config"]["nodes"] == 30);
  for (const auto& entry : manifest["outputs"]) {
    const std::string content = read_file(out / entry["path"].get<std::string>());
    CHECK(content.size() == entry["bytes"].get<std::size_t>());
    char expected[17];
    std::snprintf(expected, sizeof(expected), "%016llx",
                  static_cast<unsigned long long>(prosa::io::fnv1a64(content)));
    CHECK(entry["fnv1a64"].get<std::string>() == expected);
  }
}

TEST_CASE("run fails loudly on a missing config") {
  TempDir dir("prosa_cli_missing");
  const CommandResult result = run_command(
      "run --config /no/such/config.cfg --out " + (dir.path / "out").string());
  CHECK(result.status != 0);
  CHECK(result.output.find("/no/such/config.cfg") != std::string::npos);
}

TEST_CASE("run rejects an invalid override") {
  TempDir dir("prosa_cli_badflag");
  const CommandResult result =
      run_command("run --nodes 0 --out " + (dir.path / "out").string());
  CHECK(result.status != 0);
  CHECK(result.output.find("node_count") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical artifacts") {
  TempDir dir("prosa_cli_seeded");
  const fs::path config_path = dir.path / "exp.cfg";
  std::ofstream(config_path) << kSmallConfig;

  for (const char* name : {"a", "b"}) {
    const CommandResult result =
        run_command("run --config " + config_path.string() + " --seed 4242 --out " +
                    (dir.path / name).string());
    REQUIRE_MESSAGE(result.status == 0, result.output);
  }
  for (const char* file : {"metrics.csv", "trace.csv", "edges.txt"}) {
    CHECK(read_file(dir.path / "a" / file) == read_file(dir.path / "b" / file));
  }
}

TEST_CASE("seed falls back to the environment variable") {
  TempDir dir("prosa_cli_envseed");
  const fs::path config_path = dir.path / "exp.cfg";
  std::ofstream(config_path) << kSmallConfig;

  const std::string base =
      "run --config " + config_path.string() + " --out ";
  const char* binary = std::getenv("PROSA_SIM_BIN");
  REQUIRE(binary != nullptr);
  // env-seeded run equals the flag-seeded run
  {
    const std::string command = std::string("PROSA_SIM_SEED=999 ") + binary + " " + base +
                                (dir.path / "env").string() + " >/dev/null 2>&1";
    REQUIRE(std::system(command.c_str()) == 0);
  }
  const CommandResult flagged =
      run_command(base + (dir.path / "flag").string() + " --seed 999");
  REQUIRE(flagged.status == 0);
  CHECK(read_file(dir.path / "env" / "metrics.csv") ==
        read_file(dir.path / "flag" / "metrics.csv"));
}

TEST_CASE("sweep emits per-size metrics and an ordered summary") {
  TempDir dir("prosa_cli_sweep");
  const fs::path config_path = dir.path / "exp.cfg";
  std::ofstream(config_path) << kSmallConfig;
  const fs::path out = dir.path / "out";

  const CommandResult result = run_command("sweep --config " + config_path.string() +
                                           " --sizes 40,20 --out " + out.string());
  CHECK_MESSAGE(result.status == 0, result.output);
  CHECK(fs::exists(out / "metrics_20.csv"));
  CHECK(fs::exists(out / "metrics_40.csv"));
  CHECK(fs::exists(out / "summary.csv"));
  CHECK(fs::exists(out / "manifest.json"));

  std::ifstream summary(out / "summary.csv");
  std::string header;
  std::getline(summary, header);
  CHECK(header == "size,apl,random_apl,cc,random_cc");
  std::string row20, row40;
  std::getline(summary, row20);
  std::getline(summary, row40);
  CHECK(row20.rfind("20,", 0) == 0);  // ascending despite input order 40,20
  CHECK(row40.rfind("40,", 0) == 0);

  // summary random columns agree with the per-size metrics files
  for (const char* size : {"20", "40"}) {
    std::ifstream metrics(out / (std::string("metrics_") + size + ".csv"));
    const prosa::MetricsReport report = prosa::io::load_metrics_csv(metrics);
    const std::string& row = (*size == '2') ? row20 : row40;
    std::istringstream fields(row);
    std::string field;
    std::getline(fields, field, ',');  // size
    std::getline(fields, field, ',');  // apl
    CHECK(std::stod(field) == doctest::Approx(report.apl).epsilon(1e-9));
    std::getline(fields, field, ',');  // random_apl
    REQUIRE(report.random_apl.has_value());
    CHECK(std::stod(field) == doctest::Approx(*report.random_apl).epsilon(1e-9));
  }
}

TEST_CASE("baseline prints the analytic formulas") {
  const CommandResult good = run_command("baseline 100 1000");
  CHECK(good.status == 0);
  CHECK(good.output.find("random_apl 2\n") != std::string::npos);
  CHECK(good.output.find("random_cc 0.10101010101") != std::string::npos);

  // undefined APL: nonzero status, cc still printed
  const CommandResult sparse = run_command("baseline 100 50");
  CHECK(sparse.status != 0);
  CHECK(sparse.output.find("random_apl undefined") != std::string::npos);
  CHECK(sparse.output.find("random_cc 0.005050505") != std::string::npos);

  CHECK(run_command("baseline 1 10").status != 0);
}

TEST_SUITE_END();
