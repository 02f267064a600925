// pgca: batch driver for the verification campaigns.
//
//   pgca <command> [--config PATH] [--json PATH] [--seed N] [--verbose]
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 bad config or usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pgca/campaign.hpp"
#include "pgca/error.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfig = 2;

bool is_input_error(pgca::ErrorKind kind) {
  using pgca::ErrorKind;
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::ParseError:
    case ErrorKind::InvalidSpec:
    case ErrorKind::DerivedAlgebraViolation:
    case ErrorKind::OutOfSubalgebra:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::ZeroToNegativePower:
    case ErrorKind::DivisionByZero:
      return true;
    default:
      return false;
  }
}

pgca::Json load_config(const std::string& path) {
  if (path.empty()) return pgca::Json::object();
  std::ifstream in(path);
  if (!in) throw pgca::Error(pgca::ErrorKind::ConfigError, "cannot open config " + path);
  try {
    return pgca::Json::parse(in);
  } catch (const pgca::Json::parse_error& e) {
    throw pgca::Error(pgca::ErrorKind::ConfigError, "config " + path + " is not valid JSON: " + e.what());
  }
}

int run(const std::string& command, const std::string& config_path, const std::string& json_path,
        const std::optional<std::uint64_t>& seed, bool verbose) {
  pgca::CampaignResult result;
  try {
    result = pgca::run_campaign(command, load_config(config_path), seed);
  } catch (const pgca::Error& e) {
    if (!is_input_error(e.kind())) {
      std::cerr << "pgca " << command << ": " << e.what() << "\n";
      return kFailed;
    }
    const bool wrapped = e.kind() != pgca::ErrorKind::ConfigError;
    std::cerr << "pgca " << command << ": " << (wrapped ? "ConfigError: " : "") << e.what() << "\n";
    return kConfig;
  } catch (const pgca::Json::exception& e) {
    std::cerr << "pgca " << command << ": ConfigError: " << e.what() << "\n";
    return kConfig;
  }

  for (const auto& line : result.lines) std::cout << line << "\n";
  if (verbose) std::cout << result.report.dump(2) << "\n";
  std::cout << (result.passed ? "PASS " : "FAIL ") << command << "\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "pgca: cannot write " << json_path << "\n";
      return kConfig;
    }
    out << result.report.dump(2) << "\n";
  }
  return result.passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification campaigns for the centrally extended planar Galilean conformal algebra"};
  app.require_subcommand(1);

  std::string config_path;
  std::string json_path;
  std::uint64_t seed_value = 0;
  bool verbose = false;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--json", json_path, "write the JSON report here");
  auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized sampling (overrides the config)");
  app.add_flag("--verbose", verbose, "also print the JSON report");

  const std::map<std::string, std::string> about = {
      {"verify-algebra", "bracket table: antisymmetry, Jacobi, grading, PBW confluence"},
      {"verify-omega", "module axioms and cyclic closure for Omega(lambda, ...)"},
      {"whittaker-search", "singular Whittaker vector search up to a weight bound"},
      {"twist", "solve and check the automorphism twist to normal form"},
      {"psi14", "5x5 determinant and witness for psi_{1,4}"},
      {"tensor-probe", "Vandermonde reassembly and closure in Omega (x) V"},
      {"degree-check", "principal order laws and degree reduction on random vectors"},
  };
  for (const auto& name : pgca::campaign_commands()) app.add_subcommand(name, about.at(name))->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::optional<std::uint64_t> seed;
  if (*seed_opt) seed = seed_value;
  return run(command, config_path, json_path, seed, verbose);
}
