#include <doctest.h>

#include "pgca/campaign.hpp"
#include "pgca/error.hpp"

using namespace pgca;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Inconclusive;
}

}  // namespace

TEST_CASE("verify-algebra at index bound 3") {
  const auto r = run_campaign("verify-algebra", Json{{"index_bound", 3}}, std::nullopt);
  CHECK(r.passed);
  CHECK(r.report["jacobi_violations"].empty());
  CHECK(r.report["antisymmetry_violations"] == 0);
}

TEST_CASE("whittaker-search reports the psi_{1,2} witness") {
  const Json cfg = Json::parse(R"({"cases": [{"label": "p", "weight_bound": 2, "expect": "witness",
    "datum": {"m": 1, "n": 2, "values": {"I[2]": "1", "J[2]": "1"}},
    "expected_witness": {"I[1]": "1", "J[1]": "1"}}]})");
  const auto r = run_campaign("whittaker-search", cfg, std::nullopt);
  CHECK(r.passed);
  CHECK(r.report["results"][0]["expected_in_kernel"] == true);
}

TEST_CASE("failed expectations clear passed without throwing") {
  const Json cfg = Json::parse(R"({"cases": [{"label": "p", "weight_bound": 2, "expect": "none",
    "datum": {"m": 1, "n": 2, "values": {"I[2]": "1", "J[2]": "1"}}}]})");
  const auto r = run_campaign("whittaker-search", cfg, std::nullopt);
  CHECK_FALSE(r.passed);
  CHECK(r.lines.front().rfind("FAIL", 0) == 0);
}

TEST_CASE("config errors") {
  CHECK(kind_of([] { run_campaign("twist", Json{{"bogus", 1}}, std::nullopt); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { run_campaign("psi14", Json{{"alpha", "1/0"}}, std::nullopt); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { run_campaign("psi14", Json{{"samples", -1}}, std::nullopt); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { run_campaign("psi14", Json{{"seed", "x"}}, std::nullopt); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { run_campaign("nope", Json::object(), std::nullopt); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { run_campaign("verify-algebra", Json::array(), std::nullopt); }) == ErrorKind::ConfigError);
  const Json bad_datum = Json::parse(R"({"cases": [{"datum": {"m": 1, "n": 1, "values": {"L[0]": "1"}}}]})");
  CHECK(kind_of([&] { run_campaign("twist", bad_datum, std::nullopt); }) == ErrorKind::OutOfSubalgebra);
}

TEST_CASE("reports are deterministic and seed dependent") {
  const Json cfg{{"pairs", {{1, 1}}}, {"vectors", 10}, {"order_pairs", 40}};
  const auto a = run_campaign("degree-check", cfg, std::uint64_t{5}).report.dump();
  const auto b = run_campaign("degree-check", cfg, std::uint64_t{5}).report.dump();
  const auto c = run_campaign("degree-check", cfg, std::uint64_t{6}).report.dump();
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("seed override wins over the config seed") {
  const auto a = run_campaign("psi14", Json{{"seed", 9}, {"search_weight", 0}}, std::uint64_t{3});
  const auto b = run_campaign("psi14", Json{{"seed", 3}, {"search_weight", 0}}, std::nullopt);
  CHECK(a.report.dump() == b.report.dump());
}
