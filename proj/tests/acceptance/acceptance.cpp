// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
// Every campaign is run twice so AC10 can compare the JSON dumps byte for byte.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "pgca/campaign.hpp"
#include "pgca/error.hpp"

using namespace pgca;

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
  CampaignResult result;
  double seconds = 0;
  bool deterministic = false;
};

std::vector<std::string> g_failures;

Run run(const std::string& command, const Json& cfg) {
  Run out;
  const auto start = Clock::now();
  out.result = run_campaign(command, cfg, std::nullopt);
  out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const auto again = run_campaign(command, cfg, std::nullopt);
  out.deterministic = again.report.dump() == out.result.report.dump();
  if (!out.deterministic) g_failures.push_back(command + " report differs between runs");
  return out;
}

// All checks whose id starts with `prefix` passed, and there was at least one.
bool checks_pass(const Run& r, const std::string& prefix, std::size_t* count = nullptr) {
  std::size_t n = 0;
  bool ok = true;
  for (const auto& c : r.result.report["checks"]) {
    const auto id = c["id"].get<std::string>();
    if (id.rfind(prefix, 0) != 0) continue;
    ++n;
    if (!c["passed"].get<bool>()) {
      ok = false;
      g_failures.push_back(id + ": " + c["detail"].get<std::string>());
    }
  }
  if (count) *count = n;
  return ok && n > 0;
}

int g_failed = 0;

void report(const char* id, bool ok, const std::string& detail) {
  std::cout << id << ' ' << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
  if (!ok) ++g_failed;
}

std::string secs(double s) { return std::to_string(static_cast<int>(s * 1000)) + " ms"; }

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  try {
    const Run algebra = run("verify-algebra", Json{{"index_bound", 4}});
    const Run omega_axioms = run("verify-omega", Json{{"closure", {{"seeds", 0}}}});
    const Run omega = run("verify-omega", Json::object());

    const Json irreducible = Json::parse(R"json({"cases": [
      {"label": "(1,1)", "datum": {"m": 1, "n": 1, "values": {"I[1]": "1", "J[1]": "1"}}, "weight_bound": 4, "expect": "none"},
      {"label": "(2,2)", "datum": {"m": 2, "n": 2, "values": {"I[3]": "1", "J[3]": "1"}}, "weight_bound": 4, "expect": "none"},
      {"label": "(3,1)", "datum": {"m": 3, "n": 1, "values": {"I[3]": "1", "J[3]": "1"}}, "weight_bound": 4, "expect": "none"}
    ]})json");
    const Run search_none = run("whittaker-search", irreducible);
    const Run search = run("whittaker-search", Json::object());
    const Run psi14 = run("psi14", Json{{"alpha", "1"}, {"beta", "1"}, {"samples", 5}});
    const Run twist = run("twist", Json::object());
    const Run degree = run("degree-check", Json::object());
    const Run tensor = run("tensor-probe", Json::object());

    std::size_t n = 0;
    {
      const bool ok = checks_pass(algebra, "antisymmetry") && checks_pass(algebra, "jacobi_identity") &&
                      algebra.result.report["index_bound"] == 4 && algebra.seconds < 60;
      report("AC1", ok,
             std::to_string(algebra.result.report["triples_checked"].get<std::uint64_t>()) + " triples, " +
                 secs(algebra.seconds));
    }
    {
      const bool ok = checks_pass(omega_axioms, "omega_axioms/", &n) && omega_axioms.seconds < 60;
      report("AC2", ok, std::to_string(n) + " specs, " + secs(omega_axioms.seconds));
    }
    {
      const bool ok = checks_pass(omega, "closure/", &n);
      report("AC3", ok, std::to_string(n) + " specs x 10 seeds, index_bound 4, degree_cap 10");
    }
    {
      const bool ok = checks_pass(search_none, "whittaker_search/", &n) && n == 3;
      report("AC4", ok, "no Whittaker vector up to weight 4 for (1,1), (2,2), (3,1)");
    }
    {
      bool ok = checks_pass(search, "whittaker_search/", &n);
      ok = checks_pass(psi14, "psi14/") && ok;
      ok = ok && psi14.result.report["kernel_dimension"] == 1;
      report("AC5", ok, std::to_string(n) + " search cases; psi14 kernel dimension " +
                            std::to_string(psi14.result.report["kernel_dimension"].get<std::size_t>()));
    }
    {
      const bool ok = checks_pass(twist, "twist/m=n=1/") && checks_pass(twist, "twist/m=2,n=0/");
      report("AC6", ok, "m=n=1 and m=2,n=0");
    }
    {
      const bool ok = checks_pass(degree, "principal_order/") && checks_pass(degree, "degree_reduction/", &n) &&
                      n == 12;
      report("AC7", ok, "200 order pairs; 4 cases x 3 pairs x 50 vectors");
    }
    {
      const bool ok = checks_pass(tensor, "vandermonde/") && checks_pass(tensor, "tensor_closure/") &&
                      checks_pass(tensor, "j_separation/", &n) && n == 4;
      report("AC8", ok, "reassembly, closure from X^2Y (x) w, " + std::to_string(n) + " separation instances");
    }
    {
      const bool ok = checks_pass(algebra, "straightening_confluence");
      report("AC9", ok, "100 random words, length <= 5, |index| <= 3");
    }
    {
      const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
      bool ok = total < 600;
      for (const Run* r : {&algebra, &omega_axioms, &omega, &search_none, &search, &psi14, &twist, &degree, &tensor})
        ok = ok && r->deterministic;
      report("AC10", ok, "all campaigns rerun byte-identical, suite " + secs(total));
    }
  } catch (const Error& e) {
    std::cout << "acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  for (const auto& f : g_failures) std::cout << "  failure: " << f << "\n";
  return g_failed == 0 ? 0 : 1;
}
