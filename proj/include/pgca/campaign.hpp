#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgca/serialize.hpp"

namespace pgca {

struct CampaignResult {
  Json report;
  bool passed = true;
  /// One human-readable line per check, in report order.
  std::vector<std::string> lines;
};

/// verify-algebra, verify-omega, whittaker-search, twist, psi14,
/// tensor-probe, degree-check.
const std::vector<std::string>& campaign_commands();

/// Runs one campaign. An empty config object selects the built-in defaults.
/// Malformed configs throw Error(ConfigError) (or the parse error kind of
/// the offending value); failed checks only clear `passed`.
CampaignResult run_campaign(std::string_view command, const Json& config, std::optional<std::uint64_t> seed_override);

}  // namespace pgca
