#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "neutrolab/report.hpp"

namespace neutrolab {

enum class ClaimKind { ClosureProposition, NonClosureRemark, ExampleCheck, Classification };

std::string_view to_string(ClaimKind k);

struct RunContext {
  std::uint64_t seed = 0;  // global seed; each claim derives its own
  std::size_t budget = 10'000;
  std::size_t random_trials = 10'000;
};

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::ExampleCheck;
  std::string summary;
  nlohmann::json universe;
  // "exhaustive", "randomized", "exhaustive|randomized", "hunt" or "fixed".
  std::string generator;
  Status expected = Status::ExampleVerified;
  // Fills status, witness, trials and notes. `seed` is already per-claim.
  std::function<Report(const RunContext&)> run;
};

// Every registered claim, in registry order (by chapter, then kind).
const std::vector<Claim>& claim_registry();

// Throws UsageError for unknown ids.
const Claim& find_claim(std::string_view id);

// "all" or "" for everything, "chN" for one chapter, a glob with * and ?, or
// an exact id. Throws UsageError when nothing matches.
std::vector<const Claim*> select_claims(std::string_view filter);

// Times the claim, derives its seed and maps ResourceError to Skipped(cap).
Report run_claim(const Claim& claim, const RunContext& context);

struct SuiteResult {
  std::vector<Report> reports;
  std::vector<bool> expected;  // parallel to reports
  std::size_t unexpected = 0;
};

SuiteResult run_suite(std::string_view filter, const RunContext& context);

// Chapter digit of ids such as "prop-3.1.4"; 0 when absent.
int claim_chapter(std::string_view id);

bool glob_match(std::string_view pattern, std::string_view text);

}  // namespace neutrolab
