#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace neutrolab {

enum class Status { Holds, CounterexampleFound, ExampleVerified, ExampleContradictsText, Skipped };

struct Report {
  std::string claim_id;
  Status status = Status::Holds;
  std::string skip_cap;  // set when status is Skipped
  nlohmann::ordered_json witness;
  nlohmann::ordered_json universe;
  std::uint64_t trials = 0;
  double elapsed_ms = 0.0;
  // Text-only remarks (counts of empty assignments, undefined pairs, ...).
  std::vector<std::string> notes;

  // "Skipped(budget)" for skipped reports, the plain status name otherwise.
  std::string status_text() const;
};

std::string_view to_string(Status s);
// Parses "Holds", ..., "Skipped(cap)"; the cap goes to `cap` when given.
Status status_from_string(std::string_view text, std::string* cap = nullptr);

// Exactly the fields claim_id, status, witness, universe, trials, elapsed_ms.
nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

enum class Format { Text, Json };
Format format_from_string(std::string_view name);

// Text: one line per report plus a summary. Json: {"reports": [...], "summary": {...}}.
// `expected` (parallel to `reports`, optional) marks which reports matched
// their registered status.
void emit(std::ostream& out, const std::vector<Report>& reports, Format format,
          const std::vector<bool>& expected = {});

}  // namespace neutrolab
