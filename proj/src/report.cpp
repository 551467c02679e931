#include "neutrolab/report.hpp"

#include <array>
#include <map>
#include <ostream>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

namespace {

constexpr std::array<std::pair<Status, std::string_view>, 5> kNames{{
    {Status::Holds, "Holds"},
    {Status::CounterexampleFound, "CounterexampleFound"},
    {Status::ExampleVerified, "ExampleVerified"},
    {Status::ExampleContradictsText, "ExampleContradictsText"},
    {Status::Skipped, "Skipped"},
}};

}  // namespace

std::string_view to_string(Status s) {
  for (const auto& [st, name] : kNames)
    if (st == s) return name;
  return "?";
}

Status status_from_string(std::string_view text, std::string* cap) {
  constexpr std::string_view skipped = "Skipped(";
  if (text.starts_with(skipped) && text.ends_with(")")) {
    if (cap) *cap = std::string(text.substr(skipped.size(), text.size() - skipped.size() - 1));
    return Status::Skipped;
  }
  for (const auto& [st, name] : kNames)
    if (name == text && st != Status::Skipped) return st;
  throw ParseError(fmt::format("unknown status '{}'", text), 0);
}

std::string Report::status_text() const {
  if (status == Status::Skipped) return fmt::format("Skipped({})", skip_cap);
  return std::string(to_string(status));
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["status"] = r.status_text();
  j["witness"] = r.witness;
  j["universe"] = r.universe;
  j["trials"] = r.trials;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  try {
    Report r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>(), &r.skip_cap);
    r.witness = j.at("witness");
    r.universe = j.at("universe");
    r.trials = j.at("trials").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("malformed report: {}", e.what()), 0);
  }
}

Format format_from_string(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw UsageError(fmt::format("unknown format '{}' (expected text or json)", name));
}

void emit(std::ostream& out, const std::vector<Report>& reports, Format format,
          const std::vector<bool>& expected) {
  const auto as_expected = [&](std::size_t i) { return expected.empty() || expected.at(i); };
  std::size_t unexpected = 0;
  std::map<std::string, std::size_t> by_status;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ++by_status[reports[i].status_text()];
    if (!as_expected(i)) ++unexpected;
  }

  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    doc["summary"] = {{"total", reports.size()}, {"unexpected", unexpected}, {"by_status", by_status}};
    out << doc.dump(2) << '\n';
    return;
  }

  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out << fmt::format("{:<28} {:<24} trials={:<10} {:>9.1f} ms{}\n", r.claim_id, r.status_text(),
                       r.trials, r.elapsed_ms, as_expected(i) ? "" : "  UNEXPECTED");
    for (const auto& note : r.notes) out << "    " << note << '\n';
  }
  out << fmt::format("{} claims, {} unexpected", reports.size(), unexpected);
  for (const auto& [status, count] : by_status) out << fmt::format(", {} {}", count, status);
  out << '\n';
}

}  // namespace neutrolab
