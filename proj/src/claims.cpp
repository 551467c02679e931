#include "neutrolab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "claims_detail.hpp"
#include "neutrolab/error.hpp"
#include "neutrolab/harness.hpp"
#include "neutrolab/spec_io.hpp"

namespace neutrolab {

namespace claims {

void Checks::expect(std::string assertion, bool holds, ordered_json detail) {
  ordered_json entry{{"assertion", std::move(assertion)}, {"holds", holds}};
  if (!detail.is_null()) entry["detail"] = std::move(detail);
  checks_.push_back(std::move(entry));
  all_ = all_ && holds;
}

void Checks::verdict(std::string assertion, const Verdict& v, const Structure& s, bool want) {
  expect(std::move(assertion), v.holds == want, v.holds ? ordered_json(nullptr) : explain(s, v));
}

namespace {

template <class U>
ordered_json per_param(const SoftVerdict& v, const U& universe) {
  ordered_json out = ordered_json::object();
  for (const auto& [param, pv] : v.per_param) {
    ordered_json entry{{"holds", pv.holds}};
    if (!pv.holds) entry["failure"] = explain(universe, pv);
    if (!pv.flags.empty()) entry["flags"] = pv.flags;
    out[param] = std::move(entry);
  }
  return out;
}

}  // namespace

void Checks::soft(std::string assertion, const SoftVerdict& v, const Structure& s, bool want) {
  expect(std::move(assertion), v.overall == want, per_param(v, s));
}

void Checks::soft(std::string assertion, const SoftVerdict& v, const NCollection& c, bool want) {
  expect(std::move(assertion), v.overall == want, per_param(v, c));
}

bool Checks::all_hold() const { return all_; }

Report Checks::finish(const json& universe) const {
  Report r;
  r.status = all_ ? Status::ExampleVerified : Status::ExampleContradictsText;
  r.witness = {{"checks", checks_}};
  r.universe = universe;
  r.trials = checks_.size();
  for (const auto& c : checks_)
    if (!c["holds"].get<bool>()) r.notes.push_back("fails: " + c["assertion"].get<std::string>());
  return r;
}

json param_groupoid(std::uint32_t n, std::int64_t t, std::int64_t u) {
  return {{"kind", "param_groupoid"}, {"n", n}, {"t", t}, {"u", u}};
}

json neutro_ring(std::uint32_t n) { return {{"kind", "neutro_ring"}, {"n", n}}; }

json cyclic_group_ring(std::uint32_t r, std::uint32_t m) {
  return {{"kind", "group_ring"}, {"r", r}, {"basis", {{"kind", "cyclic_neutro_group"}, {"m", m}}}};
}

json groupoid_collection(const std::vector<json>& groupoids) {
  json components = json::array();
  for (const auto& g : groupoids) {
    components.push_back({{"kind_tag", {{"alg", "groupoid"}, {"neutrosophic", true}}}, {"spec", g}});
  }
  return {{"kind", "ncollection"}, {"components", components}};
}

json symbolic(const std::string& name) { return {{"kind", "symbolic"}, {"name", name}}; }

json data_file(const std::string& name) { return load_json(data_dir() / name); }

Labels range_labels(int n) {
  Labels out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace claims

std::string_view to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::ClosureProposition: return "ClosureProposition";
    case ClaimKind::NonClosureRemark: return "NonClosureRemark";
    case ClaimKind::ExampleCheck: return "ExampleCheck";
    case ClaimKind::Classification: return "Classification";
  }
  return "?";
}

int claim_chapter(std::string_view id) {
  const auto dash = id.find('-');
  if (dash == std::string_view::npos || dash + 1 >= id.size()) return 0;
  const char c = id[dash + 1];
  return c >= '0' && c <= '9' ? c - '0' : 0;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  // Iterative matcher with single-star backtracking.
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> out;
    claims::add_example_claims(out);
    claims::add_sweep_claims(out);
    const auto rank = [](const Claim& c) {
      switch (c.kind) {
        case ClaimKind::ExampleCheck:
        case ClaimKind::Classification: return 0;
        case ClaimKind::ClosureProposition: return 1;
        case ClaimKind::NonClosureRemark: return 2;
      }
      return 3;
    };
    std::stable_sort(out.begin(), out.end(), [&](const Claim& a, const Claim& b) {
      return std::pair(claim_chapter(a.id), rank(a)) < std::pair(claim_chapter(b.id), rank(b));
    });
    std::set<std::string> seen;
    for (const auto& c : out)
      if (!seen.insert(c.id).second) throw std::logic_error("duplicate claim id " + c.id);
    return out;
  }();
  return registry;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UsageError(fmt::format("unknown claim '{}'", id));
}

std::vector<const Claim*> select_claims(std::string_view filter) {
  std::vector<const Claim*> out;
  const auto& all = claim_registry();
  if (filter.empty() || filter == "all") {
    for (const auto& c : all) out.push_back(&c);
    return out;
  }
  const bool chapter = filter.size() == 3 && filter.starts_with("ch") && filter[2] >= '0' && filter[2] <= '9';
  for (const auto& c : all) {
    const bool hit = chapter ? claim_chapter(c.id) == filter[2] - '0' : glob_match(filter, c.id);
    if (hit) out.push_back(&c);
  }
  if (out.empty()) throw UsageError(fmt::format("filter '{}' matches no claim", filter));
  return out;
}

Report run_claim(const Claim& claim, const RunContext& context) {
  RunContext own = context;
  own.seed = claim_seed(context.seed, claim.id);
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = claim.run(own);
  } catch (const ResourceError& e) {
    r = Report{};
    r.status = Status::Skipped;
    r.skip_cap = e.cap();
    r.notes.push_back(e.what());
  }
  r.claim_id = claim.id;
  if (r.universe.is_null()) r.universe = claim.universe;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteResult run_suite(std::string_view filter, const RunContext& context) {
  SuiteResult out;
  for (const Claim* c : select_claims(filter)) {
    out.reports.push_back(run_claim(*c, context));
    const bool ok = out.reports.back().status == c->expected;
    out.expected.push_back(ok);
    if (!ok) ++out.unexpected;
  }
  return out;
}

}  // namespace neutrolab
