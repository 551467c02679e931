#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "neutrolab/claims.hpp"
#include "neutrolab/error.hpp"
#include "neutrolab/harness.hpp"
#include "neutrolab/magma.hpp"
#include "neutrolab/ncollect.hpp"
#include "neutrolab/ring.hpp"
#include "neutrolab/soft.hpp"
#include "neutrolab/spec_io.hpp"
#include "neutrolab/subalgebra.hpp"
#include "neutrolab/symbolic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;
using namespace neutrolab;

namespace {

enum Exit { kOk = 0, kClaimFailure = 1, kUsage = 2, kResource = 3 };

struct Loaded {
  json spec;
  fs::path base;
};

Loaded load(const std::string& file) {
  const fs::path path(file);
  return {load_json(path), path.parent_path()};
}

void print(const ordered_json& j) { fmt::print("{}\n", j.dump(2)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    const auto first = item.find_first_not_of(' ');
    const auto last = item.find_last_not_of(' ');
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  return out;
}

// "0,5,5I" for one carrier; "0,5;1,2" (one group per component) or a JSON
// array for N-collections.
std::vector<std::string> parse_labels(const std::string& text) {
  if (text.starts_with('[')) return json::parse(text).get<std::vector<std::string>>();
  auto labels = split(text, ',');
  std::erase(labels, "");
  return labels;
}

std::vector<std::vector<std::string>> parse_parts(const std::string& text) {
  if (text.starts_with('[')) return json::parse(text).get<std::vector<std::vector<std::string>>>();
  std::vector<std::vector<std::string>> parts;
  for (const auto& group : split(text, ';')) parts.push_back(parse_labels(group));
  return parts;
}

std::string strict_variant(const std::string& predicate) {
  static const std::map<std::string, std::string> strict{{"subgroupoid", "neutro-subgroupoid"},
                                                         {"subring", "neutro-subring"},
                                                         {"groupring-sub", "strict-groupring-sub"},
                                                         {"n-sub", "neutro-n-sub"}};
  if (const auto it = strict.find(predicate); it != strict.end()) return it->second;
  throw UsageError(fmt::format("predicate '{}' has no strict variant", predicate));
}

ordered_json verdict_json(const Verdict& v, const ordered_json& detail) {
  ordered_json j{{"holds", v.holds}};
  if (!v.holds) j["failure"] = detail;
  if (!v.flags.empty()) j["flags"] = v.flags;
  return j;
}

// ---- commands ----

int cmd_build(const std::string& file) {
  const auto [spec, base] = load(file);
  ordered_json out;
  if (is_symbolic_spec(spec)) {
    const auto u = build_symbolic(spec);
    out["kind"] = "symbolic";
    out["structure"] = std::visit([](const auto& x) { return to_string(x); }, u);
  } else if (is_ncollection_spec(spec)) {
    const auto c = build_ncollection(spec, base);
    out["kind"] = "ncollection";
    out["n"] = c->n();
    out["order"] = c->order();
    ordered_json comps = ordered_json::array();
    for (const auto& comp : c->components()) {
      comps.push_back({{"alg", to_string(comp.tag.alg)},
                       {"neutrosophic", comp.tag.neutrosophic},
                       {"size", comp.structure->size()}});
    }
    out["components"] = comps;
    out["mixed_class"] = to_string(classify_mixed(*c));
  } else {
    const auto s = build_structure(spec, base);
    out["kind"] = s->is_ring() ? "ring" : "magma";
    out["size"] = s->size();
    std::vector<std::string> labels;
    for (Index i = 0; i < s->size(); ++i) labels.push_back(s->label(i));
    out["elements"] = labels;
    if (s->is_ring()) {
      out["ring_axioms"] = verdict_json(validate_ring_axioms(s->ring()), nullptr);
      out["group_ring"] = s->ring().group_ring() != nullptr;
    } else {
      ordered_json kinds = ordered_json::object();
      for (const auto k : {MagmaKind::Groupoid, MagmaKind::Semigroup, MagmaKind::Group, MagmaKind::Loop}) {
        kinds[std::string(to_string(k))] = verify_kind(s->magma(), k).holds;
      }
      out["kinds"] = kinds;
    }
  }
  print(out);
  return kOk;
}

int cmd_check_sub(const std::string& file, const std::string& subset, std::string predicate, bool strict) {
  const auto [spec, base] = load(file);
  if (strict) predicate = strict_variant(predicate);
  Verdict v;
  ordered_json detail;
  ordered_json members;
  if (is_ncollection_spec(spec)) {
    const auto c = build_ncollection(spec, base);
    const auto m = NSubset::from_labels(*c, parse_parts(subset));
    v = n_predicate(*c, m, predicate);
    detail = explain(*c, v);
    members = m.labels(*c);
  } else {
    const auto s = build_structure(spec, base);
    const auto m = s->subset(parse_labels(subset));
    v = find_predicate(predicate, *s)(*s, m);
    detail = explain(*s, v);
    members = s->labels_of(m);
  }
  ordered_json out{{"predicate", predicate}, {"subset", members}};
  out.update(verdict_json(v, detail));
  print(out);
  return v.holds ? kOk : kClaimFailure;
}

int cmd_enumerate(const std::string& file, const std::string& predicate, bool full_scan) {
  const auto [spec, base] = load(file);
  const auto s = build_structure(spec, base);
  EnumOptions eo;
  if (full_scan) eo.strategy = EnumStrategy::FullScan;
  const auto subs = enumerate_subs(*s, find_predicate(predicate, *s), eo);
  ordered_json list = ordered_json::array();
  for (const auto& p : subs) list.push_back(s->labels_of(p));
  print({{"predicate", predicate}, {"count", subs.size()}, {"subsets", list}});
  return kOk;
}

int cmd_classify(const std::string& file) {
  const auto [spec, base] = load(file);
  ordered_json out;
  if (is_ncollection_spec(spec)) {
    const auto c = build_ncollection(spec, base);
    const auto lm = classify_lagrange_mixed(*c);
    out = {{"mixed_class", to_string(classify_mixed(*c))},
           {"lagrange_mixed", to_string(lm.kind)},
           {"lagrange_orders", lm.lagrange_orders},
           {"non_lagrange_orders", lm.non_lagrange_orders},
           {"vacuous", lm.vacuous}};
  } else {
    const auto s = build_structure(spec, base);
    if (s->is_ring()) throw UsageError("classify needs a magma or an N-collection");
    const auto lc = classify_lagrange(s->magma());
    ordered_json yes = ordered_json::array(), no = ordered_json::array();
    for (const auto& p : lc.lagrange) yes.push_back(s->labels_of(p));
    for (const auto& p : lc.non_lagrange) no.push_back(s->labels_of(p));
    out = {{"lagrange", to_string(lc.kind)}, {"vacuous", lc.vacuous}, {"lagrange_subs", yes}, {"non_lagrange_subs", no}};
  }
  print(out);
  return kOk;
}

int cmd_soft_op(const std::string& op_name, const std::string& lhs_file, const std::string& rhs_file,
                const std::string& out_file, bool literal) {
  const SoftOp op = soft_op_from_string(op_name);
  const auto reading = literal ? UnionParams::Literal : UnionParams::Operational;
  const auto [lhs, lbase] = load(lhs_file);
  const auto [rhs, rbase] = load(rhs_file);
  ordered_json result;
  if (is_ncollection_spec(lhs.at("universe"))) {
    result = n_soft_to_json(apply_soft_op(op, n_soft_from_json(lhs, lbase), n_soft_from_json(rhs, rbase), reading));
  } else {
    result = soft_to_json(apply_soft_op(op, finite_soft_from_json(lhs, lbase), finite_soft_from_json(rhs, rbase),
                                        reading));
  }
  if (out_file.empty() || out_file == "-") {
    print(result);
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error(fmt::format("cannot write '{}'", out_file));
    out << result.dump(2) << '\n';
  }
  return kOk;
}

int cmd_soft_check(const std::string& file, const std::string& predicate) {
  const auto [j, base] = load(file);
  SoftVerdict sv;
  ordered_json params = ordered_json::object();
  if (is_ncollection_spec(j.at("universe"))) {
    const auto f = n_soft_from_json(j, base);
    const auto& c = *f.universe();
    sv = is_soft_with(f, [&](const NSubset& m) { return n_predicate(c, m, predicate); });
    for (const auto& [p, v] : sv.per_param) params[p] = verdict_json(v, explain(c, v));
  } else {
    const auto f = finite_soft_from_json(j, base);
    const auto& s = *f.universe();
    sv = is_soft(f, find_predicate(predicate, s));
    for (const auto& [p, v] : sv.per_param) params[p] = verdict_json(v, explain(s, v));
  }
  print({{"predicate", predicate}, {"holds", sv.overall}, {"params", params}});
  return sv.overall ? kOk : kClaimFailure;
}

int cmd_verify(const std::string& filter, std::uint64_t seed, const std::string& format, std::size_t budget,
               std::size_t trials) {
  const Format fmt_kind = format_from_string(format);
  RunContext ctx;
  ctx.seed = seed;
  ctx.budget = budget;
  ctx.random_trials = trials;
  const auto result = run_suite(filter, ctx);
  emit(std::cout, result.reports, fmt_kind, result.expected);
  return result.unexpected == 0 ? kOk : kClaimFailure;
}

int cmd_hunt(const std::string& tmpl, const std::string& universe_file, std::size_t budget, std::uint64_t seed,
             bool literal, const std::string& format) {
  const Format fmt_kind = format_from_string(format);
  const auto [spec, base] = load(universe_file);
  HuntOptions o;
  o.budget = budget;
  o.seed = seed;
  o.reading = literal ? UnionParams::Literal : UnionParams::Operational;
  const auto start = std::chrono::steady_clock::now();
  Report r = hunt(parse_hunt_template(tmpl), spec, o, base);
  r.claim_id = "hunt:" + tmpl;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(std::cout, {r}, fmt_kind);
  return r.status == Status::CounterexampleFound ? kOk : kResource;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft neutrosophic algebraic structures: construction, predicates and claim verification"};
  app.require_subcommand(1);

  std::string file, subset, predicate, op, lhs, rhs, out, tmpl, filter = "all", format = "text";
  bool strict = false, literal = false, full_scan = false;
  std::uint64_t seed = 0;
  std::size_t budget = 10'000, trials = 10'000;

  auto* build = app.add_subcommand("build", "build a structure from a JSON spec and describe it");
  build->add_option("spec", file, "structure spec file")->required();

  auto* check = app.add_subcommand("check-sub", "test a subset against a predicate");
  check->add_option("--structure", file, "structure spec file")->required();
  check->add_option("--subset", subset, "comma-separated labels; ';' separates N-collection parts")->required();
  check->add_option("--predicate", predicate, "predicate name")->required();
  check->add_flag("--strict", strict, "use the strict (neutrosophic) variant of the predicate");

  auto* enumerate = app.add_subcommand("enumerate", "list every subset satisfying a predicate");
  enumerate->add_option("--structure", file, "structure spec file")->required();
  enumerate->add_option("--predicate", predicate, "predicate name")->required();
  enumerate->add_flag("--full-scan", full_scan, "scan all subsets instead of growing closures");

  auto* classify = app.add_subcommand("classify", "Lagrange class of a magma, mixed class of an N-collection");
  classify->add_option("--structure", file, "structure spec file")->required();

  auto* soft_op = app.add_subcommand("soft-op", "combine two soft sets");
  soft_op->add_option("--op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"restricted-intersection", "extended-intersection", "restricted-union", "extended-union",
                             "and", "or", "same-param-intersection", "disjoint-union"}));
  soft_op->add_option("--lhs", lhs, "left soft-set file")->required();
  soft_op->add_option("--rhs", rhs, "right soft-set file")->required();
  soft_op->add_option("-o,--output", out, "output file (stdout when omitted)");
  soft_op->add_flag("--union-params-literal", literal, "restricted union over the union of the parameter sets");

  auto* soft_check = app.add_subcommand("soft-check", "test every assignment of a soft set");
  soft_check->add_option("--file", file, "soft-set file")->required();
  soft_check->add_option("--predicate", predicate, "predicate name")->required();

  auto* verify = app.add_subcommand("verify", "run registered claims");
  verify->add_option("--filter", filter, "all, chN, a claim id or a glob");
  verify->add_option("--seed", seed, "global seed");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--budget", budget, "hunt budget per remark");
  verify->add_option("--trials", trials, "randomized sweep trials");

  auto* hunt_cmd = app.add_subcommand("hunt", "search for a counterexample to closure");
  hunt_cmd->add_option("--template", tmpl, "<op>:<predicate>")->required();
  hunt_cmd->add_option("--universe", file, "universe spec file")->required();
  hunt_cmd->add_option("--budget", budget, "trial budget");
  hunt_cmd->add_option("--seed", seed, "seed");
  hunt_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  hunt_cmd->add_flag("--union-params-literal", literal, "restricted union over the union of the parameter sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(file);
    if (check->parsed()) return cmd_check_sub(file, subset, predicate, strict);
    if (enumerate->parsed()) return cmd_enumerate(file, predicate, full_scan);
    if (classify->parsed()) return cmd_classify(file);
    if (soft_op->parsed()) return cmd_soft_op(op, lhs, rhs, out, literal);
    if (soft_check->parsed()) return cmd_soft_check(file, predicate);
    if (verify->parsed()) return cmd_verify(filter, seed, format, budget, trials);
    if (hunt_cmd->parsed()) return cmd_hunt(tmpl, file, budget, seed, literal, format);
  } catch (const ResourceError& e) {
    fmt::print(stderr, "neutrolab: {}\n", e.what());
    return kResource;
  } catch (const Error& e) {
    fmt::print(stderr, "neutrolab: {}\n", e.what());
    return kUsage;
  } catch (const json::exception& e) {
    fmt::print(stderr, "neutrolab: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}
