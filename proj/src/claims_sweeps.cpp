// Closure propositions (swept over soft-set populations) and non-closure
// remarks (hunted for a counterexample).

#include <fmt/format.h>

#include "claims_detail.hpp"
#include "neutrolab/harness.hpp"
#include "neutrolab/spec_io.hpp"
#include "neutrolab/subalgebra.hpp"

namespace neutrolab::claims {

namespace {

const std::vector<SoftOp> kMeets = {SoftOp::ExtendedIntersection, SoftOp::RestrictedIntersection, SoftOp::And};

Claim closure_claim(std::string id, std::string summary, json universe, std::string predicate,
                    std::vector<SoftOp> ops) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::ClosureProposition;
  c.summary = std::move(summary);
  c.universe = universe;
  c.generator = "exhaustive|randomized";
  c.expected = Status::Holds;
  c.run = [universe, predicate, ops](const RunContext& ctx) {
    SweepOptions so;
    so.seed = ctx.seed;
    so.random_trials = ctx.random_trials;
    const SweepResult r = is_ncollection_spec(universe)
                              ? sweep(n_domain(universe, predicate, data_dir()), ops, so)
                              : sweep(finite_domain(universe, predicate, data_dir()), ops, so);
    Report rep;
    rep.trials = r.trials;
    if (r.violations > 0) {
      rep.status = Status::CounterexampleFound;
      rep.witness = r.witness;
    } else {
      rep.status = Status::Holds;
      ordered_json names = ordered_json::array();
      for (const auto op : ops) names.push_back(to_string(op));
      rep.witness = {{"predicate", predicate},
                     {"ops", names},
                     {"mode", r.exhaustive ? "exhaustive" : "randomized"},
                     {"population", r.population},
                     {"violations", r.violations},
                     {"empty_assignments", r.empty},
                     {"undefined_pairs", r.undefined}};
    }
    const auto scope = r.exhaustive ? fmt::format("exhaustive over {} members", r.population)
                                    : fmt::format("randomized over {} trials", r.trials);
    rep.notes.push_back(fmt::format("{}: {} violations, {} empty assignments, {} undefined pairs", scope,
                                    r.violations, r.empty, r.undefined));
    return rep;
  };
  return c;
}

// For a found witness, evaluates x*y inside the violating assignment of the
// replayed result; used to pin the element a remark's text derives.
struct Probe {
  std::string x, y;
};

ordered_json probe_witness(const ordered_json& witness, const Probe& probe) {
  const auto plain = json::parse(witness.dump());
  const auto f = finite_soft_from_json(plain.at("lhs"));
  const auto k = finite_soft_from_json(plain.at("rhs"));
  const auto op = soft_op_from_string(plain.at("op").get<std::string>());
  const auto result = apply_soft_op(op, f, k);
  const Structure& s = *f.universe();
  const Subset& m = result.at(plain.at("param").get<std::string>());
  const Index x = s.at(probe.x);
  const Index y = s.at(probe.y);
  const Index xy = s.is_ring() ? s.ring().mul(x, y) : s.magma().op(x, y);
  return {{"x", probe.x},
          {"y", probe.y},
          {"product", s.label(xy)},
          {"x_in_result", m.contains(x)},
          {"y_in_result", m.contains(y)},
          {"product_in_result", m.contains(xy)}};
}

Claim remark_claim(std::string id, std::string summary, json universe, std::string tmpl, json hints = json::array(),
                   std::optional<Probe> probe = std::nullopt) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::NonClosureRemark;
  c.summary = std::move(summary);
  c.universe = universe;
  c.generator = "hunt";
  c.expected = Status::CounterexampleFound;
  c.run = [universe, tmpl, hints, probe](const RunContext& ctx) {
    HuntOptions o;
    o.budget = ctx.budget;
    o.seed = ctx.seed;
    o.hints = hints;
    Report r = hunt(parse_hunt_template(tmpl), universe, o, data_dir());
    if (r.status == Status::CounterexampleFound && probe) r.witness["derived"] = probe_witness(r.witness, *probe);
    return r;
  };
  return c;
}

Claim ideals_are_subrings(std::string id, json universe) {
  Claim c;
  c.id = std::move(id);
  c.kind = ClaimKind::ClosureProposition;
  c.summary = "every soft neutrosophic ideal is a soft neutrosophic ring";
  c.universe = universe;
  c.generator = "exhaustive";
  c.expected = Status::Holds;
  c.run = [universe](const RunContext&) {
    const auto s = build_structure(universe);
    const auto ideals = enumerate_subs(*s, find_predicate("ideal", *s));
    const auto& subring = find_predicate("subring", *s);
    Report r;
    r.status = Status::Holds;
    for (const auto& p : ideals) {
      ++r.trials;
      if (const auto v = subring(*s, p); !v) {
        r.status = Status::CounterexampleFound;
        r.witness = {{"ideal", s->labels_of(p)}, {"detail", explain(*s, v)}};
        return r;
      }
    }
    r.witness = {{"ideals", ideals.size()}, {"violations", 0}};
    return r;
  };
  return c;
}

// Z2 over the cyclic neutrosophic semigroup {g^i, g^i I : i < 3}.
json semigroup_ring() {
  return {{"kind", "group_ring"}, {"r", 2}, {"basis", {{"kind", "cyclic_neutro_group"}, {"m", 3}, {"semigroup", true}}}};
}

}  // namespace

void add_sweep_claims(std::vector<Claim>& out) {
  const auto pg421 = param_groupoid(4, 2, 1);
  const auto pg1032 = param_groupoid(10, 3, 2);
  const auto bigroupoid = groupoid_collection({param_groupoid(10, 2, 3), pg421});
  const auto three = groupoid_collection({param_groupoid(10, 2, 3), pg421, param_groupoid(12, 8, 4)});
  const auto z6 = neutro_ring(6);
  const auto z12 = neutro_ring(12);
  const auto z2c4 = cyclic_group_ring(2, 4);
  const auto mixed = data_file("mixed_5.json");

  // Chapter 2.
  out.push_back(closure_claim("theorem-2.1.2", "intersection of soft neutrosophic groupoids over one parameter set",
                              pg421, "subgroupoid", {SoftOp::SameParamIntersection}));
  out.push_back(closure_claim("theorem-2.1.3", "union of soft neutrosophic groupoids with disjoint parameters", pg421,
                              "subgroupoid", {SoftOp::DisjointUnion}));
  out.push_back(closure_claim("prop-2.1.1", "extended intersection of soft neutrosophic groupoids", pg421,
                              "subgroupoid", {SoftOp::ExtendedIntersection}));
  out.push_back(closure_claim("prop-2.1.2", "restricted intersection of soft neutrosophic groupoids", pg421,
                              "subgroupoid", {SoftOp::RestrictedIntersection}));
  out.push_back(closure_claim("prop-2.1.3", "AND of soft neutrosophic groupoids", pg421, "subgroupoid",
                              {SoftOp::And}));
  const json groupoid_hints = json::array({{"0", "5", "5I", "5+5I"}, range_labels(10)});
  out.push_back(remark_claim("remark-2.1.1", "extended union of soft neutrosophic groupoids", pg1032,
                             "extended-union:subgroupoid", groupoid_hints, Probe{"5I", "3"}));
  out.push_back(remark_claim("remark-2.1.2", "restricted union of soft neutrosophic groupoids", pg1032,
                             "restricted-union:subgroupoid", groupoid_hints));
  out.push_back(remark_claim("remark-2.1.3", "OR of soft neutrosophic groupoids", pg1032, "or:subgroupoid",
                             groupoid_hints));
  out.push_back(closure_claim("prop-2.2.1", "intersections and AND of soft neutrosophic bigroupoids", bigroupoid,
                              "n-sub", kMeets));
  out.push_back(closure_claim("prop-2.2.2", "intersections and AND of soft neutrosophic biideals", bigroupoid,
                              "n-ideal", kMeets));
  out.push_back(closure_claim("prop-2.3.1", "intersections and AND of soft neutrosophic N-groupoids", three,
                              "n-sub", kMeets));
  out.push_back(closure_claim("prop-2.3.2", "intersections and AND of soft neutrosophic N-ideals", three, "n-ideal",
                              kMeets));

  // Chapter 3.
  out.push_back(ideals_are_subrings("theorem-3.1.3", z6));
  out.push_back(closure_claim("prop-3.1.1", "extended intersection of soft neutrosophic rings", z6, "subring",
                              {SoftOp::ExtendedIntersection}));
  out.push_back(closure_claim("prop-3.1.2", "restricted intersection of soft neutrosophic rings", z6, "subring",
                              {SoftOp::RestrictedIntersection}));
  out.push_back(closure_claim("prop-3.1.3", "AND of soft neutrosophic rings", z6, "subring", {SoftOp::And}));
  out.push_back(closure_claim("prop-3.1.4", "intersections and AND of soft neutrosophic ideals", z6, "ideal",
                              kMeets));
  const json ring_hints = json::array({{"0", "2", "4", "6", "8", "10"}, {"0", "3", "6", "9"}});
  out.push_back(remark_claim("remark-3.1.1", "extended union of soft neutrosophic rings", z12,
                             "extended-union:subring", ring_hints));
  out.push_back(remark_claim("remark-3.1.2", "restricted union of soft neutrosophic rings", z12,
                             "restricted-union:subring", ring_hints));
  out.push_back(remark_claim("remark-3.1.3", "OR of soft neutrosophic rings", z12, "or:subring", ring_hints));

  // Chapter 4.
  out.push_back(closure_claim("prop-4.1.1", "intersections and AND of soft neutrosophic group rings", z2c4,
                              "groupring-sub", kMeets));
  out.push_back(remark_claim("remark-4.1.1", "restricted union of soft neutrosophic group rings", z2c4,
                             "restricted-union:groupring-sub"));

  // Chapter 5.
  out.push_back(closure_claim("prop-5.1.1", "intersections and AND of soft neutrosophic semigroup rings",
                              semigroup_ring(), "groupring-sub", kMeets));
  out.push_back(remark_claim("remark-5.1.1", "restricted union of soft neutrosophic semigroup rings", semigroup_ring(),
                             "restricted-union:groupring-sub"));

  // Chapter 6.
  out.push_back(closure_claim("prop-6.1.1", "intersections and AND of soft mixed neutrosophic N-structures", mixed,
                              "mixed-sub", kMeets));
  const auto parts = [](std::initializer_list<Labels> p) { return json(std::vector<Labels>(p)); };
  const Labels a3 = {"e", "(123)", "(132)"};
  const Labels evens = {"0", "2", "4", "6", "8"};
  const json mixed_hints = json::array({
      parts({{"1", "I"}, {"0", "3", "3I"}, {"0", "2", "2I"}, a3, evens}),
      parts({{"2", "I"}, {"0", "2", "4", "2I", "4I"}, {"0", "2", "2I"}, a3, {"0", "5"}}),
      parts({{"1", "2"}, {"0", "3"}, {"0", "2"}, a3, evens}),
      parts({{"1", "I"}, {"0", "3I"}, {"0", "2", "2I"}, a3, evens}),
      parts({{"1", "2"}, {"0", "3I"}, {"0", "2I"}, a3, {"0", "5"}}),
  });
  out.push_back(remark_claim("remark-6.1.1", "restricted union of soft mixed neutrosophic N-structures", mixed,
                             "restricted-union:mixed-sub", mixed_hints));
}

}  // namespace neutrolab::claims
