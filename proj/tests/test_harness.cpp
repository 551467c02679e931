#include <doctest.h>

#include <map>
#include <set>

#include <fmt/format.h>

#include "neutrolab/error.hpp"
#include "neutrolab/harness.hpp"
#include "neutrolab/spec_io.hpp"

using namespace neutrolab;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json kPg421 = {{"kind", "param_groupoid"}, {"n", 4}, {"t", 2}, {"u", 1}};
const json kPg1032 = {{"kind", "param_groupoid"}, {"n", 10}, {"t", 3}, {"u", 2}};

// Independent model of <Z_n u I> under (x, y) -> t x + u y, elements as
// coefficient pairs (a, b) for a + bI, encoded a + n b.
struct Model {
  int n, t, u;
  int size() const { return n * n; }
  int op(int x, int y) const {
    const int a = (t * (x % n) + u * (y % n)) % n;
    const int b = (t * (x / n) + u * (y / n)) % n;
    return a + n * b;
  }
  std::string label(int x) const {
    const int a = x % n, b = x / n;
    if (b == 0) return std::to_string(a);
    const auto ib = b == 1 ? std::string("I") : fmt::format("{}I", b);
    return a == 0 ? ib : fmt::format("{}+{}", a, ib);
  }
  bool closed(unsigned mask) const {
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if ((mask >> x & 1U) && (mask >> y & 1U) && !(mask >> op(x, y) & 1U)) return false;
    return true;
  }
  std::set<std::string> labels(unsigned mask) const {
    std::set<std::string> out;
    for (int x = 0; x < size(); ++x)
      if (mask >> x & 1U) out.insert(label(x));
    return out;
  }
};

// Nonempty closed subsets of pg(4,2,1) by a raw 2^16 scan.
std::vector<unsigned> closed_masks() {
  const Model m{4, 2, 1};
  std::vector<unsigned> out;
  for (unsigned mask = 1; mask < (1U << 16); ++mask)
    if (m.closed(mask)) out.push_back(mask);
  return out;
}

std::set<std::set<std::string>> population_labels(const FiniteDomain& d) {
  std::set<std::set<std::string>> out;
  for (const auto& p : d.population) {
    const auto l = d.universe->labels_of(p);
    out.emplace(l.begin(), l.end());
  }
  return out;
}

}  // namespace

TEST_CASE("fnv1a matches the published 64-bit vectors") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
  CHECK(claim_seed(0, "prop-2.1.1") == fnv1a("prop-2.1.1"));
  CHECK(claim_seed(5, "x") == (5 ^ fnv1a("x")));
  CHECK(claim_seed(0, "remark-2.1.1") != claim_seed(0, "remark-2.1.2"));
}

TEST_CASE("outcomes separate empty assignments from violations") {
  CHECK(outcome_of(Verdict::ok()) == Outcome::Ok);
  CHECK(outcome_of(Verdict::fail("not closed", {1, 2})) == Outcome::Violation);
  CHECK(outcome_of(Verdict::fail("empty", {}).flag("empty-assignment")) == Outcome::Empty);
  SoftVerdict sv;
  sv.per_param = {{"a1", Verdict::fail("e").flag("empty-assignment")}, {"a2", Verdict::ok()}};
  CHECK(outcome_of(sv) == Outcome::Empty);
  sv.per_param.emplace_back("a3", Verdict::fail("not closed"));
  CHECK(outcome_of(sv) == Outcome::Violation);
}

TEST_CASE("explain names the offending elements") {
  const auto g = build_structure(kPg1032);
  const auto v = find_predicate("subgroupoid", *g)(*g, g->subset({"0", "5", "5I", "3"}));
  REQUIRE_FALSE(v.holds);
  const auto e = explain(*g, v);
  CHECK(e["reason"] == "not closed");
  const Model m{10, 3, 2};
  const int x = g->at(e["x"].get<std::string>()), y = g->at(e["y"].get<std::string>());
  // Index order of the built structure need not match the model; compare by label.
  int mx = -1, my = -1;
  for (int i = 0; i < m.size(); ++i) {
    if (m.label(i) == g->label(x)) mx = i;
    if (m.label(i) == g->label(y)) my = i;
  }
  CHECK(e["product"] == m.label(m.op(mx, my)));

  const auto z6 = build_structure({{"kind", "neutro_ring"}, {"n", 6}});
  const auto rv = find_predicate("subring", *z6)(*z6, z6->subset({"0", "1"}));
  REQUIRE_FALSE(rv.holds);
  const auto re = explain(*z6, rv);
  CHECK(re.contains("op"));
  CHECK(re.contains("result"));
}

TEST_CASE("finite domain population equals a raw subset scan") {
  const auto d = finite_domain(kPg421, "subgroupoid");
  CHECK(d.complete);
  const Model m{4, 2, 1};
  std::set<std::set<std::string>> oracle;
  for (unsigned mask : closed_masks()) oracle.insert(m.labels(mask));
  CHECK(oracle.size() == 59);
  CHECK(population_labels(d) == oracle);
}

TEST_CASE("exhaustive sweeps agree with a shape-level oracle") {
  const Model model{4, 2, 1};
  const auto masks = closed_masks();
  const auto d = finite_domain(kPg421, "subgroupoid");
  // Map the domain's population order onto the oracle masks.
  std::map<std::set<std::string>, unsigned> by_labels;
  for (unsigned mask : masks) by_labels[model.labels(mask)] = mask;
  std::vector<unsigned> pop;
  for (const auto& p : d.population) {
    const auto l = d.universe->labels_of(p);
    pop.push_back(by_labels.at({l.begin(), l.end()}));
  }
  const std::size_t n = pop.size();
  // Soft sets over {a1, a2}: one member on a1, one on a2, or both.
  struct Shape {
    int mask;
    std::size_t a1, a2;
  };
  std::vector<Shape> shapes;
  for (std::size_t i = 0; i < n; ++i) shapes.push_back({1, i, 0});
  for (std::size_t i = 0; i < n; ++i) shapes.push_back({2, 0, i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) shapes.push_back({3, i, j});
  std::vector<char> union_closed(n * n), meet_empty(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      union_closed[i * n + j] = model.closed(pop[i] | pop[j]);
      meet_empty[i * n + j] = (pop[i] & pop[j]) == 0;
    }
  std::uint64_t union_violations = 0, meet_empties = 0;
  for (const auto& f : shapes)
    for (const auto& k : shapes) {
      bool bad = false, empty = false;
      if ((f.mask & k.mask & 1) != 0) {
        bad = bad || !union_closed[f.a1 * n + k.a1];
        empty = empty || meet_empty[f.a1 * n + k.a1];
      }
      if ((f.mask & k.mask & 2) != 0) {
        bad = bad || !union_closed[f.a2 * n + k.a2];
        empty = empty || meet_empty[f.a2 * n + k.a2];
      }
      union_violations += bad;
      meet_empties += empty;
    }

  SweepOptions o;
  const auto u = sweep(d, {SoftOp::ExtendedUnion}, o);
  CHECK(u.exhaustive);
  CHECK(u.population == n);
  CHECK(u.trials == shapes.size() * shapes.size());
  CHECK(u.violations == union_violations);
  CHECK(u.violations > 0);
  REQUIRE_FALSE(u.witness.is_null());
  CHECK(replay_witness(json::parse(u.witness.dump())).violated);

  const auto x = sweep(d, {SoftOp::ExtendedIntersection}, o);
  CHECK(x.violations == 0);
  CHECK(x.empty == meet_empties);
  CHECK(x.witness.is_null());
}

TEST_CASE("randomized sweeps are seeded") {
  const auto d = finite_domain(kPg421, "subgroupoid");
  SweepOptions o;
  o.exhaustive_pair_cap = 0;
  o.random_trials = 500;
  o.seed = 11;
  const auto a = sweep(d, {SoftOp::ExtendedUnion, SoftOp::And}, o);
  const auto b = sweep(d, {SoftOp::ExtendedUnion, SoftOp::And}, o);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.trials == 500);
  CHECK(a.violations == b.violations);
  CHECK(a.empty == b.empty);
  CHECK(a.witness == b.witness);
  CHECK_THROWS_AS(sweep(d, {}, o), DomainError);
}

TEST_CASE("hunt templates") {
  const auto t = parse_hunt_template("extended-union:subgroupoid");
  CHECK(t.op == SoftOp::ExtendedUnion);
  CHECK(t.predicate == "subgroupoid");
  CHECK_THROWS_AS(parse_hunt_template("extended-union"), UsageError);
  CHECK_THROWS_AS(parse_hunt_template("sideways:subgroupoid"), UsageError);
}

TEST_CASE("hunt finds a replayable union counterexample") {
  HuntOptions o;
  o.hints = json::array({{"0", "5", "5I", "5+5I"}, {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"}});
  const auto r = hunt(parse_hunt_template("extended-union:subgroupoid"), kPg1032, o);
  REQUIRE(r.status == Status::CounterexampleFound);
  CHECK(r.trials <= 3);
  CHECK(r.witness["reason"] == "not closed");
  const auto replay = replay_witness(json::parse(r.witness.dump()));
  CHECK(replay.violated);
  CHECK(replay.param == r.witness["param"]);

  // With the right-hand side swapped for the left, the union is closed.
  auto tampered = json::parse(r.witness.dump());
  tampered["rhs"] = tampered["lhs"];
  CHECK_FALSE(replay_witness(tampered).violated);
  CHECK_THROWS_AS(replay_witness(json{{"op", "and"}}), ParseError);
}

TEST_CASE("hunt without hints is deterministic under its seed") {
  HuntOptions o;
  o.seed = 7;
  const auto a = hunt(parse_hunt_template("or:subgroupoid"), kPg1032, o);
  const auto b = hunt(parse_hunt_template("or:subgroupoid"), kPg1032, o);
  REQUIRE(a.status == Status::CounterexampleFound);
  CHECK(a.trials == b.trials);
  CHECK(a.witness.dump() == b.witness.dump());
}

TEST_CASE("hunting a closed operation exhausts the budget honestly") {
  HuntOptions o;
  o.budget = 200;
  const auto r = hunt(parse_hunt_template("extended-intersection:subgroupoid"), kPg421, o);
  CHECK(r.status == Status::Skipped);
  CHECK(r.skip_cap == "budget");
  CHECK(r.trials == 200);
  CHECK(r.witness.is_null());
}

TEST_CASE("N-collection predicates") {
  const json bi = {{"kind", "ncollection"},
                   {"components",
                    {{{"kind_tag", {{"alg", "groupoid"}, {"neutrosophic", true}}}, {"spec", kPg421}},
                     {{"kind_tag", {{"alg", "groupoid"}, {"neutrosophic", true}}}, {"spec", kPg421}}}}};
  const auto c = build_ncollection(bi);
  const auto names = n_predicate_names();
  CHECK(std::find(names.begin(), names.end(), "mixed-sub") != names.end());
  const auto empty_part = NSubset::from_labels(*c, {{"0"}, {}});
  const auto v = n_predicate(*c, empty_part, "n-sub");
  CHECK(outcome_of(v) == Outcome::Empty);
  CHECK(n_predicate(*c, NSubset::from_labels(*c, {{"0"}, {"0", "2"}}), "n-sub").holds);
  CHECK_FALSE(n_predicate(*c, NSubset::from_labels(*c, {{"0"}, {"0", "2"}}), "neutro-n-sub").holds);
  CHECK(n_predicate(*c, NSubset::from_labels(*c, {{"0"}, {"0", "2I"}}), "neutro-n-sub").holds);
  CHECK_THROWS_AS(n_predicate(*c, empty_part, "sub"), DomainError);

  const auto d = n_domain(bi, "n-sub");
  CHECK(d.complete);
  CHECK(d.population.size() == 59 * 59);
}
