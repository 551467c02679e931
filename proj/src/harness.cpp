#include "neutrolab/harness.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "neutrolab/error.hpp"
#include "neutrolab/spec_io.hpp"
#include "neutrolab/subalgebra.hpp"

namespace neutrolab {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Outcome outcome_of(const Verdict& v) {
  if (v.holds) return Outcome::Ok;
  return v.has_flag("empty-assignment") ? Outcome::Empty : Outcome::Violation;
}

Outcome outcome_of(const SoftVerdict& v) {
  Outcome worst = Outcome::Ok;
  for (const auto& [p, pv] : v.per_param) worst = std::max(worst, outcome_of(pv));
  return worst;
}

ordered_json explain(const Structure& s, const Verdict& v) {
  constexpr std::string_view nested = "not a substructure: ";
  if (v.reason.starts_with(nested)) {
    Verdict inner = v;
    inner.reason = v.reason.substr(nested.size());
    auto j = explain(s, inner);
    j["reason"] = v.reason;
    return j;
  }
  ordered_json j;
  j["reason"] = v.reason;
  const auto& w = v.witness;
  const auto lab = [&](Index i) { return s.label(i); };
  const auto product = [&](Index x, Index y) { return s.is_ring() ? s.ring().mul(x, y) : s.magma().op(x, y); };
  if (v.reason == "not closed" && w.size() == 2 && !s.is_ring()) {
    j["x"] = lab(w[0]);
    j["y"] = lab(w[1]);
    j["product"] = lab(s.magma().op(w[0], w[1]));
  } else if (s.is_ring() && w.size() == 3 && v.reason.starts_with("not closed under")) {
    const auto& r = s.ring();
    j["x"] = lab(w[0]);
    if (w[2] == 2) {
      j["op"] = "-";
      j["result"] = lab(r.neg(w[0]));
    } else {
      j["y"] = lab(w[1]);
      j["op"] = w[2] == 0 ? "+" : "*";
      j["result"] = lab(w[2] == 0 ? r.add(w[0], w[1]) : r.mul(w[0], w[1]));
    }
  } else if (v.reason.starts_with("not absorbing") && w.size() == 3) {
    j["x"] = lab(w[0]);
    j["by"] = lab(w[1]);
    j["result"] = lab(w[2] == 0 ? product(w[0], w[1]) : product(w[1], w[0]));
  } else if (!w.empty()) {
    std::vector<std::string> labels;
    for (auto i : w)
      if (i < s.size()) labels.push_back(lab(i));
    j["elements"] = labels;
  }
  return j;
}

ordered_json explain(const NCollection& c, const Verdict& v) {
  constexpr std::string_view prefix = "component ";
  if (v.reason.starts_with(prefix) && !v.witness.empty() && v.witness[0] < c.n()) {
    const auto colon = v.reason.find(": ");
    Verdict inner = v;
    inner.reason = colon == std::string::npos ? v.reason : v.reason.substr(colon + 2);
    inner.witness.erase(inner.witness.begin());
    ordered_json j;
    j["component"] = v.witness[0];
    const auto detail = explain(*c[v.witness[0]].structure, inner);
    for (const auto& [k, val] : detail.items()) j[k] = val;
    j["reason"] = v.reason;
    return j;
  }
  return ordered_json{{"reason", v.reason}};
}

namespace {

constexpr std::array<const char*, 2> kParams{"a1", "a2"};

struct NMode {
  NSubMode mode;
  bool ideal;
  bool pseudo;
};

const std::map<std::string, NMode, std::less<>>& n_modes() {
  static const std::map<std::string, NMode, std::less<>> modes{
      {"n-sub", {NSubMode::Loose, false, false}},       {"neutro-n-sub", {NSubMode::Plain, false, false}},
      {"strong-n-sub", {NSubMode::Strong, false, false}}, {"mixed-sub", {NSubMode::Mixed, false, false}},
      {"n-ideal", {NSubMode::Plain, true, false}},      {"pseudo-n-ideal", {NSubMode::Plain, true, true}},
  };
  return modes;
}

Subset random_seed(std::size_t n, Rng& rng) {
  Subset seed(n);
  const std::size_t k = 1 + rng() % 2;
  for (std::size_t i = 0; i < k; ++i) seed.insert(rng() % n);
  return seed;
}

Subset grow(const Structure& s, const Subset& seed, bool ideal) {
  return ideal ? ideal_closure(s, seed) : closure(s, seed);
}

template <class M>
std::optional<M> pick(const std::vector<M>& pool, Rng& rng) {
  if (pool.empty()) return std::nullopt;
  return pool[rng() % pool.size()];
}

FiniteDomain finite_base(const json& universe, const std::string& predicate, const fs::path& base,
                         const DomainOptions& options) {
  auto s = build_structure(universe, base);
  if (s->size() > options.carrier_cap) {
    throw ResourceError("carrier_cap", fmt::format("carrier of {} elements", s->size()));
  }
  const Predicate& p = find_predicate(predicate, *s);
  FiniteDomain d;
  d.universe = s;
  d.universe_spec = universe;
  d.predicate = predicate;
  d.test = [s, &p](const Subset& m) { return p(*s, m); };
  d.explain = [s](const Verdict& v) { return explain(*s, v); };
  d.serialize = [](const FiniteSoftSet& f) { return soft_to_json(f); };
  d.member_from_json = [s](const json& j) { return s->subset(j.get<std::vector<std::string>>()); };
  return d;
}

NDomain n_base(const json& universe, const std::string& predicate, const fs::path& base) {
  if (!n_modes().contains(predicate)) throw DomainError(fmt::format("unknown N-collection predicate '{}'", predicate));
  auto c = build_ncollection(universe, base);
  NDomain d;
  d.universe = c;
  d.universe_spec = universe;
  d.predicate = predicate;
  d.test = [c, predicate](const NSubset& m) { return n_predicate(*c, m, predicate); };
  d.explain = [c](const Verdict& v) { return explain(*c, v); };
  d.serialize = [](const NSoftSet& f) { return n_soft_to_json(f); };
  d.member_from_json = [c](const json& j) {
    return NSubset::from_labels(*c, j.get<std::vector<std::vector<std::string>>>());
  };
  return d;
}

// ---- evaluation shared by sweeps and hunts ----

template <class U, class M>
ordered_json make_witness(const SoftDomain<U, M>& d, SoftOp op, UnionParams reading, const SoftSet<U, M>& f,
                          const SoftSet<U, M>& k, const SoftVerdict& sv) {
  ordered_json w;
  w["op"] = to_string(op);
  if (op == SoftOp::RestrictedUnion) w["union_params"] = reading == UnionParams::Literal ? "literal" : "operational";
  w["predicate"] = d.predicate;
  w["lhs"] = d.serialize(f);
  w["rhs"] = d.serialize(k);
  for (const auto& [param, v] : sv.per_param) {
    if (outcome_of(v) != Outcome::Violation) continue;
    w["param"] = param;
    w["reason"] = v.reason;
    w["indices"] = v.witness;
    w["detail"] = d.explain(v);
    break;
  }
  return w;
}

template <class U, class M>
struct Evaluation {
  Outcome outcome;
  ordered_json witness;
};

// nullopt when the operation is undefined on the pair.
template <class U, class M>
std::optional<Evaluation<U, M>> evaluate(const SoftDomain<U, M>& d, SoftOp op, UnionParams reading,
                                         const SoftSet<U, M>& f, const SoftSet<U, M>& k) {
  std::optional<SoftSet<U, M>> result;
  try {
    result.emplace(apply_soft_op(op, f, k, reading));
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const SoftVerdict sv = is_soft_with(*result, d.test);
  Evaluation<U, M> e{outcome_of(sv), nullptr};
  if (e.outcome == Outcome::Violation) e.witness = make_witness(d, op, reading, f, k, sv);
  return e;
}

template <class U, class M>
std::optional<SoftSet<U, M>> random_soft(const SoftDomain<U, M>& d, Rng& rng) {
  const unsigned mask = 1 + rng() % 3;
  std::vector<typename SoftSet<U, M>::Entry> entries;
  for (unsigned k = 0; k < kParams.size(); ++k) {
    if (((mask >> k) & 1U) == 0) continue;
    auto m = d.sample(rng);
    if (!m) return std::nullopt;
    entries.emplace_back(kParams[k], std::move(*m));
  }
  return SoftSet<U, M>(d.universe, std::move(entries));
}

void tally(SweepResult& r, Outcome o, ordered_json witness) {
  ++r.trials;
  if (o == Outcome::Empty) ++r.empty;
  if (o == Outcome::Violation) {
    ++r.violations;
    if (r.witness.is_null()) r.witness = std::move(witness);
  }
}

// ---- exhaustive sweep over interned members ----

struct Shape {
  unsigned mask;
  std::array<std::uint32_t, 2> id;
};

std::optional<Outcome> fast_outcome(SoftOp op, const Shape& f, const Shape& k, const std::vector<Outcome>& table,
                                    std::size_t m) {
  const unsigned shared = f.mask & k.mask;
  Outcome worst = Outcome::Ok;
  const auto take = [&](std::uint32_t a, std::uint32_t b) { worst = std::max(worst, table[a * m + b]); };
  const auto pointwise = [&] {
    for (unsigned p = 0; p < 2; ++p)
      if ((shared >> p) & 1U) take(f.id[p], k.id[p]);
    return worst;
  };
  switch (op) {
    case SoftOp::RestrictedIntersection:
    case SoftOp::RestrictedUnion:
      if (shared == 0) return std::nullopt;
      return pointwise();
    case SoftOp::ExtendedIntersection:
    case SoftOp::ExtendedUnion:
      return pointwise();
    case SoftOp::SameParamIntersection:
      if (f.mask != k.mask) return std::nullopt;
      return pointwise();
    case SoftOp::DisjointUnion:
      if (shared != 0) return std::nullopt;
      return Outcome::Ok;
    case SoftOp::And:
    case SoftOp::Or:
      for (unsigned p = 0; p < 2; ++p)
        for (unsigned q = 0; q < 2; ++q)
          if (((f.mask >> p) & 1U) && ((k.mask >> q) & 1U)) take(f.id[p], k.id[q]);
      return worst;
  }
  return std::nullopt;
}

template <class U, class M>
void sweep_exhaustive(const SoftDomain<U, M>& d, const std::vector<SoftOp>& ops, const SweepOptions& o,
                      SweepResult& r) {
  using Traits = SoftTraits<U, M>;
  const auto& pop = d.population;
  const std::size_t m = pop.size();
  std::vector<Outcome> meet(m * m), join(m * m);
  const bool need_join = std::any_of(ops.begin(), ops.end(), [](SoftOp op) { return !is_meet(op); });
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      meet[i * m + j] = outcome_of(d.test(Traits::meet(pop[i], pop[j])));
      if (need_join) join[i * m + j] = outcome_of(d.test(Traits::join(pop[i], pop[j])));
    }
  }
  std::vector<Shape> shapes;
  shapes.reserve(2 * m + m * m);
  for (std::uint32_t i = 0; i < m; ++i) shapes.push_back({1U, {i, 0}});
  for (std::uint32_t i = 0; i < m; ++i) shapes.push_back({2U, {0, i}});
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) shapes.push_back({3U, {i, j}});

  const auto materialize = [&](const Shape& s) {
    std::vector<typename SoftSet<U, M>::Entry> entries;
    for (unsigned p = 0; p < 2; ++p)
      if ((s.mask >> p) & 1U) entries.emplace_back(kParams[p], pop[s.id[p]]);
    return SoftSet<U, M>(d.universe, std::move(entries));
  };

  const std::uint64_t pairs = static_cast<std::uint64_t>(shapes.size()) * shapes.size();
  const std::uint64_t stride = std::max<std::uint64_t>(1, pairs / std::max<std::size_t>(1, o.crosscheck));
  for (const SoftOp op : ops) {
    const auto& table = is_meet(op) ? meet : join;
    std::uint64_t index = 0;
    for (const auto& f : shapes) {
      for (const auto& k : shapes) {
        const auto fast = fast_outcome(op, f, k, table, m);
        const bool first_violation = fast && *fast == Outcome::Violation && r.witness.is_null();
        ordered_json witness;
        if (index++ % stride == 0 || first_violation) {
          const auto real = evaluate(d, op, UnionParams::Operational, materialize(f), materialize(k));
          const bool agree = real ? (fast && *fast == real->outcome) : !fast;
          if (!agree) throw std::logic_error("table-driven sweep disagrees with the soft-set operations");
          if (real) witness = real->witness;
        }
        if (!fast) {
          ++r.undefined;
          continue;
        }
        tally(r, *fast, std::move(witness));
      }
    }
  }
}

template <class U, class M>
void sweep_random(const SoftDomain<U, M>& d, const std::vector<SoftOp>& ops, const SweepOptions& o,
                  SweepResult& r) {
  Rng rng(o.seed);
  std::size_t attempt = 0;
  std::size_t sample_failures = 0;
  const std::size_t attempt_cap = 20 * o.random_trials + 100;
  while (r.trials < o.random_trials && attempt < attempt_cap) {
    const SoftOp op = ops[attempt++ % ops.size()];
    const auto f = random_soft(d, rng);
    const auto k = random_soft(d, rng);
    if (!f || !k) {
      if (++sample_failures > 64) throw ResourceError("sample", "no member satisfying the predicate was found");
      continue;
    }
    const auto e = evaluate(d, op, UnionParams::Operational, *f, *k);
    if (!e) {
      ++r.undefined;
      continue;
    }
    tally(r, e->outcome, e->witness);
  }
}

template <class U, class M>
SweepResult sweep_impl(const SoftDomain<U, M>& d, const std::vector<SoftOp>& ops, const SweepOptions& o) {
  if (ops.empty()) throw DomainError("sweep needs at least one operation");
  SweepResult r;
  r.population = d.population.size();
  const std::uint64_t m = d.population.size();
  const std::uint64_t shapes = 2 * m + m * m;
  r.exhaustive = d.complete && (m == 0 || shapes * shapes <= o.exhaustive_pair_cap);
  if (r.exhaustive) {
    sweep_exhaustive(d, ops, o, r);
  } else {
    sweep_random(d, ops, o, r);
  }
  return r;
}

template <class U, class M>
Replay replay_impl(const SoftDomain<U, M>& d, const SoftSet<U, M>& f, const SoftSet<U, M>& k, SoftOp op,
                   UnionParams reading) {
  const auto result = apply_soft_op(op, f, k, reading);
  for (const auto& [param, m] : result.entries()) {
    Verdict v = d.test(m);
    if (outcome_of(v) == Outcome::Violation) return {true, param, std::move(v)};
  }
  return {};
}

template <class U, class M>
Report hunt_impl(const SoftDomain<U, M>& d, SoftOp op, const HuntOptions& o, const fs::path& base) {
  using Soft = SoftSet<U, M>;
  Report r;
  r.universe = d.universe_spec;

  std::vector<M> pool;
  for (const auto& h : o.hints) {
    M m = d.member_from_json(h);
    if (!d.test(m).holds) continue;
    if (std::find(pool.begin(), pool.end(), m) == pool.end()) pool.push_back(std::move(m));
  }
  const auto hinted_end = static_cast<std::ptrdiff_t>(pool.size());
  for (const auto& m : d.population)
    if (std::find(pool.begin(), pool.begin() + hinted_end, m) == pool.begin() + hinted_end) pool.push_back(m);

  ordered_json witness;
  const std::string lhs_param = kParams[0];
  const std::string rhs_param = op == SoftOp::DisjointUnion ? kParams[1] : kParams[0];
  for (std::size_t hi = 0; hi < pool.size() && witness.is_null() && r.trials < o.budget; ++hi) {
    for (std::size_t lo = 0; lo <= hi && r.trials < o.budget; ++lo) {
      ++r.trials;
      const auto e = evaluate(d, op, o.reading, Soft(d.universe, {{lhs_param, pool[lo]}}),
                              Soft(d.universe, {{rhs_param, pool[hi]}}));
      if (e && e->outcome == Outcome::Violation) {
        witness = e->witness;
        break;
      }
    }
  }
  Rng rng(o.seed);
  std::size_t sample_failures = 0;
  while (witness.is_null() && r.trials < o.budget) {
    ++r.trials;
    const auto f = random_soft(d, rng);
    const auto k = random_soft(d, rng);
    if (!f || !k) {
      if (++sample_failures > 64) break;
      continue;
    }
    const auto e = evaluate(d, op, o.reading, *f, *k);
    if (e && e->outcome == Outcome::Violation) witness = e->witness;
  }

  if (witness.is_null()) {
    r.status = Status::Skipped;
    r.skip_cap = "budget";
    r.notes.push_back(fmt::format("no counterexample in {} trials", r.trials));
    return r;
  }
  // Replay from the serialized text, not from the in-memory sets.
  const auto replay = replay_witness(json::parse(witness.dump()), base);
  if (!replay.violated || replay.param != witness["param"] || replay.verdict.reason != witness["reason"] ||
      ordered_json(replay.verdict.witness) != witness["indices"]) {
    throw std::logic_error("hunt witness does not replay");
  }
  r.status = Status::CounterexampleFound;
  r.witness = std::move(witness);
  return r;
}

}  // namespace

std::vector<std::string> n_predicate_names() {
  std::vector<std::string> out;
  for (const auto& [name, mode] : n_modes()) out.push_back(name);
  return out;
}

Verdict n_predicate(const NCollection& c, const NSubset& m, std::string_view predicate) {
  const auto it = n_modes().find(predicate);
  if (it == n_modes().end()) throw DomainError(fmt::format("unknown N-collection predicate '{}'", predicate));
  const NMode mode = it->second;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].empty()) {
      return Verdict::fail(fmt::format("part {} is empty", i), {static_cast<Index>(i)}).flag("empty-assignment");
    }
  }
  return mode.ideal ? is_n_ideal(c, m, mode.mode, mode.pseudo) : is_n_sub(c, m, mode.mode);
}

FiniteDomain finite_domain(const json& universe, const std::string& predicate, const fs::path& base,
                           const DomainOptions& options) {
  FiniteDomain d = finite_base(universe, predicate, base, options);
  const auto s = d.universe;
  const Predicate& p = find_predicate(predicate, *s);
  EnumOptions eo;
  eo.closure_cap = options.carrier_cap;
  eo.result_cap = options.population_cap;
  try {
    d.population = enumerate_subs(*s, p, eo);
    d.complete = true;
  } catch (const ResourceError&) {
    d.population.clear();
  }
  if (d.complete) {
    d.sample = [pool = d.population](Rng& rng) { return pick(pool, rng); };
  } else {
    const bool ideal = p.generator == Predicate::Generator::Ideal;
    d.sample = [s, test = d.test, ideal](Rng& rng) -> std::optional<Subset> {
      for (int attempt = 0; attempt < 256; ++attempt) {
        Subset m = grow(*s, random_seed(s->size(), rng), ideal);
        if (test(m).holds) return m;
      }
      return std::nullopt;
    };
  }
  return d;
}

NDomain n_domain(const json& universe, const std::string& predicate, const fs::path& base,
                 const DomainOptions& options) {
  NDomain d = n_base(universe, predicate, base);
  const auto c = d.universe;
  const bool ideal = n_modes().find(predicate)->second.ideal;

  // Candidate parts per component; empty optional when enumeration hits a cap.
  std::vector<std::optional<std::vector<Subset>>> parts;
  std::uint64_t product = 1;
  for (const auto& comp : c->components()) {
    const Structure& s = *comp.structure;
    EnumOptions eo;
    eo.closure_cap = options.carrier_cap;
    eo.result_cap = options.population_cap;
    try {
      if (s.size() > options.carrier_cap) throw ResourceError("carrier_cap", "component too large");
      parts.emplace_back(enumerate_subs(s, find_predicate(ideal ? "ideal" : "closed", s), eo));
      product = std::min<std::uint64_t>(product * parts.back()->size(), options.product_cap + 1);
    } catch (const ResourceError&) {
      parts.emplace_back(std::nullopt);
      product = options.product_cap + 1;
    }
  }

  if (product <= options.product_cap) {
    std::vector<std::size_t> digit(c->n(), 0);
    for (std::uint64_t i = 0; i < product; ++i) {
      std::vector<Subset> chosen;
      for (std::size_t k = 0; k < c->n(); ++k) chosen.push_back((*parts[k])[digit[k]]);
      NSubset m(std::move(chosen));
      if (d.test(m).holds) d.population.push_back(std::move(m));
      for (std::size_t k = 0; k < c->n(); ++k) {
        if (++digit[k] < parts[k]->size()) break;
        digit[k] = 0;
      }
    }
    d.complete = true;
    d.sample = [pool = d.population](Rng& rng) { return pick(pool, rng); };
    return d;
  }

  d.sample = [c, parts, test = d.test, ideal](Rng& rng) -> std::optional<NSubset> {
    for (int attempt = 0; attempt < 256; ++attempt) {
      std::vector<Subset> chosen;
      for (std::size_t k = 0; k < c->n(); ++k) {
        const Structure& s = *(*c)[k].structure;
        if (parts[k] && !parts[k]->empty()) {
          chosen.push_back((*parts[k])[rng() % parts[k]->size()]);
        } else {
          chosen.push_back(grow(s, random_seed(s.size(), rng), ideal));
        }
      }
      NSubset m(std::move(chosen));
      if (test(m).holds) return m;
    }
    return std::nullopt;
  };
  return d;
}

SweepResult sweep(const FiniteDomain& d, const std::vector<SoftOp>& ops, const SweepOptions& options) {
  return sweep_impl(d, ops, options);
}

SweepResult sweep(const NDomain& d, const std::vector<SoftOp>& ops, const SweepOptions& options) {
  return sweep_impl(d, ops, options);
}

HuntTemplate parse_hunt_template(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw UsageError(fmt::format("template '{}' is not of the form <op>:<predicate>", text));
  }
  try {
    return {soft_op_from_string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Report hunt(const HuntTemplate& t, const json& universe, const HuntOptions& options, const fs::path& base) {
  if (is_ncollection_spec(universe)) return hunt_impl(n_domain(universe, t.predicate, base), t.op, options, base);
  return hunt_impl(finite_domain(universe, t.predicate, base), t.op, options, base);
}

Replay replay_witness(const json& witness, const fs::path& base) {
  try {
    const SoftOp op = soft_op_from_string(witness.at("op").get<std::string>());
    const UnionParams reading =
        witness.value("union_params", "operational") == "literal" ? UnionParams::Literal : UnionParams::Operational;
    const auto predicate = witness.at("predicate").get<std::string>();
    const auto& lhs = witness.at("lhs");
    const auto& rhs = witness.at("rhs");
    const auto& universe = lhs.at("universe");
    if (is_ncollection_spec(universe)) {
      const auto d = n_base(universe, predicate, base);
      return replay_impl(d, n_soft_from_json(lhs, base), n_soft_from_json(rhs, base), op, reading);
    }
    const auto d = finite_base(universe, predicate, base, {});
    return replay_impl(d, finite_soft_from_json(lhs, base), finite_soft_from_json(rhs, base), op, reading);
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("malformed witness: {}", e.what()), 0);
  }
}

}  // namespace neutrolab
