#include "neutrolab/ncollect.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

namespace {

constexpr std::array<std::string_view, 5> kAlgNames{"group", "loop", "groupoid", "semigroup", "ring"};

std::size_t slot(AlgKind k) { return static_cast<std::size_t>(k); }

Verdict component_sub(const Structure& s, const Subset& p, SubMode mode) {
  return s.is_ring() ? is_subring(s.ring(), p, mode) : is_subgroupoid(s.magma(), p, mode);
}

Verdict at_component(std::size_t i, Verdict v) {
  if (v.holds) return v;
  v.reason = fmt::format("component {}: {}", i, v.reason);
  v.witness.insert(v.witness.begin(), static_cast<Index>(i));
  return v;
}

void check_shape(const NCollection& parent, const NSubset& p) {
  if (p.size() != parent.n()) {
    throw DomainError(fmt::format("N-subset has {} parts for {} components", p.size(), parent.n()));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].universe_size() != parent[i].structure->size()) {
      throw ModulusMismatch(fmt::format("part {} is over another carrier", i));
    }
  }
}

void validate(std::size_t i, const Component& c) {
  if (!c.structure) throw DomainError(fmt::format("component {}: missing structure", i));
  const Structure& s = *c.structure;
  const bool ring_tag = c.tag.alg == AlgKind::Ring;
  if (ring_tag != s.is_ring()) {
    throw DomainError(fmt::format("component {}: tagged {} but the structure is {}", i,
                                  to_string(c.tag.alg), s.is_ring() ? "a ring" : "a magma"));
  }
  if (c.tag.neutrosophic) {
    bool any = false;
    for (Index x = 0; x < s.size() && !any; ++x) any = s.neutrosophic(x);
    if (!any) throw DomainError(fmt::format("component {}: tagged neutrosophic but has no I-element", i));
  }
  if (ring_tag) return;

  // Neutrosophic groups are not groups (I has no inverse); they are checked as
  // semigroups. Neutrosophic loops are only required to be closed.
  std::optional<MagmaKind> check;
  switch (c.tag.alg) {
    case AlgKind::Group: check = c.tag.neutrosophic ? MagmaKind::Semigroup : MagmaKind::Group; break;
    case AlgKind::Loop: if (!c.tag.neutrosophic) check = MagmaKind::Loop; break;
    case AlgKind::Semigroup: check = MagmaKind::Semigroup; break;
    case AlgKind::Groupoid:
    case AlgKind::Ring: break;
  }
  if (!check) return;
  if (auto v = verify_kind(s.magma(), *check); !v) {
    std::vector<std::string> labels;
    for (Index w : v.witness) labels.push_back(s.label(w));
    throw DomainError(fmt::format("component {}: not a {}: {} (witness {})", i, to_string(*check),
                                  v.reason, fmt::join(labels, ", ")));
  }
}

bool weak_pattern(const std::array<std::size_t, 4>& counts, std::size_t kinds) {
  const auto has = [&](AlgKind k) { return counts[slot(k)] > 0; };
  return kinds >= 2 && kinds <= 3 && (has(AlgKind::Group) || has(AlgKind::Loop)) &&
         (has(AlgKind::Groupoid) || has(AlgKind::Semigroup));
}

}  // namespace

std::string_view to_string(AlgKind k) { return kAlgNames[slot(k)]; }

AlgKind alg_kind_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kAlgNames.size(); ++i)
    if (kAlgNames[i] == s) return static_cast<AlgKind>(i);
  throw DomainError(fmt::format("unknown algebraic kind '{}'", s));
}

std::size_t MixedProfile::neutro_kinds() const {
  return static_cast<std::size_t>(std::count_if(neutrosophic.begin(), neutrosophic.end(), [](auto c) { return c > 0; }));
}

std::size_t MixedProfile::classical_kinds() const {
  return static_cast<std::size_t>(std::count_if(classical.begin(), classical.end(), [](auto c) { return c > 0; }));
}

std::size_t MixedProfile::neutro_components() const {
  std::size_t total = 0;
  for (auto c : neutrosophic) total += c;
  return total;
}

NCollection::NCollection(std::vector<Component> components) : components_(std::move(components)) {
  if (components_.size() < 2) {
    throw DomainError(fmt::format("an N-collection needs at least 2 components, got {}", components_.size()));
  }
  profile_.n = components_.size();
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    validate(i, c);
    order_ += c.structure->size();
    if (c.tag.alg == AlgKind::Ring) {
      ++profile_.rings;
    } else {
      ++(c.tag.neutrosophic ? profile_.neutrosophic : profile_.classical)[slot(c.tag.alg)];
    }
  }
}

nlohmann::json NCollection::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components_) {
    comps.push_back({{"kind_tag", {{"alg", to_string(c.tag.alg)}, {"neutrosophic", c.tag.neutrosophic}}},
                     {"spec", c.structure->spec()}});
  }
  return {{"kind", "ncollection"}, {"components", std::move(comps)}};
}

bool operator==(const NCollection& a, const NCollection& b) {
  if (a.n() != b.n()) return false;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (!(a[i].tag == b[i].tag) || !(*a[i].structure == *b[i].structure)) return false;
  }
  return true;
}

NSubset NSubset::full(const NCollection& c) {
  std::vector<Subset> parts;
  for (const auto& comp : c.components()) parts.push_back(Subset::full(comp.structure->size()));
  return NSubset(std::move(parts));
}

NSubset NSubset::from_labels(const NCollection& c, const std::vector<std::vector<std::string>>& labels) {
  if (labels.size() != c.n()) {
    throw DomainError(fmt::format("expected {} label lists, got {}", c.n(), labels.size()));
  }
  std::vector<Subset> parts;
  for (std::size_t i = 0; i < labels.size(); ++i) parts.push_back(c[i].structure->subset(labels[i]));
  return NSubset(std::move(parts));
}

std::size_t NSubset::order() const {
  std::size_t total = 0;
  for (const auto& p : parts_) total += p.count();
  return total;
}

std::size_t NSubset::nonempty_parts() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](const Subset& s) { return !s.empty(); }));
}

bool NSubset::is_subset_of(const NSubset& other) const {
  if (parts_.size() != other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (!parts_[i].is_subset_of(other.parts_[i])) return false;
  return true;
}

NSubset& NSubset::operator&=(const NSubset& other) {
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] &= other.parts_.at(i);
  return *this;
}

NSubset& NSubset::operator|=(const NSubset& other) {
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] |= other.parts_.at(i);
  return *this;
}

std::vector<std::vector<std::string>> NSubset::labels(const NCollection& c) const {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) out.push_back(c[i].structure->labels_of(parts_[i]));
  return out;
}

std::string_view to_string(NSubMode m) {
  switch (m) {
    case NSubMode::Loose: return "loose";
    case NSubMode::Plain: return "plain";
    case NSubMode::Strong: return "strong";
    case NSubMode::Mixed: return "mixed";
  }
  return "?";
}

Verdict is_n_sub(const NCollection& parent, const NSubset& p, NSubMode mode) {
  check_shape(parent, p);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) throw DomainError(fmt::format("part {} is empty", i));
  }
  const SubMode part_mode = mode == NSubMode::Strong ? SubMode::Strict : SubMode::Loose;
  bool any_neutro = false;
  bool all_full = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Structure& s = *parent[i].structure;
    if (auto v = component_sub(s, p[i], part_mode); !v) return at_component(i, std::move(v));
    any_neutro = any_neutro || has_neutrosophic(s, p[i]);
    all_full = all_full && p[i].is_full();
  }
  if (mode == NSubMode::Plain && !any_neutro) return Verdict::fail("no part holds an I-element");
  Verdict out = Verdict::ok();
  if (all_full) out.flag("improper");
  return out;
}

Verdict is_n_ideal(const NCollection& parent, const NSubset& p, NSubMode mode, bool pseudo) {
  auto v = is_n_sub(parent, p, mode);
  if (!v) return v;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Structure& s = *parent[i].structure;
    if (pseudo) {
      if (!s.is_ring()) throw DomainError(fmt::format("component {}: pseudo ideals need a ring", i));
      if (auto pv = is_pseudo_sub(s.ring(), p[i]); !pv) return at_component(i, std::move(pv));
    }
    if (auto iv = is_ideal(s, p[i]); !iv) return at_component(i, std::move(iv));
  }
  return v;
}

std::string_view to_string(MixedClass c) {
  switch (c) {
    case MixedClass::Mixed: return "Mixed";
    case MixedClass::MixedDual: return "MixedDual";
    case MixedClass::WeakMixed: return "WeakMixed";
    case MixedClass::WeakMixedDual: return "WeakMixedDual";
    case MixedClass::None: return "None";
  }
  return "?";
}

MixedClass classify_mixed(const NCollection& parent) {
  const auto& pr = parent.profile();
  const bool some_neutro = pr.neutro_components() > 0;
  if (pr.n >= 5 && pr.neutro_kinds() == 4) return MixedClass::Mixed;
  if (pr.classical_kinds() == 4 && some_neutro) return MixedClass::MixedDual;
  if (weak_pattern(pr.neutrosophic, pr.neutro_kinds())) return MixedClass::WeakMixed;
  if (some_neutro && weak_pattern(pr.classical, pr.classical_kinds())) return MixedClass::WeakMixedDual;
  return MixedClass::None;
}

Verdict is_deficit_sub(const NCollection& parent, const NSubset& p) {
  check_shape(parent, p);
  const std::size_t t = p.nonempty_parts();
  if (t <= 1 || t >= parent.n()) {
    throw DomainError(fmt::format("a deficit N-subset needs 1 < t < {} nonempty parts, got {}", parent.n(), t));
  }
  bool group_like = false;
  bool groupoid_like = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) continue;
    const Structure& s = *parent[i].structure;
    if (auto v = component_sub(s, p[i], SubMode::Loose); !v) return at_component(i, std::move(v));
    if (!has_neutrosophic(s, p[i])) continue;
    const AlgKind k = parent[i].tag.alg;
    group_like = group_like || k == AlgKind::Group || k == AlgKind::Loop;
    groupoid_like = groupoid_like || k == AlgKind::Groupoid || k == AlgKind::Semigroup;
  }
  if (!group_like) return Verdict::fail("no neutrosophic part in a group or loop component");
  if (!groupoid_like) return Verdict::fail("no neutrosophic part in a groupoid or semigroup component");
  return Verdict::ok();
}

bool lagrange_mixed(const NCollection& parent, const NSubset& p) {
  const std::size_t o = p.order();
  if (o == 0) throw DomainError("order of an empty N-subset");
  return parent.order() % o == 0;
}

LagrangeMixedClass classify_lagrange_mixed(const NCollection& parent, const EnumOptions& options) {
  const std::size_t total = parent.order();
  std::vector<bool> reach(total + 1, false);
  reach[0] = true;
  for (const auto& c : parent.components()) {
    std::set<std::size_t> sizes;
    for (const auto& s : enumerate_closed(*c.structure, options)) sizes.insert(s.count());
    std::vector<bool> next(total + 1, false);
    for (std::size_t acc = 0; acc <= total; ++acc) {
      if (!reach[acc]) continue;
      for (std::size_t s : sizes)
        if (acc + s <= total) next[acc + s] = true;
    }
    reach = std::move(next);
  }
  LagrangeMixedClass out;
  // Only the all-full choice reaches the total order, so proper subs are exactly the smaller sums.
  for (std::size_t o = 1; o < total; ++o) {
    if (!reach[o]) continue;
    (total % o == 0 ? out.lagrange_orders : out.non_lagrange_orders).insert(o);
  }
  out.vacuous = out.lagrange_orders.empty() && out.non_lagrange_orders.empty();
  if (out.non_lagrange_orders.empty()) {
    out.kind = LagrangeKind::Lagrange;
  } else if (out.lagrange_orders.empty()) {
    out.kind = LagrangeKind::LagrangeFree;
  } else {
    out.kind = LagrangeKind::WeaklyLagrange;
  }
  return out;
}

bool SoftTraits<NCollection, NSubset>::fits(const NCollection& u, const NSubset& m) {
  if (m.size() != u.n()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i].universe_size() != u[i].structure->size()) return false;
  return true;
}

namespace {

template <class Test>
SoftVerdict lift(const NSoftSet& s, Test test) {
  return is_soft_with(s, [&](const NSubset& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].empty()) {
        return Verdict::fail(fmt::format("part {} is empty", i), {static_cast<Index>(i)}).flag("empty-assignment");
      }
    }
    return test(m);
  });
}

}  // namespace

SoftVerdict is_soft_n_sub(const NSoftSet& s, NSubMode mode) {
  return lift(s, [&](const NSubset& m) { return is_n_sub(*s.universe(), m, mode); });
}

SoftVerdict is_soft_n_ideal(const NSoftSet& s, NSubMode mode, bool pseudo) {
  return lift(s, [&](const NSubset& m) { return is_n_ideal(*s.universe(), m, mode, pseudo); });
}

NSoftSet make_n_soft(NCollectionPtr universe,
                     const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& assign) {
  std::vector<NSoftSet::Entry> entries;
  for (const auto& [param, labels] : assign) entries.emplace_back(param, NSubset::from_labels(*universe, labels));
  return {std::move(universe), std::move(entries)};
}

nlohmann::ordered_json n_soft_to_json(const NSoftSet& s) {
  nlohmann::ordered_json out;
  out["universe"] = s.universe()->to_json();
  out["params"] = s.params();
  nlohmann::ordered_json assign = nlohmann::ordered_json::object();
  for (const auto& [p, m] : s.entries()) assign[p] = m.labels(*s.universe());
  out["assign"] = std::move(assign);
  return out;
}

}  // namespace neutrolab
