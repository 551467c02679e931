#pragma once

#include <array>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "neutrolab/soft.hpp"
#include "neutrolab/structure.hpp"
#include "neutrolab/subalgebra.hpp"

namespace neutrolab {

enum class AlgKind { Group, Loop, Groupoid, Semigroup, Ring };

std::string_view to_string(AlgKind k);
AlgKind alg_kind_from_string(std::string_view s);

struct KindTag {
  AlgKind alg = AlgKind::Groupoid;
  bool neutrosophic = false;

  friend bool operator==(const KindTag&, const KindTag&) = default;
};

struct Component {
  KindTag tag;
  StructurePtr structure;
};

// Presence counts of the four magma kinds, split by the neutrosophic flag.
// Ring components are counted in `rings` only.
struct MixedProfile {
  std::array<std::size_t, 4> neutrosophic{};
  std::array<std::size_t, 4> classical{};
  std::size_t rings = 0;
  std::size_t n = 0;

  std::size_t neutro_kinds() const;
  std::size_t classical_kinds() const;
  std::size_t neutro_components() const;
};

// An ordered list of at least two kind-tagged components, each validated on construction.
class NCollection {
 public:
  explicit NCollection(std::vector<Component> components);

  std::size_t n() const noexcept { return components_.size(); }
  const Component& operator[](std::size_t i) const { return components_.at(i); }
  const std::vector<Component>& components() const noexcept { return components_; }
  const MixedProfile& profile() const noexcept { return profile_; }
  // Sum of the component carrier sizes.
  std::size_t order() const noexcept { return order_; }

  nlohmann::json to_json() const;

  friend bool operator==(const NCollection& a, const NCollection& b);

 private:
  std::vector<Component> components_;
  MixedProfile profile_;
  std::size_t order_ = 0;
};

using NCollectionPtr = std::shared_ptr<const NCollection>;

// One subset per component.
class NSubset {
 public:
  NSubset() = default;
  explicit NSubset(std::vector<Subset> parts) : parts_(std::move(parts)) {}

  static NSubset full(const NCollection& c);
  static NSubset from_labels(const NCollection& c, const std::vector<std::vector<std::string>>& labels);

  std::size_t size() const noexcept { return parts_.size(); }
  const Subset& operator[](std::size_t i) const { return parts_.at(i); }
  const std::vector<Subset>& parts() const noexcept { return parts_; }

  std::size_t order() const;
  std::size_t nonempty_parts() const;
  bool is_subset_of(const NSubset& other) const;

  NSubset& operator&=(const NSubset& other);
  NSubset& operator|=(const NSubset& other);
  friend NSubset operator&(NSubset a, const NSubset& b) { return a &= b; }
  friend NSubset operator|(NSubset a, const NSubset& b) { return a |= b; }
  friend bool operator==(const NSubset&, const NSubset&) = default;

  std::vector<std::vector<std::string>> labels(const NCollection& c) const;

 private:
  std::vector<Subset> parts_;
};

// Loose: every part closed. Plain: loose plus at least one part holding an
// I-element. Strong: every part a strict substructure. Mixed: every part
// closed, with the kind mixture reported through the parent's profile.
enum class NSubMode { Loose, Plain, Strong, Mixed };

std::string_view to_string(NSubMode m);

// Witness on failure: the component index followed by the component witness.
// Throws DomainError if any part is empty.
Verdict is_n_sub(const NCollection& parent, const NSubset& p, NSubMode mode = NSubMode::Plain);
Verdict is_n_ideal(const NCollection& parent, const NSubset& p, NSubMode mode = NSubMode::Plain,
                   bool pseudo = false);

enum class MixedClass { Mixed, MixedDual, WeakMixed, WeakMixedDual, None };
std::string_view to_string(MixedClass c);

MixedClass classify_mixed(const NCollection& parent);

// Requires 1 < t < N nonempty parts (DomainError otherwise). Each nonempty part
// must be closed, and among the parts holding I-elements some lie in group or
// loop components and some in groupoid or semigroup components.
Verdict is_deficit_sub(const NCollection& parent, const NSubset& p);

bool lagrange_mixed(const NCollection& parent, const NSubset& p);

struct LagrangeMixedClass {
  LagrangeKind kind = LagrangeKind::Lagrange;
  std::set<std::size_t> lagrange_orders;
  std::set<std::size_t> non_lagrange_orders;
  bool vacuous = false;
};

// Quantifies over proper N-subsets whose parts are nonempty closed subsets;
// the attainable orders are the sumset of per-component closed-subset sizes.
LagrangeMixedClass classify_lagrange_mixed(const NCollection& parent,
                                           const EnumOptions& options = {});

template <>
struct SoftTraits<NCollection, NSubset> {
  static bool same(const NCollection& a, const NCollection& b) { return &a == &b || a == b; }
  static bool fits(const NCollection& u, const NSubset& m);
  static bool is_full(const NCollection& u, const NSubset& m) { return m == NSubset::full(u); }
  static NSubset meet(const NSubset& a, const NSubset& b) { return a & b; }
  static NSubset join(const NSubset& a, const NSubset& b) { return a | b; }
  static bool le(const NSubset& a, const NSubset& b) { return a.is_subset_of(b); }
};

using NSoftSet = SoftSet<NCollection, NSubset>;

// Lifts is_n_sub / is_n_ideal to soft sets; empty parts fail with the
// "empty-assignment" flag instead of throwing.
SoftVerdict is_soft_n_sub(const NSoftSet& s, NSubMode mode);
SoftVerdict is_soft_n_ideal(const NSoftSet& s, NSubMode mode, bool pseudo = false);

NSoftSet make_n_soft(NCollectionPtr universe,
                     const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>>& assign);

nlohmann::ordered_json n_soft_to_json(const NSoftSet& s);

}  // namespace neutrolab
