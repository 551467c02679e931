#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "neutrolab/magma.hpp"
#include "neutrolab/soft.hpp"
#include "neutrolab/subset.hpp"

namespace neutrolab {

enum class Base { Z, Q, R, C };

// nZ, Z, Q, R, C and their <X u I> extensions, as a closed-world lattice.
struct NamedRing {
  Base base = Base::Z;
  std::uint32_t multiplier = 1;  // only meaningful for Z
  bool neutrosophic = false;

  NamedRing() = default;
  NamedRing(Base b, std::uint32_t m = 1, bool n = false);

  friend auto operator<=>(const NamedRing&, const NamedRing&) = default;
};

// Accepts "Z", "2Z", "Q", "<Q u I>", "<2Z u I>" and the forms "<QuI>", "Q(I)".
NamedRing parse_named_ring(std::string_view text);
std::string to_string(const NamedRing& r);

// X ⊆ Y.
bool sym_contains(const NamedRing& x, const NamedRing& y);
NamedRing sym_meet(const NamedRing& x, const NamedRing& y);

bool sym_is_field(const NamedRing& x);
bool sym_is_neutro_field(const NamedRing& x);
// Every named ring is a ring.
constexpr bool sym_is_ring(const NamedRing&) { return true; }

// Coefficient ring over a closed support inside a finite basis: formal sums of
// support elements with coefficients in `coeff`.
struct SymbolicGroupRing {
  NamedRing coeff;
  std::shared_ptr<const FiniteMagma> basis;
  Subset support;

  friend bool operator==(const SymbolicGroupRing& a, const SymbolicGroupRing& b);
};

// "Q<GuI:m=6>" for the whole cyclic carrier of order 2m, and
// "Q<HuI:m=6,H=1;g^3>" for a named support.
SymbolicGroupRing parse_symbolic_group_ring(std::string_view text);
std::string to_string(const SymbolicGroupRing& g);

bool same_basis(const SymbolicGroupRing& a, const SymbolicGroupRing& b);
// P ⊆ Q: same basis, coefficient containment and support containment.
bool sym_contains(const SymbolicGroupRing& p, const SymbolicGroupRing& q);
// Q.coeff ⊇ P.coeff and P.support is a closed subset of Q.support.
bool sym_subgroupring(const SymbolicGroupRing& p, const SymbolicGroupRing& q);
SymbolicGroupRing sym_meet(const SymbolicGroupRing& a, const SymbolicGroupRing& b);
bool sym_less(const SymbolicGroupRing& a, const SymbolicGroupRing& b);

// A finite union of lattice members, kept as the antichain of its maximal members.
// For these lattices X ⊆ Y1 ∪ ... ∪ Yk exactly when X ⊆ Yj for some j, since every
// member holds an element (m + mI, 1/p for a large prime p, ...) that lies in a
// union only if one summand already contains the whole member.
template <class T>
class RingUnion {
 public:
  RingUnion() = default;
  explicit RingUnion(T single) : members_{std::move(single)} {}
  explicit RingUnion(std::vector<T> members) : members_(std::move(members)) { normalize(); }

  const std::vector<T>& members() const noexcept { return members_; }
  bool single() const noexcept { return members_.size() == 1; }
  bool empty() const noexcept { return members_.empty(); }

  bool is_subset_of(const RingUnion& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](const T& x) {
      return std::any_of(other.members_.begin(), other.members_.end(),
                         [&](const T& y) { return sym_contains(x, y); });
    });
  }

  friend RingUnion operator|(const RingUnion& a, const RingUnion& b) {
    std::vector<T> all = a.members_;
    all.insert(all.end(), b.members_.begin(), b.members_.end());
    return RingUnion(std::move(all));
  }
  friend RingUnion operator&(const RingUnion& a, const RingUnion& b) {
    std::vector<T> all;
    for (const auto& x : a.members_)
      for (const auto& y : b.members_) all.push_back(sym_meet(x, y));
    return RingUnion(std::move(all));
  }
  friend bool operator==(const RingUnion& a, const RingUnion& b) { return a.members_ == b.members_; }

 private:
  void normalize() {
    std::vector<T> kept;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < members_.size() && !dominated; ++j) {
        if (i == j || !sym_contains(members_[i], members_[j])) continue;
        // Equal members: keep the first copy only.
        dominated = !sym_contains(members_[j], members_[i]) || j < i;
      }
      if (!dominated) kept.push_back(members_[i]);
    }
    std::sort(kept.begin(), kept.end(), [](const T& a, const T& b) {
      if constexpr (std::is_same_v<T, NamedRing>) {
        return a < b;
      } else {
        return sym_less(a, b);
      }
    });
    members_ = std::move(kept);
  }

  std::vector<T> members_;
};

using NamedUnion = RingUnion<NamedRing>;
using GroupRingUnion = RingUnion<SymbolicGroupRing>;

std::string to_string(const NamedUnion& u);
std::string to_string(const GroupRingUnion& u);

template <>
struct SoftTraits<NamedRing, NamedUnion> {
  static bool same(const NamedRing& a, const NamedRing& b) { return a == b; }
  static bool fits(const NamedRing& u, const NamedUnion& m) { return m.is_subset_of(NamedUnion(u)); }
  static bool is_full(const NamedRing& u, const NamedUnion& m) { return m == NamedUnion(u); }
  static NamedUnion meet(const NamedUnion& a, const NamedUnion& b) { return a & b; }
  static NamedUnion join(const NamedUnion& a, const NamedUnion& b) { return a | b; }
  static bool le(const NamedUnion& a, const NamedUnion& b) { return a.is_subset_of(b); }
};

template <>
struct SoftTraits<SymbolicGroupRing, GroupRingUnion> {
  static bool same(const SymbolicGroupRing& a, const SymbolicGroupRing& b) { return a == b; }
  static bool fits(const SymbolicGroupRing& u, const GroupRingUnion& m) {
    return m.is_subset_of(GroupRingUnion(u));
  }
  static bool is_full(const SymbolicGroupRing& u, const GroupRingUnion& m) { return m == GroupRingUnion(u); }
  static GroupRingUnion meet(const GroupRingUnion& a, const GroupRingUnion& b) { return a & b; }
  static GroupRingUnion join(const GroupRingUnion& a, const GroupRingUnion& b) { return a | b; }
  static bool le(const GroupRingUnion& a, const GroupRingUnion& b) { return a.is_subset_of(b); }
};

using SymSoftSet = SoftSet<NamedRing, NamedUnion>;
using SymGroupRingSoftSet = SoftSet<SymbolicGroupRing, GroupRingUnion>;

// Per-assignment predicates over symbolic universes. A union of two
// incomparable rings is never a ring.
enum class SymPredicate { Subring, NeutroSubring, Field, NeutroField };
std::string_view to_string(SymPredicate p);

SoftVerdict is_soft_sym(const SymSoftSet& s, SymPredicate predicate);
// Every assignment is a single group ring over a closed support.
SoftVerdict is_soft_sym_groupring(const SymGroupRingSoftSet& s);

// Literal bifield reading: one component a neutrosophic field and the other a
// field, each inside the matching parent component. Flags "nested" when one
// component contains the other.
Verdict sym_is_subbifield(const NamedRing& parent1, const NamedRing& parent2, const NamedRing& p1,
                          const NamedRing& p2);

SymSoftSet make_sym_soft(const NamedRing& universe,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& assign);
SymGroupRingSoftSet make_sym_groupring_soft(
    const SymbolicGroupRing& universe,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& assign);

}  // namespace neutrolab
