#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "neutrolab/error.hpp"
#include "neutrolab/structure.hpp"
#include "neutrolab/subalgebra.hpp"
#include "neutrolab/subset.hpp"
#include "neutrolab/verdict.hpp"

namespace neutrolab {

// Lattice operations on soft-set members. Specialized per (universe, member) pair.
template <class U, class M>
struct SoftTraits;

template <>
struct SoftTraits<Structure, Subset> {
  static bool same(const Structure& a, const Structure& b) { return &a == &b || a == b; }
  static bool fits(const Structure& u, const Subset& m) { return m.universe_size() == u.size(); }
  static bool is_full(const Structure&, const Subset& m) { return m.is_full(); }
  static Subset meet(const Subset& a, const Subset& b) { return a & b; }
  static Subset join(const Subset& a, const Subset& b) { return a | b; }
  static bool le(const Subset& a, const Subset& b) { return a.is_subset_of(b); }
};

// A map from an ordered, duplicate-free parameter list to members over one universe.
template <class U, class M>
class SoftSet {
 public:
  using Universe = U;
  using Member = M;
  using Traits = SoftTraits<U, M>;
  using Entry = std::pair<std::string, M>;

  SoftSet(std::shared_ptr<const U> universe, std::vector<Entry> entries)
      : universe_(std::move(universe)), entries_(std::move(entries)) {
    if (!universe_) throw DomainError("soft set without a universe");
    if (entries_.empty()) throw DomainError("soft set needs at least one parameter");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!Traits::fits(*universe_, entries_[i].second))
        throw ModulusMismatch("assignment of '" + entries_[i].first + "' is over another universe");
      for (std::size_t j = 0; j < i; ++j)
        if (entries_[j].first == entries_[i].first)
          throw DomainError("duplicate parameter '" + entries_[i].first + "'");
    }
  }

  const std::shared_ptr<const U>& universe() const noexcept { return universe_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::vector<std::string> params() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [p, m] : entries_) out.push_back(p);
    return out;
  }

  const M* find(const std::string& param) const {
    for (const auto& [p, m] : entries_)
      if (p == param) return &m;
    return nullptr;
  }
  bool has(const std::string& param) const { return find(param) != nullptr; }
  const M& at(const std::string& param) const {
    if (const M* m = find(param)) return *m;
    throw DomainError("no parameter '" + param + "'");
  }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return Traits::same(*a.universe_, *b.universe_) && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const U> universe_;
  std::vector<Entry> entries_;
};

using FiniteSoftSet = SoftSet<Structure, Subset>;

namespace detail {

template <class U, class M>
void require_same_universe(const SoftSet<U, M>& a, const SoftSet<U, M>& b) {
  if (!SoftTraits<U, M>::same(*a.universe(), *b.universe()))
    throw ModulusMismatch("soft sets over different universes");
}

}  // namespace detail

// A ⊆ B and F(a) ⊆ H(a) for every a in A.
template <class U, class M>
bool soft_subset(const SoftSet<U, M>& f, const SoftSet<U, M>& h) {
  detail::require_same_universe(f, h);
  for (const auto& [p, m] : f.entries()) {
    const M* other = h.find(p);
    if (other == nullptr || !SoftTraits<U, M>::le(m, *other)) return false;
  }
  return true;
}

template <class U, class M>
bool soft_equal(const SoftSet<U, M>& f, const SoftSet<U, M>& h) {
  return soft_subset(f, h) && soft_subset(h, f);
}

template <class U, class M>
SoftSet<U, M> restricted_intersection(const SoftSet<U, M>& f, const SoftSet<U, M>& k) {
  detail::require_same_universe(f, k);
  std::vector<typename SoftSet<U, M>::Entry> out;
  for (const auto& [p, m] : f.entries())
    if (const M* other = k.find(p)) out.emplace_back(p, SoftTraits<U, M>::meet(m, *other));
  if (out.empty()) throw DomainError("restricted intersection of soft sets with disjoint parameters");
  return {f.universe(), std::move(out)};
}

namespace detail {

template <class U, class M, class Merge>
SoftSet<U, M> extended(const SoftSet<U, M>& f, const SoftSet<U, M>& k, Merge merge) {
  require_same_universe(f, k);
  std::vector<typename SoftSet<U, M>::Entry> out;
  for (const auto& [p, m] : f.entries()) {
    const M* other = k.find(p);
    out.emplace_back(p, other ? merge(m, *other) : m);
  }
  for (const auto& [p, m] : k.entries())
    if (!f.has(p)) out.emplace_back(p, m);
  return {f.universe(), std::move(out)};
}

template <class U, class M, class Merge>
SoftSet<U, M> product(const SoftSet<U, M>& f, const SoftSet<U, M>& k, const std::string& sep,
                      Merge merge) {
  require_same_universe(f, k);
  std::vector<typename SoftSet<U, M>::Entry> out;
  out.reserve(f.size() * k.size());
  for (const auto& [a, fa] : f.entries())
    for (const auto& [b, kb] : k.entries()) out.emplace_back(a + sep + b, merge(fa, kb));
  return {f.universe(), std::move(out)};
}

}  // namespace detail

template <class U, class M>
SoftSet<U, M> extended_intersection(const SoftSet<U, M>& f, const SoftSet<U, M>& k) {
  return detail::extended(f, k, &SoftTraits<U, M>::meet);
}

template <class U, class M>
SoftSet<U, M> extended_union(const SoftSet<U, M>& f, const SoftSet<U, M>& k) {
  return detail::extended(f, k, &SoftTraits<U, M>::join);
}

// Operational reads the restricted union over A ∩ B; Literal reads it over
// A ∪ B, which coincides with the extended union.
enum class UnionParams { Operational, Literal };

template <class U, class M>
SoftSet<U, M> restricted_union(const SoftSet<U, M>& f, const SoftSet<U, M>& k,
                               UnionParams reading = UnionParams::Operational) {
  if (reading == UnionParams::Literal) return extended_union(f, k);
  detail::require_same_universe(f, k);
  std::vector<typename SoftSet<U, M>::Entry> out;
  for (const auto& [p, m] : f.entries())
    if (const M* other = k.find(p)) out.emplace_back(p, SoftTraits<U, M>::join(m, *other));
  if (out.empty()) throw DomainError("restricted union of soft sets with disjoint parameters");
  return {f.universe(), std::move(out)};
}

inline constexpr const char* kAndSep = "∧";
inline constexpr const char* kOrSep = "∨";

template <class U, class M>
SoftSet<U, M> and_op(const SoftSet<U, M>& f, const SoftSet<U, M>& k) {
  return detail::product(f, k, kAndSep, &SoftTraits<U, M>::meet);
}

template <class U, class M>
SoftSet<U, M> or_op(const SoftSet<U, M>& f, const SoftSet<U, M>& k) {
  return detail::product(f, k, kOrSep, &SoftTraits<U, M>::join);
}

// Pointwise intersection over an identical parameter set.
template <class U, class M>
SoftSet<U, M> same_param_intersection(const SoftSet<U, M>& f, const SoftSet<U, M>& h) {
  if (f.size() != h.size())
    throw DomainError("same-parameter intersection needs identical parameter sets");
  for (const auto& [p, m] : f.entries())
    if (!h.has(p)) throw DomainError("same-parameter intersection needs identical parameter sets");
  return restricted_intersection(f, h);
}

// Union of soft sets with disjoint parameter sets.
template <class U, class M>
SoftSet<U, M> disjoint_union(const SoftSet<U, M>& f, const SoftSet<U, M>& h) {
  for (const auto& [p, m] : f.entries())
    if (h.has(p)) throw DomainError("disjoint union needs disjoint parameter sets");
  return extended_union(f, h);
}

template <class U, class M>
bool is_absolute(const SoftSet<U, M>& s) {
  return std::all_of(s.entries().begin(), s.entries().end(), [&](const auto& e) {
    return SoftTraits<U, M>::is_full(*s.universe(), e.second);
  });
}

enum class SoftOp {
  RestrictedIntersection,
  ExtendedIntersection,
  RestrictedUnion,
  ExtendedUnion,
  And,
  Or,
  SameParamIntersection,
  DisjointUnion,
};

std::string_view to_string(SoftOp op);
// Accepts the kebab-case names printed by to_string; throws DomainError otherwise.
SoftOp soft_op_from_string(std::string_view name);
// Pointwise meet (true) or join (false).
bool is_meet(SoftOp op);

template <class U, class M>
SoftSet<U, M> apply_soft_op(SoftOp op, const SoftSet<U, M>& f, const SoftSet<U, M>& k,
                            UnionParams reading = UnionParams::Operational) {
  switch (op) {
    case SoftOp::RestrictedIntersection: return restricted_intersection(f, k);
    case SoftOp::ExtendedIntersection: return extended_intersection(f, k);
    case SoftOp::RestrictedUnion: return restricted_union(f, k, reading);
    case SoftOp::ExtendedUnion: return extended_union(f, k);
    case SoftOp::And: return and_op(f, k);
    case SoftOp::Or: return or_op(f, k);
    case SoftOp::SameParamIntersection: return same_param_intersection(f, k);
    case SoftOp::DisjointUnion: return disjoint_union(f, k);
  }
  throw DomainError("unknown soft operation");
}

struct SoftVerdict {
  bool overall = true;
  std::vector<std::pair<std::string, Verdict>> per_param;

  explicit operator bool() const noexcept { return overall; }
  const Verdict* first_failure() const {
    for (const auto& [p, v] : per_param)
      if (!v.holds) return &v;
    return nullptr;
  }
};

// How per-parameter verdicts combine. Lagrange-style quantifiers require every
// assignment to pass the predicate and then look at which orders divide |U|.
enum class Quantifier { ForAll, Lagrange, WeakLagrange, LagrangeFree };

// Evaluates `test(member)` on every assignment and takes the conjunction.
template <class U, class M, class Test>
SoftVerdict is_soft_with(const SoftSet<U, M>& s, Test&& test) {
  SoftVerdict out;
  for (const auto& [p, m] : s.entries()) {
    Verdict v = test(m);
    out.overall = out.overall && v.holds;
    out.per_param.emplace_back(p, std::move(v));
  }
  return out;
}

SoftVerdict is_soft(const FiniteSoftSet& s, const Predicate& predicate,
                    Quantifier quantifier = Quantifier::ForAll);

// B ⊆ A and every H(b) passes the predicate with F(b) as its ambient parent.
SoftVerdict soft_sub_of(const FiniteSoftSet& h, const FiniteSoftSet& f, const Predicate& predicate);

// Builds a soft set from per-parameter label lists.
FiniteSoftSet make_soft(StructurePtr universe,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& assign);

nlohmann::ordered_json soft_to_json(const FiniteSoftSet& s);

}  // namespace neutrolab
