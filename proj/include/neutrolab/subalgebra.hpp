#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutrolab/structure.hpp"
#include "neutrolab/subset.hpp"
#include "neutrolab/verdict.hpp"

namespace neutrolab {

// Loose: closed under the parent operations. Strict: additionally holds at
// least one element with a nonzero indeterminate part.
enum class SubMode { Loose, Strict };

Subset closure(const Structure& parent, const Subset& seed);
// Closure of `base` (already closed) with one more element.
Subset closure_with(const Structure& parent, const Subset& base, Index extra);
// Least ideal containing the seed: closure plus products with every carrier element.
Subset ideal_closure(const Structure& parent, const Subset& seed);

bool is_closed(const Structure& parent, const Subset& p);
bool has_neutrosophic(const Structure& parent, const Subset& p);

// Witness on failure: the pair (p, q) whose product leaves P.
Verdict is_subgroupoid(const FiniteMagma& parent, const Subset& p, SubMode mode = SubMode::Loose);
// Closed, all nonzero members neutrosophic, and at least one neutrosophic member.
Verdict is_strong_sub(const Structure& parent, const Subset& p);
// Two-sided absorption by every element of `ambient` (the whole carrier by
// default). Witness: (p, s, side) with side 0 for p*s and 1 for s*p.
Verdict is_ideal(const Structure& parent, const Subset& p, const Subset* ambient = nullptr);
bool is_lagrange_sub(const FiniteMagma& parent, const Subset& p);
// Closed under +, - and *. Witness: (p, q, op) with op 0 = +, 1 = *, 2 = negation.
Verdict is_subring(const FiniteRing& parent, const Subset& p, SubMode mode = SubMode::Loose);
Verdict is_pseudo_sub(const FiniteRing& parent, const Subset& p);

struct GroupRingDecomposition {
  std::vector<std::uint32_t> coefficients;  // the unital subring S of Z_r
  Subset support;                           // the closed subset H of the basis
};

// P = S<H> for a unital subring S of Z_r and a closed subset H of the basis
// (holding an I-element in strict mode). `parent` must be a realized group ring.
Verdict is_subneutro_groupring(const FiniteRing& parent, const Subset& p,
                               SubMode mode = SubMode::Loose,
                               GroupRingDecomposition* decomposition = nullptr);

// Unital subrings of Z_r (never {0}), as sorted residue lists.
std::vector<std::vector<std::uint32_t>> unital_subrings_of_zn(std::uint32_t r);

// The realized subset S<H> of a realized group ring.
Subset groupring_subset(const FiniteRing& parent, const std::vector<std::uint32_t>& coefficients,
                        const Subset& support);

enum class EnumStrategy { FullScan, Closure };

struct EnumOptions {
  EnumStrategy strategy = EnumStrategy::Closure;
  std::size_t scan_cap = 16;
  std::size_t closure_cap = 64;
  std::size_t result_cap = 200'000;
  bool reverse_seeds = false;
};

// Every nonempty closed subset, in canonical order.
std::vector<Subset> enumerate_closed(const Structure& parent, const EnumOptions& options = {});

// A named subset predicate evaluated relative to an ambient subset of the
// parent (the carrier itself unless a soft parent narrows it).
struct Predicate {
  std::string name;
  std::function<Verdict(const Structure&, const Subset& p, const Subset& ambient)> test;
  // How random members are grown from seeds by samplers.
  enum class Generator { Closure, Ideal, GroupRing } generator = Generator::Closure;
  bool rings_only = false;
  bool magmas_only = false;

  Verdict operator()(const Structure& s, const Subset& p) const {
    return test(s, p, Subset::full(s.size()));
  }
};

// Throws DomainError for unknown names or a predicate/universe kind mismatch.
const Predicate& find_predicate(std::string_view name, const Structure& parent);
std::vector<std::string> predicate_names();

std::vector<Subset> enumerate_subs(const Structure& parent, const Predicate& predicate,
                                   const EnumOptions& options = {});

enum class LagrangeKind { Lagrange, WeaklyLagrange, LagrangeFree };
std::string_view to_string(LagrangeKind k);

struct LagrangeClass {
  LagrangeKind kind = LagrangeKind::Lagrange;
  std::vector<Subset> lagrange;      // proper strict subs whose order divides |G|
  std::vector<Subset> non_lagrange;  // proper strict subs whose order does not
  bool vacuous = false;              // no proper strict sub exists
};

// Quantifies over proper strict-mode neutrosophic subgroupoids.
LagrangeClass classify_lagrange(const FiniteMagma& parent, const EnumOptions& options = {});

}  // namespace neutrolab
