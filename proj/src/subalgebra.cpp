#include "neutrolab/subalgebra.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

namespace {

// Grows `members` (with `out` mirroring it) to the least closed superset,
// pairing each element from position `start` on with every earlier one.
void saturate(const Structure& parent, Subset& out, std::vector<Index>& members, std::size_t start,
              bool absorb_carrier) {
  const auto push = [&](Index x) {
    if (!out.contains(x)) {
      out.insert(x);
      members.push_back(x);
    }
  };
  const auto n = static_cast<Index>(parent.size());
  if (parent.is_ring()) {
    const auto& r = parent.ring();
    for (std::size_t i = start; i < members.size(); ++i) {
      const auto a = members[i];
      push(r.neg(a));
      if (absorb_carrier) {
        for (Index s = 0; s < n; ++s) {
          push(r.mul(a, s));
          push(r.mul(s, a));
        }
      }
      for (std::size_t j = 0; j <= i; ++j) {
        const auto b = members[j];
        push(r.add(a, b));
        push(r.mul(a, b));
        push(r.mul(b, a));
      }
    }
  } else {
    const auto& m = parent.magma();
    for (std::size_t i = start; i < members.size(); ++i) {
      const auto a = members[i];
      if (absorb_carrier) {
        for (Index s = 0; s < n; ++s) {
          push(m.op(a, s));
          push(m.op(s, a));
        }
      }
      for (std::size_t j = 0; j <= i; ++j) {
        const auto b = members[j];
        push(m.op(a, b));
        push(m.op(b, a));
      }
    }
  }
}

std::vector<Index> as_indices(const Subset& s) {
  std::vector<Index> out;
  s.for_each([&](std::size_t i) { out.push_back(static_cast<Index>(i)); });
  return out;
}

void require_nonempty(const Subset& p) {
  if (p.empty()) throw DomainError("subset is empty");
}

Verdict mark_improper(Verdict v, const Subset& p) {
  if (v.holds && p.is_full()) v.flag("improper");
  return v;
}

Verdict magma_closed(const FiniteMagma& m, const Subset& p) {
  const auto idx = as_indices(p);
  for (auto a : idx)
    for (auto b : idx)
      if (!p.contains(m.op(a, b))) return Verdict::fail("not closed", {a, b});
  return Verdict::ok();
}

}  // namespace

Subset closure(const Structure& parent, const Subset& seed) {
  Subset out = seed;
  auto members = as_indices(seed);
  saturate(parent, out, members, 0, false);
  return out;
}

Subset closure_with(const Structure& parent, const Subset& base, Index extra) {
  if (base.contains(extra)) return base;
  Subset out = base;
  auto members = as_indices(base);
  const auto start = members.size();
  out.insert(extra);
  members.push_back(extra);
  saturate(parent, out, members, start, false);
  return out;
}

Subset ideal_closure(const Structure& parent, const Subset& seed) {
  Subset out = seed;
  auto members = as_indices(seed);
  saturate(parent, out, members, 0, true);
  return out;
}

bool is_closed(const Structure& parent, const Subset& p) {
  if (parent.is_ring()) return is_subring(parent.ring(), p).holds;
  return magma_closed(parent.magma(), p).holds;
}

bool has_neutrosophic(const Structure& parent, const Subset& p) {
  bool found = false;
  p.for_each([&](std::size_t i) { found = found || parent.neutrosophic(static_cast<Index>(i)); });
  return found;
}

Verdict is_subgroupoid(const FiniteMagma& parent, const Subset& p, SubMode mode) {
  require_nonempty(p);
  auto v = magma_closed(parent, p);
  if (!v) return v;
  if (mode == SubMode::Strict) {
    bool found = false;
    p.for_each([&](std::size_t i) { found = found || parent.neutrosophic(static_cast<Index>(i)); });
    if (!found) return Verdict::fail("no neutrosophic element");
  }
  return mark_improper(v, p);
}

Verdict is_subring(const FiniteRing& parent, const Subset& p, SubMode mode) {
  require_nonempty(p);
  const auto idx = as_indices(p);
  for (auto a : idx) {
    if (!p.contains(parent.neg(a))) return Verdict::fail("not closed under negation", {a, a, 2});
    for (auto b : idx) {
      if (!p.contains(parent.add(a, b))) return Verdict::fail("not closed under +", {a, b, 0});
      if (!p.contains(parent.mul(a, b))) return Verdict::fail("not closed under *", {a, b, 1});
    }
  }
  if (mode == SubMode::Strict) {
    bool found = false;
    for (auto a : idx) found = found || parent.neutrosophic(a);
    if (!found) return Verdict::fail("no neutrosophic element");
  }
  return mark_improper(Verdict::ok(), p);
}

Verdict is_strong_sub(const Structure& parent, const Subset& p) {
  require_nonempty(p);
  auto v = parent.is_ring() ? is_subring(parent.ring(), p) : is_subgroupoid(parent.magma(), p);
  if (!v) return v;
  const auto zero = parent.zero();
  bool any = false;
  for (auto a : as_indices(p)) {
    if (zero && a == *zero) continue;
    if (!parent.neutrosophic(a)) return Verdict::fail("element is not neutrosophic", {a});
    any = true;
  }
  if (!any) return Verdict::fail("no neutrosophic element");
  return v;
}

Verdict is_ideal(const Structure& parent, const Subset& p, const Subset* ambient) {
  require_nonempty(p);
  auto v = parent.is_ring() ? is_subring(parent.ring(), p) : is_subgroupoid(parent.magma(), p);
  if (!v) {
    v.reason = "not a substructure: " + v.reason;
    return v;
  }
  const auto full = Subset::full(parent.size());
  const auto& amb = ambient ? *ambient : full;
  const auto product = [&](Index x, Index y) {
    return parent.is_ring() ? parent.ring().mul(x, y) : parent.magma().op(x, y);
  };
  const auto idx = as_indices(p);
  const auto scope = as_indices(amb);
  for (auto a : idx) {
    for (auto s : scope) {
      if (!p.contains(product(a, s))) return Verdict::fail("not absorbing on the right", {a, s, 0});
      if (!p.contains(product(s, a))) return Verdict::fail("not absorbing on the left", {a, s, 1});
    }
  }
  return v;
}

bool is_lagrange_sub(const FiniteMagma& parent, const Subset& p) {
  if (!is_subgroupoid(parent, p)) throw DomainError("subset is not a subgroupoid");
  return parent.size() % p.count() == 0;
}

Verdict is_pseudo_sub(const FiniteRing& parent, const Subset& p) {
  auto v = is_subring(parent, p);
  if (!v) return v;
  for (auto a : as_indices(p)) {
    if (a == parent.zero()) continue;
    if (parent.klass(a) != ElementClass::PureNeutrosophic) {
      return Verdict::fail("element is not pure neutrosophic", {a});
    }
  }
  return v;
}

std::vector<std::vector<std::uint32_t>> unital_subrings_of_zn(std::uint32_t r) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    std::vector<std::uint32_t> s;
    for (std::uint32_t x = 0; x < r; x += d) s.push_back(x);
    const bool unital = std::any_of(s.begin(), s.end(), [&](std::uint32_t e) {
      return std::all_of(s.begin(), s.end(),
                         [&](std::uint32_t x) { return (std::uint64_t{e} * x) % r == x; });
    });
    if (unital) out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> digits_of(const GroupRing& gr, const Subset& p) {
  std::vector<std::vector<std::uint32_t>> out;
  const auto b = gr.basis()->size();
  const auto r = gr.modulus();
  p.for_each([&](std::size_t i) {
    std::vector<std::uint32_t> d(b);
    auto v = i;
    for (std::size_t k = 0; k < b; ++k) {
      d[k] = static_cast<std::uint32_t>(v % r);
      v /= r;
    }
    out.push_back(std::move(d));
  });
  return out;
}

const GroupRing& group_ring_of(const FiniteRing& parent) {
  if (!parent.group_ring()) throw DomainError("ring is not a realized group ring");
  return *parent.group_ring();
}

std::vector<Subset> basis_supports(const GroupRing& gr, SubMode mode) {
  const Structure basis(gr.basis());
  EnumOptions opts;
  auto closed = enumerate_closed(basis, opts);
  if (mode == SubMode::Strict) {
    std::erase_if(closed, [&](const Subset& h) { return !has_neutrosophic(basis, h); });
  }
  return closed;
}

}  // namespace

Subset groupring_subset(const FiniteRing& parent, const std::vector<std::uint32_t>& coefficients,
                        const Subset& support) {
  const auto& gr = group_ring_of(parent);
  std::vector<char> allowed(gr.modulus(), 0);
  for (auto c : coefficients) allowed.at(c) = 1;
  Subset out(parent.size());
  const auto all = digits_of(gr, Subset::full(parent.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < all[i].size() && ok; ++k) {
      const auto c = all[i][k];
      ok = c == 0 || (allowed[c] && support.contains(k));
    }
    if (ok) out.insert(i);
  }
  return out;
}

Verdict is_subneutro_groupring(const FiniteRing& parent, const Subset& p, SubMode mode,
                               GroupRingDecomposition* decomposition) {
  require_nonempty(p);
  const auto& gr = group_ring_of(parent);
  const auto members = digits_of(gr, p);
  const auto size = p.count();
  // {0} is S<H> only for an empty support.
  if (size == 1 && p.contains(parent.zero()))
    return Verdict::fail("empty support").flag("empty-assignment");
  for (const auto& s : unital_subrings_of_zn(gr.modulus())) {
    std::vector<char> allowed(gr.modulus(), 0);
    for (auto c : s) allowed[c] = 1;
    for (const auto& h : basis_supports(gr, mode)) {
      std::size_t expected = 1;
      for (std::size_t k = 0; k < h.count() && expected <= size; ++k) expected *= s.size();
      if (expected != size) continue;
      const bool fits = std::all_of(members.begin(), members.end(), [&](const auto& d) {
        for (std::size_t k = 0; k < d.size(); ++k)
          if (d[k] != 0 && (!allowed[d[k]] || !h.contains(k))) return false;
        return true;
      });
      if (!fits) continue;
      if (decomposition) *decomposition = {s, h};
      return mark_improper(Verdict::ok(), p);
    }
  }
  return Verdict::fail("not of the form S<H>");
}

namespace {

std::vector<Subset> scan_all(const Structure& parent, const EnumOptions& options,
                             const std::function<bool(const Subset&)>& keep) {
  const auto n = parent.size();
  if (n > options.scan_cap) {
    throw ResourceError("scan_cap",
                        fmt::format("full scan of {} elements exceeds cap {}", n, options.scan_cap));
  }
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Subset s(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(i);
    if (keep(s)) {
      out.push_back(std::move(s));
      if (out.size() > options.result_cap) {
        throw ResourceError("result_cap", "too many subsets satisfy the predicate");
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

std::vector<Subset> enumerate_closed(const Structure& parent, const EnumOptions& options) {
  if (options.strategy == EnumStrategy::FullScan) {
    return scan_all(parent, options, [&](const Subset& s) { return is_closed(parent, s); });
  }
  const auto n = parent.size();
  if (n > options.closure_cap) {
    throw ResourceError("closure_cap", fmt::format("closure enumeration of {} elements exceeds cap {}",
                                                   n, options.closure_cap));
  }
  std::unordered_set<Subset> seen;
  std::vector<Subset> frontier;
  const auto visit = [&](Subset s) {
    if (seen.insert(s).second) {
      if (seen.size() > options.result_cap) {
        throw ResourceError("result_cap", "too many closed subsets");
      }
      frontier.push_back(std::move(s));
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = static_cast<Index>(options.reverse_seeds ? n - 1 - k : k);
    Subset seed(n);
    seed.insert(x);
    visit(closure(parent, seed));
  }
  while (!frontier.empty()) {
    auto c = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = static_cast<Index>(options.reverse_seeds ? n - 1 - k : k);
      if (!c.contains(x)) visit(closure_with(parent, c, x));
    }
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Subset> enumerate_subs(const Structure& parent, const Predicate& predicate,
                                   const EnumOptions& options) {
  const auto full = Subset::full(parent.size());
  const auto keep = [&](const Subset& s) { return predicate.test(parent, s, full).holds; };
  if (options.strategy == EnumStrategy::FullScan) return scan_all(parent, options, keep);
  std::vector<Subset> out;
  if (predicate.generator == Predicate::Generator::GroupRing) {
    const auto& gr = group_ring_of(parent.ring());
    for (const auto& s : unital_subrings_of_zn(gr.modulus())) {
      for (const auto& h : basis_supports(gr, SubMode::Loose)) {
        auto p = groupring_subset(parent.ring(), s, h);
        if (keep(p)) out.push_back(std::move(p));
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  for (auto& s : enumerate_closed(parent, options))
    if (keep(s)) out.push_back(std::move(s));
  return out;
}

std::string_view to_string(LagrangeKind k) {
  switch (k) {
    case LagrangeKind::Lagrange: return "Lagrange";
    case LagrangeKind::WeaklyLagrange: return "WeaklyLagrange";
    case LagrangeKind::LagrangeFree: return "LagrangeFree";
  }
  return "?";
}

LagrangeClass classify_lagrange(const FiniteMagma& parent, const EnumOptions& options) {
  const Structure s(std::make_shared<const FiniteMagma>(parent));
  LagrangeClass out;
  for (auto& p : enumerate_closed(s, options)) {
    if (p.is_full() || !has_neutrosophic(s, p)) continue;
    (parent.size() % p.count() == 0 ? out.lagrange : out.non_lagrange).push_back(std::move(p));
  }
  out.vacuous = out.lagrange.empty() && out.non_lagrange.empty();
  if (out.non_lagrange.empty()) {
    out.kind = LagrangeKind::Lagrange;
  } else if (out.lagrange.empty()) {
    out.kind = LagrangeKind::LagrangeFree;
  } else {
    out.kind = LagrangeKind::WeaklyLagrange;
  }
  return out;
}

namespace {

Verdict empty_assignment() { return Verdict::fail("empty assignment").flag("empty-assignment"); }

Verdict contained(const Subset& p, const Subset& ambient) {
  if (!p.is_subset_of(ambient)) return Verdict::fail("not contained in the parent assignment");
  return Verdict::ok();
}

Verdict substructure(const Structure& s, const Subset& p, SubMode mode) {
  return s.is_ring() ? is_subring(s.ring(), p, mode) : is_subgroupoid(s.magma(), p, mode);
}

using Test = std::function<Verdict(const Structure&, const Subset&, const Subset&)>;

Test guarded(Test inner) {
  return [inner = std::move(inner)](const Structure& s, const Subset& p, const Subset& amb) {
    if (p.empty()) return empty_assignment();
    if (auto v = contained(p, amb); !v) return v;
    return inner(s, p, amb);
  };
}

std::vector<Predicate> build_registry() {
  std::vector<Predicate> r;
  const auto add = [&](std::string name, Test t, Predicate::Generator g, bool rings, bool magmas) {
    r.push_back(Predicate{std::move(name), guarded(std::move(t)), g, rings, magmas});
  };
  using G = Predicate::Generator;
  add("closed", [](const Structure& s, const Subset& p, const Subset&) {
    return substructure(s, p, SubMode::Loose);
  }, G::Closure, false, false);
  add("carrier", [](const Structure&, const Subset& p, const Subset& amb) {
    return p == amb ? Verdict::ok() : Verdict::fail("not the whole parent");
  }, G::Closure, false, false);
  add("subgroupoid", [](const Structure& s, const Subset& p, const Subset&) {
    return is_subgroupoid(s.magma(), p, SubMode::Loose);
  }, G::Closure, false, true);
  add("neutro-subgroupoid", [](const Structure& s, const Subset& p, const Subset&) {
    return is_subgroupoid(s.magma(), p, SubMode::Strict);
  }, G::Closure, false, true);
  add("strong", [](const Structure& s, const Subset& p, const Subset&) {
    return is_strong_sub(s, p);
  }, G::Closure, false, false);
  add("ideal", [](const Structure& s, const Subset& p, const Subset& amb) {
    return is_ideal(s, p, &amb);
  }, G::Ideal, false, false);
  add("lagrange", [](const Structure& s, const Subset& p, const Subset& amb) {
    auto v = is_subgroupoid(s.magma(), p, SubMode::Loose);
    if (!v) return v;
    if (amb.count() % p.count() != 0) {
      return Verdict::fail(fmt::format("order {} does not divide {}", p.count(), amb.count()));
    }
    return v;
  }, G::Closure, false, true);
  add("subring", [](const Structure& s, const Subset& p, const Subset&) {
    return is_subring(s.ring(), p, SubMode::Loose);
  }, G::Closure, true, false);
  add("neutro-subring", [](const Structure& s, const Subset& p, const Subset&) {
    return is_subring(s.ring(), p, SubMode::Strict);
  }, G::Closure, true, false);
  add("pseudo-subring", [](const Structure& s, const Subset& p, const Subset&) {
    return is_pseudo_sub(s.ring(), p);
  }, G::Closure, true, false);
  add("pseudo-ideal", [](const Structure& s, const Subset& p, const Subset& amb) {
    auto v = is_pseudo_sub(s.ring(), p);
    if (!v) return v;
    return is_ideal(s, p, &amb);
  }, G::Ideal, true, false);
  add("groupring-sub", [](const Structure& s, const Subset& p, const Subset&) {
    return is_subneutro_groupring(s.ring(), p, SubMode::Loose);
  }, G::GroupRing, true, false);
  add("strict-groupring-sub", [](const Structure& s, const Subset& p, const Subset&) {
    return is_subneutro_groupring(s.ring(), p, SubMode::Strict);
  }, G::GroupRing, true, false);
  add("subring-not-groupring", [](const Structure& s, const Subset& p, const Subset&) {
    auto v = is_subring(s.ring(), p, SubMode::Loose);
    if (!v) return v;
    if (is_subneutro_groupring(s.ring(), p, SubMode::Loose)) {
      return Verdict::fail("has group ring structure");
    }
    return v;
  }, G::Closure, true, false);
  return r;
}

const std::vector<Predicate>& registry() {
  static const std::vector<Predicate> r = build_registry();
  return r;
}

}  // namespace

const Predicate& find_predicate(std::string_view name, const Structure& parent) {
  for (const auto& p : registry()) {
    if (p.name != name) continue;
    if (p.rings_only && !parent.is_ring()) {
      throw DomainError(fmt::format("predicate '{}' needs a ring universe", name));
    }
    if (p.magmas_only && parent.is_ring()) {
      throw DomainError(fmt::format("predicate '{}' needs a magma universe", name));
    }
    if (p.generator == Predicate::Generator::GroupRing && !parent.ring().group_ring()) {
      throw DomainError(fmt::format("predicate '{}' needs a group ring universe", name));
    }
    return p;
  }
  throw DomainError(fmt::format("unknown predicate '{}'", name));
}

std::vector<std::string> predicate_names() {
  std::vector<std::string> out;
  for (const auto& p : registry()) out.push_back(p.name);
  return out;
}

}  // namespace neutrolab
