#include "neutrolab/soft.hpp"

#include <array>

#include <fmt/format.h>

namespace neutrolab {

namespace {

constexpr std::array<std::pair<SoftOp, std::string_view>, 8> kOpNames{{
    {SoftOp::RestrictedIntersection, "restricted-intersection"},
    {SoftOp::ExtendedIntersection, "extended-intersection"},
    {SoftOp::RestrictedUnion, "restricted-union"},
    {SoftOp::ExtendedUnion, "extended-union"},
    {SoftOp::And, "and"},
    {SoftOp::Or, "or"},
    {SoftOp::SameParamIntersection, "same-param-intersection"},
    {SoftOp::DisjointUnion, "disjoint-union"},
}};

}  // namespace

std::string_view to_string(SoftOp op) {
  for (const auto& [o, name] : kOpNames)
    if (o == op) return name;
  return "?";
}

SoftOp soft_op_from_string(std::string_view name) {
  for (const auto& [o, n] : kOpNames)
    if (n == name) return o;
  throw DomainError("unknown soft operation '" + std::string(name) + "'");
}

bool is_meet(SoftOp op) {
  switch (op) {
    case SoftOp::RestrictedIntersection:
    case SoftOp::ExtendedIntersection:
    case SoftOp::And:
    case SoftOp::SameParamIntersection:
      return true;
    default:
      return false;
  }
}

SoftVerdict is_soft(const FiniteSoftSet& s, const Predicate& predicate, Quantifier quantifier) {
  const Structure& u = *s.universe();
  const Subset full = Subset::full(u.size());
  SoftVerdict out = is_soft_with(s, [&](const Subset& m) { return predicate.test(u, m, full); });
  if (quantifier == Quantifier::ForAll || !out.overall) return out;

  std::size_t dividing = 0;
  for (auto& [param, v] : out.per_param) {
    const std::size_t order = s.at(param).count();
    if (u.size() % order == 0) {
      ++dividing;
      v.flag("lagrange");
    } else {
      v.flag("non-lagrange");
    }
  }
  const std::size_t total = out.per_param.size();
  switch (quantifier) {
    case Quantifier::Lagrange: out.overall = dividing == total; break;
    case Quantifier::WeakLagrange: out.overall = dividing < total; break;
    case Quantifier::LagrangeFree: out.overall = dividing == 0; break;
    case Quantifier::ForAll: break;
  }
  return out;
}

SoftVerdict soft_sub_of(const FiniteSoftSet& h, const FiniteSoftSet& f, const Predicate& predicate) {
  detail::require_same_universe(h, f);
  const Structure& u = *h.universe();
  SoftVerdict out;
  for (const auto& [p, m] : h.entries()) {
    const Subset* parent = f.find(p);
    Verdict v = parent ? predicate.test(u, m, *parent)
                       : Verdict::fail(fmt::format("parameter '{}' is not in the parent soft set", p));
    out.overall = out.overall && v.holds;
    out.per_param.emplace_back(p, std::move(v));
  }
  return out;
}

FiniteSoftSet make_soft(StructurePtr universe,
                        const std::vector<std::pair<std::string, std::vector<std::string>>>& assign) {
  std::vector<FiniteSoftSet::Entry> entries;
  entries.reserve(assign.size());
  for (const auto& [param, labels] : assign) entries.emplace_back(param, universe->subset(labels));
  return {std::move(universe), std::move(entries)};
}

nlohmann::ordered_json soft_to_json(const FiniteSoftSet& s) {
  const Structure& u = *s.universe();
  nlohmann::ordered_json out;
  out["universe"] = u.spec();
  out["params"] = s.params();
  nlohmann::ordered_json assign = nlohmann::ordered_json::object();
  for (const auto& [p, m] : s.entries()) assign[p] = u.labels_of(m);
  out["assign"] = std::move(assign);
  return out;
}

}  // namespace neutrolab
