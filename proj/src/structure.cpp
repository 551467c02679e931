#include "neutrolab/structure.hpp"

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

Structure::Structure(std::shared_ptr<const FiniteMagma> magma) : impl_(std::move(magma)) {
  if (!std::get<MagmaPtr>(impl_)) throw DomainError("null magma");
}

Structure::Structure(std::shared_ptr<const FiniteRing> ring) : impl_(std::move(ring)) {
  if (!std::get<RingPtr>(impl_)) throw DomainError("null ring");
}

Structure::Structure(FiniteMagma magma)
    : impl_(std::make_shared<const FiniteMagma>(std::move(magma))) {}

Structure::Structure(FiniteRing ring) : impl_(std::make_shared<const FiniteRing>(std::move(ring))) {}

const FiniteMagma& Structure::magma() const { return *magma_ptr(); }
const FiniteRing& Structure::ring() const { return *ring_ptr(); }

const std::shared_ptr<const FiniteMagma>& Structure::magma_ptr() const {
  if (is_ring()) throw DomainError("structure is a ring, not a magma");
  return std::get<MagmaPtr>(impl_);
}

const std::shared_ptr<const FiniteRing>& Structure::ring_ptr() const {
  if (!is_ring()) throw DomainError("structure is a magma, not a ring");
  return std::get<RingPtr>(impl_);
}

std::size_t Structure::size() const {
  return std::visit([](const auto& p) { return p->size(); }, impl_);
}

const std::string& Structure::label(Index i) const {
  return std::visit([&](const auto& p) -> const std::string& { return p->label(i); }, impl_);
}

ElementClass Structure::klass(Index i) const {
  return std::visit([&](const auto& p) { return p->klass(i); }, impl_);
}

std::optional<Index> Structure::zero() const {
  if (is_ring()) return ring().zero();
  return magma().zero();
}

const nlohmann::json& Structure::spec() const {
  return std::visit([](const auto& p) -> const nlohmann::json& { return p->meta(); }, impl_);
}

std::optional<Index> Structure::find(std::string_view label) const {
  const auto exact = std::visit([&](const auto& p) { return p->find(label); }, impl_);
  if (exact) return exact;
  const auto [grammar, modulus] = std::visit(
      [](const auto& p) { return std::pair{p->grammar(), p->grammar_modulus()}; }, impl_);
  try {
    switch (grammar) {
      case LabelGrammar::Plain:
        return std::nullopt;
      case LabelGrammar::Scalar:
        return std::visit([&](const auto& p) { return p->find(ns_format(ns_parse(label, modulus))); },
                          impl_);
      case LabelGrammar::Cyclic:
        return magma().find(magma().label(parse_cyclic_label(label, modulus)));
      case LabelGrammar::Polynomial: {
        const auto& gr = ring().group_ring();
        if (!gr) return std::nullopt;
        return ring().find(fs_format(gr->parse(label)));
      }
    }
  } catch (const ParseError&) {
    return std::nullopt;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  return std::nullopt;
}

Index Structure::at(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError(fmt::format("'{}' is not an element of the carrier", label));
}

Subset Structure::subset(const std::vector<std::string>& labels) const {
  Subset s(size());
  for (const auto& l : labels) s.insert(at(l));
  return s;
}

std::vector<std::string> Structure::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(label(static_cast<Index>(i))); });
  return out;
}

nlohmann::json Structure::to_json(const Subset& s) const { return labels_of(s); }

bool operator==(const Structure& a, const Structure& b) {
  if (a.is_ring() != b.is_ring()) return false;
  if (a.is_ring()) return a.ring_ptr() == b.ring_ptr() || a.ring() == b.ring();
  return a.magma_ptr() == b.magma_ptr() || a.magma() == b.magma();
}

bool same_universe(const StructurePtr& a, const StructurePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace neutrolab
