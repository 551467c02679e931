#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "neutrolab/magma.hpp"
#include "neutrolab/polyring.hpp"
#include "neutrolab/ring.hpp"
#include "neutrolab/subset.hpp"

namespace neutrolab {

// A finite universe: either a magma (one operation) or a ring.
class Structure {
 public:
  explicit Structure(std::shared_ptr<const FiniteMagma> magma);
  explicit Structure(std::shared_ptr<const FiniteRing> ring);
  explicit Structure(FiniteMagma magma);
  explicit Structure(FiniteRing ring);

  bool is_ring() const noexcept { return std::holds_alternative<RingPtr>(impl_); }
  const FiniteMagma& magma() const;
  const FiniteRing& ring() const;
  const std::shared_ptr<const FiniteMagma>& magma_ptr() const;
  const std::shared_ptr<const FiniteRing>& ring_ptr() const;

  std::size_t size() const;
  const std::string& label(Index i) const;
  ElementClass klass(Index i) const;
  bool neutrosophic(Index i) const { return is_neutrosophic(klass(i)); }
  std::optional<Index> zero() const;
  const nlohmann::json& spec() const;

  // Exact label lookup, falling back to the carrier's element grammar so that
  // e.g. "14I" finds "2I" in a mod-12 carrier.
  std::optional<Index> find(std::string_view label) const;
  Index at(std::string_view label) const;

  Subset subset(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Subset& s) const;
  nlohmann::json to_json(const Subset& s) const;

  friend bool operator==(const Structure& a, const Structure& b);

 private:
  using MagmaPtr = std::shared_ptr<const FiniteMagma>;
  using RingPtr = std::shared_ptr<const FiniteRing>;
  std::variant<MagmaPtr, RingPtr> impl_;
};

using StructurePtr = std::shared_ptr<const Structure>;

bool same_universe(const StructurePtr& a, const StructurePtr& b);

}  // namespace neutrolab
