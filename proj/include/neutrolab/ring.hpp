#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "neutrolab/magma.hpp"
#include "neutrolab/scalar.hpp"
#include "neutrolab/verdict.hpp"

namespace neutrolab {

class GroupRing;

// A finite ring realized by addition, multiplication and negation tables.
class FiniteRing {
 public:
  FiniteRing(std::vector<std::string> labels, std::vector<Index> add, std::vector<Index> mul,
             std::vector<ElementClass> classes, Index zero, nlohmann::json meta,
             LabelGrammar grammar = LabelGrammar::Plain, std::uint32_t grammar_modulus = 0);

  std::size_t size() const noexcept { return labels_.size(); }
  Index add(Index x, Index y) const noexcept { return add_[x * labels_.size() + y]; }
  Index mul(Index x, Index y) const noexcept { return mul_[x * labels_.size() + y]; }
  Index neg(Index x) const noexcept { return neg_[x]; }
  Index zero() const noexcept { return zero_; }

  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Index> find(std::string_view label) const;
  Index at(std::string_view label) const;
  ElementClass klass(Index i) const { return classes_.at(i); }
  bool neutrosophic(Index i) const { return is_neutrosophic(klass(i)); }
  const nlohmann::json& meta() const noexcept { return meta_; }
  LabelGrammar grammar() const noexcept { return grammar_; }
  std::uint32_t grammar_modulus() const noexcept { return grammar_modulus_; }

  // Set when the ring is the realization of a group or semigroup ring.
  const std::shared_ptr<const GroupRing>& group_ring() const noexcept { return group_ring_; }
  void attach_group_ring(std::shared_ptr<const GroupRing> gr) { group_ring_ = std::move(gr); }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.labels_ == b.labels_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  std::vector<ElementClass> classes_;
  std::unordered_map<std::string, Index> index_;
  Index zero_;
  nlohmann::json meta_;
  LabelGrammar grammar_;
  std::uint32_t grammar_modulus_;
  std::shared_ptr<const GroupRing> group_ring_;
};

// Z_n[I]; ring axioms are validated before returning.
FiniteRing build_neutro_ring(std::uint32_t n);

// Abelian group under +, associative ·, two-sided distributivity. Exhaustive
// when size^3 <= exhaustive_limit, otherwise `samples` seeded random triples.
Verdict validate_ring_axioms(const FiniteRing& ring, std::size_t exhaustive_limit = 20'000'000,
                             std::size_t samples = 100'000);

}  // namespace neutrolab
