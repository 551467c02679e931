#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "neutrolab/scalar.hpp"
#include "neutrolab/subset.hpp"
#include "neutrolab/verdict.hpp"

namespace neutrolab {

// How free-form labels are brought to canonical form before lookup.
enum class LabelGrammar { Plain, Scalar, Cyclic, Polynomial };

struct ParamGroupoidSpec {
  std::uint32_t n = 2;
  std::int64_t t = 0;
  std::int64_t u = 0;
};

struct CyclicNeutroGroupSpec {
  std::uint32_t m = 1;
  bool semigroup = false;
};

enum class MagmaKind { Groupoid, Semigroup, Group, Loop };

std::string_view to_string(MagmaKind k);
MagmaKind magma_kind_from_string(std::string_view s);

class FiniteMagma {
 public:
  FiniteMagma(std::vector<std::string> labels, std::vector<Index> table,
              std::vector<ElementClass> classes, nlohmann::json meta = {},
              std::optional<Index> zero = std::nullopt,
              LabelGrammar grammar = LabelGrammar::Plain, std::uint32_t grammar_modulus = 0);

  std::size_t size() const noexcept { return labels_.size(); }
  Index op(Index x, Index y) const noexcept { return table_[x * labels_.size() + y]; }

  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Index> find(std::string_view label) const;
  Index at(std::string_view label) const;

  ElementClass klass(Index i) const { return classes_.at(i); }
  bool neutrosophic(Index i) const { return is_neutrosophic(klass(i)); }
  std::optional<Index> zero() const noexcept { return zero_; }
  const nlohmann::json& meta() const noexcept { return meta_; }
  LabelGrammar grammar() const noexcept { return grammar_; }
  std::uint32_t grammar_modulus() const noexcept { return grammar_modulus_; }

  const std::vector<Index>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteMagma& a, const FiniteMagma& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Index> table_;
  std::vector<ElementClass> classes_;
  std::unordered_map<std::string, Index> index_;
  nlohmann::json meta_;
  std::optional<Index> zero_;
  LabelGrammar grammar_;
  std::uint32_t grammar_modulus_;
};

FiniteMagma build_param_groupoid(const ParamGroupoidSpec& spec);
FiniteMagma build_cyclic_neutro_group(const CyclicNeutroGroupSpec& spec);

// Multiplicative structure of <Z_n u I>, optionally restricted to listed
// elements (which must be closed under multiplication).
FiniteMagma build_neutro_mul(std::uint32_t n,
                             const std::optional<std::vector<std::string>>& elements = std::nullopt);
// Z_n under multiplication.
FiniteMagma build_mul_mod(std::uint32_t n);

struct TableOptions {
  // Labels counted as neutrosophic; when absent, a label ending in 'I' is.
  std::optional<std::vector<std::string>> neutrosophic;
  std::optional<std::string> zero;
};

FiniteMagma build_from_table(const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::string>>& rows,
                             const TableOptions& options = {});

// The sub-magma on a closed subset; throws DomainError if the subset is not closed.
FiniteMagma restrict_to(const FiniteMagma& magma, const Subset& subset);

Verdict verify_kind(const FiniteMagma& magma, MagmaKind kind);

std::optional<Index> identity_of(const FiniteMagma& magma);

// Cyclic carrier labels: "1", "g", "g^k", "I", "gI", "g^kI".
std::string cyclic_label(std::uint32_t exponent, bool indeterminate);

// Parses a cyclic label, reducing the exponent mod m; returns the carrier index
// (exponent for plain powers, m + exponent for I-carrying ones).
Index parse_cyclic_label(std::string_view text, std::uint32_t m);

}  // namespace neutrolab
