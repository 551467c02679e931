#include "neutrolab/ring.hpp"

#include <random>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

FiniteRing::FiniteRing(std::vector<std::string> labels, std::vector<Index> add,
                       std::vector<Index> mul, std::vector<ElementClass> classes, Index zero,
                       nlohmann::json meta, LabelGrammar grammar, std::uint32_t grammar_modulus)
    : labels_(std::move(labels)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      classes_(std::move(classes)),
      zero_(zero),
      meta_(std::move(meta)),
      grammar_(grammar),
      grammar_modulus_(grammar_modulus) {
  const auto n = labels_.size();
  if (n == 0) throw DomainError("empty carrier");
  if (add_.size() != n * n || mul_.size() != n * n) throw DomainError("ring tables are not square");
  if (classes_.size() != n) throw DomainError("element classes do not match carrier");
  if (zero_ >= n) throw DomainError("zero index outside carrier");
  for (auto v : add_)
    if (v >= n) throw DomainError("addition table entry outside carrier");
  for (auto v : mul_)
    if (v >= n) throw DomainError("multiplication table entry outside carrier");
  index_.reserve(n);
  for (Index i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw DomainError(fmt::format("duplicate label '{}'", labels_[i]));
    }
  }
  neg_.assign(n, zero_);
  for (Index x = 0; x < n; ++x) {
    bool found = false;
    for (Index y = 0; y < n && !found; ++y) {
      if (add_[x * n + y] == zero_) {
        neg_[x] = y;
        found = true;
      }
    }
    if (!found) throw DomainError(fmt::format("'{}' has no additive inverse", labels_[x]));
  }
}

std::optional<Index> FiniteRing::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteRing::at(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError(fmt::format("'{}' is not an element of the carrier", label));
}

FiniteRing build_neutro_ring(std::uint32_t n) {
  if (n < 2) throw DomainError("neutro_ring needs n >= 2");
  const auto size = n * n;
  std::vector<std::string> labels(size);
  std::vector<ElementClass> classes(size);
  std::vector<Index> add(static_cast<std::size_t>(size) * size);
  std::vector<Index> mul(add.size());
  for (Index i = 0; i < size; ++i) {
    const auto x = NeutroScalar::from_index(i, n);
    labels[i] = ns_format(x);
    classes[i] = ns_classify(x);
    for (Index j = 0; j < size; ++j) {
      const auto y = NeutroScalar::from_index(j, n);
      add[static_cast<std::size_t>(i) * size + j] = (x + y).index();
      mul[static_cast<std::size_t>(i) * size + j] = (x * y).index();
    }
  }
  FiniteRing ring(std::move(labels), std::move(add), std::move(mul), std::move(classes), 0,
                  {{"kind", "neutro_ring"}, {"n", n}}, LabelGrammar::Scalar, n);
  if (auto v = validate_ring_axioms(ring); !v) {
    throw DomainError(fmt::format("Z_{}[I] failed ring validation: {}", n, v.reason));
  }
  return ring;
}

namespace {

Verdict check_triple(const FiniteRing& r, Index x, Index y, Index z) {
  if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) {
    return Verdict::fail("addition not associative", {x, y, z});
  }
  if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) {
    return Verdict::fail("multiplication not associative", {x, y, z});
  }
  if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) {
    return Verdict::fail("left distributivity fails", {x, y, z});
  }
  if (r.mul(r.add(y, z), x) != r.add(r.mul(y, x), r.mul(z, x))) {
    return Verdict::fail("right distributivity fails", {x, y, z});
  }
  return Verdict::ok();
}

}  // namespace

Verdict validate_ring_axioms(const FiniteRing& ring, std::size_t exhaustive_limit,
                             std::size_t samples) {
  const auto n = static_cast<Index>(ring.size());
  const auto z = ring.zero();
  for (Index x = 0; x < n; ++x) {
    if (ring.add(x, z) != x || ring.add(z, x) != x) return Verdict::fail("zero is not neutral", {x});
    if (ring.add(x, ring.neg(x)) != z) return Verdict::fail("missing additive inverse", {x});
    for (Index y = 0; y < n; ++y)
      if (ring.add(x, y) != ring.add(y, x)) return Verdict::fail("addition not commutative", {x, y});
  }
  const auto cube = static_cast<std::size_t>(n) * n * n;
  if (cube <= exhaustive_limit) {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index w = 0; w < n; ++w)
          if (auto v = check_triple(ring, x, y, w); !v) return v;
    return Verdict::ok();
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    if (auto v = check_triple(ring, pick(rng), pick(rng), pick(rng)); !v) return v;
  }
  return Verdict::ok().flag("sampled");
}

}  // namespace neutrolab
