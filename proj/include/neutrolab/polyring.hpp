#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutrolab/magma.hpp"
#include "neutrolab/ring.hpp"

namespace neutrolab {

using MagmaPtr = std::shared_ptr<const FiniteMagma>;

// Element of Z_r<B> for a finite basis magma B: a sparse map basis index -> nonzero residue.
class FormalSum {
 public:
  FormalSum(MagmaPtr basis, std::uint32_t r);
  FormalSum(MagmaPtr basis, std::uint32_t r, const std::map<Index, std::int64_t>& coeffs);

  static FormalSum term(MagmaPtr basis, std::uint32_t r, Index element, std::int64_t coeff = 1);

  const MagmaPtr& basis() const noexcept { return basis_; }
  std::uint32_t modulus() const noexcept { return r_; }
  const std::map<Index, std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  std::uint32_t coeff(Index b) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Zero, Real (support avoids I-elements), PureNeutrosophic (support only on
  // I-elements) or Mixed.
  ElementClass klass() const;

  friend bool operator==(const FormalSum& x, const FormalSum& y) {
    return x.r_ == y.r_ && x.coeffs_ == y.coeffs_;
  }
  friend bool operator<(const FormalSum& x, const FormalSum& y) { return x.coeffs_ < y.coeffs_; }

 private:
  MagmaPtr basis_;
  std::uint32_t r_;
  std::map<Index, std::uint32_t> coeffs_;
};

FormalSum fs_add(const FormalSum& x, const FormalSum& y);
FormalSum fs_neg(const FormalSum& x);
FormalSum fs_mul(const FormalSum& x, const FormalSum& y);
inline FormalSum operator+(const FormalSum& x, const FormalSum& y) { return fs_add(x, y); }
inline FormalSum operator-(const FormalSum& x) { return fs_neg(x); }
inline FormalSum operator*(const FormalSum& x, const FormalSum& y) { return fs_mul(x, y); }

// Terms joined by '+'; term := [coeff][g | g^k][I]. Requires a cyclic basis.
FormalSum fs_parse(std::string_view text, const MagmaPtr& basis, std::uint32_t r);
std::string fs_format(const FormalSum& x);

// Z_r<B> as a whole: element counting, dense indexing and table realization.
class GroupRing {
 public:
  GroupRing(MagmaPtr basis, std::uint32_t r);

  const MagmaPtr& basis() const noexcept { return basis_; }
  std::uint32_t modulus() const noexcept { return r_; }
  std::optional<std::uint64_t> size() const;

  FormalSum zero() const { return {basis_, r_}; }
  FormalSum element(Index basis_index, std::int64_t coeff = 1) const {
    return FormalSum::term(basis_, r_, basis_index, coeff);
  }
  FormalSum parse(std::string_view text) const { return fs_parse(text, basis_, r_); }

  // Mixed-radix position: sum of coeff(b) * r^b. Requires size() to fit.
  std::uint64_t encode(const FormalSum& x) const;
  FormalSum decode(std::uint64_t index) const;

  nlohmann::json spec() const;

 private:
  MagmaPtr basis_;
  std::uint32_t r_;
};

using GroupRingPtr = std::shared_ptr<const GroupRing>;

// Every element with addition and multiplication tables, linked back to `ring`;
// throws ResourceError("realize_cap") beyond `cap` elements.
FiniteRing realize(const GroupRingPtr& ring, std::size_t cap = 2048);

enum class IdealSides { Left, Right, TwoSided };

// Least set containing `gens` closed under +, negation and multiplication by
// ring elements on the requested sides. Sorted ascending.
std::vector<FormalSum> fs_generated_ideal(const GroupRing& ring, const std::vector<FormalSum>& gens,
                                          std::size_t budget = 1 << 16,
                                          IdealSides sides = IdealSides::TwoSided);

}  // namespace neutrolab
