#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace neutrolab {

enum class ElementClass { Zero, Real, PureNeutrosophic, Mixed };

std::string_view to_string(ElementClass c);

inline bool is_neutrosophic(ElementClass c) {
  return c == ElementClass::PureNeutrosophic || c == ElementClass::Mixed;
}

// a + bI over Z_n with I*I = I and 0*I = 0.
class NeutroScalar {
 public:
  NeutroScalar(std::int64_t a, std::int64_t b, std::uint32_t n);

  static NeutroScalar zero(std::uint32_t n) { return {0, 0, n}; }
  static NeutroScalar one(std::uint32_t n) { return {1, 0, n}; }
  static NeutroScalar indeterminate(std::uint32_t n) { return {0, 1, n}; }

  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t modulus() const noexcept { return n_; }

  // Position in the canonical carrier order a + n*b.
  std::uint32_t index() const noexcept { return a_ + n_ * b_; }
  static NeutroScalar from_index(std::uint32_t index, std::uint32_t n) {
    return {index % n, index / n, n};
  }

  friend bool operator==(const NeutroScalar&, const NeutroScalar&) = default;
  friend auto operator<=>(const NeutroScalar&, const NeutroScalar&) = default;

 private:
  std::uint32_t a_;
  std::uint32_t b_;
  std::uint32_t n_;
};

NeutroScalar operator+(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar operator-(const NeutroScalar& x);
NeutroScalar operator-(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar operator*(const NeutroScalar& x, const NeutroScalar& y);

NeutroScalar ns_add(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar ns_mul(const NeutroScalar& x, const NeutroScalar& y);
NeutroScalar ns_scale(std::int64_t t, const NeutroScalar& x);
ElementClass ns_classify(const NeutroScalar& x);

// Grammar: INT | INT "I" | "I" | INT "+" INT "I" | INT "+" "I", blanks allowed.
NeutroScalar ns_parse(std::string_view text, std::uint32_t n);
std::string ns_format(const NeutroScalar& x);

}  // namespace neutrolab

template <>
struct std::hash<neutrolab::NeutroScalar> {
  std::size_t operator()(const neutrolab::NeutroScalar& x) const noexcept {
    return (static_cast<std::size_t>(x.modulus()) << 40) ^
           (static_cast<std::size_t>(x.b()) << 20) ^ x.a();
  }
};
