#include "neutrolab/scalar.hpp"

#include <cctype>
#include <limits>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  auto r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

void require_same_modulus(const NeutroScalar& x, const NeutroScalar& y) {
  if (x.modulus() != y.modulus()) {
    throw ModulusMismatch(fmt::format("moduli differ: {} vs {}", x.modulus(), y.modulus()));
  }
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_blanks() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_blanks();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_blanks();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  std::uint64_t integer() {
    skip_blanks();
    if (!peek_digit()) throw ParseError("expected integer", pos_);
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > std::numeric_limits<std::uint64_t>::max() / 20) {
        throw ParseError("integer too large", pos_);
      }
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Zero: return "Zero";
    case ElementClass::Real: return "Real";
    case ElementClass::PureNeutrosophic: return "PureNeutrosophic";
    case ElementClass::Mixed: return "Mixed";
  }
  return "?";
}

NeutroScalar::NeutroScalar(std::int64_t a, std::int64_t b, std::uint32_t n)
    : a_(0), b_(0), n_(n) {
  if (n < 2) throw DomainError(fmt::format("modulus must be at least 2, got {}", n));
  a_ = reduce(a, n);
  b_ = reduce(b, n);
}

NeutroScalar operator+(const NeutroScalar& x, const NeutroScalar& y) {
  require_same_modulus(x, y);
  return {std::int64_t{x.a()} + y.a(), std::int64_t{x.b()} + y.b(), x.modulus()};
}

NeutroScalar operator-(const NeutroScalar& x) {
  return {-std::int64_t{x.a()}, -std::int64_t{x.b()}, x.modulus()};
}

NeutroScalar operator-(const NeutroScalar& x, const NeutroScalar& y) { return x + (-y); }

NeutroScalar operator*(const NeutroScalar& x, const NeutroScalar& y) {
  require_same_modulus(x, y);
  const std::int64_t a = x.a(), b = x.b(), c = y.a(), d = y.b();
  return {a * c, a * d + b * c + b * d, x.modulus()};
}

NeutroScalar ns_add(const NeutroScalar& x, const NeutroScalar& y) { return x + y; }
NeutroScalar ns_mul(const NeutroScalar& x, const NeutroScalar& y) { return x * y; }

NeutroScalar ns_scale(std::int64_t t, const NeutroScalar& x) {
  const std::int64_t n = x.modulus();
  const std::int64_t tr = ((t % n) + n) % n;
  return {tr * x.a(), tr * x.b(), x.modulus()};
}

ElementClass ns_classify(const NeutroScalar& x) {
  if (x.b() == 0) return x.a() == 0 ? ElementClass::Zero : ElementClass::Real;
  return x.a() == 0 ? ElementClass::PureNeutrosophic : ElementClass::Mixed;
}

NeutroScalar ns_parse(std::string_view text, std::uint32_t n) {
  if (n < 2) throw DomainError(fmt::format("modulus must be at least 2, got {}", n));
  Cursor cur(text);
  std::uint64_t real = 0;
  std::uint64_t indet = 0;
  if (cur.accept('I')) {
    indet = 1;
  } else {
    const auto v = cur.integer() % n;
    if (cur.accept('I')) {
      indet = v;
    } else {
      real = v;
      if (cur.accept('+')) {
        indet = cur.peek_digit() ? cur.integer() % n : 1;
        if (!cur.accept('I')) throw ParseError("expected 'I'", cur.position());
      }
    }
  }
  if (!cur.at_end()) throw ParseError("unexpected trailing input", cur.position());
  return {static_cast<std::int64_t>(real), static_cast<std::int64_t>(indet), n};
}

std::string ns_format(const NeutroScalar& x) {
  const auto indet = [&] { return x.b() == 1 ? std::string("I") : fmt::format("{}I", x.b()); };
  if (x.b() == 0) return fmt::format("{}", x.a());
  if (x.a() == 0) return indet();
  return fmt::format("{}+{}", x.a(), indet());
}

}  // namespace neutrolab
