#include <doctest.h>

#include "neutrolab/error.hpp"
#include "neutrolab/scalar.hpp"

using namespace neutrolab;

namespace {

// Independent oracle: expand (a+bI)(c+dI) = ac + (ad + bc + bd)I by hand.
struct Pair {
  long a, b;
};

Pair oracle_mul(Pair x, Pair y, long n) {
  return {(x.a * y.a) % n, (x.a * y.b + x.b * y.a + x.b * y.b) % n};
}

NeutroScalar S(long a, long b, std::uint32_t n) { return {a, b, n}; }

}  // namespace

TEST_CASE("addition is componentwise") {
  CHECK(S(5, 5, 10) + S(5, 5, 10) == NeutroScalar::zero(10));
  CHECK(ns_add(NeutroScalar::indeterminate(4), NeutroScalar::indeterminate(4)) == S(0, 2, 4));
  CHECK(S(6, 2, 12) + S(6, 10, 12) == NeutroScalar::zero(12));
}

TEST_CASE("multiplication uses I*I = I and 0*I = 0") {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const auto i = NeutroScalar::indeterminate(n);
    CHECK(i * i == i);
    CHECK(NeutroScalar::zero(n) * i == NeutroScalar::zero(n));
  }
  CHECK(S(6, 2, 12) * S(7, 0, 12) == S(6, 2, 12));
}

TEST_CASE("multiplication agrees with the hand expansion") {
  for (std::uint32_t n = 2; n <= 7; ++n)
    for (std::uint32_t x = 0; x < n * n; ++x)
      for (std::uint32_t y = 0; y < n * n; ++y) {
        const auto p = NeutroScalar::from_index(x, n) * NeutroScalar::from_index(y, n);
        const auto o = oracle_mul({x % n, x / n}, {y % n, y / n}, n);
        REQUIRE(p.a() == static_cast<std::uint32_t>(o.a));
        REQUIRE(p.b() == static_cast<std::uint32_t>(o.b));
      }
}

TEST_CASE("scaling") {
  CHECK(ns_scale(3, S(0, 5, 10)) == S(0, 5, 10));
  CHECK(ns_scale(0, S(7, 3, 12)) == NeutroScalar::zero(12));
  CHECK(ns_scale(2, S(2, 2, 4)) == NeutroScalar::zero(4));
  CHECK(ns_scale(-1, S(1, 1, 4)) == S(3, 3, 4));
}

TEST_CASE("classification") {
  CHECK(ns_classify(S(0, 5, 10)) == ElementClass::PureNeutrosophic);
  CHECK(ns_classify(S(5, 5, 10)) == ElementClass::Mixed);
  CHECK(ns_classify(S(0, 0, 4)) == ElementClass::Zero);
  CHECK(ns_classify(S(3, 0, 4)) == ElementClass::Real);
}

TEST_CASE("product with I kills the real part") {
  for (std::uint32_t n = 2; n <= 9; ++n)
    for (std::uint32_t x = 0; x < n * n; ++x) {
      const auto c = ns_classify(NeutroScalar::indeterminate(n) * NeutroScalar::from_index(x, n));
      CHECK((c == ElementClass::Zero || c == ElementClass::PureNeutrosophic));
    }
}

TEST_CASE("moduli must agree") {
  CHECK_THROWS_AS(S(1, 0, 4) + S(1, 0, 5), ModulusMismatch);
  CHECK_THROWS_AS(S(1, 0, 4) * S(1, 0, 5), ModulusMismatch);
  CHECK_THROWS_AS(S(1, 0, 1), DomainError);
}

TEST_CASE("ring laws hold exhaustively for small moduli") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const auto size = n * n;
    for (std::uint32_t i = 0; i < size; ++i)
      for (std::uint32_t j = 0; j < size; ++j) {
        const auto x = NeutroScalar::from_index(i, n), y = NeutroScalar::from_index(j, n);
        REQUIRE(x * y == y * x);
        REQUIRE(x + y == y + x);
        for (std::uint32_t k = 0; k < size; ++k) {
          const auto z = NeutroScalar::from_index(k, n);
          REQUIRE((x * y) * z == x * (y * z));
          REQUIRE((x + y) + z == x + (y + z));
          REQUIRE(x * (y + z) == x * y + x * z);
        }
      }
  }
}

TEST_CASE("parsing") {
  CHECK(ns_parse("5+5I", 10) == S(5, 5, 10));
  CHECK(ns_parse("I", 4) == S(0, 1, 4));
  CHECK(ns_parse("14I", 12) == S(0, 2, 12));
  CHECK(ns_parse(" 3 + I ", 4) == S(3, 1, 4));
  CHECK(ns_parse("7", 4) == S(3, 0, 4));
  CHECK_THROWS_AS(ns_parse("", 4), ParseError);
  CHECK_THROWS_AS(ns_parse("2+", 4), ParseError);
  CHECK_THROWS_AS(ns_parse("2I+1", 4), ParseError);
  try {
    ns_parse("3+xI", 5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("formatting is canonical and round-trips") {
  CHECK(ns_format(S(0, 0, 4)) == "0");
  CHECK(ns_format(S(3, 0, 4)) == "3");
  CHECK(ns_format(S(0, 1, 4)) == "I");
  CHECK(ns_format(S(0, 3, 4)) == "3I");
  CHECK(ns_format(S(2, 1, 4)) == "2+I");
  CHECK(ns_format(S(6, 5, 10)) == "6+5I");
  for (std::uint32_t n = 2; n <= 16; ++n)
    for (std::uint32_t i = 0; i < n * n; ++i) {
      const auto x = NeutroScalar::from_index(i, n);
      REQUIRE(ns_parse(ns_format(x), n) == x);
    }
}
