#include <doctest.h>

#include "neutrolab/error.hpp"
#include "neutrolab/magma.hpp"
#include "neutrolab/ring.hpp"
#include "neutrolab/subalgebra.hpp"

using namespace neutrolab;

namespace {

// Oracle for a*b = ta + ub over Z_n[I], computed on raw pairs.
std::pair<long, long> oracle_param(long t, long u, long n, std::pair<long, long> x,
                                   std::pair<long, long> y) {
  const auto m = [&](long v) { return ((v % n) + n) % n; };
  return {m(t * x.first + u * y.first), m(t * x.second + u * y.second)};
}

}  // namespace

TEST_CASE("parametric groupoid matches its formula") {
  for (std::uint32_t n = 2; n <= 6; ++n)
    for (long t = 0; t < n; ++t)
      for (long u = 0; u < n; ++u) {
        const auto g = build_param_groupoid({n, t, u});
        REQUIRE(g.size() == n * n);
        for (Index x = 0; x < g.size(); ++x)
          for (Index y = 0; y < g.size(); ++y) {
            const auto want = oracle_param(t, u, n, {x % n, x / n}, {y % n, y / n});
            const auto got = g.op(x, y);
            REQUIRE(got % n == want.first);
            REQUIRE(got / n == want.second);
          }
      }
}

TEST_CASE("parametric groupoid examples") {
  const auto g10 = build_param_groupoid({10, 3, 2});
  CHECK(g10.label(g10.op(g10.at("5I"), g10.at("5I"))) == "5I");
  const auto g4 = build_param_groupoid({4, 2, 1});
  CHECK(g4.size() == 16);
  const auto one = g4.at("1"), two = g4.at("2");
  CHECK(g4.label(g4.op(one, one)) == "3");
  CHECK(g4.label(g4.op(g4.op(one, one), two)) == "0");
  CHECK(g4.label(g4.op(one, g4.op(one, two))) == "2");
  CHECK(g4.meta()["t"] == 2);
}

TEST_CASE("associativity witness is a failing triple") {
  const auto g4 = build_param_groupoid({4, 2, 1});
  const auto v = verify_kind(g4, MagmaKind::Semigroup);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.size() == 3);
  const auto [x, y, z] = std::tuple{v.witness[0], v.witness[1], v.witness[2]};
  CHECK(g4.op(g4.op(x, y), z) != g4.op(x, g4.op(y, z)));
  CHECK(verify_kind(g4, MagmaKind::Groupoid).holds);
}

TEST_CASE("cyclic neutrosophic group") {
  const auto c6 = build_cyclic_neutro_group({6, false});
  CHECK(c6.size() == 12);
  CHECK(c6.label(c6.op(c6.at("g^5"), c6.at("gI"))) == "I");
  const auto c4 = build_cyclic_neutro_group({4, false});
  CHECK(c4.size() == 8);
  CHECK(c4.label(c4.op(c4.at("gI"), c4.at("g^3I"))) == "I");
  CHECK(verify_kind(c6, MagmaKind::Semigroup).holds);
  const auto g = verify_kind(c6, MagmaKind::Group);
  REQUIRE_FALSE(g.holds);
  CHECK(g.reason == "element has no inverse");
  CHECK(c6.label(g.witness.at(0)) == "I");
  CHECK(parse_cyclic_label("g^7", 6) == c6.at("g"));
  CHECK(parse_cyclic_label("g^8I", 6) == c6.at("g^2I"));
}

TEST_CASE("cyclic carriers are semigroups but never groups, and hold a classical group") {
  for (std::uint32_t m = 1; m <= 12; ++m) {
    const auto c = build_cyclic_neutro_group({m, false});
    REQUIRE(verify_kind(c, MagmaKind::Semigroup).holds);
    REQUIRE_FALSE(verify_kind(c, MagmaKind::Group).holds);
    Subset powers(c.size());
    for (Index i = 0; i < m; ++i) powers.insert(i);
    REQUIRE(verify_kind(restrict_to(c, powers), MagmaKind::Group).holds);
  }
}

TEST_CASE("user tables") {
  const auto trivial = build_from_table({"e"}, {{"e"}});
  CHECK(verify_kind(trivial, MagmaKind::Group).holds);
  const auto z2 = build_from_table({"e", "a"}, {{"e", "a"}, {"a", "e"}});
  CHECK(verify_kind(z2, MagmaKind::Group).holds);
  CHECK(verify_kind(z2, MagmaKind::Loop).holds);
  CHECK(z2.meta()["kind"] == "cayley");
  CHECK_THROWS_AS(build_from_table({"e", "a", "b"}, {{"e", "a", "b"}, {"a", "z", "e"}, {"b", "e", "a"}}),
                  DomainError);
  CHECK_THROWS_AS(build_from_table({"e", "a"}, {{"e", "a"}}), DomainError);
  CHECK_THROWS_AS(build_from_table({"e", "e"}, {{"e", "e"}, {"e", "e"}}), DomainError);
  const auto not_loop = build_from_table({"e", "a"}, {{"e", "a"}, {"a", "a"}});
  CHECK_FALSE(verify_kind(not_loop, MagmaKind::Loop).holds);
}

TEST_CASE("magma equality ignores meta") {
  const auto a = build_from_table({"0", "1"}, {{"0", "1"}, {"1", "0"}});
  const auto b = build_mul_mod(2);
  CHECK_FALSE(a == b);
  const auto c = FiniteMagma(a.labels(), a.table(), {ElementClass::Zero, ElementClass::Real}, {{"x", 1}});
  CHECK(a == c);
}

TEST_CASE("neutrosophic ring tables") {
  const auto r12 = build_neutro_ring(12);
  CHECK(r12.size() == 144);
  const auto x = r12.at("6+2I");
  CHECK(r12.label(r12.mul(x, x)) == "4I");
  const auto r10 = build_neutro_ring(10);
  CHECK(r10.label(r10.mul(r10.at("2I"), r10.at("5"))) == "0");
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const auto r = build_neutro_ring(n);
    const auto v = validate_ring_axioms(r);
    CHECK(v.holds);
    CHECK_FALSE(v.has_flag("sampled"));
  }
}

TEST_CASE("multiplicative carriers") {
  const auto m3 = build_neutro_mul(3);
  CHECK(m3.size() == 9);
  CHECK(verify_kind(m3, MagmaKind::Semigroup).holds);
  const auto m4 = build_neutro_mul(4, std::vector<std::string>{"0", "1", "2", "3", "I", "2I", "3I"});
  CHECK(m4.size() == 7);
  CHECK_THROWS_AS(build_neutro_mul(4, std::vector<std::string>{"0", "1", "2", "3", "I", "2I"}),
                  DomainError);
  const auto z10 = build_mul_mod(10);
  CHECK(z10.label(z10.op(z10.at("4"), z10.at("5"))) == "0");
}
