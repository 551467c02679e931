#include <doctest.h>

#include "neutrolab/error.hpp"
#include "neutrolab/symbolic.hpp"

using namespace neutrolab;

namespace {

std::vector<NamedRing> all_rings(std::uint32_t max_multiplier) {
  std::vector<NamedRing> out;
  for (bool n : {false, true}) {
    for (std::uint32_t m = 1; m <= max_multiplier; ++m) out.emplace_back(Base::Z, m, n);
    for (Base b : {Base::Q, Base::R, Base::C}) out.emplace_back(b, 1, n);
  }
  return out;
}

// Oracle: probe elements a + bI whose coordinates need number level `level`
// (0 integers, 1 rationals, 2 reals, 3 complex numbers); an integer probe
// lies in nZ iff n divides both coordinates.
struct Probe {
  int level;
  int a;
  int b;
};

bool member(const Probe& p, const NamedRing& r) {
  if (p.level > static_cast<int>(r.base)) return false;
  if (p.b != 0 && !r.neutrosophic) return false;
  if (r.base == Base::Z) {
    const int m = static_cast<int>(r.multiplier);
    return p.a % m == 0 && p.b % m == 0;
  }
  return true;
}

std::vector<Probe> probes() {
  std::vector<Probe> out;
  for (int level = 0; level < 4; ++level)
    for (int a = -24; a <= 24; ++a)
      for (int b : {0, a, 1, 2, 3, 5, 7, 11}) out.push_back({level, a, b});
  return out;
}

}  // namespace

TEST_CASE("named ring text") {
  CHECK(parse_named_ring("<2Z u I>") == NamedRing(Base::Z, 2, true));
  CHECK(parse_named_ring("⟨Q ∪ I⟩") == NamedRing(Base::Q, 1, true));
  CHECK(parse_named_ring("C(I)") == NamedRing(Base::C, 1, true));
  CHECK(parse_named_ring("1Z") == NamedRing(Base::Z));
  CHECK_THROWS_AS(parse_named_ring("2Q"), ParseError);
  CHECK_THROWS_AS(parse_named_ring("<Z u J>"), ParseError);
  CHECK_THROWS_AS(NamedRing(Base::R, 3), DomainError);
  CHECK_THROWS_AS(parse_named_ring("0Z"), DomainError);
  for (const auto& r : all_rings(12)) CHECK(parse_named_ring(to_string(r)) == r);
}

TEST_CASE("tower containment examples") {
  CHECK(sym_contains(parse_named_ring("<2Z u I>"), parse_named_ring("<Z u I>")));
  CHECK(sym_contains(parse_named_ring("<R u I>"), parse_named_ring("<C u I>")));
  CHECK_FALSE(sym_contains(parse_named_ring("Q"), parse_named_ring("<Z u I>")));
  CHECK(sym_contains(parse_named_ring("Q"), parse_named_ring("<Q u I>")));
  CHECK_FALSE(sym_contains(parse_named_ring("<Q u I>"), parse_named_ring("C")));
}

TEST_CASE("containment is a partial order and agrees with the probe model") {
  const auto rings = all_rings(12);
  const auto ps = probes();
  for (const auto& x : rings) {
    REQUIRE(sym_contains(x, x));
    for (const auto& y : rings) {
      if (sym_contains(x, y) && sym_contains(y, x)) REQUIRE(x == y);
      bool probe_subset = true;
      for (const auto& p : ps)
        if (member(p, x) && !member(p, y)) probe_subset = false;
      REQUIRE(sym_contains(x, y) == probe_subset);
      const auto meet = sym_meet(x, y);
      for (const auto& p : ps) REQUIRE(member(p, meet) == (member(p, x) && member(p, y)));
      for (const auto& z : rings)
        if (sym_contains(x, y) && sym_contains(y, z)) REQUIRE(sym_contains(x, z));
    }
  }
}

TEST_CASE("multiples of Z order by divisibility") {
  for (std::uint32_t m = 1; m <= 12; ++m)
    for (std::uint32_t n = 1; n <= 12; ++n)
      REQUIRE(sym_contains(NamedRing(Base::Z, m), NamedRing(Base::Z, n)) == (m % n == 0));
  const NamedUnion u({parse_named_ring("<2Z u I>"), parse_named_ring("<5Z u I>")});
  CHECK(u.members().size() == 2);
  CHECK_FALSE(u.is_subset_of(NamedUnion(parse_named_ring("<2Z u I>"))));
  CHECK_FALSE(u.is_subset_of(NamedUnion(parse_named_ring("<5Z u I>"))));
  CHECK(u.is_subset_of(NamedUnion(parse_named_ring("<Z u I>"))));
}

TEST_CASE("fields") {
  CHECK(sym_is_neutro_field(parse_named_ring("<C u I>")));
  CHECK_FALSE(sym_is_field(parse_named_ring("<C u I>")));
  CHECK_FALSE(sym_is_field(parse_named_ring("<Z u I>")));
  CHECK_FALSE(sym_is_neutro_field(parse_named_ring("<Z u I>")));
  CHECK(sym_is_field(parse_named_ring("Q")));
  for (const auto& r : all_rings(12))
    if (sym_is_field(r) || sym_is_neutro_field(r)) CHECK(sym_is_ring(r));
}

TEST_CASE("bifields") {
  const auto ci = parse_named_ring("<C u I>");
  const auto r = parse_named_ring("R");
  CHECK(sym_is_subbifield(ci, r, parse_named_ring("<R u I>"), parse_named_ring("Q")).holds);
  const auto nested = sym_is_subbifield(ci, r, parse_named_ring("<Q u I>"), parse_named_ring("Q"));
  CHECK(nested.holds);
  CHECK(nested.has_flag("nested"));
  CHECK_FALSE(sym_is_subbifield(ci, r, parse_named_ring("<Q u I>"), parse_named_ring("<Q u I>")).holds);
  CHECK_FALSE(sym_is_subbifield(ci, r, parse_named_ring("Q"), parse_named_ring("C")).holds);
}

TEST_CASE("symbolic group rings") {
  const auto g = parse_symbolic_group_ring("Q<GuI:m=6>");
  CHECK(g.support.is_full());
  CHECK(g.basis->size() == 12);
  CHECK(to_string(g) == "Q<GuI:m=6>");
  const auto h1 = parse_symbolic_group_ring("Q<HuI:m=6,H=1;g^3>");
  CHECK(h1.support.count() == 2);
  CHECK(to_string(h1) == "Q<HuI:m=6,H=1;g^3>");
  CHECK(sym_subgroupring(h1, g));
  CHECK(sym_subgroupring(parse_symbolic_group_ring("R<GuI:m=6>"), parse_symbolic_group_ring("C<GuI:m=6>")));
  CHECK_FALSE(sym_subgroupring(parse_symbolic_group_ring("C<GuI:m=6>"), g));
  CHECK_FALSE(sym_subgroupring(parse_symbolic_group_ring("Q<HuI:m=6,H=g>"), g));
  CHECK_FALSE(sym_subgroupring(parse_symbolic_group_ring("Q<GuI:m=4>"), g));
  CHECK_THROWS_AS(parse_symbolic_group_ring("Q<GuI>"), ParseError);
  CHECK_THROWS_AS(parse_symbolic_group_ring("Q"), ParseError);
}

TEST_CASE("soft sets over the integer tower") {
  const auto zi = parse_named_ring("<Z u I>");
  const auto f = make_sym_soft(zi, {{"a1", {"<2Z u I>"}}, {"a2", {"<3Z u I>"}}, {"a3", {"<4Z u I>"}}});
  const auto k = make_sym_soft(zi, {{"a1", {"<5Z u I>"}}, {"a3", {"<7Z u I>"}}});
  CHECK(is_soft_sym(f, SymPredicate::Subring).overall);
  CHECK(is_soft_sym(f, SymPredicate::NeutroSubring).overall);
  CHECK_FALSE(is_soft_sym(f, SymPredicate::Field).overall);

  const auto h = extended_union(f, k);
  CHECK(h.params() == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(to_string(h.at("a1")) == "<2Z u I> U <5Z u I>");
  CHECK(to_string(h.at("a2")) == "<3Z u I>");
  CHECK(to_string(h.at("a3")) == "<4Z u I> U <7Z u I>");
  const auto v = is_soft_sym(h, SymPredicate::Subring);
  CHECK_FALSE(v.overall);
  CHECK_FALSE(v.per_param[0].second.holds);
  CHECK(v.per_param[1].second.holds);

  const auto i = restricted_intersection(f, k);
  CHECK(to_string(i.at("a1")) == "<10Z u I>");
  CHECK(is_soft_sym(i, SymPredicate::Subring).overall);
  CHECK(soft_subset(i, f));

  CHECK_THROWS_AS(make_sym_soft(zi, {{"a1", {"Q"}}}), ModulusMismatch);
}

TEST_CASE("soft sets over the complex tower") {
  const auto ci = parse_named_ring("<C u I>");
  const auto f = make_sym_soft(ci, {{"a1", {"<R u I>"}}, {"a2", {"<Q u I>"}}});
  CHECK(is_soft_sym(f, SymPredicate::NeutroField).overall);
  const auto abs = make_sym_soft(ci, {{"a1", {"<C u I>"}}});
  CHECK(is_absolute(abs));
  CHECK_FALSE(is_absolute(f));
}

TEST_CASE("soft sets over a symbolic group ring") {
  const auto top = parse_symbolic_group_ring("Q<GuI:m=6>");
  const auto f = make_sym_groupring_soft(top, {{"a1", {"Q<HuI:m=6,H=1;g^3>"}},
                                               {"a2", {"Q<HuI:m=6,H=1;g^3;I;g^3I>"}},
                                               {"a3", {"Q<HuI:m=6,H=1;g^2;g^4>"}},
                                               {"a4", {"Q<HuI:m=6,H=1;g^2;g^4;I;g^2I;g^4I>"}}});
  CHECK(is_soft_sym_groupring(f).overall);
  const auto h = make_sym_groupring_soft(top, {{"a1", {"Q<HuI:m=6,H=1;g^2;g^4;I;g^2I;g^4I>"}}});
  const auto k = restricted_union(f, h);
  CHECK(k.params() == std::vector<std::string>{"a1"});
  CHECK(k.at("a1").members().size() == 2);
  CHECK_FALSE(is_soft_sym_groupring(k).overall);

  const auto c = parse_symbolic_group_ring("C<GuI:m=6>");
  const auto sub = make_sym_groupring_soft(c, {{"a1", {"R<GuI:m=6>"}}, {"a2", {"Q<GuI:m=6>"}}, {"a3", {"Z<GuI:m=6>"}}});
  CHECK(is_soft_sym_groupring(sub).overall);
  CHECK_THROWS_AS(make_sym_groupring_soft(top, {{"a1", {"C<GuI:m=6>"}}}), ModulusMismatch);
}
