// Worked examples rebuilt verbatim and checked against their stated conclusions.

#include <algorithm>

#include <fmt/format.h>

#include "claims_detail.hpp"
#include "neutrolab/harness.hpp"
#include "neutrolab/spec_io.hpp"
#include "neutrolab/subalgebra.hpp"
#include "neutrolab/symbolic.hpp"

namespace neutrolab::claims {

namespace {

using Assign = std::vector<std::pair<std::string, Labels>>;
using NAssign = std::vector<std::pair<std::string, std::vector<Labels>>>;

const Labels kP5 = {"0", "5", "5I", "5+5I"};
const Labels kQuad = {"0", "2", "2I", "2+2I"};
const Labels kA3 = {"e", "(123)", "(132)"};
const Labels kEvens10 = {"0", "2", "4", "6", "8"};

Labels ideal_12() {
  Labels out{"0", "6"};
  for (int b = 2; b <= 10; b += 2) out.push_back(fmt::format("{}I", b));
  for (int b = 2; b <= 10; b += 2) out.push_back(fmt::format("6+{}I", b));
  return out;
}

Claim example(std::string id, std::string summary, json universe, std::function<Report(const json&)> body,
              Status expected = Status::ExampleVerified, ClaimKind kind = ClaimKind::ExampleCheck) {
  Claim c;
  c.id = std::move(id);
  c.kind = kind;
  c.summary = std::move(summary);
  c.universe = universe;
  c.generator = "fixed";
  c.expected = expected;
  c.run = [universe, body = std::move(body)](const RunContext&) { return body(universe); };
  return c;
}

// ---- groupoids ----

Report example_1_1_3(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto p = s->subset(kP5);
  const auto q = s->subset(range_labels(10));
  c.verdict("P = {0,5,5I,5+5I} is a neutrosophic subgroupoid", is_subgroupoid(s->magma(), p, SubMode::Strict), *s);
  c.verdict("Q = Z10 is a subgroupoid", is_subgroupoid(s->magma(), q, SubMode::Loose), *s);
  c.expect("Q holds no I-element, so it is just a groupoid", !has_neutrosophic(*s, q));
  return c.finish(u);
}

Report example_2_1_1(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", kP5}, {"a2", range_labels(10)}});
  c.soft("(F,A) is a soft neutrosophic groupoid (loose reading)", is_soft(f, find_predicate("subgroupoid", *s)), *s);
  c.verdict("F(a1) is a neutrosophic subgroupoid", is_subgroupoid(s->magma(), f.at("a1"), SubMode::Strict), *s);
  return c.finish(u);
}

const Assign kF212 = {{"a1", kQuad}, {"a2", {"0", "2", "2+2I"}}, {"a3", {"0", "2+2I"}}};

Report example_2_1_2(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, kF212);
  c.soft("(F,A) is a soft neutrosophic groupoid", is_soft(f, find_predicate("neutro-subgroupoid", *s)), *s);
  return c.finish(u);
}

Report example_2_1_3(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, kF212);
  const auto h = make_soft(s, {{"a1", {"0", "2+2I"}}, {"a2", {"0", "2+2I"}}});
  const auto& strict = find_predicate("neutro-subgroupoid", *s);
  c.soft("(F,A) is a soft neutrosophic groupoid", is_soft(f, strict), *s);
  c.soft("(H,B) is a soft neutrosophic subgroupoid of (F,A)", soft_sub_of(h, f, strict), *s);
  return c.finish(u);
}

Report lagrange_example(const json& u, const Assign& assign, Quantifier q, const std::string& label) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, assign);
  c.soft(fmt::format("(F,A) is a soft {} neutrosophic groupoid", label),
         is_soft(f, find_predicate("neutro-subgroupoid", *s), q), *s);
  ordered_json orders = ordered_json::object();
  for (const auto& [param, m] : f.entries()) orders[param] = m.count();
  c.expect("assignment orders against |G| = 16", true, {{"orders", orders}, {"carrier", s->size()}});
  return c.finish(u);
}

Report example_2_1_7(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", {"0", "2I", "2+2I"}}, {"a2", {"0", "2+2I"}}});
  c.soft("(F,A) is a soft neutrosophic strong groupoid", is_soft(f, find_predicate("strong", *s)), *s);
  return c.finish(u);
}

// ---- N-groupoids ----

Report n_groupoid_example(const json& u, const NAssign& assign, NSubMode mode, const std::string& claim) {
  const auto col = build_ncollection(u);
  Checks c;
  const auto f = make_n_soft(col, assign);
  c.soft(claim, is_soft_n_sub(f, mode), *col);
  for (const auto& [param, m] : f.entries()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      const Structure& s = *(*col)[i].structure;
      c.verdict(fmt::format("F({}) part {} is closed in G{}", param, i + 1, i + 1),
                is_subgroupoid(s.magma(), m[i], SubMode::Loose), s);
    }
  }
  return c.finish(u);
}

// ---- rings ----

Report example_3_1_4(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", ideal_12()}, {"a2", {"0", "6", "6I", "6+6I"}}});
  // Oracle for F(a1): a in {0,6} and b even, by direct residue arithmetic.
  Labels grid;
  for (int a : {0, 6})
    for (int b = 0; b < 12; b += 2) grid.push_back(b == 0 ? std::to_string(a) : a == 0 ? fmt::format("{}I", b) : fmt::format("{}+{}I", a, b));
  c.expect("F(a1) is exactly {a+bI : a in {0,6}, b even}", s->subset(grid) == f.at("a1"),
           {{"elements", s->labels_of(f.at("a1"))}});
  c.soft("(F,A) is a soft neutrosophic ideal", is_soft(f, find_predicate("ideal", *s)), *s);
  bool neutro = true;
  for (const auto& [param, m] : f.entries()) neutro = neutro && has_neutrosophic(*s, m);
  c.expect("every F(a) holds an I-element", neutro);
  return c.finish(u);
}

Report example_3_1_5(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", {"0", "2", "4", "6", "8", "2I", "4I", "6I", "8I"}},
                               {"a2", {"0", "2I", "4I", "6I", "8I"}}});
  c.soft("(F,A) is a soft neutrosophic ring", is_soft(f, find_predicate("neutro-subring", *s)), *s);
  c.soft("(F,A) is not a soft neutrosophic ideal", is_soft(f, find_predicate("ideal", *s)), *s, false);
  return c.finish(u);
}

Report example_3_1_7(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", ideal_12()}, {"a2", {"0", "2", "4", "6", "8", "2I", "4I", "6I", "8I"}}});
  const auto h = make_soft(s, {{"a1", {"0", "6", "6+6I"}}, {"a2", kEvens10}});
  c.soft("(F,A) is a soft neutrosophic ring", is_soft(f, find_predicate("neutro-subring", *s)), *s);
  c.soft("(H,B) is a soft neutrosophic ideal of (F,A)", soft_sub_of(h, f, find_predicate("ideal", *s)), *s);
  return c.finish(u);
}

// ---- symbolic towers ----

Report example_3_1_1(const json& u) {
  const auto top = std::get<NamedRing>(build_symbolic(u));
  Checks c;
  const auto f = make_sym_soft(top, {{"a1", {"<2Z u I>"}}, {"a2", {"<3Z u I>"}}, {"a3", {"<5Z u I>"}}, {"a4", {"<6Z u I>"}}});
  c.expect("(F,A) is a soft neutrosophic ring", is_soft_sym(f, SymPredicate::NeutroSubring).overall);
  return c.finish(u);
}

Report example_3_1_2(const json& u) {
  const auto top = std::get<NamedRing>(build_symbolic(u));
  Checks c;
  const auto f = make_sym_soft(top, {{"a1", {"<R u I>"}}, {"a2", {"<Q u I>"}}, {"a3", {"<Z u I>"}}, {"a4", {"<2Z u I>"}}});
  c.expect("(F,A) is a soft neutrosophic ring", is_soft_sym(f, SymPredicate::NeutroSubring).overall);
  return c.finish(u);
}

Report example_3_1_3(const json& u) {
  const auto top = std::get<NamedRing>(build_symbolic(u));
  Checks c;
  const auto f = make_sym_soft(top, {{"a1", {"<2Z u I>"}}, {"a2", {"<3Z u I>"}}, {"a3", {"<4Z u I>"}}});
  const auto k = make_sym_soft(top, {{"a1", {"<5Z u I>"}}, {"a3", {"<7Z u I>"}}});
  c.expect("(F,A) and (K,B) are soft neutrosophic rings",
           is_soft_sym(f, SymPredicate::NeutroSubring).overall && is_soft_sym(k, SymPredicate::NeutroSubring).overall);
  const auto h = extended_union(f, k);
  const auto text = [&](const std::string& param) { return to_string(h.at(param)); };
  c.expect("H(a1) = <2Z u I> U <5Z u I>", text("a1") == "<2Z u I> U <5Z u I>", {{"computed", text("a1")}});
  c.expect("H(a2) = <3Z u I>", text("a2") == "<3Z u I>", {{"computed", text("a2")}});
  c.expect("H(a3) = <5Z u I> U <7Z u I>", text("a3") == "<5Z u I> U <7Z u I>", {{"computed", text("a3")}});
  const auto v = is_soft_sym(h, SymPredicate::Subring);
  c.expect("H(a1) and H(a3) are not neutrosophic subrings",
           !v.per_param[0].second.holds && !v.per_param[2].second.holds);
  return c.finish(u);
}

Report example_4_1_1(const json& u) {
  const auto top = std::get<SymbolicGroupRing>(build_symbolic(u));
  Checks c;
  const auto f = make_sym_groupring_soft(top, {{"a1", {"Q<HuI:m=6,H=1;g^3>"}},
                                               {"a2", {"Q<HuI:m=6,H=1;g^3;I;g^3I>"}},
                                               {"a3", {"Q<HuI:m=6,H=1;g^2;g^4>"}},
                                               {"a4", {"Q<HuI:m=6,H=1;g^2;g^4;I;g^2I;g^4I>"}}});
  c.expect("(F,A) is a soft neutrosophic group ring", is_soft_sym_groupring(f).overall);
  return c.finish(u);
}

Report example_4_1_2(const json& u) {
  const auto top = std::get<SymbolicGroupRing>(build_symbolic(u));
  Checks c;
  const auto f = make_sym_groupring_soft(top, {{"a1", {"Q<HuI:m=6,H=1;g^3>"}},
                                               {"a2", {"Q<HuI:m=6,H=1;g^3;I;g^3I>"}},
                                               {"a3", {"Q<HuI:m=6,H=1;g^2;g^4>"}},
                                               {"a4", {"Q<HuI:m=6,H=1;g^2;g^4;I;g^2I;g^4I>"}}});
  const auto h = make_sym_groupring_soft(top, {{"a1", {"Q<HuI:m=6,H=1;g^2;g^4;I;g^2I;g^4I>"}}});
  const auto k = restricted_union(f, h);
  c.expect("C = A n B = {a1}", k.params() == Labels{"a1"});
  c.expect("K(a1) = Q<H1 u I> U Q<H4 u I>", k.at("a1").members().size() == 2, {{"computed", to_string(k.at("a1"))}});
  c.expect("K(a1) is not a subneutrosophic group ring", !is_soft_sym_groupring(k).overall);
  return c.finish(u);
}

Report example_4_1_3(const json& u) {
  const auto top = std::get<SymbolicGroupRing>(build_symbolic(u));
  Checks c;
  const auto f = make_sym_groupring_soft(top, {{"a1", {"R<GuI:m=6>"}}, {"a2", {"Q<GuI:m=6>"}}, {"a3", {"Z<GuI:m=6>"}}});
  c.expect("(F,A) is a soft neutrosophic group subring", is_soft_sym_groupring(f).overall);
  return c.finish(u);
}

// ---- finite group rings ----

Report example_4_1_6(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", {"0", "3I"}}, {"a2", {"0", "2I", "4I"}}});
  c.soft("(F,A) is a soft pseudo neutrosophic subring", is_soft(f, find_predicate("pseudo-subring", *s)), *s);
  return c.finish(u);
}

Report example_4_1_8(const json& u) {
  const auto s = build_structure(u);
  Checks c;
  const auto f = make_soft(s, {{"a1", {"0", "1+g^2"}}, {"a2", {"0", "1+g", "g+g^3", "1+g^3"}}});
  c.soft("(F,A) is a soft subring without group ring structure",
         is_soft(f, find_predicate("subring-not-groupring", *s)), *s);
  return c.finish(u);
}

Report example_4_1_11(const json& u) {
  const auto s = build_structure(u);
  const auto& gr = *s->ring().group_ring();
  Checks c;
  const std::vector<std::pair<std::string, std::string>> gens = {
      {"a1", "1+g+g^2+g^3"}, {"a2", "I+gI+g^2I+g^3I"}, {"a3", "1+g+g^2+g^3+I+gI+g^2I+g^3I"}};
  std::vector<FiniteSoftSet::Entry> entries;
  ordered_json generated = ordered_json::object();
  for (const auto& [param, text] : gens) {
    Labels labels;
    for (const auto& x : fs_generated_ideal(gr, {gr.parse(text)})) labels.push_back(fs_format(x));
    generated[param] = labels;
    entries.emplace_back(param, s->subset(labels));
  }
  const FiniteSoftSet f(s, std::move(entries));
  c.expect("generated ideals", true, generated);
  c.soft("(F,A) is a soft pseudo neutrosophic ideal", is_soft(f, find_predicate("pseudo-ideal", *s)), *s);
  return c.finish(u);
}

// ---- mixed structures ----

const std::vector<Labels> kF611a1 = {{"1", "I"}, {"0", "3", "3I"}, {"0", "2", "2I"}, kA3, kEvens10};
const std::vector<Labels> kF611a2 = {{"2", "I"}, {"0", "2", "4", "2I", "4I"}, {"0", "2", "2I"}, kA3, {"0", "5"}};
const std::vector<Labels> kF611a3 = {{"1", "2"}, {"0", "3"}, {"0", "2"}, kA3, kEvens10};
const std::vector<Labels> kK612a1 = {{"1", "I"}, {"0", "3I"}, {"0", "2", "2I"}, kA3, kEvens10};
const std::vector<Labels> kK612a4 = {{"1", "2"}, {"0", "3I"}, {"0", "2I"}, kA3, {"0", "5"}};

Report example_6_1_1(const json& u) {
  const auto col = build_ncollection(u, data_dir());
  Checks c;
  const auto f = make_n_soft(col, {{"a1", kF611a1}, {"a2", kF611a2}, {"a3", kF611a3}});
  c.soft("(F,A) is a soft mixed neutrosophic N-structure", is_soft_n_sub(f, NSubMode::Mixed), *col);
  const auto cls = classify_mixed(*col);
  c.expect("the 5-structure is mixed", cls == MixedClass::Mixed, {{"computed", to_string(cls)}});
  c.expect("o(M) = 68", col->order() == 68, {{"computed", col->order()}});
  return c.finish(u);
}

Report example_6_1_2(const json& u) {
  const auto col = build_ncollection(u, data_dir());
  Checks c;
  const auto f = make_n_soft(col, {{"a1", kF611a1}, {"a2", kF611a2}, {"a3", kF611a3}});
  // B is declared as {a1, a4} while the second listed entry is K(a2); it is read as K(a4).
  const auto k = make_n_soft(col, {{"a1", kK612a1}, {"a4", kK612a4}});
  c.soft("(K,B) is a soft mixed neutrosophic N-structure", is_soft_n_sub(k, NSubMode::Mixed), *col);
  const auto h = restricted_union(f, k);
  c.expect("C = A n B = {a1}", h.params() == Labels{"a1"});
  const auto stated = NSubset::from_labels(
      *col, {{"1", "I", "2"}, {"0", "3I"}, {"0", "2", "2I"}, kA3, {"0", "2", "4", "5", "6", "8"}});
  c.expect("H(a1) matches the stated union", h.at("a1") == stated, {{"computed", h.at("a1").labels(*col)}});
  c.soft("(H,C) is not a soft mixed neutrosophic N-structure", is_soft_n_sub(h, NSubMode::Mixed), *col, false);
  const Structure& m1 = *(*col)[0].structure;
  const Structure& m5 = *(*col)[4].structure;
  c.verdict("{1,I,2} is not closed in M1", is_subgroupoid(m1.magma(), m1.subset({"1", "I", "2"})), m1, false);
  c.verdict("{0,2,4,5,6,8} is not closed in M5",
            is_subgroupoid(m5.magma(), m5.subset({"0", "2", "4", "5", "6", "8"})), m5, false);
  return c.finish(u);
}

Report example_6_1_3(const json& u) {
  const auto col = build_ncollection(u, data_dir());
  Checks c;
  const Labels s3_in_s4 = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  const Labels a4 = {"e", "(123)", "(124)", "(132)", "(134)", "(142)", "(143)", "(234)", "(243)",
                     "(12)(34)", "(13)(24)", "(14)(23)"};
  const auto f = make_n_soft(col, {{"a1", {{"e", "2"}, a4, kEvens10, {"0", "2"}, {"e", "eI", "2", "2I"}}},
                                   {"a2", {{"e", "3"}, s3_in_s4, {"0", "5"}, {"0", "2"}, {"e", "eI", "3", "3I"}}}});
  c.soft("(F,A) is a soft mixed dual neutrosophic N-structure", is_soft_n_sub(f, NSubMode::Mixed), *col);
  const auto cls = classify_mixed(*col);
  c.expect("the 5-structure is mixed dual", cls == MixedClass::MixedDual, {{"computed", to_string(cls)}});
  return c.finish(u);
}

}  // namespace

void add_example_claims(std::vector<Claim>& out) {
  const auto pg1032 = param_groupoid(10, 3, 2);
  const auto pg421 = param_groupoid(4, 2, 1);
  const auto bigroupoid = groupoid_collection({param_groupoid(10, 2, 3), pg421});
  const auto three = groupoid_collection({param_groupoid(10, 2, 3), pg421, param_groupoid(12, 8, 4)});
  const auto z2c4 = cyclic_group_ring(2, 4);
  const auto ce = Status::ExampleContradictsText;

  out.push_back(example("example-1.1.3", "{0,5,5I,5+5I} is a neutrosophic subgroupoid; Z10 is just a groupoid",
                        pg1032, example_1_1_3));
  out.push_back(example("example-2.1.1", "soft neutrosophic groupoid over <Z10 u I> under 3a+2b", pg1032, example_2_1_1));
  out.push_back(example("example-2.1.2", "soft neutrosophic groupoid over <Z4 u I> under 2a+b", pg421, example_2_1_2));
  out.push_back(example("example-2.1.3", "soft neutrosophic subgroupoid of a soft neutrosophic groupoid", pg421,
                        example_2_1_3));
  out.push_back(example("example-2.1.4", "soft Lagrange neutrosophic groupoid", pg421, [](const json& u) {
    return lagrange_example(u, {{"a1", kQuad}, {"a2", {"0", "2+2I"}}}, Quantifier::Lagrange, "Lagrange");
  }));
  out.push_back(example("example-2.1.5", "soft weak Lagrange neutrosophic groupoid", pg421, [](const json& u) {
    return lagrange_example(u, kF212, Quantifier::WeakLagrange, "weak Lagrange");
  }));
  out.push_back(example("example-2.1.6", "soft Lagrange free neutrosophic groupoid", pg421, [](const json& u) {
    return lagrange_example(u, {{"a1", {"0", "2I", "2+2I"}}, {"a2", {"0", "2", "2+2I"}}}, Quantifier::LagrangeFree,
                            "Lagrange free");
  }));
  out.push_back(example("example-2.1.7", "soft neutrosophic strong groupoid", pg421, example_2_1_7));
  out.push_back(example("example-2.2.1", "soft neutrosophic bigroupoid", bigroupoid, [](const json& u) {
    return n_groupoid_example(u, {{"a1", {kP5, kQuad}}, {"a2", {range_labels(10), {"0", "2+2I"}}}}, NSubMode::Plain,
                              "(F,A) is a soft neutrosophic bigroupoid");
  }));
  out.push_back(example("example-2.3.1", "soft neutrosophic N-groupoid over a 3-groupoid", three, [](const json& u) {
    return n_groupoid_example(u, {{"a1", {kP5, kQuad, {"0", "2"}}}, {"a2", {range_labels(10), {"0", "2+2I"}, {"0", "2I"}}}},
                              NSubMode::Plain, "(F,A) is a soft neutrosophic N-groupoid");
  }, ce));
  out.push_back(example("example-2.3.3", "soft neutrosophic strong N-groupoid over a 3-groupoid", three, [](const json& u) {
    return n_groupoid_example(u, {{"a1", {{"0", "5I"}, {"0", "2I"}, {"0", "2I"}}},
                                  {"a2", {{"0", "5+5I"}, {"0", "2+2I"}, {"0", "2+2I"}}}},
                              NSubMode::Strong, "(F,A) is a soft neutrosophic strong N-groupoid");
  }, ce));
  out.push_back(example("example-3.1.1", "soft neutrosophic ring over <Z u I>", symbolic("<Z u I>"), example_3_1_1));
  out.push_back(example("example-3.1.2", "soft neutrosophic ring over <C u I>", symbolic("<C u I>"), example_3_1_2));
  out.push_back(example("example-3.1.3", "extended union of soft neutrosophic rings over <Z u I>", symbolic("<Z u I>"),
                        example_3_1_3, ce));
  out.push_back(example("example-3.1.4", "soft neutrosophic ideal over <Z12 u I>", neutro_ring(12), example_3_1_4));
  out.push_back(example("example-3.1.5", "soft neutrosophic ring that is not a soft ideal", neutro_ring(10),
                        example_3_1_5, ce));
  out.push_back(example("example-3.1.7", "soft neutrosophic ideal of a soft neutrosophic ring", neutro_ring(12),
                        example_3_1_7, ce));
  out.push_back(example("example-4.1.1", "soft neutrosophic group ring over Q<G u I>", symbolic("Q<GuI:m=6>"),
                        example_4_1_1));
  out.push_back(example("example-4.1.2", "restricted union of soft neutrosophic group rings", symbolic("Q<GuI:m=6>"),
                        example_4_1_2));
  out.push_back(example("example-4.1.3", "soft neutrosophic group subring over C<G u I>", symbolic("C<GuI:m=6>"),
                        example_4_1_3));
  out.push_back(example("example-4.1.6", "soft pseudo neutrosophic subring over Z6<G u I>", cyclic_group_ring(6, 1),
                        example_4_1_6));
  out.push_back(example("example-4.1.8", "soft subring over Z2<C4 u I>", z2c4, example_4_1_8, ce));
  out.push_back(example("example-4.1.11", "soft pseudo neutrosophic ideal over Z2<C4 u I>", z2c4, example_4_1_11, ce));
  out.push_back(example("example-6.1.1", "soft mixed neutrosophic N-structure", data_file("mixed_5.json"),
                        example_6_1_1, ce));
  out.push_back(example("example-6.1.2", "restricted union of soft mixed neutrosophic N-structures",
                        data_file("mixed_5.json"), example_6_1_2, ce));
  out.push_back(example("example-6.1.3", "soft mixed dual neutrosophic N-structure", data_file("mixed_dual_5.json"),
                        example_6_1_3, Status::ExampleVerified, ClaimKind::Classification));
}

}  // namespace neutrolab::claims
