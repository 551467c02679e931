// Acceptance criteria, one test case per criterion. Each case prints a single
// PASS/FAIL line; ctest runs every case as its own entry.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <map>
#include <random>
#include <string>

#include <fmt/format.h>

#include "neutrolab/claims.hpp"
#include "neutrolab/harness.hpp"
#include "neutrolab/ncollect.hpp"
#include "neutrolab/polyring.hpp"
#include "neutrolab/ring.hpp"
#include "neutrolab/spec_io.hpp"
#include "neutrolab/subalgebra.hpp"

using namespace neutrolab;
using nlohmann::json;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}
  Criterion(const Criterion&) = delete;
  Criterion& operator=(const Criterion&) = delete;
  ~Criterion() { fmt::print("criterion {} ({}): {}\n", number_, title_, ok_ ? "PASS" : "FAIL"); }

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      fmt::print("  not met: {}\n", what);
    }
    CHECK_MESSAGE(cond, what);
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
};

std::string statuses(const Report& r) { return fmt::format("{} is {}", r.claim_id, r.status_text()); }

}  // namespace

TEST_CASE("c1 example reconstruction") {
  Criterion c(1, "example reconstruction");
  for (const char* id : {"example-1.1.3", "example-2.1.1", "example-2.1.2", "example-2.1.3", "example-2.1.4",
                         "example-2.1.6", "example-2.1.7", "example-2.2.1", "example-2.3.1", "example-2.3.3",
                         "example-3.1.4", "example-3.1.5", "example-3.1.7", "example-4.1.6", "example-4.1.8"}) {
    const auto r = run_claim(find_claim(id), {});
    c.check(r.status == Status::ExampleVerified, fmt::format("{}, want ExampleVerified", statuses(r)));
    for (const auto& note : r.notes) fmt::print("    {}: {}\n", id, note);
    c.check(r.elapsed_ms < 1000.0, fmt::format("{} took {:.1f} ms", id, r.elapsed_ms));
  }
  for (const char* id : {"example-4.1.11", "example-6.1.1"}) {
    const auto& claim = find_claim(id);
    const auto r = run_claim(claim, {});
    c.check(r.status == claim.expected,
            fmt::format("{}, pre-registered {}", statuses(r), to_string(claim.expected)));
    c.check(r.elapsed_ms < 1000.0, fmt::format("{} took {:.1f} ms", id, r.elapsed_ms));
  }
}

TEST_CASE("c2 ring axioms of Z_n[I]") {
  Criterion c(2, "ring axioms, n = 2..6");
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const auto ring = build_neutro_ring(n);
    const auto v = validate_ring_axioms(ring);
    c.check(v.holds, fmt::format("n = {}: {}", n, v.reason));

    // Independent model: (a + bI)(c + dI) = ac + (ad + bc + bd)I.
    const auto index = [&](std::uint32_t a, std::uint32_t b) {
      return ring.at(b == 0 ? std::to_string(a)
                            : a == 0 ? (b == 1 ? "I" : fmt::format("{}I", b))
                                     : (b == 1 ? fmt::format("{}+I", a) : fmt::format("{}+{}I", a, b)));
    };
    std::uint64_t mismatches = 0, law_failures = 0;
    const std::uint32_t size = n * n;
    std::vector<Index> idx(size);
    for (std::uint32_t x = 0; x < size; ++x) idx[x] = index(x % n, x / n);
    const auto add = [&](std::uint32_t x, std::uint32_t y) {
      return (x % n + y % n) % n + n * ((x / n + y / n) % n);
    };
    const auto mul = [&](std::uint32_t x, std::uint32_t y) {
      const std::uint32_t a = x % n, b = x / n, cc = y % n, d = y / n;
      return (a * cc) % n + n * ((a * d + b * cc + b * d) % n);
    };
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y) {
        mismatches += ring.add(idx[x], idx[y]) != idx[add(x, y)];
        mismatches += ring.mul(idx[x], idx[y]) != idx[mul(x, y)];
        for (std::uint32_t z = 0; z < size; ++z) {
          law_failures += add(add(x, y), z) != add(x, add(y, z));
          law_failures += mul(mul(x, y), z) != mul(x, mul(y, z));
          law_failures += mul(x, add(y, z)) != add(mul(x, y), mul(x, z));
          law_failures += mul(add(x, y), z) != add(mul(x, z), mul(y, z));
        }
      }
    c.check(mismatches == 0, fmt::format("n = {}: {} table entries differ from the model", n, mismatches));
    c.check(law_failures == 0, fmt::format("n = {}: {} law failures in the model", n, law_failures));
  }
}

TEST_CASE("c3 group-ring laws of Z2<C4 u I>") {
  Criterion c(3, "group-ring laws, Z2<C4 u I>");
  const auto s = build_structure({{"kind", "group_ring"}, {"r", 2}, {"basis", {{"kind", "cyclic_neutro_group"}, {"m", 4}}}});
  REQUIRE(s->is_ring());
  const auto& ring = s->ring();
  const auto& gr = ring.group_ring();
  REQUIRE(gr != nullptr);
  c.check(ring.size() == 256, fmt::format("{} elements", ring.size()));

  // Independent model: an element is an 8-bit mask over basis words g^i I^f,
  // bit 4f + i; words multiply by adding exponents mod 4 and or-ing f.
  const auto& basis = *gr->basis();
  std::array<int, 8> bit_of{};
  for (Index b = 0; b < basis.size(); ++b) {
    const std::string l = basis.label(b);
    const bool f = l.ends_with("I");
    const std::string g = f ? l.substr(0, l.size() - 1) : l;
    const int e = g.empty() || g == "1" ? 0 : g == "g" ? 1 : std::stoi(g.substr(2));
    bit_of[b] = 4 * f + e;
  }
  std::vector<unsigned> mask(ring.size());
  std::map<unsigned, Index> index_of;
  for (Index x = 0; x < ring.size(); ++x) {
    unsigned m = 0;
    const FormalSum element = gr->decode(x);
    for (const auto& [b, coeff] : element.coeffs())
      if (coeff % 2) m |= 1U << bit_of[b];
    mask[x] = m;
    index_of[m] = x;
  }
  c.check(index_of.size() == 256, "elements map one-to-one onto 8-bit masks");
  const auto model_mul = [](unsigned x, unsigned y) {
    unsigned out = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if ((x >> i & 1U) && (y >> j & 1U)) out ^= 1U << (4 * ((i / 4) | (j / 4)) + (i % 4 + j % 4) % 4);
    return out;
  };

  // Additive group, exhaustively.
  std::uint64_t add_failures = 0;
  const Index zero = ring.zero();
  for (Index x = 0; x < 256; ++x) {
    add_failures += ring.add(x, zero) != x || ring.add(zero, x) != x;
    add_failures += ring.add(x, ring.neg(x)) != zero;
    for (Index y = 0; y < 256; ++y) {
      add_failures += ring.add(x, y) != ring.add(y, x);
      add_failures += mask[ring.add(x, y)] != (mask[x] ^ mask[y]);
      for (Index z = 0; z < 256; ++z) add_failures += ring.add(ring.add(x, y), z) != ring.add(x, ring.add(y, z));
    }
  }
  c.check(add_failures == 0, fmt::format("{} additive-group failures", add_failures));

  // Multiplicative laws on seeded random triples.
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Index> pick(0, 255);
  std::uint64_t mul_failures = 0;
  for (int t = 0; t < 100'000; ++t) {
    const Index x = pick(rng), y = pick(rng), z = pick(rng);
    mul_failures += mask[ring.mul(x, y)] != model_mul(mask[x], mask[y]);
    mul_failures += ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z));
    mul_failures += ring.mul(x, ring.add(y, z)) != ring.add(ring.mul(x, y), ring.mul(x, z));
    mul_failures += ring.mul(ring.add(x, y), z) != ring.add(ring.mul(x, z), ring.mul(y, z));
  }
  c.check(mul_failures == 0, fmt::format("{} multiplicative failures in 1e5 triples", mul_failures));
}

TEST_CASE("c4 closure propositions") {
  Criterion c(4, "closure propositions");
  for (const char* id : {"prop-2.1.1", "prop-2.1.2", "prop-2.1.3", "prop-2.2.2", "prop-2.3.2", "prop-3.1.1",
                         "prop-3.1.2", "prop-3.1.3", "prop-3.1.4", "prop-4.1.1", "prop-5.1.1", "prop-6.1.1"}) {
    const auto r = run_claim(find_claim(id), {});
    c.check(r.status == Status::Holds, statuses(r));
    if (r.status == Status::Holds) {
      c.check(r.witness["violations"] == 0, fmt::format("{} reports violations", id));
      c.check(r.trials > 0, fmt::format("{} ran no trials", id));
    }
  }
}

TEST_CASE("c5 non-closure remarks") {
  Criterion c(5, "non-closure remarks");
  for (const char* id : {"remark-2.1.1", "remark-2.1.2", "remark-2.1.3", "remark-3.1.1", "remark-3.1.2",
                         "remark-3.1.3", "remark-4.1.1", "remark-6.1.1"}) {
    const auto r = run_claim(find_claim(id), {});
    c.check(r.status == Status::CounterexampleFound, statuses(r));
    c.check(r.trials <= 10'000, fmt::format("{} used {} trials", id, r.trials));
    c.check(r.elapsed_ms < 5000.0, fmt::format("{} took {:.1f} ms", id, r.elapsed_ms));
    if (r.status == Status::CounterexampleFound) {
      c.check(replay_witness(json::parse(r.witness.dump()), data_dir()).violated,
              fmt::format("{} witness does not replay", id));
    }
  }
  // 3 * (5I) + 2 * 3 in <Z10 u I> under (x, y) -> 3x + 2y.
  const int a = (3 * 0 + 2 * 3) % 10, b = (3 * 5 + 2 * 0) % 10;
  const auto derived = fmt::format("{}+{}I", a, b);
  const auto r = run_claim(find_claim("remark-2.1.1"), {});
  const auto& d = r.witness["derived"];
  c.check(d["product"] == derived, fmt::format("remark-2.1.1 derived element {} vs {}", d["product"].dump(), derived));
  c.check(d["x_in_result"] == true && d["y_in_result"] == true && d["product_in_result"] == false,
          "remark-2.1.1 union holds 5I and 3 but not their product");
}

TEST_CASE("c6 enumeration strategies agree") {
  Criterion c(6, "enumeration oracle equivalence");
  const auto compare = [&](const json& spec, const char* predicate) {
    const auto s = build_structure(spec);
    EnumOptions scan, grow;
    scan.strategy = EnumStrategy::FullScan;
    grow.strategy = EnumStrategy::Closure;
    const auto& p = find_predicate(predicate, *s);
    const auto a = enumerate_subs(*s, p, scan);
    const auto b = enumerate_subs(*s, p, grow);
    c.check(a == b, fmt::format("{} on {}: {} by scan, {} by closure", predicate, spec.dump(), a.size(), b.size()));
    return a.size();
  };
  const json pg421 = {{"kind", "param_groupoid"}, {"n", 4}, {"t", 2}, {"u", 1}};
  const json z4 = {{"kind", "neutro_ring"}, {"n", 4}};
  const auto closed = compare(pg421, "subgroupoid");
  compare(pg421, "neutro-subgroupoid");
  compare(z4, "subring");
  compare(z4, "neutro-subring");

  // Raw count of nonempty closed subsets of <Z4 u I> under (x, y) -> 2x + y.
  std::size_t oracle = 0;
  for (unsigned mask = 1; mask < (1U << 16); ++mask) {
    bool ok = true;
    for (int x = 0; x < 16 && ok; ++x)
      for (int y = 0; y < 16 && ok; ++y) {
        if (!(mask >> x & 1U) || !(mask >> y & 1U)) continue;
        const int z = (2 * (x % 4) + y % 4) % 4 + 4 * ((2 * (x / 4) + y / 4) % 4);
        ok = (mask >> z & 1U) != 0;
      }
    oracle += ok;
  }
  c.check(closed == oracle, fmt::format("{} subgroupoids enumerated, {} by raw scan", closed, oracle));
}

TEST_CASE("c7 classification") {
  Criterion c(7, "classification");
  const auto g = build_structure({{"kind", "param_groupoid"}, {"n", 4}, {"t", 2}, {"u", 1}});
  const auto lc = classify_lagrange(g->magma());
  c.check(lc.kind == LagrangeKind::WeaklyLagrange, fmt::format("pg(4,2,1) is {}", to_string(lc.kind)));
  const auto has = [&](const std::vector<Subset>& list, const std::vector<std::string>& labels) {
    return std::find(list.begin(), list.end(), g->subset(labels)) != list.end();
  };
  c.check(has(lc.lagrange, {"0", "2", "2I", "2+2I"}), "{0,2,2I,2+2I} is Lagrange evidence");
  c.check(has(lc.non_lagrange, {"0", "2I", "2+2I"}), "{0,2I,2+2I} is non-Lagrange evidence");

  const auto dual = build_ncollection(load_json(data_dir() / "mixed_dual_5.json"), data_dir());
  const auto mc = classify_mixed(*dual);
  c.check(mc == MixedClass::MixedDual, fmt::format("mixed_dual_5 is {}", to_string(mc)));
}

namespace {

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(NEUTROLAB_CLI) + " " + args;
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void strip_elapsed(json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) strip_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_elapsed(v);
  }
}

}  // namespace

TEST_CASE("c8 determinism of verify") {
  Criterion c(8, "determinism");
  auto [code1, out1] = run_cli("verify --seed 0 --format json");
  auto [code2, out2] = run_cli("verify --seed 0 --format json");
  c.check(code1 == code2, fmt::format("exit codes {} and {}", code1, code2));
  json a = json::parse(out1, nullptr, false);
  json b = json::parse(out2, nullptr, false);
  c.check(!a.is_discarded() && !b.is_discarded(), "both runs emit JSON");
  if (a.is_discarded() || b.is_discarded()) return;
  c.check(a["reports"].size() > 0, "reports present");
  const bool elapsed_differs_only = [&] {
    json x = a, y = b;
    strip_elapsed(x);
    strip_elapsed(y);
    return x.dump() == y.dump();
  }();
  c.check(elapsed_differs_only, "runs differ outside elapsed_ms");
}
