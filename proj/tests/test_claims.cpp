#include <doctest.h>

#include <set>

#include "neutrolab/claims.hpp"
#include "neutrolab/error.hpp"
#include "neutrolab/harness.hpp"

using namespace neutrolab;
using nlohmann::json;

TEST_CASE("glob matching") {
  CHECK(glob_match("*", ""));
  CHECK(glob_match("example-*", "example-2.1.1"));
  CHECK_FALSE(glob_match("example-*", "prop-2.1.1"));
  CHECK(glob_match("*-2.1.?", "remark-2.1.3"));
  CHECK_FALSE(glob_match("*-2.1.?", "remark-2.1.13"));
  CHECK(glob_match("a*b*c", "aXXbYYc"));
  CHECK_FALSE(glob_match("a*b*c", "aXXbYY"));
  CHECK(glob_match("prop-3.1.4", "prop-3.1.4"));
}

TEST_CASE("claim chapters") {
  CHECK(claim_chapter("prop-3.1.4") == 3);
  CHECK(claim_chapter("example-6.1.1") == 6);
  CHECK(claim_chapter("nochapter") == 0);
  CHECK(claim_chapter("x-") == 0);
}

TEST_CASE("registry ids are unique and ordered by chapter") {
  const auto& reg = claim_registry();
  std::set<std::string> ids;
  int last = 0;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK(claim_chapter(c.id) >= last);
    last = claim_chapter(c.id);
    CHECK(static_cast<bool>(c.run));
    CHECK_FALSE(c.universe.is_null());
  }
  for (const char* id : {"example-1.1.3", "example-2.1.1", "example-2.1.2", "example-2.1.3", "example-2.1.4",
                         "example-2.1.6", "example-2.1.7", "example-2.2.1", "example-2.3.1", "example-2.3.3",
                         "example-3.1.4", "example-3.1.5", "example-3.1.7", "example-4.1.6", "example-4.1.8",
                         "example-4.1.11", "example-6.1.1", "prop-2.1.1", "prop-2.1.2", "prop-2.1.3", "prop-2.2.2",
                         "prop-2.3.2", "prop-3.1.1", "prop-3.1.2", "prop-3.1.3", "prop-3.1.4", "prop-4.1.1",
                         "prop-5.1.1", "prop-6.1.1", "remark-2.1.1", "remark-2.1.2", "remark-2.1.3", "remark-3.1.1",
                         "remark-3.1.2", "remark-3.1.3", "remark-4.1.1", "remark-6.1.1"}) {
    CHECK_MESSAGE(ids.contains(id), id);
  }
}

TEST_CASE("expected statuses follow the claim kind") {
  for (const auto& c : claim_registry()) {
    switch (c.kind) {
      case ClaimKind::ClosureProposition: CHECK(c.expected == Status::Holds); break;
      case ClaimKind::NonClosureRemark: CHECK(c.expected == Status::CounterexampleFound); break;
      case ClaimKind::ExampleCheck:
      case ClaimKind::Classification:
        CHECK((c.expected == Status::ExampleVerified || c.expected == Status::ExampleContradictsText));
        break;
    }
  }
}

TEST_CASE("claim selection") {
  for (const Claim* c : select_claims("ch2")) CHECK(claim_chapter(c->id) == 2);
  for (const Claim* c : select_claims("example-*")) CHECK(c->id.starts_with("example-"));
  CHECK(select_claims("all").size() == claim_registry().size());
  CHECK(select_claims("").size() == claim_registry().size());
  REQUIRE(select_claims("prop-3.1.4").size() == 1);
  CHECK_THROWS_AS(select_claims("ch9"), UsageError);
  CHECK_THROWS_AS(select_claims("nope-*"), UsageError);
  CHECK_THROWS_AS(find_claim("prop-9.9.9"), UsageError);
  CHECK(find_claim("remark-2.1.1").kind == ClaimKind::NonClosureRemark);
}

TEST_CASE("run_claim fills id, universe and timing") {
  const auto r = run_claim(find_claim("example-1.1.3"), {});
  CHECK(r.claim_id == "example-1.1.3");
  CHECK(r.status == Status::ExampleVerified);
  CHECK(r.universe == find_claim("example-1.1.3").universe);
  CHECK(r.elapsed_ms >= 0.0);
  CHECK(r.witness["checks"].size() == r.trials);
}

TEST_CASE("run_claim turns resource caps into Skipped") {
  Claim c;
  c.id = "prop-0.0.0";
  c.universe = json::object();
  c.run = [](const RunContext&) -> Report { throw ResourceError("carrier_cap", "too large"); };
  const auto r = run_claim(c, {});
  CHECK(r.status == Status::Skipped);
  CHECK(r.skip_cap == "carrier_cap");
  CHECK(r.status_text() == "Skipped(carrier_cap)");
}

TEST_CASE("remark witnesses replay and are seed-stable") {
  RunContext ctx;
  ctx.seed = 3;
  const auto a = run_claim(find_claim("remark-3.1.1"), ctx);
  const auto b = run_claim(find_claim("remark-3.1.1"), ctx);
  REQUIRE(a.status == Status::CounterexampleFound);
  CHECK(a.witness.dump() == b.witness.dump());
  CHECK(a.trials == b.trials);
  CHECK(replay_witness(json::parse(a.witness.dump())).violated);
  // The hinted pair {evens} and {multiples of 3} breaks additive closure first.
  CHECK(a.witness["detail"]["op"] == "+");
}

TEST_CASE("run_suite counts unexpected statuses") {
  const auto s = run_suite("example-2.1.*", {});
  CHECK(s.reports.size() == s.expected.size());
  CHECK(s.unexpected == 0);
}
