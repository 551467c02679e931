#include <doctest.h>

#include <sstream>

#include "neutrolab/error.hpp"
#include "neutrolab/report.hpp"

using namespace neutrolab;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Report sample(Status st) {
  Report r;
  r.claim_id = "prop-2.1.1";
  r.status = st;
  r.witness = {{"op", "extended-union"}, {"indices", {3, 1}}};
  r.universe = {{"kind", "param_groupoid"}, {"n", 4}, {"t", 2}, {"u", 1}};
  r.trials = 42;
  r.elapsed_ms = 1.25;
  r.notes = {"text only"};
  return r;
}

}  // namespace

TEST_CASE("status names round-trip") {
  for (auto st : {Status::Holds, Status::CounterexampleFound, Status::ExampleVerified, Status::ExampleContradictsText}) {
    CHECK(status_from_string(to_string(st)) == st);
  }
  std::string cap;
  CHECK(status_from_string("Skipped(budget)", &cap) == Status::Skipped);
  CHECK(cap == "budget");
  CHECK_THROWS_AS(status_from_string("Skipped"), ParseError);
  CHECK_THROWS_AS(status_from_string("holds"), ParseError);
}

TEST_CASE("report JSON carries exactly the six fields, in order") {
  const auto j = to_json(sample(Status::Holds));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"claim_id", "status", "witness", "universe", "trials", "elapsed_ms"});
  CHECK(j["status"] == "Holds");
  CHECK(j["trials"] == 42);
}

TEST_CASE("skipped reports keep their cap through JSON") {
  auto r = sample(Status::Skipped);
  r.skip_cap = "carrier_cap";
  CHECK(r.status_text() == "Skipped(carrier_cap)");
  const auto back = report_from_json(json::parse(to_json(r).dump()));
  CHECK(back.status == Status::Skipped);
  CHECK(back.skip_cap == "carrier_cap");
}

TEST_CASE("report_from_json inverts to_json") {
  const auto r = sample(Status::CounterexampleFound);
  const auto back = report_from_json(json::parse(to_json(r).dump()));
  CHECK(back.claim_id == r.claim_id);
  CHECK(back.status == r.status);
  // Key order is not preserved through the plain json parse.
  CHECK(json::parse(back.witness.dump()) == json::parse(r.witness.dump()));
  CHECK(json::parse(back.universe.dump()) == json::parse(r.universe.dump()));
  CHECK(back.trials == r.trials);
  CHECK(back.elapsed_ms == doctest::Approx(r.elapsed_ms));
  CHECK_THROWS_AS(report_from_json(json{{"claim_id", "x"}}), ParseError);
}

TEST_CASE("emit json re-parses with a summary") {
  std::ostringstream out;
  emit(out, {sample(Status::Holds), sample(Status::CounterexampleFound)}, Format::Json, {true, false});
  const auto doc = json::parse(out.str());
  REQUIRE(doc["reports"].size() == 2);
  CHECK(doc["summary"]["total"] == 2);
  CHECK(doc["summary"]["unexpected"] == 1);
  CHECK(doc["summary"]["by_status"]["Holds"] == 1);
  CHECK(report_from_json(doc["reports"][1]).status == Status::CounterexampleFound);
}

TEST_CASE("emit text marks unexpected rows and prints notes") {
  std::ostringstream out;
  emit(out, {sample(Status::Holds), sample(Status::ExampleVerified)}, Format::Text, {true, false});
  const auto text = out.str();
  CHECK(text.find("UNEXPECTED") != std::string::npos);
  CHECK(text.find("    text only") != std::string::npos);
  CHECK(text.find("2 claims, 1 unexpected") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(format_from_string("json") == Format::Json);
  CHECK(format_from_string("text") == Format::Text);
  CHECK_THROWS_AS(format_from_string("yaml"), UsageError);
}
