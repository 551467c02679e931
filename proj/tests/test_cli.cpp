#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(NEUTROLAB_CLI) + " " + args + " 2>/dev/null";
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / fs::path("neutrolab_cli_test")) { fs::create_directories(dir_); }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const json& j) const {
    const auto path = dir_ / name;
    std::ofstream(path) << j.dump();
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

const json kPg1032 = {{"kind", "param_groupoid"}, {"n", 10}, {"t", 3}, {"u", 2}};
const json kPg421 = {{"kind", "param_groupoid"}, {"n", 4}, {"t", 2}, {"u", 1}};

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("verify --filter no-such-claim").code == 2);
  CHECK(cli("verify --format yaml").code == 2);
  CHECK(cli("build /nonexistent/spec.json").code == 2);
}

TEST_CASE("check-sub exits 0 when the predicate holds and 1 otherwise") {
  Scratch s;
  const auto g = s.write("g.json", kPg1032);
  const auto ok = cli("check-sub --structure " + g + " --subset 0,5,5I,5+5I --predicate subgroupoid --strict");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["predicate"] == "neutro-subgroupoid");
  const auto bad = cli("check-sub --structure " + g + " --subset 0,1 --predicate subgroupoid");
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.out)["failure"]["reason"] == "not closed");
  CHECK(cli("check-sub --structure " + g + " --subset 0 --predicate strong --strict").code == 2);
}

TEST_CASE("soft-op writes a soft set that soft-check reads back") {
  Scratch s;
  const auto f = s.write("f.json", {{"universe", kPg1032}, {"params", {"a1"}}, {"assign", {{"a1", {"0", "5", "5I", "5+5I"}}}}});
  const auto k = s.write("k.json", {{"universe", kPg1032},
                                    {"params", {"a1"}},
                                    {"assign", {{"a1", {"0", "1", "2", "3", "4", "5", "6", "7", "8", "9"}}}}});
  const auto out = s.path("u.json");
  REQUIRE(cli("soft-op --op extended-union --lhs " + f + " --rhs " + k + " -o " + out).code == 0);
  const auto check = cli("soft-check --file " + out + " --predicate subgroupoid");
  CHECK(check.code == 1);
  CHECK(json::parse(check.out)["params"]["a1"]["holds"] == false);
  REQUIRE(cli("soft-op --op extended-intersection --lhs " + f + " --rhs " + k + " -o " + out).code == 0);
  CHECK(cli("soft-check --file " + out + " --predicate subgroupoid").code == 0);
}

TEST_CASE("hunt reports a counterexample with 0 and an exhausted budget with 3") {
  Scratch s;
  const auto g = s.write("g.json", kPg1032);
  const auto found = cli("hunt --template extended-union:subgroupoid --universe " + g + " --format json");
  CHECK(found.code == 0);
  CHECK(json::parse(found.out)["reports"][0]["status"] == "CounterexampleFound");
  const auto small = s.write("s.json", kPg421);
  const auto none = cli("hunt --template and:subgroupoid --universe " + small + " --budget 50 --format json");
  CHECK(none.code == 3);
  CHECK(json::parse(none.out)["reports"][0]["status"] == "Skipped(budget)");
}

TEST_CASE("classify and enumerate") {
  Scratch s;
  const auto g = s.write("g.json", kPg421);
  const auto c = cli("classify --structure " + g);
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["lagrange"] == "WeaklyLagrange");
  const auto e = cli("enumerate --structure " + g + " --predicate subgroupoid");
  CHECK(json::parse(e.out)["count"] == 59);
  const auto scan = cli("enumerate --structure " + g + " --predicate subgroupoid --full-scan");
  CHECK(json::parse(scan.out)["subsets"] == json::parse(e.out)["subsets"]);
}

TEST_CASE("verify with a filter exits 0 when every status is as registered") {
  const auto r = cli("verify --filter ch3 --format json");
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["summary"]["unexpected"] == 0);
  for (const auto& rep : doc["reports"]) CHECK(rep["claim_id"].get<std::string>().find("-3.") != std::string::npos);
}
