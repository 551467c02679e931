#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "neutrolab/claims.hpp"
#include "neutrolab/ncollect.hpp"
#include "neutrolab/soft.hpp"
#include "neutrolab/structure.hpp"

namespace neutrolab::claims {

using nlohmann::json;
using nlohmann::ordered_json;
using Labels = std::vector<std::string>;

// Assertions made while reconstructing a worked example.
class Checks {
 public:
  void expect(std::string assertion, bool holds, ordered_json detail = nullptr);
  // Holds when the verdict holds (or fails, with `want` false).
  void verdict(std::string assertion, const Verdict& v, const Structure& s, bool want = true);
  void soft(std::string assertion, const SoftVerdict& v, const Structure& s, bool want = true);
  void soft(std::string assertion, const SoftVerdict& v, const NCollection& c, bool want = true);

  bool all_hold() const;
  // ExampleVerified or ExampleContradictsText, with {"checks": [...]} as witness.
  Report finish(const json& universe) const;

 private:
  ordered_json checks_ = ordered_json::array();
  bool all_ = true;
};

json param_groupoid(std::uint32_t n, std::int64_t t, std::int64_t u);
json neutro_ring(std::uint32_t n);
// Z_r over the cyclic carrier {g^i, g^i I : i < m}.
json cyclic_group_ring(std::uint32_t r, std::uint32_t m);
json groupoid_collection(const std::vector<json>& groupoids);
json symbolic(const std::string& name);
json data_file(const std::string& name);

Labels range_labels(int n);

void add_example_claims(std::vector<Claim>& out);
void add_sweep_claims(std::vector<Claim>& out);

}  // namespace neutrolab::claims
