#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "neutrolab/ncollect.hpp"
#include "neutrolab/report.hpp"
#include "neutrolab/soft.hpp"
#include "neutrolab/structure.hpp"

namespace neutrolab {

using Rng = std::mt19937_64;

// FNV-1a, used to derive per-claim seeds from a global seed.
std::uint64_t fnv1a(std::string_view text);
inline std::uint64_t claim_seed(std::uint64_t global, std::string_view id) { return global ^ fnv1a(id); }

enum class Outcome { Ok, Empty, Violation };
Outcome outcome_of(const Verdict& v);
Outcome outcome_of(const SoftVerdict& v);

// Labels for the elements named by a verdict witness.
nlohmann::ordered_json explain(const Structure& s, const Verdict& v);
nlohmann::ordered_json explain(const NCollection& c, const Verdict& v);

// Everything the harness needs to know about one (universe, predicate) pair.
template <class U, class M>
struct SoftDomain {
  using Soft = SoftSet<U, M>;

  std::shared_ptr<const U> universe;
  nlohmann::json universe_spec;
  std::string predicate;
  std::function<Verdict(const M&)> test;
  std::function<nlohmann::ordered_json(const Verdict&)> explain;
  std::function<nlohmann::ordered_json(const Soft&)> serialize;
  std::function<M(const nlohmann::json&)> member_from_json;
  // Members passing `test`, in canonical order. Complete only when `complete`.
  std::vector<M> population;
  bool complete = false;
  // A random member passing `test`, or nullopt when rejection sampling gives up.
  std::function<std::optional<M>(Rng&)> sample;
};

using FiniteDomain = SoftDomain<Structure, Subset>;
using NDomain = SoftDomain<NCollection, NSubset>;

struct DomainOptions {
  std::size_t carrier_cap = 256;
  std::size_t population_cap = 20'000;
  // N-collections: the product population is built only up to this size.
  std::size_t product_cap = 4096;
};

// Predicate names: those of find_predicate for finite universes; n-sub,
// neutro-n-sub, strong-n-sub, mixed-sub, n-ideal and pseudo-n-ideal for
// N-collections. Throws DomainError for unknown names, ResourceError for caps.
FiniteDomain finite_domain(const nlohmann::json& universe, const std::string& predicate,
                           const std::filesystem::path& base = {}, const DomainOptions& options = {});
NDomain n_domain(const nlohmann::json& universe, const std::string& predicate,
                 const std::filesystem::path& base = {}, const DomainOptions& options = {});
std::vector<std::string> n_predicate_names();
// Evaluates one of n_predicate_names(); empty parts fail with "empty-assignment".
Verdict n_predicate(const NCollection& c, const NSubset& m, std::string_view predicate);

struct SweepOptions {
  std::uint64_t seed = 0;
  // Soft-set pairs per operation above which the sweep turns randomized.
  std::uint64_t exhaustive_pair_cap = 30'000'000;
  std::size_t random_trials = 10'000;
  // Exhaustive sweeps rebuild about this many pairs per operation with the
  // real soft-set operations to cross-check the table-driven evaluation.
  std::size_t crosscheck = 512;
};

struct SweepResult {
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  std::uint64_t empty = 0;      // results with an empty assignment
  std::uint64_t undefined = 0;  // pairs the operation is not defined on
  std::uint64_t population = 0;
  nlohmann::ordered_json witness;  // first violation, null if none
};

// Soft sets over the parameter pool {a1, a2} with members from the domain,
// combined pairwise with each operation; every result is tested.
SweepResult sweep(const FiniteDomain& d, const std::vector<SoftOp>& ops, const SweepOptions& options);
SweepResult sweep(const NDomain& d, const std::vector<SoftOp>& ops, const SweepOptions& options);

struct HuntTemplate {
  SoftOp op = SoftOp::ExtendedUnion;
  std::string predicate;
};

// "extended-union:subgroupoid"; throws UsageError when malformed.
HuntTemplate parse_hunt_template(std::string_view text);

struct HuntOptions {
  std::size_t budget = 10'000;
  std::uint64_t seed = 0;
  UnionParams reading = UnionParams::Operational;
  // Candidate members tried before the population: label lists for finite
  // universes, lists of per-component label lists for N-collections.
  nlohmann::json hints = nlohmann::json::array();
};

// Structured phase (hints, then population pairs smallest first) followed by
// random soft sets until the budget is spent. A found witness is replayed
// from its JSON form before being reported. Status is CounterexampleFound or
// Skipped(budget); `claim_id` and `elapsed_ms` are left for the caller.
Report hunt(const HuntTemplate& t, const nlohmann::json& universe, const HuntOptions& options,
            const std::filesystem::path& base = {});

struct Replay {
  bool violated = false;
  std::string param;
  Verdict verdict;
};

// Rebuilds lhs and rhs from a hunt or sweep witness, reapplies the operation
// and re-evaluates the predicate on every assignment.
Replay replay_witness(const nlohmann::json& witness, const std::filesystem::path& base = {});

}  // namespace neutrolab
