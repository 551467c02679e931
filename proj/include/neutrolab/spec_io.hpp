#pragma once

#include <filesystem>
#include <variant>

#include <json.hpp>

#include "neutrolab/ncollect.hpp"
#include "neutrolab/soft.hpp"
#include "neutrolab/structure.hpp"
#include "neutrolab/symbolic.hpp"

namespace neutrolab {

// Directory searched for Cayley-table files named by {"kind":"cayley","file":...}
// after the referencing file's own directory. Defaults to the installed data
// directory; the NEUTROLAB_DATA_DIR environment variable overrides it.
std::filesystem::path data_dir();

nlohmann::json load_json(const std::filesystem::path& file);

// Builds a finite structure from its JSON description. Relative file
// references resolve against `base` first, then data_dir().
StructurePtr build_structure(const nlohmann::json& spec, const std::filesystem::path& base = {});

// {"kind":"ncollection","components":[{"kind_tag":{"alg":..,"neutrosophic":..},"spec":{..}}, ..]}
NCollectionPtr build_ncollection(const nlohmann::json& spec, const std::filesystem::path& base = {});

bool is_ncollection_spec(const nlohmann::json& spec);

// {"universe":{..},"params":[..],"assign":{"a1":[labels..]}}; for N-collection
// universes each assignment is a list of per-component label lists.
FiniteSoftSet finite_soft_from_json(const nlohmann::json& j, const std::filesystem::path& base = {});
NSoftSet n_soft_from_json(const nlohmann::json& j, const std::filesystem::path& base = {});

using SymbolicUniverse = std::variant<NamedRing, SymbolicGroupRing>;

// {"kind":"symbolic","name":"<Q u I>"} or {"kind":"symbolic","name":"Q<GuI:m=6>"}.
bool is_symbolic_spec(const nlohmann::json& spec);
SymbolicUniverse build_symbolic(const nlohmann::json& spec);

}  // namespace neutrolab
