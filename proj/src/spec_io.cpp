#include "neutrolab/spec_io.hpp"

#include <cstdlib>
#include <fstream>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

#ifndef NEUTROLAB_DATA_DIR
#define NEUTROLAB_DATA_DIR "data"
#endif

namespace neutrolab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(fmt::format("structure spec is missing '{}'", key), 0);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("bad value for '{}': {}", key, e.what()), 0);
  }
}

fs::path resolve(const std::string& name, const fs::path& base) {
  const fs::path p(name);
  if (p.is_absolute()) return p;
  if (!base.empty() && fs::exists(base / p)) return base / p;
  return data_dir() / p;
}

FiniteMagma cayley(const json& spec, const fs::path& base) {
  if (spec.contains("file")) {
    const auto file = resolve(spec.at("file").get<std::string>(), base);
    json inner = load_json(file);
    for (const char* key : {"neutrosophic", "zero"})
      if (spec.contains(key)) inner[key] = spec[key];
    FiniteMagma m = cayley(inner, file.parent_path());
    std::vector<ElementClass> classes;
    for (Index i = 0; i < m.size(); ++i) classes.push_back(m.klass(i));
    json meta = spec;
    return {m.labels(), m.table(), std::move(classes), std::move(meta), m.zero()};
  }
  TableOptions options;
  if (spec.contains("neutrosophic")) options.neutrosophic = field<std::vector<std::string>>(spec, "neutrosophic");
  if (spec.contains("zero")) options.zero = field<std::string>(spec, "zero");
  return build_from_table(field<std::vector<std::string>>(spec, "elements"),
                          field<std::vector<std::vector<std::string>>>(spec, "table"), options);
}

std::shared_ptr<const FiniteMagma> build_magma(const json& spec, const fs::path& base) {
  auto s = build_structure(spec, base);
  if (s->is_ring()) throw DomainError("expected a magma specification");
  return s->magma_ptr();
}

}  // namespace

fs::path data_dir() {
  if (const char* env = std::getenv("NEUTROLAB_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return NEUTROLAB_DATA_DIR;
}

json load_json(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(fmt::format("cannot open '{}'", file.string()));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("{}: {}", file.string(), e.what()), e.byte);
  }
}

StructurePtr build_structure(const json& spec, const fs::path& base) {
  if (!spec.is_object()) throw ParseError("structure spec must be a JSON object", 0);
  const auto kind = field<std::string>(spec, "kind");
  if (kind == "param_groupoid") {
    return std::make_shared<const Structure>(build_param_groupoid(
        {field<std::uint32_t>(spec, "n"), field<std::int64_t>(spec, "t"), field<std::int64_t>(spec, "u")}));
  }
  if (kind == "cyclic_neutro_group") {
    return std::make_shared<const Structure>(build_cyclic_neutro_group(
        {field<std::uint32_t>(spec, "m"), spec.value("semigroup", false)}));
  }
  if (kind == "neutro_ring") return std::make_shared<const Structure>(build_neutro_ring(field<std::uint32_t>(spec, "n")));
  if (kind == "neutro_mul") {
    std::optional<std::vector<std::string>> elements;
    if (spec.contains("elements")) elements = field<std::vector<std::string>>(spec, "elements");
    return std::make_shared<const Structure>(build_neutro_mul(field<std::uint32_t>(spec, "n"), elements));
  }
  if (kind == "mul_mod") return std::make_shared<const Structure>(build_mul_mod(field<std::uint32_t>(spec, "n")));
  if (kind == "cayley") return std::make_shared<const Structure>(cayley(spec, base));
  if (kind == "restriction") {
    const auto parent = build_structure(field<json>(spec, "of"), base);
    if (parent->is_ring()) throw DomainError("restrictions of rings are not supported");
    const auto p = parent->subset(field<std::vector<std::string>>(spec, "elements"));
    return std::make_shared<const Structure>(restrict_to(parent->magma(), p));
  }
  if (kind == "group_ring") {
    auto basis = build_magma(field<json>(spec, "basis"), base);
    auto gr = std::make_shared<const GroupRing>(std::move(basis), field<std::uint32_t>(spec, "r"));
    return std::make_shared<const Structure>(realize(gr));
  }
  throw ParseError(fmt::format("unknown structure kind '{}'", kind), 0);
}

bool is_ncollection_spec(const json& spec) {
  return spec.is_object() && spec.value("kind", "") == "ncollection";
}

NCollectionPtr build_ncollection(const json& spec, const fs::path& base) {
  if (!is_ncollection_spec(spec)) throw ParseError("expected an ncollection spec", 0);
  std::vector<Component> comps;
  for (const auto& c : field<json>(spec, "components")) {
    const auto tag = field<json>(c, "kind_tag");
    comps.push_back({{alg_kind_from_string(field<std::string>(tag, "alg")), tag.value("neutrosophic", false)},
                     build_structure(field<json>(c, "spec"), base)});
  }
  return std::make_shared<const NCollection>(std::move(comps));
}

FiniteSoftSet finite_soft_from_json(const json& j, const fs::path& base) {
  auto universe = build_structure(field<json>(j, "universe"), base);
  const auto params = field<std::vector<std::string>>(j, "params");
  const auto assign = field<json>(j, "assign");
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  for (const auto& p : params) {
    if (!assign.contains(p)) throw ParseError(fmt::format("no assignment for parameter '{}'", p), 0);
    rows.emplace_back(p, assign.at(p).get<std::vector<std::string>>());
  }
  return make_soft(std::move(universe), rows);
}

NSoftSet n_soft_from_json(const json& j, const fs::path& base) {
  auto universe = build_ncollection(field<json>(j, "universe"), base);
  const auto params = field<std::vector<std::string>>(j, "params");
  const auto assign = field<json>(j, "assign");
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> rows;
  for (const auto& p : params) {
    if (!assign.contains(p)) throw ParseError(fmt::format("no assignment for parameter '{}'", p), 0);
    rows.emplace_back(p, assign.at(p).get<std::vector<std::vector<std::string>>>());
  }
  return make_n_soft(std::move(universe), rows);
}

bool is_symbolic_spec(const json& spec) {
  return spec.is_object() && spec.value("kind", "") == "symbolic";
}

SymbolicUniverse build_symbolic(const json& spec) {
  if (!is_symbolic_spec(spec)) throw ParseError("expected a symbolic spec", 0);
  const auto name = field<std::string>(spec, "name");
  if (name.find(':') != std::string::npos) return parse_symbolic_group_ring(name);
  return parse_named_ring(name);
}

}  // namespace neutrolab
