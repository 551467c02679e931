#include "neutrolab/magma.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

std::string_view to_string(MagmaKind k) {
  switch (k) {
    case MagmaKind::Groupoid: return "groupoid";
    case MagmaKind::Semigroup: return "semigroup";
    case MagmaKind::Group: return "group";
    case MagmaKind::Loop: return "loop";
  }
  return "?";
}

MagmaKind magma_kind_from_string(std::string_view s) {
  if (s == "groupoid") return MagmaKind::Groupoid;
  if (s == "semigroup") return MagmaKind::Semigroup;
  if (s == "group") return MagmaKind::Group;
  if (s == "loop") return MagmaKind::Loop;
  throw DomainError(fmt::format("unknown magma kind '{}'", s));
}

FiniteMagma::FiniteMagma(std::vector<std::string> labels, std::vector<Index> table,
                         std::vector<ElementClass> classes, nlohmann::json meta,
                         std::optional<Index> zero, LabelGrammar grammar,
                         std::uint32_t grammar_modulus)
    : labels_(std::move(labels)),
      table_(std::move(table)),
      classes_(std::move(classes)),
      meta_(std::move(meta)),
      zero_(zero),
      grammar_(grammar),
      grammar_modulus_(grammar_modulus) {
  const auto n = labels_.size();
  if (n == 0) throw DomainError("empty carrier");
  if (table_.size() != n * n) throw DomainError("operation table is not square");
  if (classes_.size() != n) throw DomainError("element classes do not match carrier");
  for (auto v : table_)
    if (v >= n) throw DomainError("operation table entry outside carrier");
  index_.reserve(n);
  for (Index i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw DomainError(fmt::format("duplicate label '{}'", labels_[i]));
    }
  }
  if (zero_ && *zero_ >= n) throw DomainError("zero index outside carrier");
}

std::optional<Index> FiniteMagma::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteMagma::at(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw DomainError(fmt::format("'{}' is not an element of the carrier", label));
}

FiniteMagma build_param_groupoid(const ParamGroupoidSpec& spec) {
  const auto n = spec.n;
  if (n < 2) throw DomainError("param_groupoid needs n >= 2");
  const auto size = n * n;
  std::vector<std::string> labels(size);
  std::vector<ElementClass> classes(size);
  std::vector<Index> table(static_cast<std::size_t>(size) * size);
  for (Index i = 0; i < size; ++i) {
    const auto x = NeutroScalar::from_index(i, n);
    labels[i] = ns_format(x);
    classes[i] = ns_classify(x);
  }
  for (Index i = 0; i < size; ++i) {
    const auto tx = ns_scale(spec.t, NeutroScalar::from_index(i, n));
    for (Index j = 0; j < size; ++j) {
      table[static_cast<std::size_t>(i) * size + j] =
          (tx + ns_scale(spec.u, NeutroScalar::from_index(j, n))).index();
    }
  }
  nlohmann::json meta = {{"kind", "param_groupoid"}, {"n", n}, {"t", spec.t}, {"u", spec.u}};
  return {std::move(labels), std::move(table), std::move(classes), std::move(meta), Index{0},
          LabelGrammar::Scalar, n};
}

std::string cyclic_label(std::uint32_t exponent, bool indeterminate) {
  std::string base;
  if (exponent == 0) {
    base = indeterminate ? "" : "1";
  } else if (exponent == 1) {
    base = "g";
  } else {
    base = fmt::format("g^{}", exponent);
  }
  return indeterminate ? base + "I" : base;
}

Index parse_cyclic_label(std::string_view text, std::uint32_t m) {
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  std::uint64_t exponent = 0;
  bool saw_base = false;
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    saw_base = true;
  } else if (pos < text.size() && text[pos] == 'g') {
    ++pos;
    saw_base = true;
    exponent = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected exponent", pos);
      }
      exponent = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        exponent = (exponent * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % m;
        ++pos;
      }
    }
  }
  skip();
  bool indet = false;
  if (pos < text.size() && text[pos] == 'I') {
    indet = true;
    ++pos;
  }
  skip();
  if (!saw_base && !indet) throw ParseError("expected cyclic element", pos);
  if (pos != text.size()) throw ParseError("unexpected trailing input", pos);
  const auto e = static_cast<Index>(exponent % m);
  return indet ? m + e : e;
}

FiniteMagma build_cyclic_neutro_group(const CyclicNeutroGroupSpec& spec) {
  const auto m = spec.m;
  if (m < 1) throw DomainError("cyclic_neutro_group needs m >= 1");
  const auto size = 2 * m;
  std::vector<std::string> labels(size);
  std::vector<ElementClass> classes(size);
  for (Index i = 0; i < m; ++i) {
    labels[i] = cyclic_label(i, false);
    classes[i] = ElementClass::Real;
    labels[m + i] = cyclic_label(i, true);
    classes[m + i] = ElementClass::PureNeutrosophic;
  }
  std::vector<Index> table(static_cast<std::size_t>(size) * size);
  for (Index x = 0; x < size; ++x) {
    for (Index y = 0; y < size; ++y) {
      const Index e = (x % m + y % m) % m;
      const bool indet = x >= m || y >= m;
      table[static_cast<std::size_t>(x) * size + y] = indet ? m + e : e;
    }
  }
  nlohmann::json meta = {{"kind", "cyclic_neutro_group"}, {"m", m}};
  if (spec.semigroup) meta["semigroup"] = true;
  return {std::move(labels), std::move(table), std::move(classes), std::move(meta), std::nullopt,
          LabelGrammar::Cyclic, m};
}

FiniteMagma build_neutro_mul(std::uint32_t n, const std::optional<std::vector<std::string>>& elements) {
  if (n < 2) throw DomainError("neutro_mul needs n >= 2");
  std::vector<NeutroScalar> carrier;
  if (elements) {
    std::set<std::uint32_t> seen;
    for (const auto& e : *elements) seen.insert(ns_parse(e, n).index());
    for (auto i : seen) carrier.push_back(NeutroScalar::from_index(i, n));
  } else {
    for (Index i = 0; i < n * n; ++i) carrier.push_back(NeutroScalar::from_index(i, n));
  }
  std::vector<std::string> labels;
  std::vector<ElementClass> classes;
  std::unordered_map<std::uint32_t, Index> pos;
  std::optional<Index> zero;
  for (Index i = 0; i < carrier.size(); ++i) {
    labels.push_back(ns_format(carrier[i]));
    classes.push_back(ns_classify(carrier[i]));
    pos[carrier[i].index()] = i;
    if (classes.back() == ElementClass::Zero) zero = i;
  }
  const auto size = carrier.size();
  std::vector<Index> table(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const auto p = carrier[i] * carrier[j];
      auto it = pos.find(p.index());
      if (it == pos.end()) {
        throw DomainError(fmt::format("listed elements are not closed: {} * {} = {}", labels[i],
                                      labels[j], ns_format(p)));
      }
      table[i * size + j] = it->second;
    }
  }
  nlohmann::json meta = {{"kind", "neutro_mul"}, {"n", n}};
  if (elements) meta["elements"] = labels;
  return {std::move(labels), std::move(table), std::move(classes), std::move(meta), zero,
          LabelGrammar::Scalar, n};
}

FiniteMagma build_mul_mod(std::uint32_t n) {
  if (n < 2) throw DomainError("mul_mod needs n >= 2");
  std::vector<std::string> labels(n);
  std::vector<ElementClass> classes(n);
  std::vector<Index> table(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    classes[i] = i == 0 ? ElementClass::Zero : ElementClass::Real;
    for (Index j = 0; j < n; ++j) {
      table[static_cast<std::size_t>(i) * n + j] =
          static_cast<Index>((std::uint64_t{i} * j) % n);
    }
  }
  nlohmann::json meta = {{"kind", "mul_mod"}, {"n", n}};
  return {std::move(labels), std::move(table), std::move(classes), std::move(meta), Index{0},
          LabelGrammar::Scalar, n};
}

FiniteMagma build_from_table(const std::vector<std::string>& elements,
                             const std::vector<std::vector<std::string>>& rows,
                             const TableOptions& options) {
  const auto n = elements.size();
  if (n == 0) throw DomainError("cayley table needs at least one element");
  std::unordered_map<std::string, Index> pos;
  for (Index i = 0; i < n; ++i) {
    if (!pos.emplace(elements[i], i).second) {
      throw DomainError(fmt::format("duplicate label '{}'", elements[i]));
    }
  }
  if (rows.size() != n) {
    throw DomainError(fmt::format("table has {} rows for {} elements", rows.size(), n));
  }
  std::vector<Index> table(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw DomainError(fmt::format("row '{}' has {} entries, expected {}", elements[r],
                                    rows[r].size(), n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      auto it = pos.find(rows[r][c]);
      if (it == pos.end()) {
        throw DomainError(fmt::format("unknown label '{}' in row '{}'", rows[r][c], elements[r]));
      }
      table[r * n + c] = it->second;
    }
  }
  std::optional<Index> zero;
  if (options.zero) {
    auto it = pos.find(*options.zero);
    if (it == pos.end()) throw DomainError(fmt::format("unknown zero label '{}'", *options.zero));
    zero = it->second;
  } else if (auto it = pos.find("0"); it != pos.end()) {
    zero = it->second;
  }
  std::vector<ElementClass> classes(n, ElementClass::Real);
  const auto neutral_class = [](const std::string& label) {
    return label.find('+') == std::string::npos ? ElementClass::PureNeutrosophic
                                                : ElementClass::Mixed;
  };
  if (options.neutrosophic) {
    for (const auto& l : *options.neutrosophic) {
      auto it = pos.find(l);
      if (it == pos.end()) throw DomainError(fmt::format("unknown neutrosophic label '{}'", l));
      classes[it->second] = neutral_class(l);
    }
  } else {
    for (Index i = 0; i < n; ++i)
      if (!elements[i].empty() && elements[i].back() == 'I') classes[i] = neutral_class(elements[i]);
  }
  if (zero) classes[*zero] = ElementClass::Zero;
  nlohmann::json meta = {{"kind", "cayley"}, {"elements", elements}, {"table", rows}};
  if (options.neutrosophic) meta["neutrosophic"] = *options.neutrosophic;
  if (options.zero) meta["zero"] = *options.zero;
  return {elements, std::move(table), std::move(classes), std::move(meta), zero};
}

FiniteMagma restrict_to(const FiniteMagma& magma, const Subset& subset) {
  const auto members = subset.members();
  if (members.empty()) throw DomainError("cannot restrict to an empty subset");
  std::unordered_map<std::size_t, Index> pos;
  for (Index i = 0; i < members.size(); ++i) pos[members[i]] = i;
  std::vector<std::string> labels;
  std::vector<ElementClass> classes;
  std::optional<Index> zero;
  for (Index i = 0; i < members.size(); ++i) {
    labels.push_back(magma.label(static_cast<Index>(members[i])));
    classes.push_back(magma.klass(static_cast<Index>(members[i])));
    if (magma.zero() && *magma.zero() == members[i]) zero = i;
  }
  const auto k = members.size();
  std::vector<Index> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto p = magma.op(static_cast<Index>(members[i]), static_cast<Index>(members[j]));
      auto it = pos.find(p);
      if (it == pos.end()) {
        throw DomainError(fmt::format("subset is not closed: {} * {} = {}", labels[i], labels[j],
                                      magma.label(p)));
      }
      table[i * k + j] = it->second;
    }
  }
  nlohmann::json meta = {{"kind", "restriction"}, {"of", magma.meta()}, {"elements", labels}};
  return {std::move(labels), std::move(table), std::move(classes), std::move(meta), zero,
          magma.grammar(), magma.grammar_modulus()};
}

std::optional<Index> identity_of(const FiniteMagma& magma) {
  const auto n = static_cast<Index>(magma.size());
  for (Index e = 0; e < n; ++e) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = magma.op(e, x) == x && magma.op(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

namespace {

Verdict check_associative(const FiniteMagma& magma) {
  const auto n = static_cast<Index>(magma.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const auto xy = magma.op(x, y);
      for (Index z = 0; z < n; ++z) {
        if (magma.op(xy, z) != magma.op(x, magma.op(y, z))) {
          return Verdict::fail("not associative", {x, y, z});
        }
      }
    }
  return Verdict::ok();
}

Verdict check_latin(const FiniteMagma& magma) {
  const auto n = static_cast<Index>(magma.size());
  std::vector<char> seen(n);
  for (Index r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index c = 0; c < n; ++c) {
      const auto v = magma.op(r, c);
      if (seen[v]) return Verdict::fail("row repeats an entry", {r, v});
      seen[v] = 1;
    }
  }
  for (Index c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index r = 0; r < n; ++r) {
      const auto v = magma.op(r, c);
      if (seen[v]) return Verdict::fail("column repeats an entry", {c, v});
      seen[v] = 1;
    }
  }
  return Verdict::ok();
}

}  // namespace

Verdict verify_kind(const FiniteMagma& magma, MagmaKind kind) {
  switch (kind) {
    case MagmaKind::Groupoid:
      return Verdict::ok();
    case MagmaKind::Semigroup:
      return check_associative(magma);
    case MagmaKind::Group: {
      if (auto v = check_associative(magma); !v) return v;
      const auto e = identity_of(magma);
      if (!e) return Verdict::fail("no two-sided identity");
      const auto n = static_cast<Index>(magma.size());
      for (Index x = 0; x < n; ++x) {
        bool found = false;
        for (Index y = 0; y < n && !found; ++y) found = magma.op(x, y) == *e && magma.op(y, x) == *e;
        if (!found) return Verdict::fail("element has no inverse", {x});
      }
      return Verdict::ok();
    }
    case MagmaKind::Loop: {
      if (auto v = check_latin(magma); !v) return v;
      if (!identity_of(magma)) return Verdict::fail("no two-sided identity");
      return Verdict::ok();
    }
  }
  return Verdict::ok();
}

}  // namespace neutrolab
