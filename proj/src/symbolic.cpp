#include "neutrolab/symbolic.hpp"

#include <cctype>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "neutrolab/error.hpp"
#include "neutrolab/subalgebra.hpp"

namespace neutrolab {

namespace {

std::string normalize(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size();) {
    const auto rest = text.substr(i);
    if (rest.starts_with("⟨")) { s += '<'; i += std::string_view("⟨").size(); continue; }
    if (rest.starts_with("⟩")) { s += '>'; i += std::string_view("⟩").size(); continue; }
    if (rest.starts_with("∪")) { s += 'u'; i += std::string_view("∪").size(); continue; }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) s += text[i];
    ++i;
  }
  return s;
}

NamedRing parse_plain(std::string_view s, bool neutro, std::string_view whole) {
  if (s == "Z") return {Base::Z, 1, neutro};
  if (s == "Q") return {Base::Q, 1, neutro};
  if (s == "R") return {Base::R, 1, neutro};
  if (s == "C") return {Base::C, 1, neutro};
  if (s.size() >= 2 && s.back() == 'Z') {
    std::uint32_t m = 0;
    for (char c : s.substr(0, s.size() - 1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(fmt::format("bad ring name '{}'", whole), 0);
      m = m * 10 + static_cast<std::uint32_t>(c - '0');
      if (m > 1'000'000) throw ParseError(fmt::format("multiplier too large in '{}'", whole), 0);
    }
    return {Base::Z, m, neutro};
  }
  throw ParseError(fmt::format("bad ring name '{}'", whole), 0);
}

constexpr std::string_view kBaseNames[] = {"Z", "Q", "R", "C"};

std::optional<std::uint32_t> cyclic_order(const FiniteMagma& basis) {
  const auto& meta = basis.meta();
  if (meta.value("kind", "") == "cyclic_neutro_group" && !meta.value("semigroup", false)) {
    return meta.at("m").get<std::uint32_t>();
  }
  return std::nullopt;
}

Verdict single(const std::vector<NamedRing>& members) {
  if (members.size() == 1) return Verdict::ok();
  std::vector<std::string> names;
  for (const auto& m : members) names.push_back(to_string(m));
  return Verdict::fail(fmt::format("union of incomparable rings {} is not a ring", fmt::join(names, ", ")));
}

}  // namespace

NamedRing::NamedRing(Base b, std::uint32_t m, bool n) : base(b), multiplier(m), neutrosophic(n) {
  if (m == 0) throw DomainError("the multiplier of nZ must be positive");
  if (b != Base::Z && m != 1) throw DomainError("a multiplier is only allowed with Z");
}

NamedRing parse_named_ring(std::string_view text) {
  const std::string s = normalize(text);
  if (s.size() > 4 && s.front() == '<' && s.ends_with("uI>")) {
    return parse_plain(std::string_view(s).substr(1, s.size() - 4), true, text);
  }
  if (s.size() > 3 && s.ends_with("(I)")) return parse_plain(std::string_view(s).substr(0, s.size() - 3), true, text);
  return parse_plain(s, false, text);
}

std::string to_string(const NamedRing& r) {
  std::string core = std::string(kBaseNames[static_cast<int>(r.base)]);
  if (r.base == Base::Z && r.multiplier != 1) core = std::to_string(r.multiplier) + core;
  return r.neutrosophic ? "<" + core + " u I>" : core;
}

bool sym_contains(const NamedRing& x, const NamedRing& y) {
  if (x.neutrosophic && !y.neutrosophic) return false;
  if (x.base > y.base) return false;
  if (y.base == Base::Z) return x.multiplier % y.multiplier == 0;
  return true;
}

NamedRing sym_meet(const NamedRing& x, const NamedRing& y) {
  const Base b = std::min(x.base, y.base);
  std::uint32_t m = 1;
  if (x.base == Base::Z && y.base == Base::Z) {
    m = std::lcm(x.multiplier, y.multiplier);
  } else if (x.base == Base::Z) {
    m = x.multiplier;
  } else if (y.base == Base::Z) {
    m = y.multiplier;
  }
  return {b, m, x.neutrosophic && y.neutrosophic};
}

bool sym_is_field(const NamedRing& x) { return x.base != Base::Z && !x.neutrosophic; }
bool sym_is_neutro_field(const NamedRing& x) { return x.base != Base::Z && x.neutrosophic; }

bool operator==(const SymbolicGroupRing& a, const SymbolicGroupRing& b) {
  return a.coeff == b.coeff && same_basis(a, b) && a.support == b.support;
}

SymbolicGroupRing parse_symbolic_group_ring(std::string_view text) {
  const std::string s = normalize(text);
  std::size_t open = 0;
  NamedRing coeff;
  if (s.starts_with("<")) {
    const auto close = s.find('>');
    if (close == std::string::npos) throw ParseError(fmt::format("bad group ring '{}'", text), 0);
    coeff = parse_named_ring(s.substr(0, close + 1));
    open = close + 1;
  } else {
    open = s.find('<');
    if (open == std::string::npos) throw ParseError(fmt::format("bad group ring '{}'", text), 0);
    coeff = parse_named_ring(s.substr(0, open));
  }
  if (open >= s.size() || s[open] != '<' || s.back() != '>') {
    throw ParseError(fmt::format("bad group ring '{}'", text), open);
  }
  const std::string body = s.substr(open + 1, s.size() - open - 2);
  const auto colon = body.find(':');
  if (colon == std::string::npos) throw ParseError(fmt::format("missing ':' in '{}'", text), open);
  const std::string head = body.substr(0, colon);
  if (head.size() < 3 || !head.ends_with("uI")) throw ParseError(fmt::format("bad carrier name in '{}'", text), open);

  std::optional<std::uint32_t> m;
  std::optional<std::vector<std::string>> support;
  std::string rest = body.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    const std::string item = rest.substr(pos, comma - pos);
    if (item.starts_with("m=")) {
      m = static_cast<std::uint32_t>(std::stoul(item.substr(2)));
    } else if (item.starts_with("H=")) {
      std::vector<std::string> labels;
      std::size_t p = 2;
      while (p <= item.size()) {
        auto semi = item.find(';', p);
        if (semi == std::string::npos) semi = item.size();
        labels.push_back(item.substr(p, semi - p));
        p = semi + 1;
      }
      support = std::move(labels);
    } else {
      throw ParseError(fmt::format("unknown group ring field '{}'", item), open);
    }
    pos = comma + 1;
  }
  if (!m) throw ParseError(fmt::format("group ring '{}' needs m=", text), open);
  auto basis = std::make_shared<const FiniteMagma>(build_cyclic_neutro_group({*m, false}));
  Subset sup = Subset::full(basis->size());
  if (support) {
    sup = Subset(basis->size());
    for (const auto& l : *support) sup.insert(parse_cyclic_label(l, *m));
  }
  return {coeff, std::move(basis), std::move(sup)};
}

std::string to_string(const SymbolicGroupRing& g) {
  const std::string coeff = to_string(g.coeff);
  const auto m = cyclic_order(*g.basis);
  if (!m) return fmt::format("{}<basis of order {}>", coeff, g.basis->size());
  if (g.support.is_full()) return fmt::format("{}<GuI:m={}>", coeff, *m);
  std::vector<std::string> labels;
  g.support.for_each([&](std::size_t i) { labels.push_back(g.basis->label(static_cast<Index>(i))); });
  return fmt::format("{}<HuI:m={},H={}>", coeff, *m, fmt::join(labels, ";"));
}

bool same_basis(const SymbolicGroupRing& a, const SymbolicGroupRing& b) {
  return a.basis && b.basis && (a.basis == b.basis || *a.basis == *b.basis);
}

bool sym_contains(const SymbolicGroupRing& p, const SymbolicGroupRing& q) {
  if (!same_basis(p, q)) return false;
  if (p.support.empty()) return true;
  return sym_contains(p.coeff, q.coeff) && p.support.is_subset_of(q.support);
}

bool sym_subgroupring(const SymbolicGroupRing& p, const SymbolicGroupRing& q) {
  if (!same_basis(p, q) || p.support.empty()) return false;
  if (!sym_contains(p.coeff, q.coeff) || !p.support.is_subset_of(q.support)) return false;
  return is_subgroupoid(*q.basis, p.support).holds;
}

SymbolicGroupRing sym_meet(const SymbolicGroupRing& a, const SymbolicGroupRing& b) {
  if (!same_basis(a, b)) throw DomainError("meet of group rings over different bases");
  return {sym_meet(a.coeff, b.coeff), a.basis, a.support & b.support};
}

bool sym_less(const SymbolicGroupRing& a, const SymbolicGroupRing& b) {
  if (a.coeff != b.coeff) return a.coeff < b.coeff;
  const auto am = a.support.members();
  const auto bm = b.support.members();
  return am < bm;
}

std::string to_string(const NamedUnion& u) {
  std::vector<std::string> parts;
  for (const auto& m : u.members()) parts.push_back(to_string(m));
  return fmt::format("{}", fmt::join(parts, " U "));
}

std::string to_string(const GroupRingUnion& u) {
  std::vector<std::string> parts;
  for (const auto& m : u.members()) parts.push_back(to_string(m));
  return fmt::format("{}", fmt::join(parts, " U "));
}

std::string_view to_string(SymPredicate p) {
  switch (p) {
    case SymPredicate::Subring: return "subring";
    case SymPredicate::NeutroSubring: return "neutro-subring";
    case SymPredicate::Field: return "field";
    case SymPredicate::NeutroField: return "neutro-field";
  }
  return "?";
}

SoftVerdict is_soft_sym(const SymSoftSet& s, SymPredicate predicate) {
  return is_soft_with(s, [&](const NamedUnion& u) {
    auto v = single(u.members());
    if (!v) return v;
    const NamedRing& r = u.members().front();
    switch (predicate) {
      case SymPredicate::Subring: return Verdict::ok();
      case SymPredicate::NeutroSubring:
        return r.neutrosophic ? Verdict::ok() : Verdict::fail(to_string(r) + " has no indeterminate");
      case SymPredicate::Field:
        return sym_is_field(r) ? Verdict::ok() : Verdict::fail(to_string(r) + " is not a field");
      case SymPredicate::NeutroField:
        return sym_is_neutro_field(r) ? Verdict::ok() : Verdict::fail(to_string(r) + " is not a neutrosophic field");
    }
    return Verdict::fail("unknown predicate");
  });
}

SoftVerdict is_soft_sym_groupring(const SymGroupRingSoftSet& s) {
  const SymbolicGroupRing& top = *s.universe();
  return is_soft_with(s, [&](const GroupRingUnion& u) {
    if (!u.single()) {
      return Verdict::fail(fmt::format("union {} is not a group ring", to_string(u)));
    }
    const auto& g = u.members().front();
    if (!sym_subgroupring(g, top)) {
      return Verdict::fail(fmt::format("{} is not a sub group ring of {}", to_string(g), to_string(top)));
    }
    return Verdict::ok();
  });
}

Verdict sym_is_subbifield(const NamedRing& parent1, const NamedRing& parent2, const NamedRing& p1,
                          const NamedRing& p2) {
  if (!sym_contains(p1, parent1)) return Verdict::fail(to_string(p1) + " is not inside " + to_string(parent1));
  if (!sym_contains(p2, parent2)) return Verdict::fail(to_string(p2) + " is not inside " + to_string(parent2));
  const bool literal = (sym_is_neutro_field(p1) && sym_is_field(p2)) || (sym_is_field(p1) && sym_is_neutro_field(p2));
  if (!literal) return Verdict::fail("needs one neutrosophic field and one field");
  Verdict v = Verdict::ok();
  if (sym_contains(p1, p2) || sym_contains(p2, p1)) v.flag("nested");
  return v;
}

SymSoftSet make_sym_soft(const NamedRing& universe,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& assign) {
  std::vector<SymSoftSet::Entry> entries;
  for (const auto& [p, names] : assign) {
    std::vector<NamedRing> members;
    for (const auto& n : names) members.push_back(parse_named_ring(n));
    entries.emplace_back(p, NamedUnion(std::move(members)));
  }
  return {std::make_shared<const NamedRing>(universe), std::move(entries)};
}

SymGroupRingSoftSet make_sym_groupring_soft(
    const SymbolicGroupRing& universe,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& assign) {
  std::vector<SymGroupRingSoftSet::Entry> entries;
  for (const auto& [p, names] : assign) {
    std::vector<SymbolicGroupRing> members;
    for (const auto& n : names) {
      auto g = parse_symbolic_group_ring(n);
      if (*g.basis == *universe.basis) g.basis = universe.basis;
      members.push_back(std::move(g));
    }
    entries.emplace_back(p, GroupRingUnion(std::move(members)));
  }
  return {std::make_shared<const SymbolicGroupRing>(universe), std::move(entries)};
}

}  // namespace neutrolab
