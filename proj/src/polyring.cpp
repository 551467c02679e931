#include "neutrolab/polyring.hpp"

#include <cctype>
#include <deque>
#include <set>

#include <fmt/format.h>

#include "neutrolab/error.hpp"

namespace neutrolab {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t r) {
  const auto m = static_cast<std::int64_t>(r);
  auto x = v % m;
  if (x < 0) x += m;
  return static_cast<std::uint32_t>(x);
}

void require_compatible(const FormalSum& x, const FormalSum& y) {
  if (x.modulus() != y.modulus()) {
    throw ModulusMismatch(
        fmt::format("coefficient moduli differ: {} vs {}", x.modulus(), y.modulus()));
  }
  if (x.basis() != y.basis() && !(*x.basis() == *y.basis())) {
    throw DomainError("formal sums over different bases");
  }
}

}  // namespace

FormalSum::FormalSum(MagmaPtr basis, std::uint32_t r) : basis_(std::move(basis)), r_(r) {
  if (!basis_) throw DomainError("formal sum needs a basis");
  if (r_ < 2) throw DomainError(fmt::format("coefficient modulus must be at least 2, got {}", r_));
}

FormalSum::FormalSum(MagmaPtr basis, std::uint32_t r, const std::map<Index, std::int64_t>& coeffs)
    : FormalSum(std::move(basis), r) {
  for (const auto& [b, c] : coeffs) {
    if (b >= basis_->size()) throw DomainError("basis index outside carrier");
    if (auto v = reduce(c, r_); v != 0) coeffs_[b] = v;
  }
}

FormalSum FormalSum::term(MagmaPtr basis, std::uint32_t r, Index element, std::int64_t coeff) {
  return {std::move(basis), r, {{element, coeff}}};
}

std::uint32_t FormalSum::coeff(Index b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? 0 : it->second;
}

ElementClass FormalSum::klass() const {
  bool real = false;
  bool indet = false;
  for (const auto& [b, c] : coeffs_) (basis_->neutrosophic(b) ? indet : real) = true;
  if (real && indet) return ElementClass::Mixed;
  if (indet) return ElementClass::PureNeutrosophic;
  return real ? ElementClass::Real : ElementClass::Zero;
}

FormalSum fs_add(const FormalSum& x, const FormalSum& y) {
  require_compatible(x, y);
  std::map<Index, std::int64_t> acc;
  for (const auto& [b, c] : x.coeffs()) acc[b] += c;
  for (const auto& [b, c] : y.coeffs()) acc[b] += c;
  return {x.basis(), x.modulus(), acc};
}

FormalSum fs_neg(const FormalSum& x) {
  std::map<Index, std::int64_t> acc;
  for (const auto& [b, c] : x.coeffs()) acc[b] = -static_cast<std::int64_t>(c);
  return {x.basis(), x.modulus(), acc};
}

FormalSum fs_mul(const FormalSum& x, const FormalSum& y) {
  require_compatible(x, y);
  std::map<Index, std::int64_t> acc;
  const auto& basis = *x.basis();
  for (const auto& [bx, cx] : x.coeffs()) {
    for (const auto& [by, cy] : y.coeffs()) {
      auto& slot = acc[basis.op(bx, by)];
      slot = (slot + std::int64_t{cx} * cy) % x.modulus();
    }
  }
  return {x.basis(), x.modulus(), acc};
}

FormalSum fs_parse(std::string_view text, const MagmaPtr& basis, std::uint32_t r) {
  if (!basis) throw DomainError("formal sum needs a basis");
  if (basis->grammar() != LabelGrammar::Cyclic) {
    throw DomainError("polynomial grammar requires a cyclic basis");
  }
  const auto m = basis->grammar_modulus();
  std::map<Index, std::int64_t> acc;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto digit = [&] {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  };
  const auto integer = [&](std::uint32_t mod) {
    std::uint64_t v = 0;
    while (digit()) {
      v = (v * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % mod;
      ++pos;
    }
    return v;
  };
  while (true) {
    skip();
    const auto term_start = pos;
    std::int64_t coeff = 1;
    bool saw_coeff = false;
    if (digit()) {
      coeff = static_cast<std::int64_t>(integer(r));
      saw_coeff = true;
    }
    skip();
    std::uint64_t exponent = 0;
    bool saw_g = false;
    if (pos < text.size() && text[pos] == 'g') {
      ++pos;
      saw_g = true;
      exponent = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        if (!digit()) throw ParseError("expected exponent", pos);
        exponent = integer(m);
      }
    }
    skip();
    bool indet = false;
    if (pos < text.size() && text[pos] == 'I') {
      ++pos;
      indet = true;
    }
    if (!saw_coeff && !saw_g && !indet) throw ParseError("expected term", term_start);
    const auto e = static_cast<Index>(exponent % m);
    acc[indet ? m + e : e] += coeff;
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+'", pos);
    ++pos;
  }
  return {basis, r, acc};
}

std::string fs_format(const FormalSum& x) {
  if (x.is_zero()) return "0";
  const auto cyclic = x.basis()->grammar() == LabelGrammar::Cyclic;
  std::string out;
  for (const auto& [b, c] : x.coeffs()) {
    if (!out.empty()) out += '+';
    const auto& label = x.basis()->label(b);
    if (cyclic) {
      out += label == "1" ? std::to_string(c) : (c == 1 ? label : std::to_string(c) + label);
    } else {
      out += c == 1 ? label : fmt::format("{}*{}", c, label);
    }
  }
  return out;
}

GroupRing::GroupRing(MagmaPtr basis, std::uint32_t r) : basis_(std::move(basis)), r_(r) {
  if (!basis_) throw DomainError("group ring needs a basis");
  if (r_ < 2) throw DomainError(fmt::format("coefficient modulus must be at least 2, got {}", r_));
}

std::optional<std::uint64_t> GroupRing::size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < basis_->size(); ++i) {
    if (s > (std::uint64_t{1} << 62) / r_) return std::nullopt;
    s *= r_;
  }
  return s;
}

std::uint64_t GroupRing::encode(const FormalSum& x) const {
  if (!size()) throw ResourceError("index_width", "group ring too large to index");
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (Index b = 0; b < basis_->size(); ++b) {
    index += place * x.coeff(b);
    place *= r_;
  }
  return index;
}

FormalSum GroupRing::decode(std::uint64_t index) const {
  std::map<Index, std::int64_t> acc;
  for (Index b = 0; b < basis_->size(); ++b) {
    acc[b] = static_cast<std::int64_t>(index % r_);
    index /= r_;
  }
  return {basis_, r_, acc};
}

nlohmann::json GroupRing::spec() const {
  return {{"kind", "group_ring"}, {"r", r_}, {"basis", basis_->meta()}};
}

FiniteRing realize(const GroupRingPtr& ring, std::size_t cap) {
  const auto total = ring->size();
  if (!total || *total > cap) {
    throw ResourceError("realize_cap",
                        fmt::format("group ring has more than {} elements", cap));
  }
  const auto n = static_cast<std::size_t>(*total);
  const auto& basis = *ring->basis();
  const auto b = basis.size();
  const auto r = ring->modulus();
  std::vector<std::vector<std::uint32_t>> dense(n, std::vector<std::uint32_t>(b));
  for (std::size_t i = 0; i < n; ++i) {
    auto v = i;
    for (std::size_t k = 0; k < b; ++k) {
      dense[i][k] = static_cast<std::uint32_t>(v % r);
      v /= r;
    }
  }
  std::vector<std::uint64_t> place(b);
  for (std::size_t k = 0; k < b; ++k) place[k] = k == 0 ? 1 : place[k - 1] * r;

  std::vector<std::string> labels(n);
  std::vector<ElementClass> classes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = ring->decode(i);
    labels[i] = fs_format(x);
    classes[i] = x.klass();
  }
  std::vector<Index> add(n * n);
  std::vector<Index> mul(n * n);
  std::vector<std::uint64_t> acc(b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < b; ++k) s += place[k] * ((dense[i][k] + dense[j][k]) % r);
      add[i * n + j] = static_cast<Index>(s);
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t p = 0; p < b; ++p) {
        if (dense[i][p] == 0) continue;
        for (std::size_t q = 0; q < b; ++q) {
          if (dense[j][q] == 0) continue;
          acc[basis.op(static_cast<Index>(p), static_cast<Index>(q))] +=
              std::uint64_t{dense[i][p]} * dense[j][q];
        }
      }
      std::uint64_t m = 0;
      for (std::size_t k = 0; k < b; ++k) m += place[k] * (acc[k] % r);
      mul[i * n + j] = static_cast<Index>(m);
    }
  }
  FiniteRing out(std::move(labels), std::move(add), std::move(mul), std::move(classes), 0,
                 ring->spec(), LabelGrammar::Polynomial, r);
  out.attach_group_ring(ring);
  return out;
}

std::vector<FormalSum> fs_generated_ideal(const GroupRing& ring, const std::vector<FormalSum>& gens,
                                          std::size_t budget, IdealSides sides) {
  std::set<FormalSum> found;
  std::deque<FormalSum> work;
  const auto admit = [&](FormalSum x) {
    if (x.modulus() != ring.modulus()) throw ModulusMismatch("generator over a different modulus");
    if (found.insert(x).second) {
      if (found.size() > budget) {
        throw ResourceError("ideal_budget",
                            fmt::format("generated ideal exceeded {} elements", budget));
      }
      work.push_back(std::move(x));
    }
  };
  admit(ring.zero());
  for (const auto& g : gens) admit(g);
  std::vector<FormalSum> basis_elems;
  for (Index b = 0; b < ring.basis()->size(); ++b) basis_elems.push_back(ring.element(b));
  while (!work.empty()) {
    auto x = std::move(work.front());
    work.pop_front();
    admit(fs_neg(x));
    for (const auto& e : basis_elems) {
      if (sides != IdealSides::Right) admit(fs_mul(e, x));
      if (sides != IdealSides::Left) admit(fs_mul(x, e));
    }
    const std::vector<FormalSum> snapshot(found.begin(), found.end());
    for (const auto& y : snapshot) admit(fs_add(x, y));
  }
  return {found.begin(), found.end()};
}

}  // namespace neutrolab
