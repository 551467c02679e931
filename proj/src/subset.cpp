#include "neutrolab/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace neutrolab {

Subset::Subset(std::size_t universe, std::initializer_list<std::size_t> members)
    : Subset(universe) {
  for (auto i : members) {
    if (i >= universe) throw std::out_of_range("subset member outside carrier");
    insert(i);
  }
}

Subset::Subset(std::size_t universe, const std::vector<std::size_t>& members) : Subset(universe) {
  for (auto i : members) {
    if (i >= universe) throw std::out_of_range("subset member outside carrier");
    insert(i);
  }
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

std::size_t Subset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Subset::is_subset_of(const Subset& other) const noexcept {
  if (size_ != other.size_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

Subset& Subset::operator&=(const Subset& other) {
  if (size_ != other.size_) throw std::invalid_argument("subsets of different carriers");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  if (size_ != other.size_) throw std::invalid_argument("subsets of different carriers");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::size_t Subset::hash() const noexcept {
  std::size_t h = size_ * 0x9E3779B97F4A7C15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return h;
}

bool canonical_less(const Subset& a, const Subset& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace neutrolab
