#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace neutrolab {

// A set of carrier indices stored as a bitmap sized to its carrier.
class Subset {
 public:
  using Word = std::uint64_t;

  Subset() = default;
  explicit Subset(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<std::size_t> members);
  Subset(std::size_t universe, const std::vector<std::size_t>& members);

  static Subset full(std::size_t universe);

  std::size_t universe_size() const noexcept { return size_; }

  bool contains(std::size_t i) const noexcept {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void insert(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == size_; }
  bool is_subset_of(const Subset& other) const noexcept;

  std::vector<std::size_t> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  std::size_t hash() const noexcept;

  const auto& words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  boost::container::small_vector<Word, 4> words_;
};

// Canonical enumeration order: by size, then lexicographically by sorted members.
bool canonical_less(const Subset& a, const Subset& b);

}  // namespace neutrolab

template <>
struct std::hash<neutrolab::Subset> {
  std::size_t operator()(const neutrolab::Subset& s) const noexcept { return s.hash(); }
};
