#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace coverkit {

/// Fixed-universe bit set. Universes up to 128 elements live inline in two
/// words; larger universes spill to the heap. All set operations are O(words).
class BitSet {
 public:
  static constexpr std::size_t kInlineBits = 128;

  BitSet() = default;
  explicit BitSet(std::size_t universe) : universe_(universe) {
    if (universe_ > kInlineBits) heap_.assign(word_count(), 0);
  }

  std::size_t universe() const { return universe_; }

  void set(std::size_t i) { mut_words()[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { mut_words()[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words()[i >> 6] >> (i & 63)) & 1U; }

  void set_all() {
    auto w = mut_words();
    std::fill(w.begin(), w.end(), ~std::uint64_t{0});
    trim();
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words()) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool none() const {
    auto w = words();
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
  bool all() const { return count() == universe_; }

  bool intersects(const BitSet& other) const {
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & b[i]) return true;
    }
    return false;
  }
  bool is_subset_of(const BitSet& other) const {
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] & ~b[i]) return false;
    }
    return true;
  }

  BitSet& operator|=(const BitSet& other) {
    auto a = mut_words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
    return *this;
  }
  BitSet& operator&=(const BitSet& other) {
    auto a = mut_words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= b[i];
    return *this;
  }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    if (a.universe_ != b.universe_) return false;
    auto x = a.words();
    auto y = b.words();
    return std::equal(x.begin(), x.end(), y.begin());
  }
  /// Lexicographic on words from the low end; used for canonical ordering.
  friend bool operator<(const BitSet& a, const BitSet& b) {
    auto x = a.words();
    auto y = b.words();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

  /// Indices of set bits in increasing order.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const {
    if (universe_ > kInlineBits) return {heap_.data(), heap_.size()};
    return {inline_.data(), word_count()};
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words()) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  std::size_t word_count() const { return (universe_ + 63) / 64; }
  std::span<std::uint64_t> mut_words() {
    if (universe_ > kInlineBits) return {heap_.data(), heap_.size()};
    return {inline_.data(), word_count()};
  }
  void trim() {
    if (universe_ % 64 == 0 || universe_ == 0) return;
    mut_words().back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::array<std::uint64_t, 2> inline_{};
  std::vector<std::uint64_t> heap_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const { return s.hash(); }
};

}  // namespace coverkit
