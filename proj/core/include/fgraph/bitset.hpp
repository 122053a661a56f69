#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fgraph {

// Fixed-length bit vector used for subgroup membership and adjacency rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool none() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }
  std::size_t intersection_count(const Bitset& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      total += std::popcount(words_[i] & other.words_[i]);
    }
    return total;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  // Removes every bit set in `other`.
  Bitset& subtract(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& other) const = default;

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word != 0) {
        std::size_t index = (w << 6) + std::countr_zero(word);
        return index < size_ ? index : size_;
      }
      if (++w >= words_.size()) return size_;
      word = words_[w];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f((w << 6) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  // Orders bitsets as sorted member lists: at the first differing index the
  // set containing it comes first.
  static bool member_order_less(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        std::uint64_t lowest = diff & (~diff + 1);
        return (a.words_[i] & lowest) != 0;
      }
    }
    return false;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace fgraph
