#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace cak {

/// Fixed-capacity bitset over vertex indices 0..kCapacity-1.
///
/// Ordering (`operator<`) is the canonical one used for arrangement node ids:
/// first by cardinality, then lexicographically by sorted member list.
class VertexSet {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = kWords * 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}
    int operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& o) const { return pos_ == o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  /// {0, ..., n-1}
  static VertexSet range(int n);
  static VertexSet from(const std::vector<int>& members);

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int s = 0;
    for (auto w : words_) s += std::popcount(w);
    return s;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or -1.
  int first() const;
  /// Smallest member greater than `after`, or -1.
  int next(int after) const;

  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const VertexSet& o) const { return is_subset_of(o) && *this != o; }
  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<int> members() const;

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  bool operator==(const VertexSet& o) const = default;

  /// Cardinality first, then lexicographic on sorted members.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  iterator begin() const { return iterator(this, first()); }
  iterator end() const { return iterator(this, -1); }

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Growable bitset over arrangement node ids.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int capacity() const { return size_; }
  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const {
    int s = 0;
    for (auto w : words_) s += std::popcount(w);
    return s;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool intersects(const NodeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  NodeSet& operator&=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  NodeSet& operator|=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  NodeSet& operator-=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
  bool operator==(const NodeSet& o) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }
  std::vector<int> members() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cak

template <>
struct std::hash<cak::VertexSet> {
  std::size_t operator()(const cak::VertexSet& s) const noexcept { return s.hash(); }
};
