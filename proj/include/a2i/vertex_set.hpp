#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "a2i/error.hpp"

namespace a2i {

/// Fixed-universe bitset over vertices 0..universe-1.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}

    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const noexcept { return n_; }

  bool test(Vertex v) const noexcept {
    return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  bool contains(Vertex v) const noexcept { return test(v); }
  void insert(Vertex v) { words_[check(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[check(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  int size() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Least member, or -1 when empty.
  Vertex first() const noexcept { return next(-1); }
  /// Least member strictly greater than v, or -1.
  Vertex next(Vertex v) const noexcept;

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Members of the universe that are not in this set.
  VertexSet complement() const;
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;
  /// Size of the intersection without materialising it.
  int intersection_size(const VertexSet& o) const;

  std::vector<Vertex> to_vector() const;

 private:
  Vertex check(Vertex v) const {
    if (v < 0 || v >= n_) throw Error(Errc::InvalidArgument, "vertex out of range", {v});
    return v;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace a2i
