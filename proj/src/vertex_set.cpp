#include "a2i/vertex_set.hpp"

#include <algorithm>

namespace a2i {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

Vertex VertexSet::next(Vertex v) const noexcept {
  int start = v + 1;
  if (start >= n_) return -1;
  std::size_t wi = static_cast<std::size_t>(start) >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
    if (++wi == words_.size()) return -1;
    w = words_[wi];
  }
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (o.n_ != n_) throw Error(Errc::InvalidArgument, "vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.n_ != n_) throw Error(Errc::InvalidArgument, "vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  if (o.n_ != n_) throw Error(Errc::InvalidArgument, "vertex set universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(n_) - *this; }

bool VertexSet::intersects(const VertexSet& o) const {
  for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
    if (words_[i] & ~other) return false;
  }
  return true;
}

int VertexSet::intersection_size(const VertexSet& o) const {
  int c = 0;
  for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
    c += std::popcount(words_[i] & o.words_[i]);
  return c;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

}  // namespace a2i
