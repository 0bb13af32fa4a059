#include "a2i/generators.hpp"

#include <utility>
#include <vector>

#include "a2i/andrasfai.hpp"
#include "a2i/error.hpp"

namespace a2i {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ull;
}

std::uint64_t Rng::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1Dull;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::InvalidArgument, "empty range");
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= limit) return r % bound;
  }
}

Graph gen_blowup_complement(int d, std::span<const int> sizes, std::uint64_t) {
  return complement(gamma_blowup(d, sizes).graph);
}

Graph gen_random_alpha2(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::InvalidArgument, "probability outside [0, 1]");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  Graph f(n);
  for (auto [u, v] : pairs) {
    const double r = rng.uniform();
    if (r < p && !f.neighbors(u).intersects(f.neighbors(v))) f.add_edge(u, v);
  }
  return complement(f);
}

}  // namespace a2i
