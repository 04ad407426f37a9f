// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace forcing_lab {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxEdges = 256;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

template <class F>
void for_each_vertex(VertexMask mask, F&& f) {
  while (mask != 0) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

/// Fixed-capacity bit set over the edge indices of one host graph.
/// Edge indices follow the host's lexicographic edge order, so comparing
/// masks with `lex_less` compares the sorted edge lists.
class EdgeMask {
 public:
  static constexpr int kWords = kMaxEdges / 64;

  constexpr EdgeMask() = default;

  static EdgeMask first_n(int count) {
    EdgeMask m;
    for (int w = 0; w < kWords && count > 0; ++w, count -= 64) {
      m.words_[w] = count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
    }
    return m;
  }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const EdgeMask& o) const {
    for (int w = 0; w < kWords; ++w)
      if ((words_[w] & o.words_[w]) != 0) return true;
    return false;
  }
  bool is_subset_of(const EdgeMask& o) const {
    for (int w = 0; w < kWords; ++w)
      if ((words_[w] & ~o.words_[w]) != 0) return false;
    return true;
  }

  /// Smallest index in the set, or -1.
  int lowest() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }
  /// Largest index in the set, or -1.
  int highest() const {
    for (int w = kWords - 1; w >= 0; --w)
      if (words_[w] != 0) return w * 64 + 63 - std::countl_zero(words_[w]);
    return -1;
  }

  EdgeMask& operator|=(const EdgeMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  EdgeMask& operator&=(const EdgeMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  EdgeMask& operator^=(const EdgeMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  EdgeMask& operator-=(const EdgeMask& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend EdgeMask operator|(EdgeMask a, const EdgeMask& b) { return a |= b; }
  friend EdgeMask operator&(EdgeMask a, const EdgeMask& b) { return a &= b; }
  friend EdgeMask operator^(EdgeMask a, const EdgeMask& b) { return a ^= b; }
  friend EdgeMask operator-(EdgeMask a, const EdgeMask& b) { return a -= b; }
  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Lexicographic order of the sorted index sequences (a proper prefix sorts first).
inline bool lex_less(const EdgeMask& a, const EdgeMask& b) {
  int first = (a ^ b).lowest();
  if (first < 0) return false;
  // Below `first` both sequences agree. The one holding `first` is smaller
  // unless the other has already ended there (then the other is a prefix).
  if (a.test(first)) return b.highest() > first;
  return a.highest() < first;
}

struct EdgeMaskHash {
  std::size_t operator()(const EdgeMask& m) const { return m.hash(); }
};

}  // namespace forcing_lab
