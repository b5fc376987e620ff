#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace indturan {

using Vertex = int;

/**
 * Dynamically sized bitset over a vertex universe [0, universe).
 *
 * Binary operations accept operands of different universes; the result takes
 * the larger one. Iteration is in increasing vertex order.
 */
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <class Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  void insert(Vertex v) {
    grow(v + 1);
    words_[static_cast<std::size_t>(v) >> 6] |= bit(v);
  }
  void erase(Vertex v) {
    if (v < universe_) words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v);
  }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && (words_[static_cast<std::size_t>(v) >> 6] & bit(v)) != 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or -1.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  VertexSet& operator&=(const VertexSet& o) {
    grow(o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    grow(o.universe_);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~(i < o.words_.size() ? o.words_[i] : 0)) != 0) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  /// Equality ignores the universe size.
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    const auto n = std::max(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.word(i) != b.word(i)) return false;
    return true;
  }

  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
  }

 private:
  static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }
  std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
  void grow(int universe) {
    if (universe <= universe_) return;
    universe_ = universe;
    words_.resize(word_count(universe), 0);
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace indturan
