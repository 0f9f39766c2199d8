#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "canvas_forge/plane_graph.hpp"

namespace canvas_forge {

using Color = int;
inline constexpr Color kNoColor = -1;
inline constexpr int kMaxColors = 64;

/// A set of colours drawn from 0..63.
class ColorSet {
 public:
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Color operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };

  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }
  /// {0, ..., k-1}
  static ColorSet range(int k) { return ColorSet(k >= 64 ? ~0ULL : ((1ULL << k) - 1)); }
  static ColorSet single(Color c) { return ColorSet(1ULL << c); }

  bool contains(Color c) const { return c >= 0 && c < kMaxColors && ((bits_ >> c) & 1ULL); }
  void insert(Color c);
  void erase(Color c) {
    if (c >= 0 && c < kMaxColors) bits_ &= ~(1ULL << c);
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  /// Smallest colour; kNoColor when empty.
  Color min() const { return bits_ ? std::countr_zero(bits_) : kNoColor; }
  std::uint64_t bits() const { return bits_; }
  std::vector<Color> to_vector() const;

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Per-vertex colour lists.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(int n, ColorSet fill = {}) : lists_(static_cast<std::size_t>(n), fill) {}
  explicit ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {}

  ColorSet operator[](Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
  ColorSet& operator[](Vertex v) { return lists_[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(lists_.size()); }
  const std::vector<ColorSet>& lists() const { return lists_; }
  /// Sizes match the graph and every list is nonempty.
  bool valid_for(const PlaneGraph& g) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorSet> lists_;
};

/// A possibly partial colour assignment; kNoColor marks unassigned vertices.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n) : colors_(static_cast<std::size_t>(n), kNoColor) {}

  Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  void assign(Vertex v, Color c) { colors_[static_cast<std::size_t>(v)] = c; }
  void clear(Vertex v) { colors_[static_cast<std::size_t>(v)] = kNoColor; }
  bool assigned(Vertex v) const { return colors_[static_cast<std::size_t>(v)] != kNoColor; }
  int size() const { return static_cast<int>(colors_.size()); }
  int assigned_count() const;
  const std::vector<Color>& raw() const { return colors_; }
  /// Keeps only the colours of `keep` vertices.
  Coloring restricted_to(const SubgraphRef& keep) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

/// No edge (of `within`, if given) joins two vertices with the same assigned colour.
bool is_proper(const PlaneGraph& g, const Coloring& c, const SubgraphRef* within = nullptr);

/// Every assigned colour belongs to its vertex's list.
bool within_lists(const ListAssignment& lists, const Coloring& c);

/// Total on the vertices of `sub` (whole graph when null), proper on its edges, in lists.
bool is_list_coloring(const PlaneGraph& g, const ListAssignment& lists, const Coloring& c,
                      const SubgraphRef* sub = nullptr);

}  // namespace canvas_forge
