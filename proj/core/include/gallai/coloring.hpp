#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gallai {

using Vertex = std::size_t;
using Color = std::uint32_t;

// Edge coloring of the complete graph K_n on vertices 0..n-1.
//
// Colors are stored in a dense upper-triangle array, one entry per unordered
// pair {u, v} with u < v, in lexicographic pair order:
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1).
// n = 1 is legal and has no pairs.
class EdgeColoring {
 public:
  // K_n with every edge colored `fill`.
  explicit EdgeColoring(std::size_t n, Color fill = 0);

  // Takes pair colors in lexicographic pair order; size must be n(n-1)/2.
  EdgeColoring(std::size_t n, std::vector<Color> pair_colors);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return colors_.size(); }

  Color color(Vertex u, Vertex v) const { return colors_[pair_index(u, v)]; }
  void set_color(Vertex u, Vertex v, Color c) { colors_[pair_index(u, v)] = c; }

  std::span<const Color> pair_colors() const { return colors_; }

  // Position of {u, v} in pair_colors(). Order of u and v does not matter;
  // u == v is a precondition violation.
  std::size_t pair_index(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return u * (2 * n_ - u - 1) / 2 + (v - u - 1);
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t n_;
  std::vector<Color> colors_;
};

// A triangle i < j < k whose three edges carry pairwise distinct colors.
struct RainbowWitness {
  Vertex i;
  Vertex j;
  Vertex k;
  Color color_ij;
  Color color_ik;
  Color color_jk;

  friend bool operator==(const RainbowWitness&, const RainbowWitness&) = default;
};

// Per-vertex color degree, indexed by vertex. For n = 1 returns {0}.
std::vector<std::size_t> color_degrees(const EdgeColoring& coloring);

// color_degrees() sorted nondecreasing.
std::vector<std::size_t> sorted_color_degrees(const EdgeColoring& coloring);

// Lexicographically smallest rainbow triangle, if any.
std::optional<RainbowWitness> find_rainbow_triangle(const EdgeColoring& coloring);

inline bool is_gallai(const EdgeColoring& coloring) {
  return !find_rainbow_triangle(coloring).has_value();
}

// Relabels colors to 0..C-1 by first appearance in lexicographic pair order.
EdgeColoring normalize_colors(const EdgeColoring& coloring);

std::size_t distinct_color_count(const EdgeColoring& coloring);

// Same coloring with vertex v renamed to perm[v]. perm must be a permutation
// of 0..n-1.
EdgeColoring permute_vertices(const EdgeColoring& coloring,
                              std::span<const Vertex> perm);

// Coloring induced on `vertices` (in the given order, which becomes 0..m-1).
EdgeColoring induced_coloring(const EdgeColoring& coloring,
                              std::span<const Vertex> vertices);

}  // namespace gallai
