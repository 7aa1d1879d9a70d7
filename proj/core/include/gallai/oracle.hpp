#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/sequence.hpp"

namespace gallai {

inline constexpr std::size_t kMaxEnumerationSize = 6;
inline constexpr std::size_t kMaxPartitionSize = 10;

// Calls `visit` once for every Gallai coloring of K_n up to color relabeling.
// Colorings arrive in normalized form, in lexicographic order of their pair
// color vectors. Throws SizeGuardViolation unless 1 <= n <= 6.
void for_each_gallai(std::size_t n,
                     const std::function<void(const EdgeColoring&)>& visit);

std::vector<EdgeColoring> enumerate_gallai(std::size_t n);

struct EnumerationStats {
  std::size_t n = 0;
  std::size_t coloring_count = 0;
  std::set<ColorDegreeSequence> sequences;
};

EnumerationStats enumeration_stats(std::size_t n);

std::set<ColorDegreeSequence> realizable_sequences(std::size_t n);

struct CrosscheckResult {
  std::size_t n = 0;
  std::size_t coloring_count = 0;
  std::set<ColorDegreeSequence> realizable;
  std::set<ColorDegreeSequence> feasible;
  std::vector<ColorDegreeSequence> realizable_only;
  std::vector<ColorDegreeSequence> feasible_only;

  bool equal() const { return realizable_only.empty() && feasible_only.empty(); }
};

// Compares sorted degree sequences of all enumerated Gallai colorings of K_n
// with the candidate sequences accepted by check_sequence().
CrosscheckResult crosscheck(std::size_t n);

// Nontrivial vertex partition where every pair of parts is joined in a
// single color and at most two colors occur between parts.
struct GallaiPartition {
  std::vector<std::vector<Vertex>> parts;
  std::set<Color> cross_colors;
  // (a, b) with a < b part indices -> the color between them.
  std::map<std::pair<std::size_t, std::size_t>, Color> part_pair_color;
};

// First valid partition in scan order: fewer parts first, then restricted
// growth strings in lexicographic order.
// Throws SizeGuardViolation unless 2 <= n <= 10, NotGallai for rainbow input,
// ConsistencyError if no partition exists.
GallaiPartition brute_force_gallai_partition(const EdgeColoring& coloring);

}  // namespace gallai
