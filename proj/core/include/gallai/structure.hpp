#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/error.hpp"

namespace gallai {

// Connected components of the spanning subgraph (all n vertices) formed by
// the edges of a single color. Components are sorted internally and ordered
// by their smallest vertex.
struct ColorComponentSplit {
  Color color;
  std::vector<std::vector<Vertex>> components;
};

// Components of color c's spanning subgraph, whether or not it is connected.
ColorComponentSplit color_components(const EdgeColoring& coloring, Color c);

// Smallest color whose spanning subgraph has >= 2 components. Always present
// when a Gallai coloring uses >= 3 colors.
// Throws InvalidArgument for n < 2 and NotGallai for rainbow input.
std::optional<ColorComponentSplit> find_disconnected_color(
    const EdgeColoring& coloring);

// Per-vertex terms of d(v) <= d_A(v) + k for a compressed component A.
struct ComponentDegreeBound {
  Vertex vertex;             // original index, v in A
  std::size_t degree;        // d(v) in the full coloring
  std::size_t inner_degree;  // d_A(v) within the coloring induced on A
};

struct CompressionResult {
  EdgeColoring reduced;
  // Reduced index -> original vertex. Survivors keep their relative order;
  // the merged node is last and maps to the smallest vertex of A.
  std::vector<Vertex> origin;
  Vertex compressed_vertex;
  // Distinct colors between A and the rest (k).
  std::size_t outside_color_count;
  std::vector<ComponentDegreeBound> bounds;

  bool degree_bound_holds() const;
};

// Thrown when some outside vertex sees two colors into the component.
class IllDefinedMerge : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

// Merges split.components[which] into one node. Colors of surviving edges are
// kept as-is (not renormalized).
// Throws InvalidArgument for a bad index or a component that is empty or the
// whole vertex set, and IllDefinedMerge.
CompressionResult compress_component(const EdgeColoring& coloring,
                                     const ColorComponentSplit& split,
                                     std::size_t which);

struct ChainOrder {
  Vertex apex;
  // Remaining vertices, left to right. For each pair, the left vertex u
  // and right vertex w satisfy color(u, w) == color(u, apex), and the vertex
  // at 1-based position i has color degree i.
  std::vector<Vertex> order;
};

// Orders the non-apex vertices of a Gallai coloring with a vertex of color
// degree n-1. The apex is the highest-indexed such vertex.
// Throws InvalidArgument for n < 2 or no apex, ConsistencyError if the
// induced tournament is not transitive.
ChainOrder recover_chain_order(const EdgeColoring& coloring);

struct PrefixBoundReport {
  bool holds = true;
  // Vertices sorted by (color degree, index); k and i below index this list
  // 1-based.
  std::vector<Vertex> sorted_vertices;
  std::vector<std::size_t> sorted_degrees;
  struct Violation {
    std::size_t k;
    std::size_t i;
    std::size_t colors_into_prefix;
  };
  std::optional<Violation> first_violation;
};

// For every 2 <= k <= i <= n (in degree-sorted order), counts the distinct
// colors from vertex i into vertices 1..k-1 and compares with d(k-1).
PrefixBoundReport prefix_color_bound_report(const EdgeColoring& coloring);

}  // namespace gallai
