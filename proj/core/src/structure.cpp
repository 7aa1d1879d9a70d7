#include "gallai/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace gallai {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so that roots are component minima.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Color> sorted_distinct_colors(const EdgeColoring& coloring) {
  std::vector<Color> colors(coloring.pair_colors().begin(),
                            coloring.pair_colors().end());
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return colors;
}

}  // namespace

ColorComponentSplit color_components(const EdgeColoring& coloring, Color c) {
  const std::size_t n = coloring.size();
  DisjointSets sets(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coloring.color(u, v) == c) sets.unite(u, v);
    }
  }
  ColorComponentSplit split{c, {}};
  std::vector<std::size_t> slot(n, n);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = split.components.size();
      split.components.emplace_back();
    }
    split.components[slot[root]].push_back(v);
  }
  return split;
}

std::optional<ColorComponentSplit> find_disconnected_color(
    const EdgeColoring& coloring) {
  if (coloring.size() < 2) {
    throw InvalidArgument("disconnected colors need n >= 2");
  }
  if (auto w = find_rainbow_triangle(coloring)) {
    throw NotGallai("rainbow triangle (" + std::to_string(w->i) + ", " +
                    std::to_string(w->j) + ", " + std::to_string(w->k) + ")");
  }
  for (Color c : sorted_distinct_colors(coloring)) {
    auto split = color_components(coloring, c);
    if (split.components.size() >= 2) return split;
  }
  return std::nullopt;
}

bool CompressionResult::degree_bound_holds() const {
  return std::all_of(bounds.begin(), bounds.end(), [&](const auto& b) {
    return b.degree <= b.inner_degree + outside_color_count;
  });
}

CompressionResult compress_component(const EdgeColoring& coloring,
                                     const ColorComponentSplit& split,
                                     std::size_t which) {
  const std::size_t n = coloring.size();
  if (which >= split.components.size()) {
    throw InvalidArgument("component index " + std::to_string(which) +
                          " out of range");
  }
  const auto& component = split.components[which];
  if (component.empty() || component.size() >= n) {
    throw InvalidArgument("component must be a proper nonempty vertex subset");
  }
  std::vector<bool> inside(n, false);
  for (Vertex v : component) {
    if (v >= n || inside[v]) {
      throw InvalidArgument("component lists an invalid or repeated vertex");
    }
    inside[v] = true;
  }

  const Vertex rep = *std::min_element(component.begin(), component.end());
  CompressionResult result{EdgeColoring(n - component.size() + 1), {}, 0, 0, {}};
  for (Vertex v = 0; v < n; ++v) {
    if (!inside[v]) result.origin.push_back(v);
  }
  result.compressed_vertex = result.origin.size();
  result.origin.push_back(rep);

  std::set<Color> outside_colors;
  for (std::size_t a = 0; a < result.compressed_vertex; ++a) {
    const Vertex v = result.origin[a];
    const Color toward = coloring.color(v, rep);
    for (Vertex u : component) {
      if (coloring.color(v, u) != toward) {
        throw IllDefinedMerge(
            "vertex " + std::to_string(v) + " sees colors " +
            std::to_string(toward) + " and " +
            std::to_string(coloring.color(v, u)) + " into the component");
      }
    }
    outside_colors.insert(toward);
    result.reduced.set_color(a, result.compressed_vertex, toward);
    for (std::size_t b = a + 1; b < result.compressed_vertex; ++b) {
      result.reduced.set_color(a, b, coloring.color(v, result.origin[b]));
    }
  }
  result.outside_color_count = outside_colors.size();

  const auto full = color_degrees(coloring);
  const auto inner = color_degrees(induced_coloring(coloring, component));
  for (std::size_t i = 0; i < component.size(); ++i) {
    result.bounds.push_back({component[i], full[component[i]], inner[i]});
  }
  return result;
}

ChainOrder recover_chain_order(const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  if (n < 2) throw InvalidArgument("chain order needs n >= 2");
  const auto degrees = color_degrees(coloring);

  std::optional<Vertex> apex;
  for (Vertex v = n; v-- > 0;) {
    if (degrees[v] == n - 1) {
      apex = v;
      break;
    }
  }
  if (!apex) throw InvalidArgument("no vertex has color degree n - 1");

  ChainOrder result{*apex, {}};
  for (Vertex v = 0; v < n; ++v) {
    if (v != *apex) result.order.push_back(v);
  }

  // u beats w when color(u, w) is u's apex color.
  const auto beats = [&](Vertex u, Vertex w) {
    return coloring.color(u, w) == coloring.color(u, *apex);
  };
  std::vector<std::size_t> wins(n, 0);
  for (Vertex u : result.order) {
    for (Vertex w : result.order) {
      if (u == w) continue;
      const bool forward = beats(u, w);
      if (forward == beats(w, u)) {
        throw ConsistencyError(
            "edge {" + std::to_string(u) + ", " + std::to_string(w) +
            "} matches neither or both apex colors");
      }
      if (forward) ++wins[u];
    }
  }
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](Vertex a, Vertex b) { return wins[a] > wins[b]; });

  const std::size_t m = result.order.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = result.order[i];
    if (wins[u] != m - 1 - i) {
      throw ConsistencyError("apex tournament is not transitive");
    }
    if (degrees[u] != i + 1) {
      throw ConsistencyError("vertex " + std::to_string(u) + " at position " +
                             std::to_string(i + 1) + " has color degree " +
                             std::to_string(degrees[u]));
    }
  }
  return result;
}

PrefixBoundReport prefix_color_bound_report(const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  const auto degrees = color_degrees(coloring);

  PrefixBoundReport report;
  report.sorted_vertices.resize(n);
  std::iota(report.sorted_vertices.begin(), report.sorted_vertices.end(),
            Vertex{0});
  std::stable_sort(report.sorted_vertices.begin(), report.sorted_vertices.end(),
                   [&](Vertex a, Vertex b) { return degrees[a] < degrees[b]; });
  for (Vertex v : report.sorted_vertices) {
    report.sorted_degrees.push_back(degrees[v]);
  }

  // prefix_colors[i]: colors from sorted vertex i into sorted vertices < k-1.
  std::vector<std::set<Color>> prefix_colors(n);
  for (std::size_t k = 2; k <= n; ++k) {
    const Vertex newest = report.sorted_vertices[k - 2];
    const std::size_t bound = report.sorted_degrees[k - 2];
    for (std::size_t i = k; i <= n; ++i) {
      auto& seen = prefix_colors[i - 1];
      seen.insert(coloring.color(report.sorted_vertices[i - 1], newest));
      if (seen.size() > bound) {
        report.holds = false;
        report.first_violation =
            PrefixBoundReport::Violation{k, i, seen.size()};
        return report;
      }
    }
  }
  return report;
}

}  // namespace gallai
