#include "gallai/coloring.hpp"

#include <algorithm>
#include <unordered_map>

#include "gallai/error.hpp"

namespace gallai {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

EdgeColoring::EdgeColoring(std::size_t n, Color fill)
    : n_(n), colors_(n == 0 ? 0 : pair_count(n), fill) {
  if (n == 0) throw InvalidArgument("a coloring needs at least one vertex");
}

EdgeColoring::EdgeColoring(std::size_t n, std::vector<Color> pair_colors)
    : n_(n), colors_(std::move(pair_colors)) {
  if (n == 0) throw InvalidArgument("a coloring needs at least one vertex");
  if (colors_.size() != pair_count(n)) {
    throw InvalidArgument("expected " + std::to_string(pair_count(n)) +
                          " pair colors for n = " + std::to_string(n) +
                          ", got " + std::to_string(colors_.size()));
  }
}

std::vector<std::size_t> color_degrees(const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  std::vector<std::size_t> degrees(n, 0);
  std::vector<Color> seen;
  seen.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    seen.clear();
    for (Vertex u = 0; u < n; ++u) {
      if (u != v) seen.push_back(coloring.color(u, v));
    }
    std::sort(seen.begin(), seen.end());
    degrees[v] = static_cast<std::size_t>(
        std::unique(seen.begin(), seen.end()) - seen.begin());
  }
  return degrees;
}

std::vector<std::size_t> sorted_color_degrees(const EdgeColoring& coloring) {
  auto degrees = color_degrees(coloring);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::optional<RainbowWitness> find_rainbow_triangle(
    const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const Color cij = coloring.color(i, j);
      for (Vertex k = j + 1; k < n; ++k) {
        const Color cik = coloring.color(i, k);
        if (cik == cij) continue;
        const Color cjk = coloring.color(j, k);
        if (cjk != cij && cjk != cik) {
          return RainbowWitness{i, j, k, cij, cik, cjk};
        }
      }
    }
  }
  return std::nullopt;
}

EdgeColoring normalize_colors(const EdgeColoring& coloring) {
  std::unordered_map<Color, Color> relabel;
  std::vector<Color> out;
  out.reserve(coloring.edge_count());
  for (Color c : coloring.pair_colors()) {
    auto [it, inserted] =
        relabel.try_emplace(c, static_cast<Color>(relabel.size()));
    out.push_back(it->second);
  }
  return EdgeColoring(coloring.size(), std::move(out));
}

std::size_t distinct_color_count(const EdgeColoring& coloring) {
  std::vector<Color> colors(coloring.pair_colors().begin(),
                            coloring.pair_colors().end());
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(
      std::unique(colors.begin(), colors.end()) - colors.begin());
}

EdgeColoring permute_vertices(const EdgeColoring& coloring,
                              std::span<const Vertex> perm) {
  const std::size_t n = coloring.size();
  if (perm.size() != n) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex p : perm) {
    if (p >= n || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = true;
  }
  EdgeColoring out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      out.set_color(perm[u], perm[v], coloring.color(u, v));
    }
  }
  return out;
}

EdgeColoring induced_coloring(const EdgeColoring& coloring,
                              std::span<const Vertex> vertices) {
  const std::size_t m = vertices.size();
  for (Vertex v : vertices) {
    if (v >= coloring.size()) throw InvalidArgument("vertex out of range");
  }
  EdgeColoring out(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (vertices[a] == vertices[b]) {
        throw InvalidArgument("repeated vertex in induced subgraph");
      }
      out.set_color(a, b, coloring.color(vertices[a], vertices[b]));
    }
  }
  return out;
}

}  // namespace gallai
