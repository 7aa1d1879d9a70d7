#pragma once

// Brute-force reference computations used only by tests. None of these call
// into the library's algorithms beyond EdgeColoring accessors.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gallai/coloring.hpp"

namespace gallai::testing {

inline std::size_t brute_degree(const EdgeColoring& c, Vertex v) {
  std::set<Color> seen;
  for (Vertex u = 0; u < c.size(); ++u) {
    if (u != v) seen.insert(c.color(u, v));
  }
  return seen.size();
}

inline std::multiset<std::size_t> brute_degree_multiset(const EdgeColoring& c) {
  std::multiset<std::size_t> out;
  for (Vertex v = 0; v < c.size(); ++v) out.insert(brute_degree(c, v));
  return out;
}

inline bool brute_has_rainbow(const EdgeColoring& c) {
  const std::size_t n = c.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex d = 0; d < n; ++d) {
        if (a == b || b == d || a == d) continue;
        std::set<Color> s{c.color(a, b), c.color(a, d), c.color(b, d)};
        if (s.size() == 3) return true;
      }
    }
  }
  return false;
}

// Sum over the suffix starting at 1-based k of 2^-(d_i - d_{k-1}), minus 1,
// as an exact rational. `sorted` must be nondecreasing.
inline boost::multiprecision::cpp_rational rational_suffix_excess(
    const std::vector<std::size_t>& sorted, std::size_t k) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const std::size_t prev = k >= 2 ? sorted[k - 2] : 0;
  cpp_rational sum = 0;
  for (std::size_t i = k; i <= sorted.size(); ++i) {
    sum += cpp_rational(cpp_int(1), cpp_int(1) << (sorted[i - 1] - prev));
  }
  return sum - 1;
}

// Component label per vertex (label = smallest vertex in component), BFS.
inline std::vector<Vertex> bfs_component_labels(const EdgeColoring& c,
                                                Color color) {
  const std::size_t n = c.size();
  std::vector<Vertex> label(n, n);
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::queue<Vertex> q;
    q.push(s);
    label[s] = s;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex w = 0; w < n; ++w) {
        if (w != u && label[w] == n && c.color(u, w) == color) {
          label[w] = s;
          q.push(w);
        }
      }
    }
  }
  return label;
}

// Any colors in [0, colors).
inline EdgeColoring random_coloring(std::size_t n, Color colors,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<Color> pick(0, colors - 1);
  EdgeColoring out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.set_color(u, v, pick(rng));
  }
  return out;
}

inline std::vector<Vertex> random_permutation(std::size_t n,
                                              std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gallai::testing
