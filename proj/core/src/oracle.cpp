#include "gallai/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>

#include "gallai/error.hpp"
#include "gallai/feasibility.hpp"

namespace gallai {

namespace {

void check_enumeration_size(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw SizeGuardViolation("exhaustive enumeration supports 1 <= n <= " +
                             std::to_string(kMaxEnumerationSize) + ", got " +
                             std::to_string(n));
  }
}

// Backtracking over pair colors in lexicographic pair order with
// restricted-growth labels. A triangle i < j < k is complete once its last
// pair (j, k) is colored, so that is where it gets checked.
class GallaiEnumerator {
 public:
  GallaiEnumerator(std::size_t n,
                   const std::function<void(const EdgeColoring&)>& visit)
      : coloring_(n), visit_(visit) {
    for (Vertex j = 0; j < n; ++j) {
      for (Vertex k = j + 1; k < n; ++k) {
        std::vector<std::pair<std::size_t, std::size_t>> closing;
        for (Vertex i = 0; i < j; ++i) {
          closing.emplace_back(coloring_.pair_index(i, j),
                               coloring_.pair_index(i, k));
        }
        pairs_.push_back({j, k, std::move(closing)});
      }
    }
  }

  void run() { extend(0, 0); }

 private:
  struct Pair {
    Vertex j;
    Vertex k;
    // Pair indices of (i, j) and (i, k) for every i < j.
    std::vector<std::pair<std::size_t, std::size_t>> closing;
  };

  void extend(std::size_t edge, Color fresh) {
    if (edge == pairs_.size()) {
      visit_(coloring_);
      return;
    }
    const auto colors = coloring_.pair_colors();
    const Pair& pair = pairs_[edge];
    for (Color c = 0; c <= fresh; ++c) {
      bool rainbow = false;
      for (const auto& [ij, ik] : pair.closing) {
        const Color a = colors[ij];
        const Color b = colors[ik];
        if (a != b && c != a && c != b) {
          rainbow = true;
          break;
        }
      }
      if (rainbow) continue;
      coloring_.set_color(pair.j, pair.k, c);
      extend(edge + 1, c == fresh ? fresh + 1 : fresh);
    }
  }

  EdgeColoring coloring_;
  const std::function<void(const EdgeColoring&)>& visit_;
  std::vector<Pair> pairs_;
};

std::vector<ColorDegreeSequence> set_difference(
    const std::set<ColorDegreeSequence>& a,
    const std::set<ColorDegreeSequence>& b) {
  std::vector<ColorDegreeSequence> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

class PartitionSearch {
 public:
  explicit PartitionSearch(const EdgeColoring& coloring)
      : coloring_(coloring), labels_(coloring.size(), 0) {}

  std::optional<GallaiPartition> run() {
    for (std::size_t blocks = 2; blocks <= coloring_.size(); ++blocks) {
      blocks_ = blocks;
      labels_[0] = 0;
      if (assign(1, 1)) return build();
    }
    return std::nullopt;
  }

 private:
  // Restricted growth string with exactly blocks_ distinct labels.
  bool assign(std::size_t pos, std::size_t used) {
    const std::size_t n = coloring_.size();
    if (pos == n) return used == blocks_ && accepts();
    if (used + (n - pos) < blocks_) return false;
    const std::size_t limit = std::min(used, blocks_ - 1);
    for (std::size_t label = 0; label <= limit; ++label) {
      labels_[pos] = label;
      if (assign(pos + 1, label == used ? used + 1 : used)) return true;
    }
    return false;
  }

  bool accepts() {
    const std::size_t n = coloring_.size();
    pair_color_.assign(blocks_ * blocks_, kUnset);
    std::vector<Color> cross;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const std::size_t a = labels_[u];
        const std::size_t b = labels_[v];
        if (a == b) continue;
        const Color c = coloring_.color(u, v);
        std::int64_t& slot = pair_color_[std::min(a, b) * blocks_ + std::max(a, b)];
        if (slot == kUnset) {
          slot = c;
          if (std::find(cross.begin(), cross.end(), c) == cross.end()) {
            cross.push_back(c);
            if (cross.size() > 2) return false;
          }
        } else if (slot != static_cast<std::int64_t>(c)) {
          return false;
        }
      }
    }
    return true;
  }

  GallaiPartition build() const {
    GallaiPartition partition;
    partition.parts.resize(blocks_);
    for (Vertex v = 0; v < coloring_.size(); ++v) {
      partition.parts[labels_[v]].push_back(v);
    }
    for (std::size_t a = 0; a < blocks_; ++a) {
      for (std::size_t b = a + 1; b < blocks_; ++b) {
        const Color c = static_cast<Color>(pair_color_[a * blocks_ + b]);
        partition.part_pair_color[{a, b}] = c;
        partition.cross_colors.insert(c);
      }
    }
    return partition;
  }

  static constexpr std::int64_t kUnset = -1;

  const EdgeColoring& coloring_;
  std::vector<std::size_t> labels_;
  std::vector<std::int64_t> pair_color_;
  std::size_t blocks_ = 0;
};

}  // namespace

void for_each_gallai(std::size_t n,
                     const std::function<void(const EdgeColoring&)>& visit) {
  check_enumeration_size(n);
  GallaiEnumerator(n, visit).run();
}

std::vector<EdgeColoring> enumerate_gallai(std::size_t n) {
  std::vector<EdgeColoring> out;
  for_each_gallai(n, [&](const EdgeColoring& c) { out.push_back(c); });
  return out;
}

EnumerationStats enumeration_stats(std::size_t n) {
  EnumerationStats stats;
  stats.n = n;
  for_each_gallai(n, [&](const EdgeColoring& c) {
    ++stats.coloring_count;
    stats.sequences.insert(
        ColorDegreeSequence::from_unsorted(color_degrees(c)));
  });
  return stats;
}

std::set<ColorDegreeSequence> realizable_sequences(std::size_t n) {
  return enumeration_stats(n).sequences;
}

CrosscheckResult crosscheck(std::size_t n) {
  auto stats = enumeration_stats(n);
  CrosscheckResult result;
  result.n = n;
  result.coloring_count = stats.coloring_count;
  result.realizable = std::move(stats.sequences);
  for (auto& seq : feasible_sequences(n)) result.feasible.insert(std::move(seq));
  result.realizable_only = set_difference(result.realizable, result.feasible);
  result.feasible_only = set_difference(result.feasible, result.realizable);
  return result;
}

GallaiPartition brute_force_gallai_partition(const EdgeColoring& coloring) {
  const std::size_t n = coloring.size();
  if (n < 2 || n > kMaxPartitionSize) {
    throw SizeGuardViolation("partition search supports 2 <= n <= " +
                             std::to_string(kMaxPartitionSize) + ", got " +
                             std::to_string(n));
  }
  if (auto w = find_rainbow_triangle(coloring)) {
    throw NotGallai("rainbow triangle (" + std::to_string(w->i) + ", " +
                    std::to_string(w->j) + ", " + std::to_string(w->k) + ")");
  }
  if (auto partition = PartitionSearch(coloring).run()) return *partition;
  throw ConsistencyError("no Gallai partition exists for a Gallai coloring");
}

}  // namespace gallai
