#include "gallai/constructor.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace gallai {

namespace {

std::string describe_infeasible(const ColorDegreeSequence& seq,
                                const FeasibilityReport& report) {
  std::string msg = "sequence " + seq.to_string() + " is not realizable";
  if (report.first_violation) {
    msg += " (suffix inequality fails at k = " +
           std::to_string(*report.first_violation) + ")";
  }
  return msg;
}

// Lower-triangle color store grown one vertex at a time: row b holds the
// colors to vertices 0..b-1. Keeps color degrees current so each duplication
// costs O(n).
class GrowingColoring {
 public:
  GrowingColoring(std::size_t capacity, std::size_t initial_size)
      : size_(initial_size),
        matrix_(capacity * (capacity - 1) / 2, 0),
        degrees_(capacity, 0) {
    // Monochromatic start; K_1 has no edges.
    for (std::size_t v = 0; v < size_; ++v) degrees_[v] = size_ > 1 ? 1 : 0;
    max_color_ = 0;
    has_edges_ = size_ > 1;
  }

  Vertex first_with_degree(std::size_t degree) const {
    for (Vertex v = 0; v < size_; ++v) {
      if (degrees_[v] == degree) return v;
    }
    throw ConsistencyError("no vertex of degree " + std::to_string(degree) +
                           " to duplicate");
  }

  void duplicate(Vertex v, DuplicationMode mode) {
    const Vertex clone = size_++;
    for (Vertex w = 0; w < clone; ++w) {
      if (w != v) set(clone, w, at(v, w));
    }
    Color joint;
    if (mode == DuplicationMode::ExistingColor) {
      joint = smallest_incident(v);
    } else {
      joint = has_edges_ ? max_color_ + 1 : 0;
      ++degrees_[v];
    }
    set(v, clone, joint);
    max_color_ = std::max(max_color_, joint);
    has_edges_ = true;
    degrees_[clone] = degrees_[v];
  }

  EdgeColoring finish() const {
    EdgeColoring out(size_);
    for (Vertex u = 0; u < size_; ++u) {
      for (Vertex w = u + 1; w < size_; ++w) out.set_color(u, w, at(u, w));
    }
    return normalize_colors(out);
  }

 private:
  static std::size_t index(Vertex a, Vertex b) {
    if (a < b) std::swap(a, b);
    return a * (a - 1) / 2 + b;
  }
  Color at(Vertex a, Vertex b) const { return matrix_[index(a, b)]; }
  void set(Vertex a, Vertex b, Color c) { matrix_[index(a, b)] = c; }
  Color smallest_incident(Vertex v) const {
    Color best = 0;
    bool found = false;
    for (Vertex w = 0; w < size_; ++w) {
      if (w == v) continue;
      if (!found || at(v, w) < best) best = at(v, w);
      found = true;
    }
    return best;
  }

  std::size_t size_;
  std::vector<Color> matrix_;
  std::vector<std::size_t> degrees_;
  Color max_color_ = 0;
  bool has_edges_ = false;
};

}  // namespace

EdgeColoring duplicate_vertex(const EdgeColoring& coloring, Vertex v,
                              DuplicationMode mode) {
  const std::size_t n = coloring.size();
  if (v >= n) {
    throw InvalidArgument("vertex " + std::to_string(v) +
                          " out of range for n = " + std::to_string(n));
  }
  if (mode == DuplicationMode::ExistingColor && n == 1) {
    throw InvalidArgument("K_1 has no incident color to reuse");
  }

  Color joint = 0;
  if (mode == DuplicationMode::ExistingColor) {
    bool found = false;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v) continue;
      const Color c = coloring.color(v, w);
      if (!found || c < joint) joint = c;
      found = true;
    }
  } else if (coloring.edge_count() > 0) {
    const auto colors = coloring.pair_colors();
    joint = *std::max_element(colors.begin(), colors.end()) + 1;
  }

  EdgeColoring out(n + 1);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) out.set_color(a, b, coloring.color(a, b));
  }
  for (Vertex w = 0; w < n; ++w) {
    if (w != v) out.set_color(n, w, coloring.color(v, w));
  }
  out.set_color(v, n, joint);
  return out;
}

InfeasibleSequence::InfeasibleSequence(const ColorDegreeSequence& seq,
                                       FeasibilityReport report)
    : Error(describe_infeasible(seq, report)), report_(std::move(report)) {}

RealizationPlan plan_realization(const ColorDegreeSequence& seq) {
  auto report = check_sequence(seq);
  if (!report.feasible) throw InfeasibleSequence(seq, std::move(report));

  std::vector<ReductionStep> steps;
  std::vector<std::size_t> current(seq.values().begin(), seq.values().end());
  while (current.size() > 1 && current.back() > 1) {
    ColorDegreeSequence from(current);
    const std::size_t top = from.back();
    const std::size_t mult = from.top_multiplicity();
    if (mult < 2) {
      // Feasibility forces the maximum to repeat (slack_n < 0 otherwise).
      throw ConsistencyError("feasible sequence with a unique maximum: " +
                             from.to_string());
    }
    DuplicationMode mode;
    std::size_t duplicated;
    current.pop_back();
    if (mult % 2 == 1) {
      mode = DuplicationMode::ExistingColor;
      duplicated = top;
    } else {
      current.pop_back();
      current.insert(std::lower_bound(current.begin(), current.end(), top - 1),
                     top - 1);
      mode = DuplicationMode::FreshColor;
      duplicated = top - 1;
    }
    ColorDegreeSequence to(current);
    steps.push_back({std::move(from), std::move(to), duplicated, mode});
  }
  return {std::move(steps), ColorDegreeSequence(std::move(current))};
}

EdgeColoring realize(const ColorDegreeSequence& seq) {
  const auto plan = plan_realization(seq);
  GrowingColoring builder(seq.size(), plan.base.size());
  for (auto step = plan.steps.rbegin(); step != plan.steps.rend(); ++step) {
    builder.duplicate(builder.first_with_degree(step->duplicated_degree),
                      step->mode);
  }
  return builder.finish();
}

EdgeColoring chain_coloring(std::size_t n) {
  EdgeColoring out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.set_color(u, v, static_cast<Color>(u));
  }
  return out;
}

EdgeColoring uniform_coloring(std::size_t d) {
  if (d > kMaxUniformBits) {
    throw SizeGuardViolation("uniform coloring limited to d <= " +
                             std::to_string(kMaxUniformBits));
  }
  const std::size_t n = std::size_t{1} << d;
  EdgeColoring out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      out.set_color(u, v, static_cast<Color>(std::bit_width(u ^ v) - 1));
    }
  }
  return normalize_colors(out);
}

}  // namespace gallai
