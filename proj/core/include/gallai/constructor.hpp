#pragma once

#include <cstddef>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/error.hpp"
#include "gallai/feasibility.hpp"
#include "gallai/sequence.hpp"

namespace gallai {

// How the edge between a vertex and its clone is colored.
enum class DuplicationMode {
  ExistingColor,  // smallest color already incident to v; degree unchanged
  FreshColor,     // a color used nowhere else; degree of v and clone +1
};

// Adds vertex n as a clone of v: color(n, w) = color(v, w) for all w != v,
// and color(v, n) is chosen by `mode`. The clone of a Gallai coloring is
// Gallai whatever color {v, n} gets.
//
// Throws InvalidArgument if v >= n, or for ExistingColor on K_1.
EdgeColoring duplicate_vertex(const EdgeColoring& coloring, Vertex v,
                              DuplicationMode mode);

class InfeasibleSequence : public Error {
 public:
  InfeasibleSequence(const ColorDegreeSequence& seq, FeasibilityReport report);
  const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

// One step of the realization recursion, read top-down: `from` is reduced to
// `to` (one entry shorter), and the coloring for `from` is rebuilt by
// duplicating a vertex of degree `duplicated_degree` in the coloring for `to`.
struct ReductionStep {
  ColorDegreeSequence from;
  ColorDegreeSequence to;
  std::size_t duplicated_degree;
  DuplicationMode mode;
};

struct RealizationPlan {
  std::vector<ReductionStep> steps;  // outermost first
  ColorDegreeSequence base;          // K_1 or an all-ones sequence
};

// Plans the reduction of a feasible sequence down to a base case:
//  - n = 1, or top value 1: base case (K_1 or monochromatic K_n);
//  - top value t with odd multiplicity m: drop one t;
//  - even m: replace two copies of t by one t-1.
// Throws InfeasibleSequence.
RealizationPlan plan_realization(const ColorDegreeSequence& seq);

// Normalized Gallai coloring whose sorted color degrees equal seq.
// Throws InfeasibleSequence.
EdgeColoring realize(const ColorDegreeSequence& seq);

// color(u, v) = min(u, v). Sorted degrees are 1, 2, ..., n-2, n-1, n-1.
EdgeColoring chain_coloring(std::size_t n);

inline constexpr std::size_t kMaxUniformBits = 12;

// K_{2^d} on d-bit labels; color(u, v) is the index of the most significant
// bit where u and v differ. Every vertex has color degree exactly d.
// Throws SizeGuardViolation for d > kMaxUniformBits.
EdgeColoring uniform_coloring(std::size_t d);

}  // namespace gallai
