#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gallai/sequence.hpp"

namespace gallai {

using BigInt = boost::multiprecision::cpp_int;

// Exact verdict on the suffix inequalities
//
//   sum_{i=k}^{n} 2^-(d_i - d_{k-1}) >= 1,   k = 1..n,  d_0 = 0.
//
// Each inequality is scaled by 2^(d_n - d_{k-1}) so that it becomes an
// integer comparison; slacks[k-1] holds
//
//   sum_{i=k}^{n} 2^(d_n - d_i)  -  2^(d_n - d_{k-1})
//
// which has the same sign as (lhs - 1).
struct FeasibilityReport {
  std::size_t n = 0;
  std::vector<BigInt> slacks;
  bool feasible = false;
  // 1-based k of the first negative slack.
  std::optional<std::size_t> first_violation;
};

// A sequence is the sorted color degree sequence of some rainbow-triangle-free
// coloring of K_n iff the report is feasible.
FeasibilityReport check_sequence(const ColorDegreeSequence& seq);

inline bool is_feasible(const ColorDegreeSequence& seq) {
  return check_sequence(seq).feasible;
}

// floor(log2 n): no Gallai coloring of K_n has all color degrees above this.
// Requires n >= 1.
std::size_t min_degree_upper_bound(std::size_t n);

// Every nondecreasing sequence of length n with entries in [1, n-1] (or {0}
// for n = 1), in lexicographic order.
std::vector<ColorDegreeSequence> all_candidate_sequences(std::size_t n);

// The candidates that pass check_sequence().
std::vector<ColorDegreeSequence> feasible_sequences(std::size_t n);

}  // namespace gallai
