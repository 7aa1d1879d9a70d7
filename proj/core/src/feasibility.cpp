#include "gallai/feasibility.hpp"

#include <bit>

#include "gallai/error.hpp"

namespace gallai {

FeasibilityReport check_sequence(const ColorDegreeSequence& seq) {
  const std::size_t n = seq.size();
  const std::size_t top = seq.back();

  FeasibilityReport report;
  report.n = n;
  report.slacks.resize(n);

  // suffix = sum_{i=k}^{n} 2^(top - d_i), built from k = n downward.
  BigInt suffix = 0;
  for (std::size_t k = n; k >= 1; --k) {
    suffix += BigInt(1) << (top - seq[k - 1]);
    const std::size_t prev = k >= 2 ? seq[k - 2] : 0;
    report.slacks[k - 1] = suffix - (BigInt(1) << (top - prev));
  }

  for (std::size_t k = 1; k <= n; ++k) {
    if (report.slacks[k - 1] < 0) {
      report.first_violation = k;
      break;
    }
  }
  report.feasible = !report.first_violation.has_value();
  return report;
}

std::size_t min_degree_upper_bound(std::size_t n) {
  if (n == 0) throw InvalidArgument("n must be positive");
  return static_cast<std::size_t>(std::bit_width(n)) - 1;
}

std::vector<ColorDegreeSequence> all_candidate_sequences(std::size_t n) {
  if (n == 0) throw InvalidArgument("n must be positive");
  std::vector<ColorDegreeSequence> out;
  if (n == 1) {
    out.emplace_back(std::vector<std::size_t>{0});
    return out;
  }
  // Odometer over nondecreasing vectors in [1, n-1].
  std::vector<std::size_t> values(n, 1);
  while (true) {
    out.emplace_back(values);
    std::size_t pos = n;
    while (pos > 0 && values[pos - 1] == n - 1) --pos;
    if (pos == 0) break;
    const std::size_t bumped = values[pos - 1] + 1;
    for (std::size_t i = pos - 1; i < n; ++i) values[i] = bumped;
  }
  return out;
}

std::vector<ColorDegreeSequence> feasible_sequences(std::size_t n) {
  std::vector<ColorDegreeSequence> out;
  for (auto& seq : all_candidate_sequences(n)) {
    if (is_feasible(seq)) out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace gallai
