#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gallai {

// Sorted color degree sequence d_1 <= ... <= d_n of a would-be coloring of
// K_n. The sentinel d_0 = 0 is implicit.
//
// Construction validates shape only: nonempty, nondecreasing, and every entry
// in [1, n-1] (or the single entry 0 when n = 1). Whether the sequence is
// realizable is answered by check_sequence().
class ColorDegreeSequence {
 public:
  // Throws MalformedSequence.
  explicit ColorDegreeSequence(std::vector<std::size_t> values);

  // Sorts first, then validates. Use for degree lists read off a coloring.
  static ColorDegreeSequence from_unsorted(std::vector<std::size_t> values);

  // Parses comma-separated nonnegative integers, e.g. "1,2,2". Surrounding
  // whitespace around entries is ignored. Throws MalformedSequence.
  static ColorDegreeSequence parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  std::size_t operator[](std::size_t i) const { return values_[i]; }
  std::size_t front() const { return values_.front(); }
  std::size_t back() const { return values_.back(); }
  std::span<const std::size_t> values() const { return values_; }

  // Number of trailing entries equal to back().
  std::size_t top_multiplicity() const;

  std::string to_string() const;

  friend auto operator<=>(const ColorDegreeSequence&,
                          const ColorDegreeSequence&) = default;
  friend bool operator==(const ColorDegreeSequence&,
                         const ColorDegreeSequence&) = default;

 private:
  std::vector<std::size_t> values_;
};

}  // namespace gallai
