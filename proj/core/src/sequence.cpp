#include "gallai/sequence.hpp"

#include <algorithm>
#include <charconv>

#include "gallai/error.hpp"

namespace gallai {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ColorDegreeSequence::ColorDegreeSequence(std::vector<std::size_t> values)
    : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n == 0) throw MalformedSequence("degree sequence is empty");
  if (!std::is_sorted(values_.begin(), values_.end())) {
    throw MalformedSequence("degree sequence is not nondecreasing: " +
                            to_string());
  }
  if (n == 1) {
    if (values_[0] != 0) {
      throw MalformedSequence("the only degree sequence for n = 1 is 0");
    }
    return;
  }
  if (values_.front() == 0) {
    throw MalformedSequence("degree 0 is impossible for n >= 2: " +
                            to_string());
  }
  if (values_.back() > n - 1) {
    throw MalformedSequence("degree " + std::to_string(values_.back()) +
                            " exceeds n - 1 = " + std::to_string(n - 1));
  }
}

ColorDegreeSequence ColorDegreeSequence::from_unsorted(
    std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  return ColorDegreeSequence(std::move(values));
}

ColorDegreeSequence ColorDegreeSequence::parse(std::string_view text) {
  std::vector<std::size_t> values;
  text = trim(text);
  if (text.empty()) throw MalformedSequence("degree sequence is empty");
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    if (token.empty()) throw MalformedSequence("empty entry in sequence");
    if (token.front() == '-') {
      throw MalformedSequence("negative degree: " + std::string(token));
    }
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw MalformedSequence("degree out of range: " + std::string(token));
    }
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw MalformedSequence("not a nonnegative integer: " +
                              std::string(token));
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ColorDegreeSequence(std::move(values));
}

std::size_t ColorDegreeSequence::top_multiplicity() const {
  const auto first_top =
      std::lower_bound(values_.begin(), values_.end(), values_.back());
  return static_cast<std::size_t>(values_.end() - first_top);
}

std::string ColorDegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

}  // namespace gallai
