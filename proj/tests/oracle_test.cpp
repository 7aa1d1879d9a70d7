#include <doctest.h>

#include <algorithm>

#include "gallai/constructor.hpp"
#include "gallai/oracle.hpp"
#include "support/oracles.hpp"

using namespace gallai;

namespace {

ColorDegreeSequence seq(std::vector<std::size_t> v) {
  return ColorDegreeSequence(std::move(v));
}

}  // namespace

TEST_CASE("enumeration counts") {
  // n <= 3 by hand; n = 4, 5 from an unpruned Python enumeration of all set
  // partitions of the pairs.
  const std::vector<std::size_t> expected = {1, 1, 4, 47, 1127};
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(enumerate_gallai(n).size() == expected[n - 1]);
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_gallai(0), SizeGuardViolation);
  CHECK_THROWS_AS(enumerate_gallai(7), SizeGuardViolation);
}

TEST_CASE("enumerated colorings are distinct, normalized and Gallai") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto all = enumerate_gallai(n);
    for (const auto& c : all) {
      CHECK(!testing::brute_has_rainbow(c));
      CHECK(normalize_colors(c) == c);
      CHECK(distinct_color_count(c) <= std::max<std::size_t>(n, 2) - 1);
    }
    const auto key = [](const EdgeColoring& c) {
      return std::vector<Color>(c.pair_colors().begin(), c.pair_colors().end());
    };
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [&](const auto& a, const auto& b) { return key(a) < key(b); }));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("realizable sequences") {
  CHECK(realizable_sequences(2) == std::set<ColorDegreeSequence>{seq({1, 1})});
  CHECK(realizable_sequences(3) ==
        std::set<ColorDegreeSequence>{seq({1, 1, 1}), seq({1, 2, 2})});
  const auto four = realizable_sequences(4);
  CHECK(four.count(seq({1, 2, 3, 3})) == 1);
  CHECK(four.count(seq({2, 2, 2, 2})) == 1);
  CHECK(four.count(seq({1, 1, 3, 3})) == 0);
  CHECK(four.size() == 5);
}

TEST_CASE("crosscheck small n") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = crosscheck(n);
    CHECK(r.equal());
    CHECK(r.realizable == r.feasible);
  }
  CHECK(crosscheck(3).feasible.size() == 2);
}

TEST_CASE("brute-force Gallai partition examples") {
  const auto mono = brute_force_gallai_partition(EdgeColoring(3, 0));
  CHECK(mono.parts == std::vector<std::vector<Vertex>>{{0, 1}, {2}});
  CHECK(mono.cross_colors == std::set<Color>{0});

  const auto k3 =
      brute_force_gallai_partition(EdgeColoring(3, std::vector<Color>{0, 0, 1}));
  CHECK(k3.parts == std::vector<std::vector<Vertex>>{{0}, {1, 2}});
  CHECK(k3.cross_colors == std::set<Color>{0});

  const auto u2 = brute_force_gallai_partition(uniform_coloring(2));
  CHECK(u2.parts == std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}});
  CHECK(u2.cross_colors.size() == 1);
  CHECK(u2.part_pair_color.at({0, 1}) == 1);
}

TEST_CASE("brute-force Gallai partition errors") {
  CHECK_THROWS_AS(brute_force_gallai_partition(EdgeColoring(1)),
                  SizeGuardViolation);
  CHECK_THROWS_AS(brute_force_gallai_partition(EdgeColoring(11, 0)),
                  SizeGuardViolation);
  CHECK_THROWS_AS(
      brute_force_gallai_partition(EdgeColoring(3, std::vector<Color>{0, 1, 2})),
      NotGallai);
}

TEST_CASE("partitions found at the top of the size guard") {
  const auto r = brute_force_gallai_partition(chain_coloring(10));
  CHECK(r.parts.size() >= 2);
  CHECK(r.cross_colors.size() <= 2);
  const auto realized = brute_force_gallai_partition(
      realize(ColorDegreeSequence({2, 2, 3, 3, 3, 3, 3, 3, 3, 3})));
  CHECK(realized.cross_colors.size() <= 2);
}
