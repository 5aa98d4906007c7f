#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "twobridge/conway.hpp"

namespace twobridge {

// The modified diagram D' drawn as four horizontal strands (positions 1..4 from
// top to bottom) closed by nested caps (1,4) and (2,3) on both sides.
// Horizontal twists a_i sit between positions 3 and 4, next to the outer
// region; vertical twists b_j sit between positions 2 and 3.
inline constexpr int plat_strands = 4;
inline constexpr std::array<std::pair<int, int>, 2> plat_caps{{{1, 4}, {2, 3}}};
inline constexpr int horizontal_upper_position = 3;
inline constexpr int vertical_upper_position = 2;

enum class TwistKind { horizontal, vertical };

struct PlatCrossing {
  std::size_t region;  // 0-based index into the Conway word
  TwistKind kind;
  int upper;           // the crossing swaps positions upper and upper + 1
  int sign;            // sign of the word entry
  // +1 when the strand running from the upper-left to the lower-right is the
  // over strand. Horizontal crossings take the sign of a_i, vertical crossings
  // the opposite sign of b_j, so all-positive words are alternating.
  int braid_sign;
  bool adjacent_outer;

  friend bool operator==(const PlatCrossing&, const PlatCrossing&) = default;
};

struct RegionBounds {
  std::size_t columns;
  int rows;

  friend bool operator==(const RegionBounds&, const RegionBounds&) = default;
};

struct PlatDiagram {
  ConwayWord word;
  std::vector<PlatCrossing> crossings;  // left to right
  RegionBounds bounds;

  friend bool operator==(const PlatDiagram&, const PlatDiagram&) = default;
};

inline PlatDiagram build_plat_diagram(const ConwayWord& word) {
  std::vector<PlatCrossing> crossings;
  crossings.reserve(static_cast<std::size_t>(word.sum_abs()));
  for (std::size_t r = 0; r < word.size(); ++r) {
    const Int e = word.entries()[r];
    const int sign = e > 0 ? 1 : -1;
    const bool vertical = ConwayWord::is_b_position(r);
    PlatCrossing c{r,
                   vertical ? TwistKind::vertical : TwistKind::horizontal,
                   vertical ? vertical_upper_position : horizontal_upper_position,
                   sign,
                   vertical ? -sign : sign,
                   !vertical};
    for (Int k = 0; k < (e > 0 ? e : -e); ++k) crossings.push_back(c);
  }
  RegionBounds bounds{crossings.size() + 2, plat_strands + 1};
  return PlatDiagram{word, std::move(crossings), bounds};
}

// Position permutation of a run of crossings: perm[i] is where the strand that
// enters at position i + 1 leaves (1-based values).
inline std::array<int, 4> position_permutation(std::span<const PlatCrossing> crossings) {
  std::array<int, 4> at{1, 2, 3, 4};  // at[pos-1] = strand currently there
  for (const auto& c : crossings) std::swap(at[c.upper - 1], at[c.upper]);
  std::array<int, 4> perm{};
  for (int pos = 1; pos <= 4; ++pos) perm[at[pos - 1] - 1] = pos;
  return perm;
}

// Counts link components by following strands through the crossings and the
// caps on both sides.
inline int trace_plat_components(const PlatDiagram& d) {
  const auto perm = position_permutation(d.crossings);
  std::array<int, 4> inverse{};
  for (int i = 0; i < 4; ++i) inverse[perm[i] - 1] = i + 1;
  auto cap_partner = [](int pos) {
    for (auto [x, y] : plat_caps) {
      if (pos == x) return y;
      if (pos == y) return x;
    }
    return 0;
  };
  // Each left-side position is visited once per component traversal; a strand
  // leaving position s on the left returns to the left at
  // inverse(cap(perm(s))), and the left cap then moves it on.
  std::array<bool, 4> seen{};
  int components = 0;
  for (int start = 1; start <= 4; ++start) {
    if (seen[start - 1]) continue;
    ++components;
    int pos = start;
    while (!seen[pos - 1]) {
      seen[pos - 1] = true;
      int back = inverse[cap_partner(perm[pos - 1]) - 1];
      seen[back - 1] = true;
      pos = cap_partner(back);
    }
  }
  return components;
}

struct CrossingCensus {
  Int total;
  std::vector<Int> per_region;
  Int sum_abs_a;
  Int sum_abs_b;
  std::optional<Int> bigon_pairs;  // present when every b_j is even
};

inline CrossingCensus crossing_census(const PlatDiagram& d) {
  CrossingCensus census{static_cast<Int>(d.crossings.size()),
                        std::vector<Int>(d.word.size(), 0), 0, 0, std::nullopt};
  for (const auto& c : d.crossings) {
    ++census.per_region[c.region];
    (c.kind == TwistKind::horizontal ? census.sum_abs_a : census.sum_abs_b) += 1;
  }
  if (all_b_even(d.word)) census.bigon_pairs = census.sum_abs_b / 2;
  return census;
}

} // namespace twobridge
