#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/cross_section.hpp"
#include "twobridge/curve.hpp"
#include "twobridge/error.hpp"
#include "twobridge/fraction.hpp"
#include "twobridge/plat_diagram.hpp"
#include "twobridge/strips.hpp"

namespace twobridge {

enum class FiberType { ii2, ii3 };

constexpr std::string_view fiber_type_name(FiberType t) noexcept { return t == FiberType::ii2 ? "II2" : "II3"; }

enum class BlockTopology { ball, shell };  // B^3 for caps, S^2 x [0,1] otherwise

struct SingularEvent {
  FiberType kind;
  std::string slice;                  // sphere the singular fiber lies on
  std::array<std::size_t, 2> saddles;  // vertex indices in that slice

  friend bool operator==(const SingularEvent&, const SingularEvent&) = default;
};

using StrandPermutation = std::array<int, 4>;  // perm[l - 1] = exit label of entry label l

inline constexpr StrandPermutation identity_permutation{1, 2, 3, 4};

// Piece Phi_k : N_k -> T_k of the map over one strip.
struct BlockMap {
  StripType strip;
  Int twist = 0;
  std::size_t index = 0;
  BlockTopology topology = BlockTopology::shell;
  std::optional<CrossSection> entry;
  std::optional<CrossSection> exit;
  std::vector<CrossSection> intermediate;
  std::vector<SingularEvent> events;
  StrandPermutation permutation = identity_permutation;
  std::array<int, 2> saddle_permutation{0, 1};

  friend bool operator==(const BlockMap&, const BlockMap&) = default;
};

struct SingularFiberCensus {
  Int ii2 = 0;
  Int ii3 = 0;
  Int definite_components = 0;
  Int indefinite_circles = 0;  // informational; no formula is asserted

  friend bool operator==(const SingularFiberCensus&, const SingularFiberCensus&) = default;
};

struct StrandPoint {
  std::size_t sphere;  // k of F_k
  int label;

  friend bool operator==(const StrandPoint&, const StrandPoint&) = default;
};

// Closed curves of definite fold points, each listed by the points where it
// crosses the spheres F_1..F_n.
struct DefiniteFoldTrace {
  std::vector<std::vector<StrandPoint>> curves;

  friend bool operator==(const DefiniteFoldTrace&, const DefiniteFoldTrace&) = default;
};

struct StableMapModel {
  Variant variant;
  ConwayWord word;
  SchubertFraction fraction;
  StripDecomposition decomposition;
  std::vector<BlockMap> blocks;  // N_0 .. N_n
  SingularFiberCensus census;
  DefiniteFoldTrace trace;

  friend bool operator==(const StableMapModel&, const StableMapModel&) = default;
};

inline std::string sphere_name(std::size_t k) { return "F_" + std::to_string(k); }
inline std::string first_intermediate_name(std::size_t k) { return "F'_" + std::to_string(k); }
inline std::string second_intermediate_name(std::size_t k) { return "F''_" + std::to_string(k); }

namespace detail {

// Link point label at each position of D' (top to bottom).
inline constexpr std::array<int, 4> label_at_position{2, 4, 3, 1};

inline StrandPermutation swap_at_positions(int upper_position, Int times) {
  StrandPermutation perm = identity_permutation;
  if (times % 2 != 0) {
    const int x = label_at_position[upper_position - 1];
    const int y = label_at_position[upper_position];
    perm[x - 1] = y;
    perm[y - 1] = x;
  }
  return perm;
}

inline Int abs_value(Int x) { return x < 0 ? -x : x; }

} // namespace detail

inline BlockMap build_block(const Strip& strip, Variant variant, std::size_t index) {
  auto invalid = [&](const std::string& why) {
    throw Error(ErrorCode::invalid_strip_variant, std::string(strip_type_name(strip.type)) + " strip with twist " +
                                                      std::to_string(strip.twist) + " in " +
                                                      std::string(variant_name(variant)) + ": " + why);
  };
  BlockMap block;
  block.strip = strip.type;
  block.twist = strip.twist;
  block.index = index;
  switch (strip.type) {
    case StripType::type1:
      if (strip.twist != 0) invalid("caps carry no crossings");
      block.topology = BlockTopology::ball;
      block.exit = standard_cross_section(sphere_name(index + 1));
      return block;
    case StripType::type4:
      if (strip.twist != 0) invalid("caps carry no crossings");
      block.topology = BlockTopology::ball;
      block.entry = standard_cross_section(sphere_name(index));
      return block;
    case StripType::type3:
      if (strip.twist < -1 || strip.twist > 1) invalid("at most one crossing per Type 3 strip");
      block.permutation = detail::swap_at_positions(horizontal_upper_position, strip.twist);
      break;
    case StripType::type2: {
      if (strip.twist == 0) invalid("empty twist region");
      if (variant == Variant::f3 && detail::abs_value(strip.twist) != 2) invalid("one self-tangency per strip");
      block.permutation = detail::swap_at_positions(vertical_upper_position, strip.twist);
      if (variant == Variant::f2) block.saddle_permutation = strip.twist % 2 == 0 ? std::array{0, 1} : std::array{1, 0};
      block.intermediate = {standard_cross_section(first_intermediate_name(index)),
                            standard_cross_section(second_intermediate_name(index + 1))};
      const std::array<std::size_t, 2> saddles{standard_vertex::saddle_low, standard_vertex::saddle_high};
      if (variant == Variant::f2) {
        block.events = {{FiberType::ii2, first_intermediate_name(index), saddles},
                        {FiberType::ii2, second_intermediate_name(index + 1), saddles}};
      } else {
        block.events = {{FiberType::ii3, second_intermediate_name(index + 1), saddles}};
      }
      break;
    }
  }
  block.topology = BlockTopology::shell;
  block.entry = standard_cross_section(sphere_name(index));
  block.exit = standard_cross_section(sphere_name(index + 1));
  // A strand keeps its fold direction through a block: a minimum cannot come
  // out as a maximum.
  for (int l = 1; l <= 4; ++l) {
    if (kind_of_label(*block.entry, l) != kind_of_label(*block.exit, block.permutation[l - 1])) {
      invalid("strand permutation exchanges a minimum with a maximum");
    }
  }
  return block;
}

inline std::vector<const CrossSection*> slices_of(const BlockMap& block) {
  std::vector<const CrossSection*> out;
  if (block.entry) out.push_back(&*block.entry);
  for (const auto& cs : block.intermediate) out.push_back(&cs);
  if (block.exit) out.push_back(&*block.exit);
  return out;
}

namespace detail {

inline std::size_t sphere_count(const std::vector<BlockMap>& blocks) {
  return blocks.size() < 2 ? 0 : blocks.size() - 1;
}

// Cycles of the strand graph on the points (k, label), k = 1..n: blocks N_1..
// N_{n-1} move labels by their permutations, the caps N_0 and N_n pair the
// cherries {1,2} and {3,4}.
inline DefiniteFoldTrace trace_strands(const std::vector<BlockMap>& blocks) {
  const std::size_t n = sphere_count(blocks);
  DefiniteFoldTrace trace;
  if (n == 0) return trace;
  auto id = [](std::size_t k, int label) { return 4 * (k - 1) + static_cast<std::size_t>(label - 1); };
  std::vector<std::array<std::size_t, 2>> nbr(4 * n);
  std::vector<int> deg(4 * n, 0);
  auto link = [&](std::size_t x, std::size_t y) {
    nbr[x][deg[x]++] = y;
    nbr[y][deg[y]++] = x;
  };
  for (int l : {1, 3}) {
    link(id(1, l), id(1, l + 1));
    link(id(n, l), id(n, l + 1));
  }
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    for (int l = 1; l <= 4; ++l) link(id(k, l), id(k + 1, blocks[k].permutation[l - 1]));
  }
  std::vector<bool> seen(4 * n, false);
  for (std::size_t s = 0; s < 4 * n; ++s) {
    if (seen[s]) continue;
    std::vector<StrandPoint> curve;
    std::size_t prev = SIZE_MAX, cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      curve.push_back({cur / 4 + 1, static_cast<int>(cur % 4) + 1});
      std::size_t next = nbr[cur][0] != prev ? nbr[cur][0] : nbr[cur][1];
      // A cap pairing and a block edge can join the same two points when n = 1.
      if (nbr[cur][0] == nbr[cur][1]) next = nbr[cur][0];
      prev = cur;
      cur = next;
    }
    trace.curves.push_back(std::move(curve));
  }
  return trace;
}

inline Int trace_indefinite_circles(const std::vector<BlockMap>& blocks) {
  const std::size_t n = sphere_count(blocks);
  if (n == 0) return 0;
  std::vector<std::size_t> parent(2 * n);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
  join(0, 1);
  join(2 * (n - 1), 2 * (n - 1) + 1);
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    for (int s = 0; s < 2; ++s) join(2 * (k - 1) + s, 2 * k + blocks[k].saddle_permutation[s]);
  }
  Int circles = 0;
  for (std::size_t x = 0; x < parent.size(); ++x) {
    if (find(x) == x) ++circles;
  }
  return circles;
}

} // namespace detail

// Recounts everything from the block event logs and the strand graph.
inline SingularFiberCensus fiber_census(const StableMapModel& model) {
  SingularFiberCensus c;
  for (const auto& block : model.blocks) {
    for (const auto& e : block.events) (e.kind == FiberType::ii2 ? c.ii2 : c.ii3) += 1;
  }
  c.definite_components = static_cast<Int>(detail::trace_strands(model.blocks).curves.size());
  c.indefinite_circles = detail::trace_indefinite_circles(model.blocks);
  return c;
}

inline DefiniteFoldTrace trace_definite_folds(const StableMapModel& model) {
  DefiniteFoldTrace trace = detail::trace_strands(model.blocks);
  const int expected = component_count(model.fraction);
  if (static_cast<int>(trace.curves.size()) != expected) {
    throw Error(ErrorCode::trace_mismatch, "definite folds of the " + std::string(variant_name(model.variant)) +
                                               " model of " + format_conway(model.word) + " form " +
                                               std::to_string(trace.curves.size()) + " curves, the link has " +
                                               std::to_string(expected) + " components");
  }
  return trace;
}

inline SingularFiberCensus expected_census(const ConwayWord& word, Variant variant) {
  SingularFiberCensus c;
  if (variant == Variant::f2) {
    c.ii2 = 2 * static_cast<Int>(word.m());
  } else {
    c.ii3 = word.sum_abs_b() / 2;
  }
  return c;
}

// Structural checks shared by assembly and import: every slice is a Morse
// tree on a sphere, consecutive blocks glue exactly, and the census matches
// the variant's count.
inline void validate_model(const StableMapModel& model) {
  auto violation = [&](const std::string& why) {
    throw Error(ErrorCode::invariant_violation, std::string(variant_name(model.variant)) + " model of " +
                                                    format_conway(model.word) + ": " + why);
  };
  const auto& blocks = model.blocks;
  if (blocks.size() < 2) violation("needs at least the two cap blocks");
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& b = blocks[k];
    const bool cap = k == 0 || k + 1 == blocks.size();
    const int boundaries = (b.entry ? 1 : 0) + (b.exit ? 1 : 0);
    if (cap != (b.topology == BlockTopology::ball) || boundaries != (cap ? 1 : 2)) {
      violation("block " + std::to_string(k) + " has the wrong boundary");
    }
    for (const CrossSection* cs : slices_of(b)) {
      if (!is_tree(*cs) || euler_characteristic(*cs) != 2 || !is_morse_consistent(*cs)) {
        violation("slice " + cs->sphere + " is not a Morse tree on a sphere");
      }
    }
    const std::size_t expected_events =
        b.strip == StripType::type2 ? (model.variant == Variant::f2 ? 2 : 1) : 0;
    if (b.events.size() != expected_events) violation("block " + std::to_string(k) + " has a wrong event log");
    for (const auto& e : b.events) {
      bool found = false;
      for (const CrossSection* cs : slices_of(b)) found = found || cs->sphere == e.slice;
      if (!found) violation("event on unknown slice " + e.slice);
    }
    if (k + 1 < blocks.size()) {
      const auto& next = blocks[k + 1];
      if (!b.exit || !next.entry || b.exit->sphere != next.entry->sphere || !b.exit->same_function(*next.entry)) {
        violation("blocks " + std::to_string(k) + " and " + std::to_string(k + 1) + " do not glue");
      }
    }
  }
  const SingularFiberCensus recount = fiber_census(model);
  if (recount != model.census) violation("stored census differs from the recount");
  const SingularFiberCensus expected = expected_census(model.word, model.variant);
  if (recount.ii2 != expected.ii2 || recount.ii3 != expected.ii3) {
    violation("census (" + std::to_string(recount.ii2) + "," + std::to_string(recount.ii3) + ") differs from (" +
              std::to_string(expected.ii2) + "," + std::to_string(expected.ii3) + ")");
  }
}

inline StableMapModel assemble_from_decomposition(const ConwayWord& word, StripDecomposition decomposition) {
  if (!all_b_even(word)) {
    throw Error(ErrorCode::even_b_required, format_conway(word) + " has an odd b_i");
  }
  decomposition.strips = assign_regions(word, decomposition.variant, std::move(decomposition.strips));
  decomposition.report = report_for(word, decomposition.variant, decomposition.strips);
  StableMapModel model{decomposition.variant, word, fraction_of(word), std::move(decomposition), {}, {}, {}};
  const auto& strips = model.decomposition.strips;
  model.blocks.reserve(strips.size());
  for (std::size_t k = 0; k < strips.size(); ++k) {
    model.blocks.push_back(build_block(strips[k], model.variant, k));
  }
  model.census = fiber_census(model);
  validate_model(model);
  model.trace = trace_definite_folds(model);
  return model;
}

inline StableMapModel assemble_stable_map(const ConwayWord& word, Variant variant, Granularity granularity = {}) {
  if (!all_b_even(word)) {
    throw Error(ErrorCode::even_b_required, format_conway(word) + " has an odd b_i");
  }
  ImmersedCurve curve = outer_smooth(build_plat_diagram(word));
  if (variant == Variant::f3) curve = bigon_reduce(curve);
  return assemble_from_decomposition(word, strip_decompose(curve, variant, granularity));
}

} // namespace twobridge
