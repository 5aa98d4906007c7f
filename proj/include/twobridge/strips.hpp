#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/curve.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

enum class Variant { f2, f3 };

constexpr std::string_view variant_name(Variant v) noexcept { return v == Variant::f2 ? "f2" : "f3"; }

enum class StripType { type1, type2, type3, type4 };

constexpr std::string_view strip_type_name(StripType t) noexcept {
  switch (t) {
    case StripType::type1: return "type1";
    case StripType::type2: return "type2";
    case StripType::type3: return "type3";
    case StripType::type4: return "type4";
  }
  return "";
}

// One rectangular region T_k of E. twist is the signed number of crossings of
// D' the strip carries: b_j for an f2 Type 2 strip, +-2 for an f3 Type 2
// strip (one self-tangency), +-1 or 0 for a Type 3 strip, 0 for the caps.
struct Strip {
  StripType type;
  Int twist = 0;
  std::size_t region = 0;

  friend bool operator==(const Strip&, const Strip&) = default;
};

// How finely the horizontal twist regions are sliced. Fiber counts do not
// depend on it.
struct Granularity {
  int strips_per_crossing = 1;
  int extra_strips_per_region = 0;

  friend bool operator==(const Granularity&, const Granularity&) = default;
};

struct StripReport {
  std::size_t type2_count = 0;
  std::size_t expected_type2 = 0;
  std::size_t type3_count = 0;
  bool valid = false;

  friend bool operator==(const StripReport&, const StripReport&) = default;
};

struct StripDecomposition {
  Variant variant;
  std::vector<Strip> strips;  // T_0 .. T_n
  Granularity granularity;
  StripReport report;

  // number of separating segments gamma_1 .. gamma_n
  std::size_t separators() const noexcept { return strips.empty() ? 0 : strips.size() - 1; }

  friend bool operator==(const StripDecomposition&, const StripDecomposition&) = default;
};

inline std::size_t expected_type2_count(const ConwayWord& word, Variant variant) {
  return variant == Variant::f2 ? word.m() : static_cast<std::size_t>(word.sum_abs_b() / 2);
}

// Checks that a strip word is a decomposition of the given Conway word for the
// variant and fills in region indices. Type 3 runs carry the a-regions in
// order, Type 2 runs the b-regions.
inline std::vector<Strip> assign_regions(const ConwayWord& word, Variant variant, std::vector<Strip> strips) {
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::invariant_violation,
                "strip word for " + format_conway(word) + " (" + std::string(variant_name(variant)) + "): " + why);
  };
  if (strips.size() < 2 || strips.front().type != StripType::type1 || strips.back().type != StripType::type4) {
    fail("must start with Type 1 and end with Type 4");
  }
  if (strips.front().twist != 0 || strips.back().twist != 0) fail("cap strips carry no twist");
  std::size_t region = 0;
  std::size_t i = 1;
  const std::size_t end = strips.size() - 1;
  while (i < end) {
    if (region >= word.size()) fail("more twist regions than the word has");
    const bool vertical = ConwayWord::is_b_position(region);
    const StripType want = vertical ? StripType::type2 : StripType::type3;
    Int sum = 0;
    std::size_t count = 0;
    while (i < end && strips[i].type == want) {
      const Int t = strips[i].twist;
      if (!vertical && (t < -1 || t > 1)) fail("a Type 3 strip carries more than one crossing");
      if (vertical && variant == Variant::f3 && t != 2 && t != -2) fail("an f3 Type 2 strip must hold one tangency");
      if (vertical && t == 0) fail("empty Type 2 strip");
      strips[i].region = region;
      sum += t;
      ++count;
      ++i;
    }
    if (count == 0) fail("region " + std::to_string(region + 1) + " has no strips");
    if (vertical && variant == Variant::f2 && count != 1) fail("an f2 b-region must be a single Type 2 strip");
    if (sum != word.entries()[region]) {
      fail("region " + std::to_string(region + 1) + " carries " + std::to_string(sum) + " crossings, expected " +
           std::to_string(word.entries()[region]));
    }
    if (i < end && (strips[i].type == StripType::type1 || strips[i].type == StripType::type4)) {
      fail("cap strip in the interior");
    }
    ++region;
  }
  if (region != word.size()) fail("fewer twist regions than the word has");
  return strips;
}

inline StripReport report_for(const ConwayWord& word, Variant variant, const std::vector<Strip>& strips) {
  StripReport r;
  for (const auto& s : strips) {
    if (s.type == StripType::type2) ++r.type2_count;
    if (s.type == StripType::type3) ++r.type3_count;
  }
  r.expected_type2 = expected_type2_count(word, variant);
  r.valid = !strips.empty() && strips.front().type == StripType::type1 &&
            strips.back().type == StripType::type4 && r.type2_count == r.expected_type2;
  return r;
}

inline StripDecomposition strip_decompose(const ImmersedCurve& curve, Variant variant, Granularity granularity = {}) {
  const CurveStage wanted = variant == Variant::f2 ? CurveStage::smoothed : CurveStage::reduced;
  if (curve.stage != wanted) {
    throw Error(ErrorCode::variant_mismatch,
                std::string(variant_name(variant)) + " slicing needs a " +
                    (wanted == CurveStage::smoothed ? "smoothed" : "bigon-reduced") + " curve");
  }
  if (granularity.strips_per_crossing < 1 || granularity.extra_strips_per_region < 0) {
    throw Error(ErrorCode::invariant_violation, "granularity needs >= 1 strip per crossing");
  }
  auto unsliceable = [&](std::size_t at, const char* what) {
    throw Error(ErrorCode::unsliceable_shape,
                "tile " + std::to_string(at) + " of the curve of " + format_conway(curve.word) + ": " + what);
  };
  const auto& tiles = curve.tiles;
  if (tiles.size() < 2 || tiles.front().kind != TileKind::left_cap || tiles.back().kind != TileKind::right_cap) {
    unsliceable(0, "curve is not closed off by caps");
  }
  std::vector<Strip> strips;
  strips.push_back({StripType::type1, 0, 0});
  std::size_t i = 1;
  while (i + 1 < tiles.size()) {
    const CurveTile& t = tiles[i];
    switch (t.kind) {
      case TileKind::left_cap:
      case TileKind::right_cap:
        unsliceable(i, "cap inside the curve");
        break;
      case TileKind::plain: {
        const std::size_t region = t.region;
        while (i + 1 < tiles.size() && tiles[i].kind == TileKind::plain && tiles[i].region == region) {
          strips.push_back({StripType::type3, tiles[i].sign, region});
          for (int k = 1; k < granularity.strips_per_crossing; ++k) strips.push_back({StripType::type3, 0, region});
          ++i;
        }
        for (int k = 0; k < granularity.extra_strips_per_region; ++k) strips.push_back({StripType::type3, 0, region});
        break;
      }
      case TileKind::crossing: {
        if (variant == Variant::f3) unsliceable(i, "double point in an f3 slicing");
        const std::size_t region = t.region;
        Int twist = 0;
        while (i + 1 < tiles.size() && tiles[i].kind == TileKind::crossing && tiles[i].region == region) {
          twist += tiles[i].sign;
          ++i;
        }
        strips.push_back({StripType::type2, twist, region});
        break;
      }
      case TileKind::tangency:
        if (variant == Variant::f2) unsliceable(i, "self-tangency in an f2 slicing");
        strips.push_back({StripType::type2, 2 * static_cast<Int>(t.sign), t.region});
        ++i;
        break;
    }
  }
  strips.push_back({StripType::type4, 0, 0});

  StripDecomposition out{variant, std::move(strips), granularity, {}};
  out.report = report_for(curve.word, variant, out.strips);
  if (!out.report.valid) unsliceable(0, "strip word fails the Type 2 count");
  return out;
}

} // namespace twobridge
