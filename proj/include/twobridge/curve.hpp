#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/error.hpp"
#include "twobridge/plat_diagram.hpp"

namespace twobridge {

enum class TileKind { left_cap, plain, crossing, tangency, right_cap };

struct CurveTile {
  TileKind kind;
  std::size_t region = 0;  // word index the column came from; 0 for caps
  int sign = 0;            // sign of the source entry; 0 for caps

  friend bool operator==(const CurveTile&, const CurveTile&) = default;
};

// smoothed: C' (and the pre-reduction hat C'), still carrying double points.
// reduced: double points traded pairwise for self-tangencies.
enum class CurveStage { smoothed, reduced };

struct ImmersedCurve {
  ConwayWord word;
  CurveStage stage;
  std::vector<CurveTile> tiles;
  Int double_points = 0;
  Int tangency_points = 0;
  int removed_outer_circles = 0;

  friend bool operator==(const ImmersedCurve&, const ImmersedCurve&) = default;
};

namespace detail {

struct UnionFind4 {
  std::array<int, 4> parent{0, 1, 2, 3};
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int x, int y) { parent[find(x)] = find(y); }
};

// Groups the four left-to-right strands (named by their left position, 0-based)
// into closed curves using the nested caps on both sides. perm maps a strand's
// left position to its right position.
inline UnionFind4 close_strands(const std::array<int, 4>& perm) {
  UnionFind4 uf;
  std::array<int, 4> strand_at_right{};
  for (int s = 0; s < 4; ++s) strand_at_right[perm[s]] = s;
  for (auto [x, y] : plat_caps) {
    uf.join(x - 1, y - 1);
    uf.join(strand_at_right[x - 1], strand_at_right[y - 1]);
  }
  return uf;
}

} // namespace detail

// Number of closed components of the curve, traced through its tile word. Each
// gap between consecutive tiles carries an upper and a lower strand end; tiles
// join the ends on their two sides. Returns -1 if some end is left open.
inline int closed_components(const ImmersedCurve& curve) {
  const std::size_t gaps = curve.tiles.empty() ? 0 : curve.tiles.size() - 1;
  std::vector<std::size_t> parent(2 * gaps);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<int> degree(2 * gaps, 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](std::size_t x, std::size_t y) {
    ++degree[x];
    ++degree[y];
    parent[find(x)] = find(y);
  };
  auto node = [](std::size_t gap, int strand) { return 2 * gap + static_cast<std::size_t>(strand); };
  for (std::size_t i = 0; i < curve.tiles.size(); ++i) {
    switch (curve.tiles[i].kind) {
      case TileKind::left_cap:
        if (i < gaps) join(node(i, 0), node(i, 1));
        break;
      case TileKind::right_cap:
        if (i > 0) join(node(i - 1, 0), node(i - 1, 1));
        break;
      case TileKind::plain:
      case TileKind::tangency:
        if (i > 0 && i < gaps) {
          join(node(i - 1, 0), node(i, 0));
          join(node(i - 1, 1), node(i, 1));
        }
        break;
      case TileKind::crossing:
        if (i > 0 && i < gaps) {
          join(node(i - 1, 0), node(i, 1));
          join(node(i - 1, 1), node(i, 0));
        }
        break;
    }
  }
  int components = 0;
  for (std::size_t x = 0; x < 2 * gaps; ++x) {
    if (degree[x] != 2) return -1;
    if (find(x) == x) ++components;
  }
  return components;
}

// Horizontal smoothing of every crossing next to the outer region, removal of
// the outermost circle, and forgetting over/under data.
inline ImmersedCurve outer_smooth(const PlatDiagram& d) {
  std::array<int, 4> at{0, 1, 2, 3};  // strand occupying each position
  struct DoublePoint {
    int upper_strand;
    int lower_strand;
  };
  std::vector<DoublePoint> double_points;
  for (const auto& c : d.crossings) {
    if (c.adjacent_outer) continue;  // smoothed: strands keep their positions
    const int u = c.upper - 1;
    double_points.push_back({at[u], at[u + 1]});
    std::swap(at[u], at[u + 1]);
  }
  std::array<int, 4> perm{};
  for (int pos = 0; pos < 4; ++pos) perm[at[pos]] = pos;
  auto uf = detail::close_strands(perm);

  const int outer = uf.find(0);  // position 1 borders the outer region
  for (const auto& dp : double_points) {
    if (uf.find(dp.upper_strand) == outer || uf.find(dp.lower_strand) == outer) {
      throw Error(ErrorCode::smoothing_disconnect,
                  "outermost circle of " + format_conway(d.word) + " is not embedded");
    }
  }
  std::array<bool, 4> is_root{};
  for (int s = 0; s < 4; ++s) is_root[uf.find(s)] = true;
  int remaining = 0;
  for (int s = 0; s < 4; ++s) {
    if (is_root[s] && s != outer) ++remaining;
  }
  if (remaining != 1) {
    throw Error(ErrorCode::smoothing_disconnect,
                "smoothing " + format_conway(d.word) + " left " + std::to_string(remaining) +
                    " curves besides the outermost circle");
  }

  ImmersedCurve curve{d.word, CurveStage::smoothed, {}, 0, 0, 1};
  curve.tiles.reserve(d.crossings.size() + 2);
  curve.tiles.push_back({TileKind::left_cap});
  for (const auto& c : d.crossings) {
    curve.tiles.push_back({c.adjacent_outer ? TileKind::plain : TileKind::crossing, c.region, c.sign});
  }
  curve.tiles.push_back({TileKind::right_cap});
  curve.double_points = static_cast<Int>(double_points.size());
  return curve;
}

// Replaces each adjacent pair of double points in a b-region by one
// self-tangency.
inline ImmersedCurve bigon_reduce(const ImmersedCurve& curve) {
  if (curve.stage != CurveStage::smoothed) {
    throw Error(ErrorCode::variant_mismatch, "curve of " + format_conway(curve.word) + " is already reduced");
  }
  ImmersedCurve out{curve.word, CurveStage::reduced, {}, 0, 0, curve.removed_outer_circles};
  std::size_t i = 0;
  while (i < curve.tiles.size()) {
    const CurveTile& t = curve.tiles[i];
    if (t.kind != TileKind::crossing) {
      out.tiles.push_back(t);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < curve.tiles.size() && curve.tiles[j].kind == TileKind::crossing &&
           curve.tiles[j].region == t.region) {
      ++j;
    }
    const std::size_t run = j - i;
    if (run % 2 != 0) {
      throw Error(ErrorCode::odd_twist, "region " + std::to_string(t.region + 1) + " of " +
                                            format_conway(curve.word) + " has " + std::to_string(run) +
                                            " double points");
    }
    for (std::size_t k = 0; k < run / 2; ++k) {
      out.tiles.push_back({TileKind::tangency, t.region, t.sign});
      ++out.tangency_points;
    }
    i = j;
  }
  return out;
}

} // namespace twobridge
