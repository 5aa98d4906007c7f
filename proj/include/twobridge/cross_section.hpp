#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace twobridge {

enum class CriticalKind { minimum, maximum, saddle };

struct ReebVertex {
  CriticalKind kind;
  int label;  // 1..4 for the link points, 0 for saddles
  int level;  // position of the critical value in the total order

  friend bool operator==(const ReebVertex&, const ReebVertex&) = default;
};

// Reeb graph of the Morse function psi_k on the sphere F_k. The four extrema
// are the points where the link meets F_k; the trivalent vertices are the
// saddles, i.e. the indefinite fold points on F_k.
struct CrossSection {
  std::string sphere;  // F_k, F'_k, F''_{k+1}, ...
  std::vector<ReebVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Same Morse function up to the sphere's name: labels, tree shape, order.
  bool same_function(const CrossSection& other) const {
    return vertices == other.vertices && edges == other.edges;
  }

  friend bool operator==(const CrossSection&, const CrossSection&) = default;
};

// Vertex indices in the standard cross section.
namespace standard_vertex {
inline constexpr std::size_t leaf1 = 0, leaf3 = 1, saddle_low = 2, saddle_high = 3, leaf2 = 4, leaf4 = 5;
}

// Link points 1 and 3 are minima, 2 and 4 maxima. Leaves 1, 2 hang off the
// lower saddle and 3, 4 off the upper one, so each cap block joins the
// cherries {1,2} and {3,4}.
//
//   1(min) < 3(min) < s_low < s_high < 2(max) < 4(max)
inline CrossSection standard_cross_section(std::string sphere = "F_k") {
  using namespace standard_vertex;
  CrossSection cs;
  cs.sphere = std::move(sphere);
  cs.vertices = {
      {CriticalKind::minimum, 1, 0}, {CriticalKind::minimum, 3, 1}, {CriticalKind::saddle, 0, 2},
      {CriticalKind::saddle, 0, 3},  {CriticalKind::maximum, 2, 4}, {CriticalKind::maximum, 4, 5},
  };
  cs.edges = {{leaf1, saddle_low}, {leaf2, saddle_low}, {saddle_low, saddle_high},
              {leaf3, saddle_high}, {leaf4, saddle_high}};
  return cs;
}

inline std::vector<std::vector<std::size_t>> adjacency(const CrossSection& cs) {
  std::vector<std::vector<std::size_t>> adj(cs.vertices.size());
  for (auto [u, v] : cs.edges) {
    adj.at(u).push_back(v);
    adj.at(v).push_back(u);
  }
  return adj;
}

inline bool is_tree(const CrossSection& cs) {
  const std::size_t n = cs.vertices.size();
  if (n == 0 || cs.edges.size() + 1 != n) return false;
  const auto adj = adjacency(cs);
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (v == parent[u]) continue;
      if (seen[v]) return false;
      seen[v] = true;
      parent[v] = u;
      ++reached;
      stack.push_back(v);
    }
  }
  return reached == n;
}

inline int leaf_count(const CrossSection& cs) {
  const auto adj = adjacency(cs);
  return static_cast<int>(std::count_if(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 1; }));
}

inline int trivalent_count(const CrossSection& cs) {
  const auto adj = adjacency(cs);
  return static_cast<int>(std::count_if(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 3; }));
}

// #leaves - #trivalent vertices; 2 for any Morse function on a sphere with
// only index-0/2 extrema at the leaves.
inline int euler_characteristic(const CrossSection& cs) { return leaf_count(cs) - trivalent_count(cs); }

// Levels strictly ordered; extrema are leaves whose neighbour lies above
// (minimum) or below (maximum); every saddle has two neighbours on one side
// and one on the other.
inline bool is_morse_consistent(const CrossSection& cs) {
  const auto adj = adjacency(cs);
  std::vector<int> levels;
  for (const auto& v : cs.vertices) levels.push_back(v.level);
  std::sort(levels.begin(), levels.end());
  if (std::adjacent_find(levels.begin(), levels.end()) != levels.end()) return false;
  for (std::size_t i = 0; i < cs.vertices.size(); ++i) {
    const auto& v = cs.vertices[i];
    int below = 0, above = 0;
    for (std::size_t j : adj[i]) (cs.vertices[j].level < v.level ? below : above) += 1;
    switch (v.kind) {
      case CriticalKind::minimum:
        if (below != 0 || above != 1) return false;
        break;
      case CriticalKind::maximum:
        if (below != 1 || above != 0) return false;
        break;
      case CriticalKind::saddle:
        if (!((below == 2 && above == 1) || (below == 1 && above == 2))) return false;
        break;
    }
  }
  return true;
}

inline CriticalKind kind_of_label(const CrossSection& cs, int label) {
  for (const auto& v : cs.vertices) {
    if (v.label == label) return v.kind;
  }
  return CriticalKind::saddle;
}

} // namespace twobridge
