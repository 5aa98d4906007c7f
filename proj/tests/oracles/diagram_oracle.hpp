#pragma once

// Test-only oracles over an explicit planar embedding of the plat diagram.
// Nothing here touches continued fractions or the library's own tracing.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twobridge/plat_diagram.hpp"

namespace oracle {

// Ports of a crossing in counterclockwise order.
enum Port { ne = 0, nw = 1, sw = 2, se = 3 };

struct Embedding {
  std::size_t crossings = 0;
  // partner[4 * c + port] = 4 * c2 + port2 at the other end of the arc.
  std::vector<std::size_t> partner;
  std::vector<int> braid_sign;
};

inline Embedding embed(const twobridge::PlatDiagram& d) {
  const std::size_t n = d.crossings.size();
  // Nodes 0..4n-1 are ports, then 4 left and 4 right boundary ends.
  const std::size_t left0 = 4 * n, right0 = 4 * n + 4;
  std::vector<std::vector<std::size_t>> links(4 * n + 8);
  auto link = [&](std::size_t x, std::size_t y) {
    links[x].push_back(y);
    links[y].push_back(x);
  };
  std::array<std::size_t, 4> open{left0, left0 + 1, left0 + 2, left0 + 3};
  for (std::size_t i = 0; i < n; ++i) {
    const int u = d.crossings[i].upper - 1;
    link(open[u], 4 * i + nw);
    link(open[u + 1], 4 * i + sw);
    open[u] = 4 * i + ne;
    open[u + 1] = 4 * i + se;
  }
  for (int pos = 0; pos < 4; ++pos) link(open[pos], right0 + pos);
  link(left0 + 0, left0 + 3);
  link(left0 + 1, left0 + 2);
  link(right0 + 0, right0 + 3);
  link(right0 + 1, right0 + 2);

  Embedding e;
  e.crossings = n;
  e.partner.assign(4 * n, 0);
  for (std::size_t port = 0; port < 4 * n; ++port) {
    std::size_t prev = port, cur = links[port].at(0);
    while (cur >= 4 * n) {
      std::size_t next = links[cur][0] == prev ? links[cur][1] : links[cur][0];
      prev = cur;
      cur = next;
    }
    e.partner[port] = cur;
  }
  for (const auto& c : d.crossings) e.braid_sign.push_back(c.braid_sign);
  return e;
}

// Link components by following arcs and going straight through crossings.
inline int trace_components(const Embedding& e) {
  const std::size_t ports = 4 * e.crossings;
  if (ports == 0) return -1;
  std::vector<bool> seen(ports, false);
  int components = 0;
  for (std::size_t s = 0; s < ports; ++s) {
    if (seen[s]) continue;
    ++components;
    std::size_t p = s;
    while (!seen[p]) {
      seen[p] = true;
      std::size_t through = 4 * (p / 4) + (p % 4 + 2) % 4;
      seen[through] = true;
      p = e.partner[through];
    }
  }
  return components;
}

struct Faces {
  std::size_t count = 0;
  std::vector<std::size_t> corner_face;  // corner 4c+j lies between ports j and j+1
};

inline Faces trace_faces(const Embedding& e) {
  const std::size_t darts = 4 * e.crossings;
  Faces f;
  f.corner_face.assign(darts, SIZE_MAX);
  for (std::size_t s = 0; s < darts; ++s) {
    if (f.corner_face[s] != SIZE_MAX) continue;
    std::size_t dart = s;
    while (f.corner_face[dart] == SIZE_MAX) {
      f.corner_face[dart] = f.count;
      std::size_t leave = 4 * (dart / 4) + (dart % 4 + 1) % 4;
      dart = e.partner[leave];
    }
    ++f.count;
  }
  return f;
}

// Two-colouring of faces; throws if the face graph is not bipartite.
inline std::vector<int> checkerboard(const Embedding& e, const Faces& f) {
  std::vector<std::vector<std::size_t>> adj(f.count);
  for (std::size_t port = 0; port < 4 * e.crossings; ++port) {
    std::size_t c = port / 4, j = port % 4;
    std::size_t before = f.corner_face[4 * c + (j + 3) % 4];
    std::size_t after = f.corner_face[4 * c + j];
    adj[before].push_back(after);
    adj[after].push_back(before);
  }
  std::vector<int> colour(f.count, -1);
  for (std::size_t s = 0; s < f.count; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x]) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          throw std::logic_error("face graph is not bipartite");
        }
      }
    }
  }
  return colour;
}

// Exact determinant by fraction-free Gaussian elimination.
inline std::int64_t bareiss_determinant(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  __int128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

// |det| of the reduced Goeritz matrix over the faces of colour 0.
inline std::int64_t goeritz_determinant(const twobridge::PlatDiagram& d) {
  const Embedding e = embed(d);
  const Faces f = trace_faces(e);
  const std::vector<int> colour = checkerboard(e, f);
  std::vector<std::size_t> index(f.count, SIZE_MAX);
  std::size_t shaded = 0;
  for (std::size_t i = 0; i < f.count; ++i) {
    if (colour[i] == 0) index[i] = shaded++;
  }
  std::vector<std::vector<__int128>> g(shaded, std::vector<__int128>(shaded, 0));
  for (std::size_t c = 0; c < e.crossings; ++c) {
    // Corners 0 and 2 go from the SW-NE strand to the NW-SE strand.
    const bool top_bottom_shaded = colour[f.corner_face[4 * c]] == 0;
    const bool nw_se_over = e.braid_sign[c] > 0;
    const int eta = (top_bottom_shaded == nw_se_over) ? 1 : -1;
    const std::size_t j = top_bottom_shaded ? 0 : 1;
    const std::size_t f1 = index[f.corner_face[4 * c + j]];
    const std::size_t f2 = index[f.corner_face[4 * c + j + 2]];
    if (f1 == f2) continue;
    g[f1][f2] -= eta;
    g[f2][f1] -= eta;
    g[f1][f1] += eta;
    g[f2][f2] += eta;
  }
  std::vector<std::vector<__int128>> reduced;
  for (std::size_t i = 1; i < shaded; ++i) {
    reduced.emplace_back(g[i].begin() + 1, g[i].end());
  }
  return std::llabs(bareiss_determinant(std::move(reduced)));
}

} // namespace oracle
