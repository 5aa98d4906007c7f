#pragma once

#include <string>
#include <vector>

#include "twobridge/cross_section.hpp"
#include "twobridge/curve.hpp"
#include "twobridge/stable_map.hpp"
#include "twobridge/strips.hpp"

namespace twobridge {

// Layout, all in SVG user units. Everything is integral so output is byte
// stable across platforms.
namespace layout {
inline constexpr int margin = 20;
inline constexpr int tile_width = 40;    // one curve tile or one strip
inline constexpr int strand_gap = 30;    // vertical distance between the two curve strands
inline constexpr int band_height = 120;  // height of the rectangle E
inline constexpr int tree_height = 100;  // Reeb tree panel under the strips
inline constexpr int tree_scale = 15;    // vertical units per critical level
inline constexpr int label_height = 16;
} // namespace layout

namespace detail {

class SvgWriter {
public:
  SvgWriter(int width, int height) : width_(width), height_(height) {}

  void raw(const std::string& s) { body_ += s; }

  void line(int x1, int y1, int x2, int y2, const char* cls) {
    body_ += "<line class=\"" + std::string(cls) + "\" x1=\"" + n(x1) + "\" y1=\"" + n(y1) + "\" x2=\"" + n(x2) +
             "\" y2=\"" + n(y2) + "\"/>\n";
  }

  void path(const std::string& d, const char* cls) {
    body_ += "<path class=\"" + std::string(cls) + "\" d=\"" + d + "\"/>\n";
  }

  void rect(int x, int y, int w, int h, const char* cls) {
    body_ += "<rect class=\"" + std::string(cls) + "\" x=\"" + n(x) + "\" y=\"" + n(y) + "\" width=\"" + n(w) +
             "\" height=\"" + n(h) + "\"/>\n";
  }

  void circle(int cx, int cy, int r, const char* cls) {
    body_ += "<circle class=\"" + std::string(cls) + "\" cx=\"" + n(cx) + "\" cy=\"" + n(cy) + "\" r=\"" + n(r) +
             "\"/>\n";
  }

  void text(int x, int y, const std::string& s, const char* cls = "label") {
    body_ += "<text class=\"" + std::string(cls) + "\" x=\"" + n(x) + "\" y=\"" + n(y) + "\">" + escape(s) +
             "</text>\n";
  }

  std::string finish(const std::string& title) const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + n(width_) + "\" height=\"" +
           n(height_) + "\" viewBox=\"0 0 " + n(width_) + " " + n(height_) + "\">\n";
    out += "<title>" + escape(title) + "</title>\n";
    out +=
        "<style>line,path{fill:none;stroke:#000;stroke-width:2}"
        ".gamma{stroke:#888;stroke-dasharray:4 3;stroke-width:1}"
        ".type2{fill:#fde2a8;stroke:none}.type3{fill:#e4eefa;stroke:none}"
        ".cap{fill:#eee;stroke:none}.reeb{stroke:#355;stroke-width:1.5}"
        ".leaf{fill:#fff;stroke:#355}.saddle{fill:#355;stroke:none}"
        ".event{fill:#c22;stroke:none}text{font:11px monospace}</style>\n";
    out += body_;
    out += "</svg>\n";
    return out;
  }

  static std::string n(int v) { return std::to_string(v); }

  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
      }
    }
    return out;
  }

private:
  int width_, height_;
  std::string body_;
};

// Reeb tree with its lowest level at the bottom of the panel.
inline void draw_reeb_tree(SvgWriter& w, const CrossSection& cs, int cx, int top) {
  const int base = top + layout::tree_height - 10;
  auto pos = [&](std::size_t v) {
    const auto& vx = cs.vertices[v];
    int x = cx;
    if (vx.kind != CriticalKind::saddle) x += (vx.label == 1 || vx.label == 2) ? -12 : 12;
    return std::pair{x, base - vx.level * layout::tree_scale};
  };
  for (auto [u, v] : cs.edges) {
    auto [x1, y1] = pos(u);
    auto [x2, y2] = pos(v);
    w.line(x1, y1, x2, y2, "reeb");
  }
  for (std::size_t v = 0; v < cs.vertices.size(); ++v) {
    auto [x, y] = pos(v);
    w.circle(x, y, 3, cs.vertices[v].kind == CriticalKind::saddle ? "saddle" : "leaf");
  }
}

inline void draw_strips(SvgWriter& w, const StripDecomposition& d, int top) {
  const int h = layout::band_height;
  for (std::size_t k = 0; k < d.strips.size(); ++k) {
    const Strip& s = d.strips[k];
    const int x = layout::margin + static_cast<int>(k) * layout::tile_width;
    const char* cls = s.type == StripType::type2 ? "type2" : s.type == StripType::type3 ? "type3" : "cap";
    w.rect(x, top, layout::tile_width, h, cls);
    std::string tag = "T" + std::to_string(k);
    if (s.twist != 0) tag += ":" + std::to_string(s.twist);
    w.text(x + 3, top + h - 4, tag);
  }
  for (std::size_t k = 1; k < d.strips.size(); ++k) {
    const int x = layout::margin + static_cast<int>(k) * layout::tile_width;
    w.line(x, top, x, top + h, "gamma");
  }
}

} // namespace detail

// The immersed curve as a row of tiles: caps, plain passes, double points
// (class "crossing") and self-tangencies (class "tangency").
inline std::string render_svg(const ImmersedCurve& curve) {
  const int cols = static_cast<int>(curve.tiles.size());
  const int width = 2 * layout::margin + cols * layout::tile_width;
  const int height = 2 * layout::margin + layout::strand_gap + layout::label_height;
  detail::SvgWriter w(width, height);
  const int y0 = layout::margin, y1 = layout::margin + layout::strand_gap;
  const int mid = (y0 + y1) / 2;
  const int tw = layout::tile_width;
  using S = detail::SvgWriter;
  for (int i = 0; i < cols; ++i) {
    const CurveTile& t = curve.tiles[i];
    const int x = layout::margin + i * tw;
    switch (t.kind) {
      case TileKind::left_cap:
        w.path("M" + S::n(x + tw) + " " + S::n(y0) + " C" + S::n(x) + " " + S::n(y0) + " " + S::n(x) + " " +
                   S::n(y1) + " " + S::n(x + tw) + " " + S::n(y1),
               "cap-arc");
        break;
      case TileKind::right_cap:
        w.path("M" + S::n(x) + " " + S::n(y0) + " C" + S::n(x + tw) + " " + S::n(y0) + " " + S::n(x + tw) + " " +
                   S::n(y1) + " " + S::n(x) + " " + S::n(y1),
               "cap-arc");
        break;
      case TileKind::plain:
        w.line(x, y0, x + tw, y0, "strand");
        w.line(x, y1, x + tw, y1, "strand");
        break;
      case TileKind::crossing:
        w.raw("<g class=\"crossing\">\n");
        w.line(x, y0, x + tw, y1, "strand");
        w.line(x, y1, x + tw, y0, "strand");
        w.raw("</g>\n");
        break;
      case TileKind::tangency:
        w.raw("<g class=\"tangency\">\n");
        w.path("M" + S::n(x) + " " + S::n(y0) + " Q" + S::n(x + tw / 2) + " " + S::n(2 * mid - y0) + " " +
                   S::n(x + tw) + " " + S::n(y0),
               "strand");
        w.path("M" + S::n(x) + " " + S::n(y1) + " Q" + S::n(x + tw / 2) + " " + S::n(2 * mid - y1) + " " +
                   S::n(x + tw) + " " + S::n(y1),
               "strand");
        w.raw("</g>\n");
        break;
    }
  }
  w.text(layout::margin, height - 4, format_conway(curve.word));
  return w.finish(std::string(curve.stage == CurveStage::smoothed ? "smoothed" : "reduced") + " curve of " +
                  format_conway(curve.word));
}

// Strips of E with separators gamma_k; Type 2 strips highlighted.
inline std::string render_svg(const StripDecomposition& d, const ConwayWord& word) {
  const int width = 2 * layout::margin + static_cast<int>(d.strips.size()) * layout::tile_width;
  const int height = 2 * layout::margin + layout::band_height + layout::label_height;
  detail::SvgWriter w(width, height);
  detail::draw_strips(w, d, layout::margin);
  w.text(layout::margin, height - 4, format_conway(word) + " " + std::string(variant_name(d.variant)));
  return w.finish(std::string(variant_name(d.variant)) + " strips of " + format_conway(word));
}

// Strips plus the Reeb tree of psi_k under each gamma_k, and a marker per
// singular fiber on the strip that carries it.
inline std::string render_svg(const StableMapModel& model) {
  const auto& d = model.decomposition;
  const int width = 2 * layout::margin + static_cast<int>(d.strips.size()) * layout::tile_width;
  const int height = 2 * layout::margin + layout::band_height + layout::tree_height + layout::label_height;
  detail::SvgWriter w(width, height);
  detail::draw_strips(w, d, layout::margin);
  const int tree_top = layout::margin + layout::band_height;
  for (std::size_t k = 0; k < model.blocks.size(); ++k) {
    const BlockMap& b = model.blocks[k];
    const int x = layout::margin + static_cast<int>(k) * layout::tile_width;
    if (b.exit) detail::draw_reeb_tree(w, *b.exit, x + layout::tile_width, tree_top);
    for (std::size_t e = 0; e < b.events.size(); ++e) {
      const int cx = x + layout::tile_width * static_cast<int>(e + 1) / static_cast<int>(b.events.size() + 1);
      w.circle(cx, layout::margin + layout::band_height / 2, 4, "event");
    }
  }
  const auto& c = model.census;
  w.text(layout::margin, height - 4,
         format_conway(model.word) + " " + std::string(variant_name(model.variant)) + " II2=" + std::to_string(c.ii2) +
             " II3=" + std::to_string(c.ii3));
  return w.finish(std::string(variant_name(model.variant)) + " model of " + format_conway(model.word));
}

} // namespace twobridge
