#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "twobridge/json_io.hpp"
#include "twobridge/svg.hpp"

namespace golden {

struct Case {
  std::string file;
  std::function<std::string()> render;
};

inline std::vector<Case> cases() {
  using namespace twobridge;
  auto curve = [](ConwayWord w, bool reduce) {
    return [w, reduce] {
      ImmersedCurve c = outer_smooth(build_plat_diagram(w));
      return render_svg(reduce ? bigon_reduce(c) : c);
    };
  };
  auto strips = [](ConwayWord w, Variant v) {
    return [w, v] {
      ImmersedCurve c = outer_smooth(build_plat_diagram(w));
      if (v == Variant::f3) c = bigon_reduce(c);
      return render_svg(strip_decompose(c, v), w);
    };
  };
  auto model = [](ConwayWord w, Variant v) { return [w, v] { return render_svg(assemble_stable_map(w, v)); }; };
  auto json = [](ConwayWord w, Variant v) { return [w, v] { return export_json(assemble_stable_map(w, v)); }; };
  return {
      {"curve_3_2_3.svg", curve({3, 2, 3}, false)},
      {"curve_reduced_2_4_2.svg", curve({2, 4, 2}, true)},
      {"strips_f2_3_2_3.svg", strips({3, 2, 3}, Variant::f2)},
      {"strips_f3_2_4_2_-2_2.svg", strips({2, 4, 2, -2, 2}, Variant::f3)},
      {"model_f2_3_2_3.svg", model({3, 2, 3}, Variant::f2)},
      {"model_f3_2_4_2_-2_2.svg", model({2, 4, 2, -2, 2}, Variant::f3)},
      {"model_f2_3_2_3.json", json({3, 2, 3}, Variant::f2)},
      {"model_f3_3_2_3.json", json({3, 2, 3}, Variant::f3)},
  };
}

inline std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace golden
