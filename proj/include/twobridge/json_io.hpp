#pragma once

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "twobridge/complexity.hpp"
#include "twobridge/error.hpp"
#include "twobridge/stable_map.hpp"

namespace twobridge {

inline constexpr std::string_view schema_version = "1";

using Json = nlohmann::ordered_json;

namespace detail {

inline Json permutation_json(const StrandPermutation& p) { return Json::array({p[0], p[1], p[2], p[3]}); }

inline Json model_to_json(const StableMapModel& model) {
  Json doc;
  doc["schema_version"] = std::string(schema_version);
  doc["conway"] = format_conway(model.word);
  doc["variant"] = std::string(variant_name(model.variant));
  doc["fraction"] = Json{{"p", model.fraction.p()}, {"q", model.fraction.q()}};
  doc["granularity"] = Json{{"strips_per_crossing", model.decomposition.granularity.strips_per_crossing},
                            {"extra_strips_per_region", model.decomposition.granularity.extra_strips_per_region}};
  Json strips = Json::array();
  for (const auto& s : model.decomposition.strips) {
    strips.push_back(Json{{"type", std::string(strip_type_name(s.type))}, {"param", s.twist}});
  }
  doc["strips"] = std::move(strips);
  Json blocks = Json::array();
  for (const auto& b : model.blocks) {
    Json events = Json::array();
    for (const auto& e : b.events) {
      events.push_back(Json{{"kind", std::string(fiber_type_name(e.kind))}, {"slice", e.slice}});
    }
    blocks.push_back(Json{{"kind", std::string(strip_type_name(b.strip))},
                          {"events", std::move(events)},
                          {"permutation", permutation_json(b.permutation)}});
  }
  doc["blocks"] = std::move(blocks);
  doc["census"] = Json{{"ii2", model.census.ii2},
                       {"ii3", model.census.ii3},
                       {"definite_components", model.census.definite_components},
                       {"indefinite_circles", model.census.indefinite_circles}};
  doc["bounds"] = Json{{"smc_upper", smc_upper_bound(model.word).value}, {"weighted_sum", weighted_sum(model.census)}};
  return doc;
}

[[noreturn]] inline void schema_fail(const std::string& why) { throw Error(ErrorCode::schema_error, why); }

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(where + ": missing field '" + key + "'");
  return *it;
}

inline void closed_object(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) schema_fail(where + ": expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) schema_fail(where + ": unknown field '" + it.key() + "'");
  }
  for (const char* k : keys) field(obj, k, where);
}

inline Int get_int(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_integer()) schema_fail(where + "." + key + ": expected an integer");
  return v.get<Int>();
}

inline std::string get_string(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) schema_fail(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline const Json& get_array(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_array()) schema_fail(where + "." + key + ": expected an array");
  return v;
}

inline StripType parse_strip_type(const std::string& s, const std::string& where) {
  for (StripType t : {StripType::type1, StripType::type2, StripType::type3, StripType::type4}) {
    if (s == strip_type_name(t)) return t;
  }
  schema_fail(where + ": unknown strip type '" + s + "'");
}

inline Variant parse_variant(const std::string& s, const std::string& where) {
  if (s == "f2") return Variant::f2;
  if (s == "f3") return Variant::f3;
  schema_fail(where + ": unknown variant '" + s + "'");
}

} // namespace detail

inline std::string export_json(const StableMapModel& model) { return detail::model_to_json(model).dump(2) + "\n"; }

// Rebuilds the model from the strip word alone and checks every other stored
// field against the rebuilt one.
inline StableMapModel import_json(std::string_view text) {
  using namespace detail;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    schema_fail(std::string("not a JSON document: ") + e.what());
  }
  closed_object(doc,
                {"schema_version", "conway", "variant", "fraction", "granularity", "strips", "blocks", "census",
                 "bounds"},
                "document");
  if (get_string(doc, "schema_version", "document") != schema_version) {
    schema_fail("unsupported schema_version '" + doc["schema_version"].get<std::string>() + "'");
  }
  const ConwayWord word = [&] {
    const std::string text = get_string(doc, "conway", "document");
    try {
      return parse_conway(text);
    } catch (const Error& e) {
      schema_fail(std::string("conway: ") + e.what());
    }
  }();
  const Variant variant = parse_variant(get_string(doc, "variant", "document"), "variant");

  closed_object(doc["fraction"], {"p", "q"}, "fraction");
  const Int p = get_int(doc["fraction"], "p", "fraction");
  const Int q = get_int(doc["fraction"], "q", "fraction");

  closed_object(doc["granularity"], {"strips_per_crossing", "extra_strips_per_region"}, "granularity");
  Granularity granularity{static_cast<int>(get_int(doc["granularity"], "strips_per_crossing", "granularity")),
                          static_cast<int>(get_int(doc["granularity"], "extra_strips_per_region", "granularity"))};

  StripDecomposition decomposition{variant, {}, granularity, {}};
  const Json& strips = get_array(doc, "strips", "document");
  for (std::size_t i = 0; i < strips.size(); ++i) {
    const std::string where = "strips[" + std::to_string(i) + "]";
    closed_object(strips[i], {"type", "param"}, where);
    decomposition.strips.push_back(
        {parse_strip_type(get_string(strips[i], "type", where), where), get_int(strips[i], "param", where), 0});
  }

  const Json& blocks = get_array(doc, "blocks", "document");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string where = "blocks[" + std::to_string(i) + "]";
    closed_object(blocks[i], {"kind", "events", "permutation"}, where);
    parse_strip_type(get_string(blocks[i], "kind", where), where);
    const Json& events = get_array(blocks[i], "events", where);
    for (std::size_t j = 0; j < events.size(); ++j) {
      const std::string ew = where + ".events[" + std::to_string(j) + "]";
      closed_object(events[j], {"kind", "slice"}, ew);
      const std::string kind = get_string(events[j], "kind", ew);
      if (kind != "II2" && kind != "II3") schema_fail(ew + ": unknown event kind '" + kind + "'");
      get_string(events[j], "slice", ew);
    }
    const Json& perm = get_array(blocks[i], "permutation", where);
    if (perm.size() != 4) schema_fail(where + ".permutation: expected 4 entries");
    for (const auto& x : perm) {
      if (!x.is_number_integer()) schema_fail(where + ".permutation: expected integers");
    }
  }

  closed_object(doc["census"], {"ii2", "ii3", "definite_components", "indefinite_circles"}, "census");
  const SingularFiberCensus stored{get_int(doc["census"], "ii2", "census"), get_int(doc["census"], "ii3", "census"),
                                   get_int(doc["census"], "definite_components", "census"),
                                   get_int(doc["census"], "indefinite_circles", "census")};
  closed_object(doc["bounds"], {"smc_upper", "weighted_sum"}, "bounds");
  get_int(doc["bounds"], "smc_upper", "bounds");
  get_int(doc["bounds"], "weighted_sum", "bounds");

  const StableMapModel model = [&] {
    try {
      return assemble_from_decomposition(word, decomposition);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invariant_violation) throw;
      throw Error(ErrorCode::invariant_violation,
                  std::string("document does not describe a valid model: ") + e.what());
    }
  }();

  // Everything the rebuild derives must match what the document stores.
  auto violation = [](const std::string& why) {
    throw Error(ErrorCode::invariant_violation, "document inconsistent: " + why);
  };
  if (model.fraction.p() != p || model.fraction.q() != q) violation("fraction differs from the word's fraction");
  if (stored != model.census) violation("stored census differs from the recount");
  const Json rebuilt = model_to_json(model);
  if (rebuilt["blocks"] != doc["blocks"]) violation("block list differs from the one the strips determine");
  if (rebuilt["bounds"] != doc["bounds"]) violation("bounds differ from the recomputed ones");
  return model;
}

} // namespace twobridge
