#pragma once

#include <charconv>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/error.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

struct VolumeRecord {
  std::string label;
  std::string reference;                 // Conway word, fraction "p/q", or free text
  std::optional<ConwayWord> word;        // when the reference parses as a word
  std::optional<SchubertFraction> fraction;
  double volume = 0.0;
  std::string source;                    // "<table name>:<line>"
};

class VolumeTable {
public:
  const std::vector<VolumeRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  const VolumeRecord* find_label(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    return it == by_label_.end() ? nullptr : &records_[it->second];
  }

  // First record whose reference describes the same link as word, matched by
  // Schubert class with mirrors allowed (volume is mirror invariant).
  const VolumeRecord* find_link(const ConwayWord& word) const {
    const SchubertFraction f = fraction_of(word);
    for (const auto& r : records_) {
      std::optional<SchubertFraction> g = r.fraction;
      if (!g && r.word) g = fraction_of(*r.word);
      if (g && schubert_equivalent(f, *g, EquivalencePolicy{true})) return &r;
    }
    return nullptr;
  }

  void add(VolumeRecord r) {
    if (by_label_.count(r.label)) {
      throw Error(ErrorCode::duplicate_label, "label '" + r.label + "' at " + r.source + " already defined at " +
                                                  records_[by_label_.at(r.label)].source);
    }
    by_label_.emplace(r.label, records_.size());
    records_.push_back(std::move(r));
  }

private:
  std::vector<VolumeRecord> records_;
  std::map<std::string, std::size_t> by_label_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::optional<SchubertFraction> parse_fraction_reference(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  Int p = 0, q = 0;
  auto num = trim(s.substr(0, slash));
  auto den = trim(s.substr(slash + 1));
  auto r1 = std::from_chars(num.data(), num.data() + num.size(), p);
  auto r2 = std::from_chars(den.data(), den.data() + den.size(), q);
  if (r1.ec != std::errc{} || r1.ptr != num.data() + num.size() || r2.ec != std::errc{} ||
      r2.ptr != den.data() + den.size()) {
    return std::nullopt;
  }
  return normalize_fraction(p, q);
}

} // namespace detail

// Lines `label,reference,volume`. The label ends at the first comma and the
// volume starts after the last one, so a Conway reference may contain commas.
// Blank lines and lines starting with '#' are skipped.
inline VolumeTable ingest_volume_table(std::string_view text, std::string_view name = "<table>") {
  VolumeTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const std::string_view line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = std::string(name) + ":" + std::to_string(line_no);
    auto bad = [&](const std::string& why) { throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + " (" + where + "): " + why); };
    const auto first = line.find(',');
    const auto last = line.rfind(',');
    if (first == std::string_view::npos || first == last) bad("expected label,reference,volume");
    VolumeRecord r;
    r.label = std::string(detail::trim(line.substr(0, first)));
    r.reference = std::string(detail::trim(line.substr(first + 1, last - first - 1)));
    const std::string vol(detail::trim(line.substr(last + 1)));
    if (r.label.empty()) bad("empty label");
    if (r.reference.empty()) bad("empty reference");
    char* end = nullptr;
    r.volume = std::strtod(vol.c_str(), &end);
    if (vol.empty() || end != vol.c_str() + vol.size()) bad("volume '" + vol + "' is not a number");
    if (!(r.volume > 0.0)) bad("volume must be positive");
    r.source = where;
    try {
      r.word = parse_conway(r.reference);
    } catch (const Error&) {
      r.fraction = detail::parse_fraction_reference(r.reference);
    }
    table.add(std::move(r));
  }
  return table;
}

} // namespace twobridge
