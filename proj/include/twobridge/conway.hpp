#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/error.hpp"

namespace twobridge {

using Int = std::int64_t;

// Conway form C(a_1, b_1, ..., a_m, b_m, a_{m+1}). Even indices (0-based) hold
// the horizontal twist counts a_i, odd indices the vertical counts b_j.
class ConwayWord {
public:
  explicit ConwayWord(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() % 2 == 0) {
      throw Error(ErrorCode::even_length,
                  "Conway form needs an odd number of entries, got " +
                      std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] == 0) {
        throw Error(ErrorCode::zero_entry,
                    "entry " + std::to_string(i + 1) + " is zero");
      }
    }
  }

  ConwayWord(std::initializer_list<Int> entries)
      : ConwayWord(std::vector<Int>(entries)) {}

  std::span<const Int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t m() const noexcept { return (entries_.size() - 1) / 2; }

  // 1-based accessors matching a_1..a_{m+1} and b_1..b_m.
  Int a(std::size_t i) const { return entries_.at(2 * (i - 1)); }
  Int b(std::size_t j) const { return entries_.at(2 * j - 1); }

  static bool is_b_position(std::size_t index) noexcept { return index % 2 == 1; }

  Int sum_abs() const noexcept {
    Int total = 0;
    for (Int e : entries_) total += e < 0 ? -e : e;
    return total;
  }

  Int sum_abs_a() const noexcept {
    Int total = 0;
    for (std::size_t i = 0; i < entries_.size(); i += 2) total += entries_[i] < 0 ? -entries_[i] : entries_[i];
    return total;
  }

  Int sum_abs_b() const noexcept {
    Int total = 0;
    for (std::size_t i = 1; i < entries_.size(); i += 2) total += entries_[i] < 0 ? -entries_[i] : entries_[i];
    return total;
  }

  friend bool operator==(const ConwayWord&, const ConwayWord&) = default;

private:
  std::vector<Int> entries_;
};

inline std::string format_conway(const ConwayWord& word) {
  std::string out = "C(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(word.entries()[i]);
  }
  out += ')';
  return out;
}

namespace detail {

class ConwayParser {
public:
  explicit ConwayParser(std::string_view text) : text_(text) {}

  std::vector<Int> parse() {
    skip_space();
    char close = 0;
    if (consume('C')) {
      skip_space();
      expect('(');
      close = ')';
    } else if (consume('[')) {
      close = ']';
    } else {
      fail("expected 'C(' or '['");
    }
    std::vector<Int> values;
    values.push_back(integer());
    for (;;) {
      skip_space();
      if (consume(',')) {
        values.push_back(integer());
        continue;
      }
      expect(close);
      break;
    }
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return values;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    Int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("integer out of range");
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::syntax_error,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

// Grammar: `C(` int (`,` int)* `)` or `[` int (`,` int)* `]`, whitespace ignored.
inline ConwayWord parse_conway(std::string_view text) {
  return ConwayWord(detail::ConwayParser(text).parse());
}

enum class Transform { mirror, reverse };

inline ConwayWord transform(const ConwayWord& word, Transform kind) {
  std::vector<Int> entries(word.entries().begin(), word.entries().end());
  if (kind == Transform::mirror) {
    for (Int& e : entries) e = -e;
  } else {
    std::reverse(entries.begin(), entries.end());
  }
  return ConwayWord(std::move(entries));
}

inline bool all_b_even(const ConwayWord& word) noexcept {
  for (std::size_t i = 1; i < word.size(); i += 2) {
    if (word.entries()[i] % 2 != 0) return false;
  }
  return true;
}

// All entries >= 2 or all entries <= -2.
inline bool is_reduced_alternating(const ConwayWord& word) noexcept {
  auto e = word.entries();
  return std::all_of(e.begin(), e.end(), [](Int x) { return x >= 2; }) ||
         std::all_of(e.begin(), e.end(), [](Int x) { return x <= -2; });
}

// Number of twist-equivalence classes of crossings in a reduced alternating
// Conway diagram: one class per twist region.
inline Int twist_number(const ConwayWord& word) {
  if (!is_reduced_alternating(word)) {
    throw Error(ErrorCode::not_reduced_alternating,
                format_conway(word) + " has an entry of magnitude 1 or mixed signs");
  }
  return 2 * static_cast<Int>(word.m()) + 1;
}

} // namespace twobridge
