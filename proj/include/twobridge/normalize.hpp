#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

struct SearchBound {
  Int max_sum = 40;             // bound on sum of |entries|
  std::size_t max_length = 7;   // bound on word length (odd)
};

enum class NormalizeMethod { unchanged, exhaustive_search, even_expansion, none };

struct NormalizeOutcome {
  std::optional<ConwayWord> word;
  NormalizeMethod method = NormalizeMethod::none;
  SearchBound bound;
  std::uint64_t candidates_examined = 0;

  bool found() const noexcept { return word.has_value(); }
};

inline std::string describe_failure(const ConwayWord& input, const NormalizeOutcome& outcome) {
  return "no odd-length Conway form with all b_i even is Schubert-equivalent to " +
         format_conway(input) + " within sum|entries| <= " + std::to_string(outcome.bound.max_sum) +
         " and length <= " + std::to_string(outcome.bound.max_length) + " (" +
         std::to_string(outcome.candidates_examined) + " candidates examined)";
}

namespace detail {

class EvenBSearch {
public:
  EvenBSearch(const SchubertFraction& target, SearchBound bound) : target_(target), bound_(bound) {}

  // Minimal word of the given odd length, by sum of |entries|; ties resolved by
  // enumeration order (smaller magnitudes first, positive before negative).
  std::optional<std::vector<Int>> search_length(std::size_t length) {
    best_.reset();
    best_sum_ = bound_.max_sum + 1;
    prefix_.assign(length - 1, 0);
    extend(0, 0, 1, 0, 0, 1);
    return best_;
  }

  std::uint64_t examined() const noexcept { return examined_; }

private:
  void extend(std::size_t depth, Int used, Int m00, Int m01, Int m10, Int m11) {
    if (depth == prefix_.size()) {
      close(used, m00, m01, m10, m11);
      return;
    }
    const bool b_slot = ConwayWord::is_b_position(depth);
    // Leave at least 1 for the final entry.
    const Int room = best_sum_ - 1 - used - 1;
    for (Int mag = b_slot ? 2 : 1; mag <= room; mag += b_slot ? 2 : 1) {
      for (Int c : {mag, -mag}) {
        prefix_[depth] = c;
        Int n00 = 0, n10 = 0;
        if (__builtin_mul_overflow(m00, c, &n00) || __builtin_add_overflow(n00, m01, &n00) ||
            __builtin_mul_overflow(m10, c, &n10) || __builtin_add_overflow(n10, m11, &n10)) {
          continue;
        }
        extend(depth + 1, used + mag, n00, m00, n10, m10);
      }
    }
  }

  void close(Int used, Int m00, Int m01, Int m10, Int m11) {
    if (m00 == 0) return;
    const Int p = target_.p();
    for (Int num : {p, -p}) {
      ++examined_;
      Int diff = num - m01;
      if (diff % m00 != 0) continue;
      Int last = diff / m00;
      if (last == 0) continue;
      Int mag = last < 0 ? -last : last;
      if (used + mag >= best_sum_) continue;
      Int den = 0;
      if (__builtin_mul_overflow(m10, last, &den) || __builtin_add_overflow(den, m11, &den)) continue;
      auto f = normalize_fraction(num, den);
      if (!f || !schubert_equivalent(target_, *f, EquivalencePolicy{false})) continue;
      best_sum_ = used + mag;
      best_ = prefix_;
      best_->push_back(last);
    }
  }

  SchubertFraction target_;
  SearchBound bound_;
  std::vector<Int> prefix_;
  std::optional<std::vector<Int>> best_;
  Int best_sum_ = 0;
  std::uint64_t examined_ = 0;
};

// Expansion of p/d with every partial quotient the nearest even integer. For p
// even and d odd every remainder alternates even/odd and odd/even, so the
// expansion terminates after an odd number of steps.
inline std::vector<Int> even_expansion(Int numerator, Int denominator) {
  std::vector<Int> out;
  while (true) {
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    if (denominator == 1) {
      out.push_back(numerator);
      return out;
    }
    // nearest even integer to numerator / denominator
    Int floor_q = numerator >= 0 ? numerator / denominator : -((-numerator + denominator - 1) / denominator);
    Int c = floor_q % 2 == 0 ? floor_q : floor_q + 1;
    out.push_back(c);
    Int rem = numerator - c * denominator;
    numerator = denominator;
    denominator = rem;
  }
}

} // namespace detail

// Finds an odd-length Conway form with every b_j even whose fraction is
// Schubert-equivalent (mirror disallowed) to that of the input. Iterative
// deepening by length, then minimal sum of |entries|. When the bounded search
// fails for a two-component link, the even expansion of p/q is returned.
inline NormalizeOutcome even_b_normalize(const ConwayWord& word, SearchBound bound = {}) {
  NormalizeOutcome outcome;
  outcome.bound = bound;
  if (all_b_even(word)) {
    outcome.word = word;
    outcome.method = NormalizeMethod::unchanged;
    return outcome;
  }
  const SchubertFraction target = fraction_of(word);
  detail::EvenBSearch search(target, bound);
  for (std::size_t length = 1; length <= bound.max_length; length += 2) {
    if (static_cast<Int>(length) > bound.max_sum) break;
    if (auto found = search.search_length(length)) {
      outcome.word = ConwayWord(std::move(*found));
      outcome.method = NormalizeMethod::exhaustive_search;
      break;
    }
  }
  outcome.candidates_examined = search.examined();
  if (!outcome.word && target.p() % 2 == 0) {
    outcome.word = ConwayWord(detail::even_expansion(target.p(), target.q()));
    outcome.method = NormalizeMethod::even_expansion;
  }
  return outcome;
}

} // namespace twobridge
