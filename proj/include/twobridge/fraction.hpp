#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "twobridge/conway.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

// Normalized Schubert pair b(p, q): p >= 2, 0 < q < p, gcd(p, q) = 1.
class SchubertFraction {
public:
  SchubertFraction(Int p, Int q) : p_(p), q_(q) {
    if (p < 2 || q <= 0 || q >= p || std::gcd(p, q) != 1) {
      throw Error(ErrorCode::degenerate_fraction,
                  "(" + std::to_string(p) + "," + std::to_string(q) + ") is not a normalized two-bridge fraction");
    }
  }

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }

  friend bool operator==(const SchubertFraction&, const SchubertFraction&) = default;

private:
  Int p_;
  Int q_;
};

inline std::string format_fraction(const SchubertFraction& f) {
  return std::to_string(f.p()) + "/" + std::to_string(f.q());
}

struct EquivalencePolicy {
  bool allow_mirror;
};

namespace detail {

inline Int checked_mul_add(Int x, Int y, Int z) {
  Int prod = 0;
  Int sum = 0;
  if (__builtin_mul_overflow(x, y, &prod) || __builtin_add_overflow(prod, z, &sum)) {
    throw Error(ErrorCode::arithmetic_overflow, "continuant exceeds 64-bit range");
  }
  return sum;
}

inline Int mod_positive(Int value, Int modulus) {
  Int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

// Inverse of a modulo n, assuming gcd(a, n) = 1.
inline Int mod_inverse(Int a, Int n) {
  Int t = 0, new_t = 1;
  Int r = n, new_r = mod_positive(a, n);
  while (new_r != 0) {
    Int quotient = r / new_r;
    Int tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_positive(t, n);
}

} // namespace detail

// Numerator and denominator of c_1 + 1/(c_2 + 1/(... + 1/c_n)), computed as the
// product of matrices [[c, 1], [1, 0]]; the pair is always coprime.
struct Convergent {
  Int numerator;
  Int denominator;
};

inline Convergent continued_fraction(std::span<const Int> entries) {
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (Int c : entries) {
    Int n00 = detail::checked_mul_add(m00, c, m01);
    Int n10 = detail::checked_mul_add(m10, c, m11);
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  }
  return {m00, m10};
}

// Normalizes num/den to the representative 0 < q < p. Returns nullopt when the
// value does not describe a two-bridge link (|num| < 2).
inline std::optional<SchubertFraction> normalize_fraction(Int numerator, Int denominator) {
  Int p = numerator < 0 ? -numerator : numerator;
  if (p < 2) return std::nullopt;
  Int signed_den = numerator < 0 ? -denominator : denominator;
  Int q = detail::mod_positive(signed_den, p);
  if (q == 0 || std::gcd(p, q) != 1) return std::nullopt;
  return SchubertFraction(p, q);
}

// Plain right-to-left continued fraction with signs read directly from the
// word. With the crossing conventions of PlatDiagram this p equals the
// determinant of the diagram.
inline SchubertFraction fraction_of(const ConwayWord& word) {
  Convergent c = continued_fraction(word.entries());
  auto f = normalize_fraction(c.numerator, c.denominator);
  if (!f) {
    throw Error(ErrorCode::degenerate_fraction,
                format_conway(word) + " evaluates to " + std::to_string(c.numerator) + "/" +
                    std::to_string(c.denominator) + ", not a two-bridge link");
  }
  return *f;
}

inline bool schubert_equivalent(const SchubertFraction& f1, const SchubertFraction& f2,
                                EquivalencePolicy policy) {
  if (f1.p() != f2.p()) return false;
  const Int p = f1.p();
  const Int q = f1.q();
  const Int inv = detail::mod_inverse(q, p);
  const Int target = f2.q();
  if (target == q || target == inv) return true;
  if (policy.allow_mirror) {
    return target == detail::mod_positive(-q, p) || target == detail::mod_positive(-inv, p);
  }
  return false;
}

inline int component_count(const SchubertFraction& f) noexcept {
  return f.p() % 2 == 0 ? 2 : 1;
}

} // namespace twobridge
