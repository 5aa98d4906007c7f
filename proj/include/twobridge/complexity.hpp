#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "twobridge/conway.hpp"
#include "twobridge/error.hpp"
#include "twobridge/stable_map.hpp"

namespace twobridge {

// Volume of the regular ideal octahedron, 8 * Lobachevsky(pi/4).
inline constexpr double v_oct = 3.663862376708876;

inline constexpr double default_epsilon = 1e-9;

inline Int weighted_sum(const SingularFiberCensus& c) { return c.ii2 + 2 * c.ii3; }

struct UpperBound {
  Int value = 0;                 // 2m
  Variant witness = Variant::f2;
  Int f3_weighted_sum = 0;       // sum |b_i|
};

inline UpperBound smc_upper_bound(const ConwayWord& word) {
  if (!all_b_even(word)) {
    throw Error(ErrorCode::even_b_required, format_conway(word) + " has an odd b_i");
  }
  return {2 * static_cast<Int>(word.m()), Variant::f2, word.sum_abs_b()};
}

inline void require_positive_volume(double volume) {
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", volume);
    throw Error(ErrorCode::non_positive_volume, std::string("volume ") + buf + " is not a positive real");
  }
}

inline Int smc_lower_bound_from_volume(double volume) {
  require_positive_volume(volume);
  return static_cast<Int>(std::ceil(volume / (2.0 * v_oct)));
}

inline double volume_upper_bound(const ConwayWord& word) {
  const Int tw = twist_number(word);
  if (word.m() == 0) {
    throw Error(ErrorCode::torus_case, format_conway(word) + " is a (2,n) torus link");
  }
  return 2.0 * static_cast<double>(tw - 1) * v_oct;
}

struct ComplexityBounds {
  Int m = 0;
  std::optional<UpperBound> smc_upper;
  std::optional<Int> smc_lower;
  std::optional<double> volume_upper;
};

inline ComplexityBounds complexity_bounds(const ConwayWord& word, std::optional<double> volume = std::nullopt) {
  ComplexityBounds b;
  b.m = static_cast<Int>(word.m());
  if (all_b_even(word)) b.smc_upper = smc_upper_bound(word);
  if (volume) b.smc_lower = smc_lower_bound_from_volume(*volume);
  if (is_reduced_alternating(word) && word.m() > 0) b.volume_upper = volume_upper_bound(word);
  return b;
}

enum class CertificateStatus { certified, inconclusive, inapplicable };

constexpr std::string_view certificate_status_name(CertificateStatus s) noexcept {
  switch (s) {
    case CertificateStatus::certified: return "certified";
    case CertificateStatus::inconclusive: return "inconclusive";
    case CertificateStatus::inapplicable: return "inapplicable";
  }
  return "";
}

struct Certificate {
  CertificateStatus status = CertificateStatus::inapplicable;
  std::optional<Int> value;     // 2m when certified
  Int m = 0;
  double volume = 0.0;
  double threshold = 0.0;       // (4m - 2) v_oct
  double epsilon = default_epsilon;
  Int smc_lower = 0;
  Int smc_upper = 0;
  bool inconsistent = false;    // volume forces smc above 2m: bad table entry
  std::vector<std::string> chain;
};

namespace detail {

inline std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

} // namespace detail

inline Certificate certify_smc(const ConwayWord& word, double volume, double epsilon = default_epsilon) {
  require_positive_volume(volume);
  if (!all_b_even(word)) {
    throw Error(ErrorCode::even_b_required, format_conway(word) + " has an odd b_i");
  }
  Certificate c;
  c.m = static_cast<Int>(word.m());
  c.volume = volume;
  c.epsilon = epsilon;
  c.smc_lower = smc_lower_bound_from_volume(volume);
  c.smc_upper = 2 * c.m;
  if (c.m == 0) {
    c.status = CertificateStatus::inapplicable;
    c.chain.push_back("m = 0: no stable map bound to compare against");
    return c;
  }
  const double m = static_cast<double>(c.m);
  c.threshold = (4.0 * m - 2.0) * v_oct;
  c.inconsistent = c.smc_lower > c.smc_upper;
  using detail::fixed;
  c.chain.push_back("vol = " + fixed(volume) + ", v_oct = " + fixed(v_oct, 15) + ", m = " + std::to_string(c.m));
  c.chain.push_back("smc <= 2m = " + std::to_string(c.smc_upper));
  c.chain.push_back("smc >= vol / (2 v_oct) = " + fixed(volume / (2.0 * v_oct)) + ", so smc >= " +
                    std::to_string(c.smc_lower));
  const bool above = volume > c.threshold + epsilon;
  c.chain.push_back("(4m - 2) v_oct = " + fixed(c.threshold) + (above ? " < " : " >= ") + "vol - eps (eps = " +
                    [&] {
                      char buf[32];
                      std::snprintf(buf, sizeof buf, "%g", epsilon);
                      return std::string(buf);
                    }() + ")");
  if (c.inconsistent) {
    c.chain.push_back("vol > 4m v_oct = " + fixed(4.0 * m * v_oct) + ": lower bound exceeds 2m, volume inconsistent");
  }
  if (above) {
    c.status = CertificateStatus::certified;
    c.value = c.smc_upper;
    c.chain.push_back("2m - 1 < smc <= 2m, so smc = " + std::to_string(c.smc_upper));
  } else {
    c.status = CertificateStatus::inconclusive;
  }
  return c;
}

} // namespace twobridge
