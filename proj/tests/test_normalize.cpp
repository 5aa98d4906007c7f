#include <gtest/gtest.h>

#include <numeric>

#include "oracles/number_oracle.hpp"
#include "twobridge/normalize.hpp"

using namespace twobridge;

namespace {

void expect_valid_witness(const ConwayWord& input, const NormalizeOutcome& r) {
  ASSERT_TRUE(r.found()) << format_conway(input);
  EXPECT_EQ(r.word->size() % 2, 1u);
  EXPECT_TRUE(all_b_even(*r.word)) << format_conway(*r.word);
  const auto f = fraction_of(input), g = fraction_of(*r.word);
  EXPECT_TRUE(oracle::schubert_orbit(f.p(), f.q(), false).count(g.q()) && f.p() == g.p())
      << format_conway(input) << " -> " << format_conway(*r.word);
}

} // namespace

TEST(EvenBNormalize, FixedPoint) {
  const auto r = even_b_normalize(ConwayWord{3, 2, 3});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.word, (ConwayWord{3, 2, 3}));
  EXPECT_EQ(r.method, NormalizeMethod::unchanged);
}

TEST(EvenBNormalize, OddBTwoComponent) {
  const ConwayWord w{2, 1, 2};
  ASSERT_EQ(fraction_of(w).p() % 2, 0);
  const auto r = even_b_normalize(w);
  expect_valid_witness(w, r);
  EXPECT_EQ(r.method, NormalizeMethod::exhaustive_search);
}

TEST(EvenBNormalize, KnotsOftenHaveWitnesses) {
  // figure-eight: C(2,1,1) evaluates to 5/2
  const ConwayWord w{2, 1, 1};
  const auto r = even_b_normalize(w);
  expect_valid_witness(w, r);
}

TEST(EvenBNormalize, MinimalWitness) {
  // 8/3 has no even-b word of length 1, and C(3,-2,...) style words of length 3
  // with smaller sum do not reach it
  const auto r = even_b_normalize(ConwayWord{2, 1, 2});
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.word->size(), 3u);
  Int best = r.word->sum_abs();
  // brute force all length-3 even-b words with smaller sums
  for (Int a1 = -best; a1 <= best; ++a1)
    for (Int b1 = -best; b1 <= best; b1 += 2)
      for (Int a2 = -best; a2 <= best; ++a2) {
        if (!a1 || !b1 || !a2) continue;
        ConwayWord c{a1, b1, a2};
        if (c.sum_abs() >= best) continue;
        auto [num, den] = oracle::evaluate_right_to_left(c.entries());
        Int p = num < 0 ? -num : num;
        if (p != 8) continue;
        Int q = ((num < 0 ? -den : den) % p + p) % p;
        EXPECT_FALSE(oracle::schubert_orbit(8, 3, false).count(q)) << format_conway(c);
      }
}

TEST(EvenBNormalize, KnotFailureReportsBound) {
  const ConwayWord w{1, 3, 1};  // 5/4, a knot
  const SearchBound tiny{4, 1};
  const auto r = even_b_normalize(w, tiny);
  EXPECT_FALSE(r.found());
  EXPECT_EQ(r.method, NormalizeMethod::none);
  const std::string msg = describe_failure(w, r);
  EXPECT_NE(msg.find("<= 4"), std::string::npos);
  EXPECT_NE(msg.find("length <= 1"), std::string::npos);
}

TEST(EvenBNormalize, EvenExpansionFallback) {
  const ConwayWord w{2, 1, 2};
  const auto r = even_b_normalize(w, SearchBound{40, 1});
  expect_valid_witness(w, r);
  EXPECT_EQ(r.method, NormalizeMethod::even_expansion);
}

TEST(EvenBNormalize, EveryTwoComponentFractionUpTo40) {
  for (Int p = 2; p <= 40; p += 2) {
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      // input word: plain continued fraction expansion of p/q
      std::vector<Int> e;
      Int n = p, d = q;
      while (d != 0) {
        e.push_back(n / d);
        Int r = n % d;
        n = d;
        d = r;
      }
      if (e.size() % 2 == 0) {  // [.., c] = [.., c - 1, 1]
        e.back() -= 1;
        e.push_back(1);
      }
      const ConwayWord w(e);
      ASSERT_EQ(fraction_of(w), SchubertFraction(p, q));
      const auto r = even_b_normalize(w);
      expect_valid_witness(w, r);
      EXPECT_NE(r.method, NormalizeMethod::even_expansion) << p << "/" << q;
    }
  }
}
