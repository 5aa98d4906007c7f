#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles/number_oracle.hpp"
#include "support/corpus.hpp"
#include "twobridge/complexity.hpp"
#include "twobridge/volume_table.hpp"

using namespace twobridge;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::invariant_violation;
}

SingularFiberCensus census(Int ii2, Int ii3) {
  SingularFiberCensus c;
  c.ii2 = ii2;
  c.ii3 = ii3;
  return c;
}

} // namespace

TEST(VOct, LobachevskyOracle) {
  const double pi = std::acos(-1.0);
  EXPECT_NEAR(v_oct, 8.0 * oracle::lobachevsky(pi / 4), 1e-10);
  EXPECT_NEAR(v_oct, 3.6638, 1e-4);
  EXPECT_EQ(std::floor(v_oct * 1e4), 36638.0);
}

TEST(WeightedSum, Examples) {
  EXPECT_EQ(weighted_sum(census(2, 0)), 2);
  EXPECT_EQ(weighted_sum(census(0, 1)), 2);
  EXPECT_EQ(weighted_sum(census(0, 0)), 0);
}

TEST(SmcUpperBound, Examples) {
  const auto u = smc_upper_bound(ConwayWord{3, 2, 3});
  EXPECT_EQ(u.value, 2);
  EXPECT_EQ(u.witness, Variant::f2);
  const auto v = smc_upper_bound(ConwayWord{2, 4, 2, 2, 2});
  EXPECT_EQ(v.value, 4);
  EXPECT_EQ(v.f3_weighted_sum, 6);
  EXPECT_EQ(code_of([] { smc_upper_bound(ConwayWord{2, 1, 2}); }), ErrorCode::even_b_required);
}

TEST(SmcLowerBound, Examples) {
  // 7.5 / 7.327724... = 1.0235...
  EXPECT_EQ(smc_lower_bound_from_volume(7.5), 2);
  EXPECT_EQ(smc_lower_bound_from_volume(3.6638), 1);
  EXPECT_EQ(code_of([] { smc_lower_bound_from_volume(0.0); }), ErrorCode::non_positive_volume);
  EXPECT_EQ(code_of([] { smc_lower_bound_from_volume(-1.0); }), ErrorCode::non_positive_volume);
  EXPECT_EQ(code_of([] { smc_lower_bound_from_volume(NAN); }), ErrorCode::non_positive_volume);
}

TEST(VolumeUpperBound, Examples) {
  EXPECT_NEAR(volume_upper_bound(ConwayWord{2, 2, 2}), 14.6554, 1e-4);
  EXPECT_NEAR(volume_upper_bound(ConwayWord{2, 2, 2, 2, 2}), 29.3109, 1e-4);
  EXPECT_DOUBLE_EQ(volume_upper_bound(ConwayWord{-3, -4, -3}), 4 * v_oct);
  EXPECT_EQ(code_of([] { volume_upper_bound(ConwayWord{2, 1, 2}); }), ErrorCode::not_reduced_alternating);
  EXPECT_EQ(code_of([] { volume_upper_bound(ConwayWord{5}); }), ErrorCode::torus_case);
}

TEST(CertifySmc, Examples) {
  const auto c = certify_smc(ConwayWord{2, 2, 2}, 14.0);
  EXPECT_EQ(c.status, CertificateStatus::certified);
  EXPECT_EQ(c.value, 2);
  EXPECT_FALSE(c.inconsistent);
  EXPECT_FALSE(c.chain.empty());
  const auto d = certify_smc(ConwayWord{2, 2, 2}, 3.6639);
  EXPECT_EQ(d.status, CertificateStatus::inconclusive);
  EXPECT_FALSE(d.value.has_value());
  EXPECT_EQ(code_of([] { certify_smc(ConwayWord{2, 1, 2}, 10.0); }), ErrorCode::even_b_required);
  EXPECT_EQ(certify_smc(ConwayWord{5}, 10.0).status, CertificateStatus::inapplicable);
  EXPECT_EQ(code_of([] { certify_smc(ConwayWord{2, 2, 2}, 0.0); }), ErrorCode::non_positive_volume);
}

TEST(CertifySmc, ThresholdWithinEpsilon) {
  for (Int m = 1; m <= 6; ++m) {
    ConwayWord w(std::vector<Int>(2 * m + 1, 2));
    const double t = (4.0 * m - 2.0) * v_oct;
    EXPECT_EQ(certify_smc(w, t).status, CertificateStatus::inconclusive);
    EXPECT_EQ(certify_smc(w, t + 0.5e-9).status, CertificateStatus::inconclusive);
    EXPECT_EQ(certify_smc(w, t + 2e-9).status, CertificateStatus::certified);
    EXPECT_EQ(certify_smc(w, t + 2e-9, 1e-6).status, CertificateStatus::inconclusive);
  }
}

TEST(CertifySmc, InconsistencyFlag) {
  const auto c = certify_smc(ConwayWord{2, 2, 2}, 4 * v_oct + 0.1);
  EXPECT_TRUE(c.inconsistent);
  EXPECT_GT(c.smc_lower, c.smc_upper);
  EXPECT_FALSE(certify_smc(ConwayWord{2, 2, 2}, 4 * v_oct).inconsistent);
}

TEST(CertifySmc, Monotone) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> vol(0.01, 60.0);
  for (const auto& w : corpus::even_b_words(20)) {
    std::vector<double> vs(200);
    for (double& v : vs) v = vol(rng);
    std::sort(vs.begin(), vs.end());
    bool seen = false;
    for (double v : vs) {
      const bool certified = certify_smc(w, v).status == CertificateStatus::certified;
      ASSERT_TRUE(!seen || certified) << format_conway(w) << " " << v;
      seen = seen || certified;
    }
  }
}

TEST(CertifySmc, ThresholdAlgebra) {
  // rational samples v = k / 97 on (0, 60]
  for (Int m = 1; m <= 6; ++m) {
    ConwayWord w(std::vector<Int>(2 * m + 1, 4));
    for (int k = 1; k <= 97 * 60; ++k) {
      const double v = k / 97.0;
      if (v > 4.0 * m * v_oct) break;
      if (std::abs(v - (4.0 * m - 2.0) * v_oct) < 1e-8) continue;
      const bool certified = certify_smc(w, v).status == CertificateStatus::certified;
      ASSERT_EQ(certified, smc_lower_bound_from_volume(v) == 2 * m) << m << " " << v;
    }
  }
}

TEST(CertifySmc, UpperEqualsF2WeightedSum) {
  for (const auto& w : corpus::even_b_words()) {
    ASSERT_EQ(smc_upper_bound(w).value, 2 * static_cast<Int>(w.m()));
    ASSERT_EQ(smc_upper_bound(w).f3_weighted_sum, w.sum_abs_b());
  }
}

TEST(ComplexityBounds, Fragments) {
  const auto b = complexity_bounds(ConwayWord{2, 2, 2}, 14.0);
  ASSERT_TRUE(b.smc_upper && b.smc_lower && b.volume_upper);
  EXPECT_LE(*b.smc_lower, b.smc_upper->value);
  const auto c = complexity_bounds(ConwayWord{2, 1, 2});
  EXPECT_FALSE(c.smc_upper);
  EXPECT_FALSE(c.smc_lower);
  EXPECT_FALSE(c.volume_upper);
}

TEST(VolumeTable, Parses) {
  const auto t = ingest_volume_table(
      "# label,reference,volume\n"
      "whitehead,C(2,-2,2)-like,3.663862\n"
      "\n"
      "fig8,5/2,2.029883\n"
      "w222, C(2,2,2) ,14.0\n",
      "census.csv");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.records()[0].reference, "C(2,-2,2)-like");
  EXPECT_FALSE(t.records()[0].word);
  EXPECT_EQ(t.records()[0].source, "census.csv:2");
  EXPECT_DOUBLE_EQ(t.find_label("fig8")->volume, 2.029883);
  EXPECT_EQ(t.find_label("fig8")->fraction, SchubertFraction(5, 2));
  EXPECT_EQ(t.find_label("w222")->word, (ConwayWord{2, 2, 2}));
  EXPECT_EQ(t.find_link(ConwayWord{2, 2, 2})->label, "w222");
  EXPECT_EQ(t.find_link(ConwayWord{2, 1, 1})->label, "fig8");
  EXPECT_EQ(t.find_link(ConwayWord{7}), nullptr);
}

TEST(VolumeTable, Errors) {
  try {
    ingest_volume_table("a,C(3),1.0\n# c\nbroken line\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse_error);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { ingest_volume_table("a,C(3),x\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { ingest_volume_table("a,C(3),-1\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { ingest_volume_table(",C(3),1\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { ingest_volume_table("a,C(3),1\na,C(5),2\n"); }), ErrorCode::duplicate_label);
}
