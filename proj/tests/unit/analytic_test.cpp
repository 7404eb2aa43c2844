// Copyright 2026 The twinbeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "twinbeam/analytic.hpp"

namespace twinbeam {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLn2 = std::numbers::ln2;

// Values below marked "mpmath" were evaluated independently at 30 digits.

TEST(Negativity, NoiselessClosedForm) {
  const Negativity n = negativity({1, 0, 0});
  EXPECT_NEAR(n.value, 1.0 + kSqrt2, 1e-15);
  EXPECT_EQ(n.raw, n.value);
}

TEST(Negativity, NoPairsIsSeparable) {
  const Negativity n = negativity({0, 0.5, 0});
  EXPECT_EQ(n.raw, 0.0);
  EXPECT_EQ(n.value, 0.0);
}

TEST(Negativity, NoisyPoint) {
  // mpmath: 7.05897948556635619639456814941 / 6.08
  EXPECT_NEAR(negativity({2, 0.1, 0.1}).value, 1.16101636275762437, 1e-14);
}

TEST(Negativity, SeparableRawIsNegativeButClamped) {
  const Negativity n = negativity({0.1, 1, 1});
  EXPECT_LT(n.raw, 0.0);
  EXPECT_EQ(n.value, 0.0);
}

TEST(NegativityBlockForm, MatchesDirectForm) {
  EXPECT_NEAR(negativity_block_form({2, 0.1, 0.1}), 1.16101636275762437, 1e-13);
  EXPECT_EQ(negativity_block_form({0, 0, 0}), 0.0);
  EXPECT_NEAR(negativity_block_form({1, 0, 0}), 1.0 + kSqrt2, 1e-14);
}

TEST(IsEntangled, Examples) {
  for (double bp : {0.0, 0.1, 1.0, 10.0, 1e6}) {
    EXPECT_FALSE(is_entangled({bp, 0.5, 0.5}));
  }
  EXPECT_FALSE(b_p_threshold(0.5, 0.5).has_value());
  EXPECT_TRUE(is_entangled({0.2, 0.25, 0.25}));
  EXPECT_DOUBLE_EQ(*b_p_threshold(0.25, 0.25), 0.125);
  EXPECT_TRUE(is_entangled({0.1, 0, 0}));
  EXPECT_DOUBLE_EQ(*b_p_threshold(0, 0), 0.0);
}

TEST(IsEntangled, ExactBoundaryIsNotEntangled) {
  // b_p (1 - 0.5) = 0.25 * 0.25 at b_p = 0.125, all exact in binary.
  EXPECT_FALSE(is_entangled({0.125, 0.25, 0.25}));
  EXPECT_FALSE(is_entangled({0, 0, 0}));
}

TEST(NonclassicalDepth, Examples) {
  EXPECT_NEAR(nonclassical_depth({1, 0, 0}), kSqrt2 - 1.0, 1e-15);
  EXPECT_EQ(nonclassical_depth({0, 0, 0}), 0.0);
  // mpmath: 0.5 (sqrt(24) - 4.2)
  EXPECT_NEAR(nonclassical_depth({2, 0.1, 0.1}), 0.349489742783178098, 1e-15);
}

TEST(NonclassicalDepth, ClassicalBeamsAreNegative) {
  EXPECT_LT(nonclassical_depth({0.1, 1, 1}), 0.0);
  EXPECT_LT(nonclassical_depth({0, 0.3, 0.2}), 0.0);
}

TEST(NonclassicalDepth, MatchesPrintedFormOnGrid) {
  for (double bp = 0.0; bp <= 8.0; bp += 0.5) {
    for (double bs = 0.0; bs <= 2.0; bs += 0.25) {
      for (double bi = 0.0; bi <= 2.0; bi += 0.25) {
        const double direct =
            0.5 * (std::sqrt((bs - bi) * (bs - bi) + 4 * bp * (bp + 1)) - 2 * bp - bs - bi);
        EXPECT_NEAR(nonclassical_depth({bp, bs, bi}), direct, 1e-13);
      }
    }
  }
}

TEST(TauMapping, Examples) {
  EXPECT_EQ(negativity_from_tau(0.0), 0.0);
  EXPECT_DOUBLE_EQ(negativity_from_tau(0.25), 0.5);
  EXPECT_DOUBLE_EQ(tau_from_negativity(0.5), 0.25);
  const double tau = nonclassical_depth({2, 0.1, 0.1});
  EXPECT_NEAR(negativity_from_tau(tau), negativity({2, 0.1, 0.1}).value, 1e-14);
}

TEST(TauMapping, ForwardMapRejectsHalfAndAbove) {
  EXPECT_THROW(negativity_from_tau(0.5), DomainError);
  EXPECT_THROW(negativity_from_tau(0.7), DomainError);
  EXPECT_THROW(negativity_from_tau(std::nan("")), DomainError);
  EXPECT_THROW(tau_from_negativity(-0.5), DomainError);
}

TEST(TauMappingProperty, RoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> tau_dist(-5.0, 0.4999);
  for (int k = 0; k < 2000; ++k) {
    const double tau = tau_dist(rng);
    EXPECT_NEAR(tau_from_negativity(negativity_from_tau(tau)), tau, 1e-12 * (1 + std::abs(tau)));
  }
}

TEST(EntanglementDimensionality, Examples) {
  EXPECT_EQ(entanglement_dimensionality({0, 1, 1}), 1.0);
  EXPECT_NEAR(entanglement_dimensionality({1, 0, 0}), 3.0 + 2.0 * kSqrt2, 1e-14);
  const double rs = participation_ratio({1, 0, 0}, Field::kSignal);
  EXPECT_NEAR(entanglement_dimensionality({1, 0, 0}), rs + std::sqrt(rs * rs - 1.0), 1e-14);
}

TEST(ParticipationRatio, Examples) {
  EXPECT_EQ(participation_ratio({0, 0, 0}, Field::kSignal), 1.0);
  EXPECT_EQ(participation_ratio({1, 0, 0}, Field::kSignal), 3.0);
  EXPECT_EQ(participation_ratio({2, 0.5, 0}, Field::kSignal), 6.0);
  EXPECT_EQ(participation_ratio({2, 0.5, 0}, Field::kIdler), 5.0);
}

TEST(SchmidtCoefficients, Examples) {
  const auto vac = schmidt_coefficients(0.0, 4);
  ASSERT_EQ(vac.size(), 5u);
  EXPECT_EQ(vac[0], 1.0);
  for (std::size_t j = 1; j < vac.size(); ++j) EXPECT_EQ(vac[j], 0.0);

  const auto one = schmidt_coefficients(1.0, 2);
  EXPECT_NEAR(one[0], 1.0 / kSqrt2, 1e-15);
  EXPECT_NEAR(one[1], 0.5, 1e-15);
  EXPECT_NEAR(one[2], 0.35355339059327376, 1e-15);

  EXPECT_THROW(schmidt_coefficients(-1.0, 3), ParamError);
  EXPECT_THROW(schmidt_coefficients(1.0, -1), ParamError);
}

TEST(SchmidtCoefficients, BoundaryRatioTendsToInverseE) {
  const double bp = 1e4;
  const double rs = 2.0 * bp + 1.0;
  const double k_ent = rs + std::sqrt(rs * rs - 1.0);
  const auto c = schmidt_coefficients(bp, static_cast<int>(k_ent) + 1);
  const double ratio = c[static_cast<std::size_t>(k_ent - 1.0)] /
                       c[static_cast<std::size_t>(rs - 1.0)];
  EXPECT_NEAR(ratio, std::pow(bp / (1.0 + bp), bp + 1.0), 1e-3);
  EXPECT_NEAR(ratio, std::exp(-1.0), 1e-3);
}

TEST(SchmidtCoefficientsProperty, NormApproachesOneFromBelow) {
  for (double bp : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    const auto c = schmidt_coefficients(bp, 400);
    double previous = 0.0;
    double sum = 0.0;
    for (double cj : c) {
      sum += cj * cj;
      EXPECT_GE(sum, previous);
      EXPECT_LE(sum, 1.0 + 1e-15);
      previous = sum;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12) << "b_p = " << bp;
  }
}

TEST(ModifiedKEnt, Examples) {
  EXPECT_NEAR(modified_k_ent({1, 0, 0}), 3.0, 1e-14);
  EXPECT_NEAR(r_ent({1, 0, 0}), 1.0, 1e-14);
  // mpmath chain through N, K_ent, K~_ent, r_ent.
  const TwinBeamParams p{1, 0.1, 0.1};
  EXPECT_NEAR(negativity(p).value, 0.845631054630846004, 1e-14);
  EXPECT_NEAR(entanglement_dimensionality(p), 2.69126210926169201, 1e-14);
  EXPECT_NEAR(modified_k_ent(p), 1.38524273444298480, 1e-14);
  EXPECT_DOUBLE_EQ(participation_ratio(p, Field::kSignal), 3.2);
  EXPECT_NEAR(r_ent(p), 0.432888354513432749, 1e-14);
  EXPECT_EQ(modified_k_ent({0, 0, 0}), 1.0);
  EXPECT_EQ(r_ent({0, 0, 0}), 1.0);
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy({0, 0, 0}, Field::kSignal), 0.0);
  EXPECT_EQ(entropy_from_r(1.0), 0.0);
  EXPECT_NEAR(thermal_entropy(1.0), 2.0 * kLn2, 1e-15);
  EXPECT_NEAR(entropy_from_r(3.0), 2.0 * kLn2, 1e-15);
  // mpmath: 3.1 ln 3.1 - 2.1 ln 2.1
  EXPECT_NEAR(entropy({2, 0.1, 0.7}, Field::kSignal), 1.94927812169071939, 1e-14);
  EXPECT_THROW(entropy_from_r(0.99), DomainError);
  EXPECT_THROW(thermal_entropy(-1.0), DomainError);
}

TEST(Entropy, UnityOffsetBreaksPureStateLimit) {
  EXPECT_NEAR(entropy_from_r(1.0, EntropyOffset::kUnity), kLn2 - 1.0, 1e-15);
}

TEST(EntropyProperty, RelationToParticipationRatio) {
  for (int k = 0; k <= 1000; ++k) {
    const double t = 0.01 * k;
    EXPECT_NEAR(entropy_from_r(2.0 * t + 1.0), thermal_entropy(t), 1e-12) << "T = " << t;
  }
}

TEST(EntropyProperty, IncreasingInParticipationRatio) {
  double previous = -1.0;
  for (double r = 1.0; r < 50.0; r += 0.125) {
    const double s = entropy_from_r(r);
    EXPECT_GT(s, previous);
    previous = s;
  }
}

TEST(Analyze, ReportInvariants) {
  for (double bp : {0.0, 0.1, 1.0, 2.0, 4.0, 8.0}) {
    for (double bs : {0.0, 0.1, 0.5, 1.0, 2.0}) {
      for (double bi : {0.0, 0.1, 0.5, 1.0, 2.0}) {
        const QuantReport r = analyze({bp, bs, bi});
        EXPECT_EQ(r.negativity, std::max(r.raw_negativity, 0.0));
        EXPECT_EQ(r.entangled, r.negativity > 0.0);
        EXPECT_EQ(r.entangled, r.tau > 0.0);
        EXPECT_EQ(r.k_ent, 2.0 * r.negativity + 1.0);
        EXPECT_GE(r.r_s, 1.0);
        EXPECT_GE(r.r_i, 1.0);
        EXPECT_GT(r.r_ent, 0.0);
        EXPECT_LE(r.r_ent, 1.0 + 1e-12);
        EXPECT_GE(r.s_s, 0.0);
      }
    }
  }
}

// ---- properties over the b_p in [0, 8], b_s, b_i in [0, 2] grid -----------

class GridProperty : public ::testing::Test {
 protected:
  template <typename F>
  void for_each_point(F&& f) {
    for (int a = 0; a <= 32; ++a) {
      for (int b = 0; b <= 16; ++b) {
        for (int c = 0; c <= 16; ++c) f(TwinBeamParams{0.25 * a, 0.125 * b, 0.125 * c});
      }
    }
  }
};

TEST_F(GridProperty, BlockFormEqualsDirectForm) {
  for_each_point([](const TwinBeamParams& p) {
    const double raw = negativity(p).raw;
    EXPECT_NEAR(negativity_block_form(p), raw, 1e-12 * (1.0 + std::abs(raw)));
  });
}

TEST_F(GridProperty, NegativityIsMonotoneFunctionOfTau) {
  for_each_point([](const TwinBeamParams& p) {
    const double raw = negativity(p).raw;
    const double tau = nonclassical_depth(p);
    EXPECT_NEAR(raw, tau / (1.0 - 2.0 * tau), 1e-12 * (1.0 + std::abs(raw)));
  });
}

TEST_F(GridProperty, SignsCoincide) {
  for_each_point([](const TwinBeamParams& p) {
    const double raw = negativity(p).raw;
    const double tau = nonclassical_depth(p);
    const int sign_n = (raw > 0) - (raw < 0);
    const int sign_t = (tau > 0) - (tau < 0);
    EXPECT_EQ(sign_n, sign_t) << p.b_p << " " << p.b_s << " " << p.b_i;
    EXPECT_EQ(is_entangled(p), tau > 0.0);
  });
}

TEST_F(GridProperty, Monotonicity) {
  for_each_point([](const TwinBeamParams& p) {
    const double n = negativity(p).value;
    EXPECT_GE(negativity({p.b_p + 0.25, p.b_s, p.b_i}).value, n);
    EXPECT_LE(negativity({p.b_p, p.b_s + 0.125, p.b_i}).value, n);
    EXPECT_LE(negativity({p.b_p, p.b_s, p.b_i + 0.125}).value, n);
  });
}

TEST_F(GridProperty, TauBelowHalf) {
  for_each_point([](const TwinBeamParams& p) { EXPECT_LT(nonclassical_depth(p), 0.5); });
  EXPECT_GT(nonclassical_depth({1e6, 0, 0}), 0.4999);
  EXPECT_LT(nonclassical_depth({1e6, 0, 0}), 0.5);
}

TEST(NoiselessIdentities, HoldAcrossPairNumbers) {
  for (int k = 0; k <= 100; ++k) {
    const TwinBeamParams p{0.1 * k, 0, 0};
    const double rs = participation_ratio(p, Field::kSignal);
    EXPECT_NEAR(entanglement_dimensionality(p), rs + std::sqrt(rs * rs - 1.0), 1e-12);
    EXPECT_NEAR(modified_k_ent(p), rs, 1e-12);
    EXPECT_NEAR(r_ent(p), 1.0, 1e-12);
    EXPECT_NEAR(negativity(p).value, p.b_p + std::sqrt(p.b_p * (p.b_p + 1)), 1e-12);
    EXPECT_NEAR(nonclassical_depth(p), std::sqrt(p.b_p * (p.b_p + 1)) - p.b_p, 1e-12);
  }
}

TEST(BoundaryProperty, RandomBoundaryPointsHaveZeroTau) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const double bs = u(rng);
    const double bi = u(rng) * (1.0 - bs) * 0.999;
    const auto bp = b_p_threshold(bs, bi);
    ASSERT_TRUE(bp.has_value());
    EXPECT_LE(std::abs(nonclassical_depth({*bp, bs, bi})), 1e-10);
    EXPECT_LE(std::abs(negativity({*bp, bs, bi}).raw), 1e-10);
  }
}

}  // namespace
}  // namespace twinbeam
