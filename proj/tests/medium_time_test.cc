/* Copyright 2026 The pncc-features Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "pncc/medium_time.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "test_util.h"

namespace pncc {
namespace {

MelEnergies Column(const std::vector<double>& values) {
  MelEnergies e;
  e.values.resize(static_cast<Eigen::Index>(values.size()), 1);
  for (std::size_t t = 0; t < values.size(); ++t) e.values(t, 0) = values[t];
  return e;
}

TEST(MediumTimePowerTest, IdentityCases) {
  std::mt19937 gen(1);
  MelEnergies e;
  e.values = testing::RandomNonNegative(7, 5, gen);
  EXPECT_EQ(MediumTimePower(e, 0).values, e.values);

  MelEnergies constant;
  constant.values = Matrix::Constant(6, 3, 2.5);
  for (int m : {1, 2, 10}) {
    EXPECT_TRUE(MediumTimePower(constant, m).values.isApprox(constant.values, 1e-15));
  }
}

TEST(MediumTimePowerTest, EdgeClippedImpulse) {
  const MelEnergies out = MediumTimePower(Column({0, 0, 1, 0, 0}), 2);
  const double expected[] = {1.0 / 3, 1.0 / 4, 1.0 / 5, 1.0 / 4, 1.0 / 3};
  for (int t = 0; t < 5; ++t) EXPECT_NEAR(out.values(t, 0), expected[t], 1e-15);
}

TEST(MediumTimePowerTest, MatchesLoopOracle) {
  std::mt19937 gen(2);
  MelEnergies e;
  e.values = testing::RandomNonNegative(23, 4, gen);
  for (int m : {0, 1, 2, 5, 30}) {
    const MelEnergies out = MediumTimePower(e, m);
    for (int f = 0; f < 4; ++f) {
      std::vector<double> col(23);
      for (int t = 0; t < 23; ++t) col[t] = e.values(t, f);
      const std::vector<double> ref = oracle::ClippedMean(col, m);
      for (int t = 0; t < 23; ++t) EXPECT_NEAR(out.values(t, f), ref[t], 1e-14);
    }
  }
}

TEST(AsymmetricLowpassTest, SymmetricCaseIsFirstOrderIir) {
  const double lambda = 0.7, init = 3.0, c = 1.0;
  const std::vector<double> x(10, c);
  const std::vector<double> y = AsymmetricLowpass(x, lambda, lambda, init);
  for (int t = 0; t < 10; ++t) {
    EXPECT_NEAR(y[t], std::pow(lambda, t) * init + (1 - std::pow(lambda, t)) * c,
                1e-14);
  }
}

TEST(AsymmetricLowpassTest, FixedPointAndHandRecursion) {
  const std::vector<double> constant(8, 0.4);
  for (double y : AsymmetricLowpass(constant, 0.9, 0.3, 0.4)) {
    EXPECT_DOUBLE_EQ(y, 0.4);
  }
  const std::vector<double> y = AsymmetricLowpass(std::vector<double>{0, 1, 1}, 0.5, 0.25, 0.0);
  EXPECT_DOUBLE_EQ(y[0], 0.0);
  EXPECT_DOUBLE_EQ(y[1], 0.5);
  EXPECT_DOUBLE_EQ(y[2], 0.75);
}

TEST(AsymmetricLowpassTest, RisingInputNeverOvershootsAndSlowerWithLargerAttack) {
  std::vector<double> step(40, 0.0);
  for (int t = 5; t < 40; ++t) step[t] = 1.0;
  const std::vector<double> slow = AsymmetricLowpass(step, 0.95, 0.5, 0.0);
  const std::vector<double> sym = AsymmetricLowpass(step, 0.5, 0.5, 0.0);
  double running_max = 0.0;
  for (int t = 0; t < 40; ++t) {
    running_max = std::max(running_max, step[t]);
    EXPECT_LE(slow[t], running_max);
    EXPECT_LE(sym[t], running_max);
    EXPECT_LE(slow[t], sym[t]);
  }
}

TEST(NoiseSuppressTest, ZerosStayZero) {
  MelEnergies zeros;
  zeros.values = Matrix::Zero(10, 4);
  EXPECT_EQ(NoiseSuppressAndMask(zeros, MediumTimeConfig{}).values.cwiseAbs().maxCoeff(),
            0.0);
}

TEST(NoiseSuppressTest, GoldenThreeFrameChannel) {
  // Frozen from the scalar reference in oracles.h.
  const MelEnergies r = NoiseSuppressAndMask(Column({1.0, 0.2, 0.15}), MediumTimeConfig{});
  EXPECT_NEAR(r.values(0, 0), 0.1, 1e-12);
  EXPECT_NEAR(r.values(1, 0), 0.05, 1e-12);
  EXPECT_NEAR(r.values(2, 0), 0.025, 1e-12);
}

TEST(NoiseSuppressTest, GoldenMaskingChannel) {
  const SuppressionTrace trace = NoiseSuppressAndMaskTrace(
      Column({0.5, 0.5, 4.0, 3.0, 0.6, 0.5}), MediumTimeConfig{});
  const double expected[] = {0.05, 0.049975, 3.54640005, 0.70928001,
                             0.05604955526392515, 0.049857820883837535};
  for (int t = 0; t < 6; ++t) EXPECT_NEAR(trace.output(t, 0), expected[t], 1e-12);
  // Frame 3 falls below the decayed peak and is masked to mu_t * peak.
  EXPECT_NEAR(trace.masked(3, 0), 0.2 * 3.54640005, 1e-12);
}

TEST(NoiseSuppressTest, MatchesScalarOracleOnRandomInput) {
  std::mt19937 gen(4);
  MelEnergies q;
  q.values = testing::RandomNonNegative(50, 6, gen, 5.0);
  MediumTimeConfig config;
  config.ans_lambda_a = 0.9;
  config.ans_lambda_b = 0.4;
  const SuppressionTrace trace = NoiseSuppressAndMaskTrace(q, config);
  for (int f = 0; f < 6; ++f) {
    std::vector<double> col(50);
    for (int t = 0; t < 50; ++t) col[t] = q.values(t, f);
    const auto ref = oracle::SuppressChannel(col, 0.9, 0.4, 2.0, 0.85, 0.2);
    for (int t = 0; t < 50; ++t) {
      EXPECT_NEAR(trace.noise_floor(t, f), ref.floor[t], 1e-12);
      EXPECT_NEAR(trace.rectified(t, f), ref.rectified[t], 1e-12);
      EXPECT_NEAR(trace.rectified_floor(t, f), ref.rectified_floor[t], 1e-12);
      EXPECT_NEAR(trace.masked(t, f), ref.masked[t], 1e-12);
      EXPECT_NEAR(trace.output(t, f), ref.output[t], 1e-12);
    }
  }
}

TEST(NoiseSuppressTest, IncreasingInputDisablesMasking) {
  std::vector<double> rising;
  for (int t = 0; t < 30; ++t) rising.push_back(0.1 * (t + 1) * (t + 1));
  const SuppressionTrace trace =
      NoiseSuppressAndMaskTrace(Column(rising), MediumTimeConfig{});
  for (int t = 1; t < 30; ++t) {
    ASSERT_GE(trace.rectified(t, 0), trace.rectified(t - 1, 0));
    EXPECT_EQ(trace.masked(t, 0), trace.rectified(t, 0));
  }
}

TEST(NoiseSuppressTest, IntermediatesNonNegativeAndMaskingBounded) {
  std::mt19937 gen(8);
  for (int trial = 0; trial < 50; ++trial) {
    MelEnergies q;
    q.values = testing::RandomNonNegative(40, 5, gen, std::pow(10.0, trial % 7 - 3));
    const MediumTimeConfig config;
    const SuppressionTrace trace = NoiseSuppressAndMaskTrace(q, config);
    for (const Matrix* m : {&trace.noise_floor, &trace.rectified,
                            &trace.rectified_floor, &trace.masked, &trace.output}) {
      EXPECT_GE(m->minCoeff(), 0.0);
    }
    for (int f = 0; f < 5; ++f) {
      double peak = trace.rectified(0, f);
      double running_max = peak;
      for (int t = 1; t < 40; ++t) {
        const double x = trace.rectified(t, f);
        running_max = std::max(running_max, x);
        EXPECT_LE(trace.masked(t, f), std::max(x, config.masking_mu_t * peak) + 1e-15);
        EXPECT_LE(trace.masked(t, f), running_max + 1e-15);
        peak = std::max(config.masking_lambda_t * peak, x);
      }
    }
    const TransferFunction s = WeightSmoothing(MelEnergies{trace.output}, q, 4);
    EXPECT_GE(s.values.minCoeff(), 0.0);
    EXPECT_GE(ApplyMediumTime(q, config).values.minCoeff(), 0.0);
  }
}

TEST(WeightSmoothingTest, EqualInputsGiveUnitGain) {
  std::mt19937 gen(12);
  MelEnergies q;
  q.values = testing::RandomNonNegative(8, 10, gen).array() + 0.01;
  const TransferFunction s = WeightSmoothing(q, q, 4);
  EXPECT_EQ(s.values, Matrix::Ones(8, 10));
}

TEST(WeightSmoothingTest, ZeroHalfwidthIsPointwiseRatio) {
  std::mt19937 gen(13);
  MelEnergies r, q;
  r.values = testing::RandomNonNegative(6, 5, gen);
  q.values = testing::RandomNonNegative(6, 5, gen).array() + 0.1;
  const TransferFunction s = WeightSmoothing(r, q, 0);
  EXPECT_TRUE(s.values.isApprox(Matrix(r.values.array() / q.values.array()), 1e-15));
}

TEST(WeightSmoothingTest, WideWindowAveragesAllChannels) {
  MelEnergies r, q;
  r.values.resize(1, 3);
  q.values.resize(1, 3);
  r.values << 1.0, 2.0, 3.0;
  q.values << 2.0, 4.0, 1.0;
  const TransferFunction s = WeightSmoothing(r, q, 4);
  const double mean_ratio = (0.5 + 0.5 + 3.0) / 3.0;
  for (int f = 0; f < 3; ++f) EXPECT_NEAR(s.values(0, f), mean_ratio, 1e-15);
}

TEST(WeightSmoothingTest, SilentChannelsStayFinite) {
  MelEnergies zeros;
  zeros.values = Matrix::Zero(4, 6);
  const TransferFunction s = WeightSmoothing(zeros, zeros, 2);
  EXPECT_TRUE(s.values.allFinite());
  EXPECT_EQ(s.values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(TimeFrequencyNormalizeTest, ElementwiseProduct) {
  MelEnergies e;
  e.values.resize(1, 2);
  e.values << 2.0, 3.0;
  TransferFunction s;
  s.values.resize(1, 2);
  s.values << 0.5, 2.0;
  const MelEnergies out = TimeFrequencyNormalize(e, s);
  EXPECT_EQ(out.values(0, 0), 1.0);
  EXPECT_EQ(out.values(0, 1), 6.0);

  s.values = Matrix::Ones(1, 2);
  EXPECT_EQ(TimeFrequencyNormalize(e, s).values, e.values);
  s.values = Matrix::Zero(1, 2);
  EXPECT_EQ(TimeFrequencyNormalize(e, s).values, Matrix::Zero(1, 2));
  s.values = Matrix::Ones(2, 2);
  EXPECT_PNCC_ERROR(TimeFrequencyNormalize(e, s), ErrorCode::kDimensionMismatch);
}

TEST(ApplyMediumTimeTest, PassThroughIsExactIdentity) {
  std::mt19937 gen(14);
  MelEnergies e;
  e.values = testing::RandomNonNegative(30, 12, gen, 100.0).array() + 1e-6;
  MediumTimeConfig config;
  config.pass_through = true;
  EXPECT_EQ(ApplyMediumTime(e, config).values, e.values);
}

TEST(MediumTimeConfigTest, RejectsBadConstants) {
  MediumTimeConfig config;
  config.ans_lambda_b = 0.9999;  // above lambda_a
  EXPECT_PNCC_ERROR(config.Validate(), ErrorCode::kInvalidParameter);
  config = MediumTimeConfig{};
  config.floor_factor = 0.5;
  EXPECT_PNCC_ERROR(config.Validate(), ErrorCode::kInvalidParameter);
  config = MediumTimeConfig{};
  config.masking_lambda_t = 1.0;
  EXPECT_PNCC_ERROR(config.Validate(), ErrorCode::kInvalidParameter);
}

}  // namespace
}  // namespace pncc
