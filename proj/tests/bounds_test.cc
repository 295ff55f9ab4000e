//
// Copyright 2026 The Rerolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "rerolab/bounds/audit.h"
#include "rerolab/bounds/baseline.h"
#include "rerolab/bounds/separation.h"
#include "rerolab/core/enumeration.h"
#include "test_util.h"

namespace rerolab {
namespace {

using ::rerolab::testing::Bits;
using ::rerolab::testing::Labels;
using ::rerolab::testing::MakeGame;
using ::testing::DoubleNear;
using ::testing::Ge;

constexpr double kInf = std::numeric_limits<double>::infinity();

// max over z of Pr[z appears in an ordered n-tuple], by visiting all tuples.
double OrderedKappaBarOracle(const Distribution& d, int n) {
  const std::uint64_t size = d.universe().size();
  double best = 0.0;
  for (RecordId z = 0; z < size; ++z) {
    double p = 0.0;
    for (std::uint64_t i = 0; i < OrderedDatasetCount(size, n); ++i) {
      const Dataset x = DecodeDataset(i, size, n);
      for (RecordId r : x) {
        if (r == z) {
          p += d.DatasetProbability(x);
          break;
        }
      }
    }
    best = std::max(best, p);
  }
  return best;
}

TEST(KappaTest, Examples) {
  EXPECT_EQ(ComputeKappa(Distribution::Uniform(Bits(4)), {}).value().value,
            0.0625);
  const RecordUniverse u = Labels({"a", "b", "c"});
  ASSERT_OK_AND_ASSIGN(Distribution point, Distribution::PointMass(u, 1));
  EXPECT_EQ(ComputeKappa(point, {}).value().value, 1.0);
  ASSERT_OK_AND_ASSIGN(Distribution skewed,
                       Distribution::FromPmf(u, {0.5, 0.3, 0.2}));
  ASSERT_OK_AND_ASSIGN(KappaResult kappa, ComputeKappa(skewed, {}));
  EXPECT_EQ(kappa.value, 0.5);
  EXPECT_EQ(kappa.argmax, 0u);
}

TEST(KappaTest, UniformBitstringsArePowersOfTwo) {
  for (int k = 1; k <= 10; ++k) {
    EXPECT_EQ(ComputeKappa(Distribution::Uniform(Bits(k)), {}).value().value,
              std::ldexp(1.0, -k));
  }
}

TEST(KappaBarTest, SingleRecordEqualsKappa) {
  const RecordUniverse u = Labels({"a", "b", "c"});
  ASSERT_OK_AND_ASSIGN(Distribution d, Distribution::FromPmf(u, {0.2, 0.7, 0.1}));
  EXPECT_EQ(ComputeKappaBar(d, {}, 1).value().value,
            ComputeKappa(d, {}).value().value);
}

TEST(KappaBarTest, UniformFourBitsThreeRecords) {
  const Distribution d = Distribution::Uniform(Bits(4));
  ASSERT_OK_AND_ASSIGN(KappaResult closed, ComputeKappaBar(d, {}, 3));
  EXPECT_EQ(closed.value, 0.176025390625);
  ASSERT_OK_AND_ASSIGN(KappaResult enumerated, KappaBarByEnumeration(d, {}, 3));
  EXPECT_THAT(enumerated.value, DoubleNear(closed.value, 1e-12));
  EXPECT_THAT(OrderedKappaBarOracle(d, 3), DoubleNear(closed.value, 1e-12));
}

TEST(KappaBarTest, ClosedFormMatchesOrderedOracle) {
  const RecordUniverse u = Labels({"a", "b", "c", "d"});
  ASSERT_OK_AND_ASSIGN(Distribution d,
                       Distribution::FromPmf(u, {0.1, 0.45, 0.25, 0.2}));
  for (int n = 1; n <= 4; ++n) {
    ASSERT_OK_AND_ASSIGN(KappaResult closed, ComputeKappaBar(d, {}, n));
    EXPECT_THAT(closed.value, DoubleNear(OrderedKappaBarOracle(d, n), 1e-12));
    ASSERT_OK_AND_ASSIGN(KappaResult enumerated, KappaBarByEnumeration(d, {}, n));
    EXPECT_THAT(enumerated.value, DoubleNear(closed.value, 1e-12));
    EXPECT_EQ(closed.argmax, 1u);
  }
}

TEST(KappaBarTest, ElementOfWeightOneOverN) {
  for (int n = 2; n <= 6; ++n) {
    const RecordUniverse u = Labels({"heavy", "rest"});
    ASSERT_OK_AND_ASSIGN(Distribution d,
                         Distribution::FromPmf(u, {1.0 / n, 1.0 - 1.0 / n}));
    ASSERT_OK_AND_ASSIGN(KappaResult kappa_bar, ComputeKappaBar(d, {}, n));
    EXPECT_THAT(kappa_bar.value, Ge(1.0 - std::pow(1.0 - 1.0 / n, n) - 1e-15));
  }
}

TEST(KappaBarTest, EnumerationCap) {
  EXPECT_FALSE(
      KappaBarByEnumeration(Distribution::Uniform(Bits(4)), {}, 3, 100).ok());
  EXPECT_FALSE(ComputeKappaBar(Distribution::Uniform(Bits(2)), {}, 0).ok());
}

TEST(DpAuditTest, RandomizedResponseLn3) {
  ASSERT_OK_AND_ASSIGN(
      BoundAudit audit,
      AuditDpBound(MakeGame(GameVariant::kAvgDistReRo,
                            Distribution::Uniform(Bits(1)), 1,
                            MechanismKind::kRandomizedResponse, std::log(3.0))));
  EXPECT_TRUE(audit.applicable);
  EXPECT_TRUE(audit.passed);
  EXPECT_THAT(audit.gamma_exact, DoubleNear(0.75, 1e-12));
  EXPECT_THAT(audit.bound_value, DoubleNear(1.5, 1e-12));
  EXPECT_THAT(audit.margin, DoubleNear(0.75, 1e-12));
}

TEST(DpAuditTest, ConstantIsTight) {
  for (GameVariant variant :
       {GameVariant::kAvgDistReRo, GameVariant::kBcDistReRo}) {
    ASSERT_OK_AND_ASSIGN(
        BoundAudit audit,
        AuditDpBound(MakeGame(variant, Distribution::Uniform(Bits(2)), 1,
                              MechanismKind::kConstant)));
    EXPECT_EQ(audit.margin, 0.0);
    EXPECT_TRUE(audit.passed);
  }
}

TEST(DpAuditTest, BestCaseBoundIsClamped) {
  ASSERT_OK_AND_ASSIGN(
      BoundAudit audit,
      AuditDpBound(MakeGame(GameVariant::kBcDistReRo,
                            Distribution::Uniform(Bits(1)), 3,
                            MechanismKind::kRandomizedResponse, 2.0)));
  EXPECT_THAT(audit.bound_raw, DoubleNear(3.0 * std::exp(2.0) * 0.5, 1e-12));
  EXPECT_EQ(audit.bound_value, 1.0);
  EXPECT_TRUE(audit.passed);
}

TEST(DpAuditTest, SeparationIsNotApplicable) {
  ASSERT_OK_AND_ASSIGN(
      BoundAudit audit,
      AuditDpBound(MakeGame(GameVariant::kAvgDistReRo,
                            Distribution::Uniform(Bits(2)), 2,
                            MechanismKind::kSeparation)));
  EXPECT_FALSE(audit.applicable);
  EXPECT_TRUE(audit.passed);
  EXPECT_EQ(audit.bound_value, kInf);
}

TEST(DpAuditTest, RejectsReRoAndBadEpsilon) {
  GameConfig config = MakeGame(GameVariant::kReRo, Distribution::Uniform(Bits(1)),
                               1, MechanismKind::kConstant);
  config.fixed_context = Dataset();
  EXPECT_FALSE(AuditDpBound(config, 0.0).ok());
  config.variant = GameVariant::kAvgDistReRo;
  config.fixed_context.reset();
  EXPECT_FALSE(AuditDpBound(config, -1.0).ok());
  EXPECT_FALSE(ParseTheoremId("dp_to_rero").ok());
  EXPECT_EQ(ParseTheoremId("rero_to_bc").value(), TheoremId::kReroToBc);
}

TEST(TransferAuditTest, ConstantIsTight) {
  ASSERT_OK_AND_ASSIGN(
      TransferAudit audit,
      AuditReroTransfer(MakeGame(GameVariant::kAvgDistReRo,
                                 Distribution::Uniform(Bits(2)), 2,
                                 MechanismKind::kConstant)));
  EXPECT_EQ(audit.gamma_rero, 0.25);
  EXPECT_EQ(audit.avg.gamma_exact, 0.25);
  EXPECT_EQ(audit.avg.margin, 0.0);
  EXPECT_TRUE(audit.bc.passed);
}

TEST(TransferAuditTest, IdentityHoldsVacuously) {
  ASSERT_OK_AND_ASSIGN(
      TransferAudit audit,
      AuditReroTransfer(MakeGame(GameVariant::kAvgDistReRo,
                                 Distribution::Uniform(Bits(2)), 2,
                                 MechanismKind::kIdentity)));
  EXPECT_THAT(audit.gamma_rero, DoubleNear(1.0, 1e-15));
  EXPECT_TRUE(audit.avg.passed);
  EXPECT_TRUE(audit.bc.passed);
  EXPECT_THAT(audit.bc.bound_value, DoubleNear(2.0, 1e-15));
}

TEST(TransferAuditTest, RandomizedResponseMargins) {
  ASSERT_OK_AND_ASSIGN(
      TransferAudit audit,
      AuditReroTransfer(MakeGame(GameVariant::kAvgDistReRo,
                                 Distribution::Uniform(Bits(1)), 2,
                                 MechanismKind::kRandomizedResponse, 1.0)));
  const double truthful = std::exp(1.0) / (std::exp(1.0) + 1.0);
  EXPECT_THAT(audit.gamma_rero, DoubleNear(truthful, 1e-12));
  EXPECT_THAT(audit.avg.margin, Ge(0.0));
  EXPECT_THAT(audit.bc.margin, Ge(0.0));
}

TEST(GridAuditTest, RowsKeepOrderAndIgnoreThreadCount) {
  std::vector<GameConfig> cells;
  for (double eps : {0.1, 2.0}) {
    for (int n : {1, 2, 3}) {
      cells.push_back(MakeGame(GameVariant::kAvgDistReRo,
                               Distribution::Uniform(Bits(1)), n,
                               MechanismKind::kRandomizedResponse, eps));
      cells.push_back(MakeGame(GameVariant::kAvgDistReRo,
                               Distribution::Uniform(Bits(2)), n,
                               MechanismKind::kNoisyHistogram, eps));
    }
  }
  ASSERT_OK_AND_ASSIGN(std::vector<GridAuditRow> serial, AuditGrid(cells, 1));
  ASSERT_OK_AND_ASSIGN(std::vector<GridAuditRow> parallel, AuditGrid(cells, 4));
  ASSERT_EQ(serial.size(), cells.size());
  ASSERT_EQ(parallel.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    EXPECT_EQ(serial[i].config.n, cells[i].n);
    EXPECT_EQ(serial[i].config.mechanism, cells[i].mechanism);
    EXPECT_EQ(serial[i].dp_avg.gamma_exact, parallel[i].dp_avg.gamma_exact);
    EXPECT_EQ(serial[i].transfer.gamma_rero, parallel[i].transfer.gamma_rero);
    EXPECT_TRUE(serial[i].passed());
  }
  EXPECT_TRUE(AuditGrid({}, 4).value().empty());
}

TEST(GridAuditTest, ReportsCellErrors) {
  GameConfig too_big = MakeGame(GameVariant::kAvgDistReRo,
                                Distribution::Uniform(Bits(3)), 3,
                                MechanismKind::kRandomizedResponse, 1.0);
  too_big.enumeration_cap = 1000;
  EXPECT_FALSE(AuditGrid({too_big}, 2).ok());
}

// Closed forms for the separation instance under a uniform prior on
// {0,1}^k with N = 2^k, counted over the N^n ordered datasets.
//   fixture: a released x* is guessed back and scores 1/n on each of its n
//     datasets; all-zeros scores 1; the guess 1...1 on bottom contributes
//     the rest.
//   Bayes: on a released x* the guess 0...0 matches n-1 records, so each of
//     the n (N-1) such datasets scores (n-1)/n.
double SeparationFixtureOracle(int k, int n) {
  const double size = std::ldexp(1.0, k);
  return (std::pow(size, n - 1) + size - 1.0) / std::pow(size, n);
}

double SeparationBayesOracle(int k, int n) {
  const double size = std::ldexp(1.0, k);
  return ((n - 1) * (size - 1.0) + std::pow(size, n - 1)) / std::pow(size, n);
}

TEST(SeparationTest, ReRoProngHoldsAndMechanismIsNotDp) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 3}}) {
    ASSERT_OK_AND_ASSIGN(SeparationReport r, SeparationExperiment(k, n));
    EXPECT_EQ(r.rero_fixture, 1.0);
    EXPECT_TRUE(r.rero_prong_holds());
    EXPECT_EQ(r.kappa, std::ldexp(1.0, -k));
    EXPECT_EQ(r.measured_epsilon, kInf);
    EXPECT_EQ(r.avg_bound, std::ldexp(1.0, -k) + std::ldexp(1.0, -(n - 1) * k));
  }
}

TEST(SeparationTest, AverageSuccessMatchesClosedForms) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 2; n <= 4; ++n) {
      if (k * n > 12) continue;
      ASSERT_OK_AND_ASSIGN(SeparationReport r, SeparationExperiment(k, n));
      EXPECT_THAT(r.avg_fixture, DoubleNear(SeparationFixtureOracle(k, n), 1e-12))
          << k << "," << n;
      EXPECT_THAT(r.avg_bayes, DoubleNear(SeparationBayesOracle(k, n), 1e-12))
          << k << "," << n;
      EXPECT_TRUE(r.avg_fixture_holds()) << k << "," << n;
    }
  }
}

TEST(SeparationTest, SmallInstancesSatisfyTheAverageBound) {
  ASSERT_OK_AND_ASSIGN(SeparationReport r22, SeparationExperiment(2, 2));
  EXPECT_EQ(r22.avg_bayes, 7.0 / 16.0);
  EXPECT_TRUE(r22.avg_prong_holds());
  ASSERT_OK_AND_ASSIGN(SeparationReport r32, SeparationExperiment(3, 2));
  EXPECT_EQ(r32.avg_bayes, 15.0 / 64.0);
  EXPECT_TRUE(r32.avg_prong_holds());
}

TEST(SeparationTest, BayesExceedsTheAverageBoundFromThreeRecords) {
  // Guessing 0...0 on a released record beats guessing the record itself
  // once n >= 3, and the gain exceeds the 2^-k + 2^-(n-1)k allowance.
  ASSERT_OK_AND_ASSIGN(SeparationReport r, SeparationExperiment(4, 3));
  EXPECT_THAT(r.avg_bayes, DoubleNear(286.0 / 4096.0, 1e-15));
  EXPECT_THAT(r.avg_fixture, DoubleNear(271.0 / 4096.0, 1e-15));
  EXPECT_EQ(r.avg_bound, 272.0 / 4096.0);
  EXPECT_TRUE(r.avg_fixture_holds());
  EXPECT_FALSE(r.avg_bayes_holds());
}

TEST(SeparationTest, RejectsSingleRecord) {
  EXPECT_FALSE(SeparationExperiment(2, 1).ok());
  EXPECT_FALSE(SeparationExperiment(0, 2).ok());
}

}  // namespace
}  // namespace rerolab
