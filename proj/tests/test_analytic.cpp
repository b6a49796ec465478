// Copyright 2026 The zeno-screen Authors
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

#include "zeno/analytic.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

using namespace zeno;
using namespace zeno::analytic;

namespace {

constexpr double kPi = std::numbers::pi;

// Expected values below were produced by integrating the single-excitation
// amplitude equations c_e' = -Ω c_g1, c_g1' = Ω c_e - (γ/2) c_g1 with an
// 8th-order Runge-Kutta (rtol 1e-13), then composing N segments by hand.
struct OracleCase {
  double p, omega, gamma, t;
  std::int64_t n;
  double P, V, F;
};

const OracleCase kOracle[] = {
    {0.9, 1.0, 1.0, kPi, 1, 0.175785371207638, -0.132584075668097, 0.161077851565252},
    {0.9, 0.25, 1.0, kPi, 8, 0.837139287123475, 0.289333594164845, 0.943311586197687},
    {0.9, 0.1, 1.0, 0.5, 2, 0.898920987231584, 0.299820110604940, 0.999028856148231},
    {0.5, 4.0, 1.0, kPi, 32, 0.00342963530080613, 0.0414103568012045, 0.541410356801205},
};

}  // namespace

TEST(ClassifyBranch, Regimes) {
  EXPECT_EQ(classify_branch(0.1, 1.0), BranchKind::OverDamped);
  EXPECT_EQ(classify_branch(1.0, 1.0), BranchKind::UnderDamped);
  EXPECT_EQ(classify_branch(0.25, 1.0), BranchKind::Critical);
  EXPECT_EQ(classify_branch(0.25 + 5e-9, 1.0), BranchKind::Critical);
  EXPECT_EQ(classify_branch(0.25 + 1e-6, 1.0), BranchKind::UnderDamped);
  EXPECT_EQ(classify_branch(2.0, 8.0), BranchKind::Critical);
  EXPECT_THROW((void)classify_branch(1.0, 0.0), std::invalid_argument);
}

TEST(FreeDecay, Examples) {
  const Coefficients at0 = free_decay_coeffs({0.3, 0.0}, {2.0}, 0.0);
  EXPECT_DOUBLE_EQ(at0.P, 0.3);
  EXPECT_DOUBLE_EQ(at0.V, std::sqrt(0.21));

  const Coefficients ground = free_decay_coeffs({0.0, 0.0}, {1.0}, 7.0);
  EXPECT_EQ(ground.P, 0.0);
  EXPECT_EQ(ground.V, 0.0);

  const Coefficients pi = free_decay_coeffs({0.9, 0.0}, {1.0}, kPi);
  EXPECT_NEAR(pi.P, 0.0388925264373950, 1e-15);
  EXPECT_NEAR(pi.V, 0.0623638729052286, 1e-15);
}

TEST(Fidelity, Examples) {
  const Coefficients pure{0.9, 0.3};
  EXPECT_NEAR(fidelity(pure, pure), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(pure, {0.0388925264373950, 0.0623638729052286}),
              0.168532344893053, 1e-14);
  EXPECT_DOUBLE_EQ(fidelity({1.0, 0.0}, {0.0, 0.0}), 0.0);
}

TEST(ScreenedCoeffs, DecoupledAtomIsUntouched) {
  for (std::int64_t n : {1, 7, 1000}) {
    for (double t : {0.3, 5.0, 100.0}) {
      const Coefficients c = screened_coeffs({0.9, 0.0}, {0.0, 1.0, n, t});
      EXPECT_EQ(c.P, 0.9);
      EXPECT_DOUBLE_EQ(c.V, std::sqrt(0.9 * 0.1));
    }
  }
}

TEST(ScreenedCoeffs, ZeroTimeIsInitial) {
  const Coefficients c = screened_coeffs({0.6, 0.0}, {2.0, 1.0, 5, 0.0});
  EXPECT_EQ(c.P, 0.6);
  EXPECT_EQ(c.V, std::sqrt(0.24));
}

TEST(ScreenedCoeffs, MatchesAmplitudeOracle) {
  for (const OracleCase& k : kOracle) {
    const QubitParams q{k.p, 0.0};
    const ScreenParams s{k.omega, k.gamma, k.n, k.t};
    const Coefficients c = screened_coeffs(q, s);
    EXPECT_NEAR(c.P, k.P, 1e-12) << k.omega << " N=" << k.n;
    EXPECT_NEAR(c.V, k.V, 1e-12) << k.omega << " N=" << k.n;
    EXPECT_NEAR(screened_fidelity(q, s), k.F, 1e-12);
  }
}

TEST(ScreenedCoeffs, UnderDampedCoherenceCanBeNegative) {
  EXPECT_LT(screened_coeffs({0.9, 0.0}, {1.0, 1.0, 1, kPi}).V, 0.0);
}

TEST(ScreenedCoeffs, DepletionHalvesWhenNDoubles) {
  const QubitParams q{0.9, 0.0};
  const double d64 = 0.9 - screened_coeffs(q, {1.0, 1.0, 64, kPi}).P;
  const double d128 = 0.9 - screened_coeffs(q, {1.0, 1.0, 128, kPi}).P;
  EXPECT_GT(d64, 0.0);
  EXPECT_NEAR(d64 / d128, 2.0, 0.1);
}

TEST(ScreenedCoeffs, InvalidParameters) {
  const QubitParams q{0.5, 0.0};
  EXPECT_THROW((void)screened_coeffs(q, {-1.0, 1.0, 1, 1.0}), std::invalid_argument);
  EXPECT_THROW((void)screened_coeffs(q, {1.0, 0.0, 1, 1.0}), std::invalid_argument);
  EXPECT_THROW((void)screened_coeffs(q, {1.0, 1.0, 0, 1.0}), std::invalid_argument);
  EXPECT_THROW((void)screened_coeffs(q, {1.0, 1.0, 1, -1.0}), std::invalid_argument);
}

TEST(ScreenedCoeffs, LongTimesStayFinite) {
  // Over-damped N = 1 out to γt = 3000 would overflow cosh(2Λt) on its own.
  const Coefficients c = screened_coeffs({0.9, 0.0}, {0.1, 1.0, 1, 3000.0});
  EXPECT_TRUE(std::isfinite(c.P));
  EXPECT_GE(c.P, 0.0);
  EXPECT_LT(c.P, 1e-10);
}

TEST(ScreenedCoeffs, GeneralFormulaIsSingularExactlyAtCritical) {
  EXPECT_THROW((void)screened_coeffs_general({0.9, 0.0}, {0.25, 1.0, 1, 1.0}),
               NumericalError);
  EXPECT_NO_THROW((void)screened_coeffs({0.9, 0.0}, {0.25, 1.0, 1, 1.0}));
}

TEST(BranchContinuity, HyperbolicApproachesPolynomialLinearly) {
  for (double p : {0.1, 0.5, 0.9}) {
    for (double gt : {0.5, kPi}) {
      for (std::int64_t n : {1, 2, 8, 32}) {
        const QubitParams q{p, 0.0};
        const Coefficients crit = screened_coeffs_critical(q, {0.25, 1.0, n, gt});
        double prev = 1.0;
        double prev_eps = 0.0;
        for (double eps : {1e-3, 1e-4, 1e-5}) {
          double dev = 0.0;
          for (double sign : {1.0, -1.0}) {
            const Coefficients c =
                screened_coeffs_general(q, {0.25 + sign * eps, 1.0, n, gt});
            dev = std::max({dev, std::abs(c.P - crit.P), std::abs(c.V - crit.V)});
          }
          EXPECT_LT(dev, prev);
          if (prev_eps > 0.0) {
            // O(ε): a decade in ε buys about a decade in deviation.
            EXPECT_GT(prev / dev, 8.0) << p << " " << gt << " " << n;
          }
          prev = dev;
          prev_eps = eps;
        }
      }
    }
  }
}

TEST(ScreenedFidelity, LargeNApproachesUnity) {
  for (double omega : {0.1, 0.25, 1.0}) {
    for (double t : {0.5, kPi}) {
      EXPECT_GE(screened_fidelity({0.9, 0.0}, {omega, 1.0, 10000, t}), 1.0 - 1e-2)
          << omega << " " << t;
    }
  }
  EXPECT_DOUBLE_EQ(screened_fidelity({0.9, 0.0}, {1.0, 1.0, 3, 0.0}), 1.0);
}

TEST(ScreenedFidelity, InverseNConvergence) {
  // The asymptotic regime needs N well above (Ωt)²; Ω <= γ keeps N >= 64 inside it.
  for (double p : {0.5, 0.9}) {
    for (double omega : {0.1, 0.25, 1.0}) {
      for (double t : {0.5, kPi}) {
        for (std::int64_t n : {64, 128, 256, 512}) {
          const QubitParams q{p, 0.0};
          const double a = 1.0 - screened_fidelity(q, {omega, 1.0, n, t});
          const double b = 1.0 - screened_fidelity(q, {omega, 1.0, 2 * n, t});
          EXPECT_GE(a / b, 1.8) << p << " " << omega << " " << t << " " << n;
          EXPECT_LE(a / b, 2.2) << p << " " << omega << " " << t << " " << n;
        }
      }
    }
  }
}

TEST(ScreenedFidelity, StrongCouplingReachesInverseNLater) {
  const QubitParams q{0.9, 0.0};
  auto ratio = [&](std::int64_t n) {
    return (1.0 - screened_fidelity(q, {4.0, 1.0, n, kPi})) /
           (1.0 - screened_fidelity(q, {4.0, 1.0, 2 * n, kPi}));
  };
  EXPECT_LT(ratio(64), 1.8);
  EXPECT_NEAR(ratio(4096), 2.0, 0.1);
}

TEST(ScreenedFidelity, ScreeningEventuallyBeatsSingleSegment) {
  for (double p : {0.1, 0.5, 0.9}) {
    for (double omega : {0.1, 0.25, 1.0, 4.0}) {
      for (double t : {0.5, kPi}) {
        const QubitParams q{p, 0.0};
        EXPECT_GT(screened_fidelity(q, {omega, 1.0, 256, t}),
                  screened_fidelity(q, {omega, 1.0, 1, t}));
      }
    }
  }
}

TEST(MinimalErasures, BoundaryTargetGivesOne) {
  const QubitParams q{0.9, 0.0};
  const double f1 = screened_fidelity(q, {1.0, 1.0, 1, kPi});
  EXPECT_EQ(minimal_erasures(q, 1.0, 1.0, kPi, f1), 1);
  EXPECT_EQ(minimal_erasures(q, 0.0, 1.0, kPi, 0.999), 1);
}

TEST(MinimalErasures, MonotoneInTarget) {
  const QubitParams q{0.9, 0.0};
  std::int64_t prev = 0;
  for (double target : {0.5, 0.8, 0.9, 0.95, 0.99, 0.995}) {
    const std::int64_t n = minimal_erasures(q, 1.0, 1.0, kPi, target);
    EXPECT_GE(n, prev);
    EXPECT_GE(screened_fidelity(q, {1.0, 1.0, n, kPi}), target);
    if (n > 1) EXPECT_LT(screened_fidelity(q, {1.0, 1.0, n - 1, kPi}), target);
    prev = n;
  }
}

TEST(MinimalErasures, RequiredErasureGoldens) {
  // Golden values, confirmed by exhaustive search over N with 40-digit
  // arithmetic: p = 0.9, γt = π, target 0.99.
  const QubitParams q{0.9, 0.0};
  EXPECT_EQ(minimal_erasures(q, 0.5, 1.0, kPi, 0.99), 199);
  EXPECT_EQ(minimal_erasures(q, 1.0, 1.0, kPi, 0.99), 795);
  EXPECT_EQ(minimal_erasures(q, 2.0, 1.0, kPi, 0.99), 3179);
  EXPECT_EQ(minimal_erasures(q, 4.0, 1.0, kPi, 0.99), 12716);
}

TEST(MinimalErasures, Errors) {
  const QubitParams q{0.9, 0.0};
  AnalyticTolerances small;
  small.max_erasures = 64;
  EXPECT_THROW((void)minimal_erasures(q, 1.0, 1.0, kPi, 0.99, small), UnreachableTarget);
  EXPECT_THROW((void)minimal_erasures(q, 1.0, 1.0, kPi, 1.5), std::invalid_argument);
  EXPECT_THROW((void)minimal_erasures(q, 1.0, 1.0, kPi, 1.0), UnreachableTarget);
}
