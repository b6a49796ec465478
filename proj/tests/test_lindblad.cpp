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

#include "zeno/lindblad.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_support.hpp"
#include "zeno/screening.hpp"

using namespace zeno;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

LindbladModel free_decay(double gamma) { return screening::free_decay_model(gamma); }

}  // namespace

TEST(LindbladModel, RejectsBadInputs) {
  const HilbertSpace q = HilbertSpace::qubit();
  Matrix h = Matrix::Zero(2, 2);
  h(0, 1) = 1.0;  // not Hermitian
  EXPECT_THROW(LindbladModel(Operator(q, h), {}), std::invalid_argument);
  EXPECT_THROW(LindbladModel(Operator::zero(q), {{ops::sigma_minus(), -1.0}}),
               std::invalid_argument);
  EXPECT_THROW(LindbladModel(Operator::zero(q),
                             {{Operator::identity(HilbertSpace({3})), 1.0}}),
               std::invalid_argument);
}

TEST(LindbladRhs, ZeroModelGivesZero) {
  const LindbladModel m(Operator::zero(HilbertSpace::qubit()), {});
  EXPECT_EQ(max_abs(lindblad_rhs(m, qubit_state({0.3, 0.2}))), 0.0);
}

TEST(LindbladRhs, GroundStateIsStationary) {
  EXPECT_EQ(max_abs(lindblad_rhs(free_decay(1.0), ops::basis_state(2, 0))), 0.0);
}

TEST(LindbladRhs, ExcitedStateDecaysAtUnitRate) {
  const Matrix d = lindblad_rhs(free_decay(1.0), ops::basis_state(2, 1));
  EXPECT_NEAR(d(1, 1).real(), -1.0, 1e-15);
  EXPECT_NEAR(d(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(d(0, 1)), 0.0, 1e-15);
}

TEST(LindbladRhs, CoherenceDecaysAtHalfRate) {
  // d⟨g|ρ|e⟩/dt = -(γ/2)⟨g|ρ|e⟩ for the bare decay model.
  const DensityMatrix rho = qubit_state({0.5, 0.0});
  const Matrix d = lindblad_rhs(free_decay(2.0), rho);
  EXPECT_NEAR(std::abs(d(0, 1) - (-1.0) * rho(0, 1)), 0.0, 1e-15);
}

TEST(LindbladRhs, DimensionMismatchThrows) {
  EXPECT_THROW((void)lindblad_rhs(free_decay(1.0), ops::basis_state(3, 0)),
               std::invalid_argument);
}

TEST(LindbladRhsProperty, TracelessAndHermitian) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const HilbertSpace s({2 + trial % 3});
    const LindbladModel m = testutil::random_model(rng, s, 1 + trial % 3);
    const Matrix d = lindblad_rhs(m, testutil::random_density(rng, s));
    EXPECT_LT(std::abs(d.trace()), 1e-13);
    EXPECT_LT(max_abs(d - d.adjoint()), 1e-13);
  }
}

TEST(LindbladModel, LiouvillianMatchesRhs) {
  std::mt19937_64 rng(3);
  const HilbertSpace s({3});
  const LindbladModel m = testutil::random_model(rng, s, 2);
  const DensityMatrix rho = testutil::random_density(rng, s);
  const Matrix direct = lindblad_rhs(m, rho);
  const Vector v = m.liouvillian() *
                   Eigen::Map<const Vector>(rho.matrix().data(), 9);
  EXPECT_LT(max_abs(Eigen::Map<const Matrix>(v.data(), 3, 3) - direct), 1e-13);
}

TEST(Evolve, ZeroDurationIsIdentity) {
  const DensityMatrix rho = qubit_state({0.4, 0.3});
  const DensityMatrix out = evolve(free_decay(1.0), rho, 0.0);
  EXPECT_EQ(max_abs(out.matrix() - rho.matrix()), 0.0);
}

TEST(Evolve, FreeDecayMatchesClosedForm) {
  const DensityMatrix out =
      evolve(free_decay(1.0), qubit_state({0.9, 0.0}), std::numbers::pi);
  const Coefficients c = extract_coefficients(out, 0.0);
  // 0.9 e^{-π} and 0.3 e^{-π/2}
  EXPECT_NEAR(c.P, 0.038892526437395, 1e-9);
  EXPECT_NEAR(c.V, 0.062363872905229, 1e-9);
}

TEST(Evolve, UnitaryPhaseAdvance) {
  const double delta = 2.0;
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = delta;
  const LindbladModel m(Operator(HilbertSpace::qubit(), h), {});
  const DensityMatrix rho0 = qubit_state({0.5, 0.0});
  const DensityMatrix out = evolve(m, rho0, std::numbers::pi / delta);
  EXPECT_NEAR(out(0, 0).real(), 0.5, 1e-10);
  EXPECT_NEAR(out(1, 1).real(), 0.5, 1e-10);
  // ⟨g|ρ|e⟩ picks up e^{iδt} = e^{iπ}
  EXPECT_NEAR(std::abs(out(0, 1) - Complex(-0.5, 0.0)), 0.0, 1e-9);
}

TEST(Evolve, ZeroTemperatureFixedPointOfCavityModel) {
  const screening::AtomCavityModel m{1.0, 1.0, 2};
  const DensityMatrix vac = tensor(ops::basis_state(2, 0), ops::basis_state(3, 0));
  const DensityMatrix out = evolve(m.lindblad(), vac, 5.0);
  EXPECT_LT(max_abs(out.matrix() - vac.matrix()), 1e-12);
}

TEST(Evolve, Errors) {
  const LindbladModel m = free_decay(1.0);
  const DensityMatrix rho = qubit_state({0.9, 0.0});
  EXPECT_THROW((void)evolve(m, rho, -1.0), std::invalid_argument);
  EXPECT_THROW((void)evolve(m, ops::basis_state(3, 0), 1.0), std::invalid_argument);

  IntegratorConfig few;
  few.max_steps = 3;
  EXPECT_THROW((void)evolve(m, rho, 10.0, few), NumericalError);

  IntegratorConfig bad;
  bad.rel_tol = 0.0;
  EXPECT_THROW((void)evolve(m, rho, 1.0, bad), std::invalid_argument);
}

TEST(Evolve, PositivityLossIsReported) {
  // Absurd tolerances let one RK4 step of size γh = 10 through; its
  // amplification factor makes the excited population exceed 1.
  IntegratorConfig loose;
  loose.initial_step = 10.0;
  loose.rel_tol = 1e6;
  loose.abs_tol = 1e6;
  EXPECT_THROW((void)evolve(free_decay(1.0), qubit_state({0.9, 0.0}), 10.0, loose),
               NumericalError);
}

TEST(Evolve, TraceDriftBeyondToleranceIsReported) {
  IntegratorConfig cfg;
  cfg.tol.trace = -1.0;  // any drift, even zero, exceeds this
  EXPECT_THROW((void)evolve(free_decay(1.0), qubit_state({0.9, 0.0}), 1.0, cfg),
               NumericalError);
}

TEST(EvolveProperty, PhysicalAlongRandomTrajectories) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const HilbertSpace s({2 + trial % 3});
    const LindbladModel m = testutil::random_model(rng, s, 1 + trial % 2);
    DensityMatrix rho = testutil::random_density(rng, s);
    EvolveStats stats;
    for (int seg = 0; seg < 5; ++seg) {
      rho = evolve(m, rho, 0.4, {}, &stats);
      const Physicality& ph = stats.before_renormalization;
      EXPECT_LE(ph.trace_drift, 1e-10);
      EXPECT_LE(ph.hermiticity_defect, 1e-10);
      EXPECT_GE(ph.min_eigenvalue, -1e-9);
    }
  }
}

TEST(Evolve, ExpmBackendAgrees) {
  std::mt19937_64 rng(77);
  const HilbertSpace s({4});
  const LindbladModel m = testutil::random_model(rng, s, 2);
  const DensityMatrix rho = testutil::random_density(rng, s);
  const DensityMatrix rk = evolve(m, rho, 1.3);
  const DensityMatrix ex = evolve_expm(m, rho, 1.3);
  EXPECT_LT(max_abs(rk.matrix() - ex.matrix()), 1e-9);
}

TEST(Evolve, FixedStepConvergenceOrderIsFour) {
  // Atom-cavity model at Ω = γ with N = 1; reference from the exp(L t) backend
  // (independent of RK4), cross-checked against the closed form elsewhere.
  const screening::AtomCavityModel model{1.0, 1.0, 1};
  const LindbladModel m = model.lindblad();
  const DensityMatrix rho0 = tensor(qubit_state({0.9, 0.0}), ops::basis_state(2, 0));
  const double t = std::numbers::pi;
  const Matrix exact = evolve_expm(m, rho0, t).matrix();

  const double e1 = max_abs(evolve_fixed_step(m, rho0.matrix(), t, 40) - exact);
  const double e2 = max_abs(evolve_fixed_step(m, rho0.matrix(), t, 80) - exact);
  const double e3 = max_abs(evolve_fixed_step(m, rho0.matrix(), t, 160) - exact);
  const double q1 = std::log2(e1 / e2);
  const double q2 = std::log2(e2 / e3);
  EXPECT_GE(q1, 3.9) << e1 << " " << e2;
  EXPECT_GE(q2, 3.9) << e2 << " " << e3;
  EXPECT_LE(q2, 4.5);
}

TEST(Evolve, StatsCountSteps) {
  EvolveStats stats;
  (void)evolve(free_decay(1.0), qubit_state({0.9, 0.0}), 2.0, {}, &stats);
  EXPECT_GT(stats.accepted, 0);
  EXPECT_LT(stats.before_renormalization.trace_drift, 1e-12);
}

TEST(Evolve, FixedStepOrderAgainstFreeDecayClosedForm) {
  const LindbladModel m = free_decay(1.0);
  const DensityMatrix rho0 = qubit_state({0.9, 0.0});
  const double t = std::numbers::pi;
  const double p_exact = 0.9 * std::exp(-t);
  const double v_exact = 0.3 * std::exp(-t / 2.0);
  auto err = [&](int steps) {
    const Matrix y = evolve_fixed_step(m, rho0.matrix(), t, steps);
    return std::max(std::abs(y(1, 1).real() - p_exact),
                    std::abs(y(1, 0).real() - v_exact));
  };
  const double q = std::log2(err(32) / err(64));
  EXPECT_GE(q, 3.9);
  EXPECT_LE(q, 4.5);
}
