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

#ifndef ZENO_LINDBLAD_HPP
#define ZENO_LINDBLAD_HPP

#include <cstdint>
#include <vector>

#include "zeno/quantum_core.hpp"

namespace zeno {

struct Collapse {
  Operator op;
  double rate;  // γ_k in (γ_k/2)(2LρL† - L†Lρ - ρL†L)
};

/// dρ/dt = -i[H, ρ] + Σ_k (γ_k/2)(2 L_k ρ L_k† - L_k†L_k ρ - ρ L_k†L_k),
/// with H already divided by ħ.
class LindbladModel {
 public:
  LindbladModel(Operator hamiltonian, std::vector<Collapse> collapses,
                const Tolerances& tol = {});

  [[nodiscard]] const HilbertSpace& space() const { return h_.space(); }
  [[nodiscard]] const Operator& hamiltonian() const { return h_; }
  [[nodiscard]] const std::vector<Collapse>& collapses() const {
    return collapses_;
  }

  /// Same model with one more dissipation channel.
  [[nodiscard]] LindbladModel with_collapse(Collapse c) const;

  /// Right-hand side on a raw matrix; no validation beyond the shape.
  void apply(const Matrix& rho, Matrix& out) const;

  /// Vectorized (column-stacked) Liouvillian, vec(dρ/dt) = L vec(ρ).
  [[nodiscard]] Matrix liouvillian() const;

 private:
  Operator h_;
  std::vector<Collapse> collapses_;
  // H - (i/2) Σ γ_k L_k†L_k; the dissipator's anticommutator folds into it.
  Matrix h_eff_;
  std::vector<Matrix> jumps_;  // sqrt(γ_k) L_k
};

struct IntegratorConfig {
  double initial_step = 1e-3;
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  std::int64_t max_steps = 10'000'000;
  Tolerances tol;

  void validate() const;
};

/// dρ/dt for a validated state.
[[nodiscard]] Matrix lindblad_rhs(const LindbladModel& model,
                                  const DensityMatrix& rho);

/// Diagnostics from one call to evolve().
struct EvolveStats {
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
  Physicality before_renormalization;
};

/// Classical RK4 with step-doubling error control. The trace is
/// renormalized only when its drift stays within tol.trace; otherwise (and
/// on lost positivity or exhausted steps) NumericalError is thrown.
[[nodiscard]] DensityMatrix evolve(const LindbladModel& model,
                                   const DensityMatrix& rho0, double duration,
                                   const IntegratorConfig& config = {},
                                   EvolveStats* stats = nullptr);

/// Plain RK4 with a fixed number of equal steps and no post-processing.
/// Used to measure the convergence order.
[[nodiscard]] Matrix evolve_fixed_step(const LindbladModel& model,
                                       const Matrix& rho0, double duration,
                                       int steps);

/// Cross-check backend: exp(L t) on the vectorized Liouvillian.
[[nodiscard]] DensityMatrix evolve_expm(const LindbladModel& model,
                                        const DensityMatrix& rho0,
                                        double duration,
                                        const Tolerances& tol = {});

}  // namespace zeno

#endif  // ZENO_LINDBLAD_HPP
