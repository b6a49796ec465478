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

#ifndef ZENO_ANALYTIC_HPP
#define ZENO_ANALYTIC_HPP

#include <cstdint>
#include <string_view>

#include "zeno/quantum_core.hpp"

/// Closed-form qubit dynamics: free decay into a zero-temperature reservoir
/// and decay through a resonant damped cavity that is reset to vacuum N
/// times during [0, t].
namespace zeno::analytic {

struct FreeDecayParams {
  double gamma = 1.0;
};

/// Rabi frequency Ω, cavity damping γ, erasure count N, total time t.
struct ScreenParams {
  double omega = 0.0;
  double gamma = 1.0;
  std::int64_t n_erasures = 1;
  double total_time = 0.0;

  void validate() const;
};

/// OverDamped: 4Ω/γ < 1 (hyperbolic), UnderDamped: 4Ω/γ > 1 (oscillatory),
/// Critical: |Ω - γ/4| <= branch_tolerance·γ.
enum class BranchKind { OverDamped, Critical, UnderDamped };

[[nodiscard]] std::string_view to_string(BranchKind kind);

struct AnalyticTolerances {
  double branch = 1e-8;   // relative width of the Critical band
  double imag = 1e-12;    // allowed imaginary residue of the complex-Λ path
  double physical = 1e-9;
  std::int64_t max_erasures = std::int64_t{1} << 24;
};

[[nodiscard]] BranchKind classify_branch(double omega, double gamma,
                                         const AnalyticTolerances& tol = {});

[[nodiscard]] Coefficients initial_coeffs(const QubitParams& q);

/// P = p e^{-γt}, V = sqrt(p(1-p)) e^{-γt/2}.
[[nodiscard]] Coefficients free_decay_coeffs(const QubitParams& q,
                                             const FreeDecayParams& d, double t);

/// (1-P₀)(1-P) + P₀P + 2V₀V.
[[nodiscard]] double fidelity(const Coefficients& initial,
                              const Coefficients& now);

/// Screened coefficients after N erasures. Uses the hyperbolic formula with
/// Λ = sqrt((γ/4)² - Ω²) evaluated in complex arithmetic, except inside the
/// Critical band where the polynomial limit is used.
[[nodiscard]] Coefficients screened_coeffs(const QubitParams& q,
                                           const ScreenParams& s,
                                           const AnalyticTolerances& tol = {});

/// Hyperbolic (Ω ≠ γ/4) formula, regardless of the branch band.
[[nodiscard]] Coefficients screened_coeffs_general(
    const QubitParams& q, const ScreenParams& s,
    const AnalyticTolerances& tol = {});

/// Polynomial Ω = γ/4 formula; s.omega is ignored.
[[nodiscard]] Coefficients screened_coeffs_critical(const QubitParams& q,
                                                    const ScreenParams& s);

[[nodiscard]] double screened_fidelity(const QubitParams& q,
                                       const ScreenParams& s,
                                       const AnalyticTolerances& tol = {});

/// Thrown by minimal_erasures when the target needs more than max_erasures.
class UnreachableTarget : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Smallest N (by doubling, then bisection on the final bracket) with
/// screened_fidelity >= target.
[[nodiscard]] std::int64_t minimal_erasures(const QubitParams& q, double omega,
                                            double gamma, double t,
                                            double target_fidelity,
                                            const AnalyticTolerances& tol = {});

}  // namespace zeno::analytic

#endif  // ZENO_ANALYTIC_HPP
