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

#ifndef ZENO_SCREENING_HPP
#define ZENO_SCREENING_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "zeno/lindblad.hpp"
#include "zeno/quantum_core.hpp"

/// Segmented evolution of a qubit coupled to a lossy casing mode that is
/// reset to vacuum between segments.
namespace zeno::screening {

/// Bare qubit in free space: collapse σ at rate γ, no Hamiltonian.
[[nodiscard]] LindbladModel free_decay_model(double gamma);

/// Two-level atom (factor 0) resonantly coupled to a damped cavity mode
/// (factor 1): H/ħ = iΩ(a†σ - σ†a), collapse a at rate γ.
struct AtomCavityModel {
  double omega = 0.0;
  double gamma = 1.0;
  int fock_cutoff = 1;

  void validate() const;
  [[nodiscard]] HilbertSpace space() const;
  [[nodiscard]] LindbladModel lindblad() const;
};

/// Number-conserving internal dynamics of the stored mode a.
struct InternalHamiltonian {
  enum class Kind { None, Detuning, Kerr };
  Kind kind = Kind::None;
  double strength = 0.0;  // δ for Detuning (δ a†a), χ for Kerr (χ (a†a)²)

  /// Energy of Fock state |n⟩ divided by ħ.
  [[nodiscard]] double energy(int n) const;
  [[nodiscard]] Operator on_mode(int fock_cutoff) const;
};

[[nodiscard]] std::string_view to_string(InternalHamiltonian::Kind kind);
[[nodiscard]] InternalHamiltonian::Kind parse_internal_kind(std::string_view s);

/// Stored mode a (factor 0) coupled to an auxiliary damped mode b
/// (factor 1). da/dt = -κb - i[a, H'], db/dt = -γb + κa + noise, realized
/// by H_c/ħ = iκ(ab† - a†b) and collapse b at rate 2γ.
struct FieldScreenModel {
  double kappa = 0.0;
  double gamma = 1.0;
  InternalHamiltonian internal;
  int fock_cutoff = 1;

  void validate() const;
  [[nodiscard]] HilbertSpace space() const;
  [[nodiscard]] LindbladModel lindblad() const;
};

/// α|0⟩ + β|1⟩ of the stored field mode.
struct FieldQubit {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  static FieldQubit from_params(const QubitParams& q);
  void validate(double tol = 1e-10) const;
};

/// Non-ideal erasure: the casing is damped at `rate` for `duration` instead
/// of being reset instantaneously. The interval is not part of the protocol
/// time t.
struct FiniteErasure {
  double duration = 0.0;
  double rate = 0.0;
};

struct ProtocolOptions {
  IntegratorConfig integrator;
  std::optional<FiniteErasure> finite_erasure;
  double leak_tol = 1e-8;
  /// Reject runs outside the short-time regime κt/N, γt/N <= short_time_limit.
  bool strict_short_time = false;
  double short_time_limit = 0.1;
};

struct ProtocolTrace {
  std::vector<double> times;       // 0, t/N, ..., t
  std::vector<double> fidelities;  // against the (internally evolved) target
  std::vector<Coefficients> coefficients;         // atom protocol only
  std::vector<DensityMatrix> reduced_states;      // field protocol only

  // Worst values over every integrated segment, before renormalization.
  double max_trace_drift = 0.0;
  double max_hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double max_cutoff_population = 0.0;

  [[nodiscard]] double final_fidelity() const { return fidelities.back(); }
};

/// Trace out the casing factor and put it back in its ground state.
[[nodiscard]] DensityMatrix erase_casing(const DensityMatrix& rho_joint,
                                         std::size_t casing_factor);

[[nodiscard]] ProtocolTrace run_atom_screening(const QubitParams& q,
                                               const AtomCavityModel& m,
                                               double t, std::int64_t n,
                                               const ProtocolOptions& opts = {});

[[nodiscard]] ProtocolTrace run_field_screening(const FieldQubit& initial,
                                                const FieldScreenModel& m,
                                                double t, std::int64_t n,
                                                const ProtocolOptions& opts = {});

/// (m, n) pairs reported by xi_moment_probe, in order.
inline constexpr std::array<std::array<int, 2>, 5> kProbedMoments{
    {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}}};

/// |⟨a†^m a^n⟩| of mode a at time t after screening a vacuum input.
[[nodiscard]] std::vector<double> xi_moment_probe(
    const FieldScreenModel& m, double t, std::int64_t n,
    const ProtocolOptions& opts = {});

}  // namespace zeno::screening

#endif  // ZENO_SCREENING_HPP
