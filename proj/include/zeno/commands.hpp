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

#ifndef ZENO_COMMANDS_HPP
#define ZENO_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "zeno/analytic.hpp"
#include "zeno/lindblad.hpp"
#include "zeno/parallel.hpp"
#include "zeno/report.hpp"
#include "zeno/screening.hpp"

/// Subcommand back ends of the zeno-screen tool. Each returns the table that
/// both the CSV and the SVG writer consume.
namespace zeno::cli {

using parallel::Execution;
using report::CsvTable;

struct FreeDecaySpec {
  QubitParams qubit{0.9, 0.0};
  double gamma = 1.0;
  double t_max = std::numbers::pi;
  int samples = 101;
  IntegratorConfig integrator;
};

/// Columns: t, P_analytic, V_analytic, P_numeric, V_numeric, F.
[[nodiscard]] CsvTable cmd_free_decay(const FreeDecaySpec& spec,
                                      Execution exec = Execution::OpenMP);

struct ScreenAtomSpec {
  enum class Variant { Analytic, Simulated, Both };

  QubitParams qubit{0.9, 0.0};
  double omega = 1.0;
  double gamma = 1.0;
  double t_max = std::numbers::pi;
  int samples = 101;
  std::vector<std::int64_t> n_list{1, 4, 16};
  Variant variant = Variant::Analytic;
  int fock_cutoff = 1;
  IntegratorConfig integrator;
};

[[nodiscard]] ScreenAtomSpec::Variant parse_variant(const std::string& s);

/// Columns: t, F_free, then F_N<n>[_analytic|_sim] per requested N.
[[nodiscard]] CsvTable cmd_screen_atom(const ScreenAtomSpec& spec,
                                       Execution exec = Execution::OpenMP);

struct SweepNSpec {
  QubitParams qubit{0.9, 0.0};
  double gamma = 1.0;
  double gamma_t = std::numbers::pi;
  double target = 0.99;
  std::vector<double> omega_over_gamma{0.0, 0.5, 1.0, 2.0, 4.0};
  std::int64_t n_max = std::int64_t{1} << 24;
};

/// Marks an unreachable target in the N_min and log_N_min columns.
inline constexpr double kUnreachable = -1.0;

struct SweepNResult {
  CsvTable table;
  std::vector<std::string> warnings;
};

/// Columns: omega_over_gamma, N_min, log_N_min.
[[nodiscard]] SweepNResult cmd_sweep_n(const SweepNSpec& spec,
                                       Execution exec = Execution::OpenMP);

struct ScreenFieldSpec {
  screening::FieldQubit initial = screening::FieldQubit::from_params({0.5, 0.0});
  double kappa = 1.0;
  double gamma = 1.0;
  screening::InternalHamiltonian internal{
      screening::InternalHamiltonian::Kind::Detuning, 1.0};
  double t_max = std::numbers::pi;
  int samples = 33;
  std::vector<std::int64_t> n_list{4, 16, 64, 256};
  int fock_cutoff = 1;
  IntegratorConfig integrator;
};

/// Columns: t, F_N<n> per requested N, moment_probe_max.
[[nodiscard]] CsvTable cmd_screen_field(const ScreenFieldSpec& spec,
                                        Execution exec = Execution::OpenMP);

struct ValidateSpec {
  std::vector<double> p_list{0.1, 0.5, 0.9};
  std::vector<double> omega_over_gamma{0.1, 0.25, 1.0, 4.0};
  std::vector<double> gamma_t{0.5, std::numbers::pi};
  std::vector<std::int64_t> n_list{1, 2, 8, 32};
  double gamma = 1.0;
  /// Negative control: simulate with twice the cavity damping rate.
  bool corrupt_gamma = false;
  IntegratorConfig integrator;
};

struct CheckResult {
  std::string name;
  std::size_t points = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool passed() const { return max_deviation <= tolerance; }
};

struct ValidateReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] std::size_t total_points() const;
  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::string to_text() const;
};

/// Cross-validates the simulated protocol against the closed forms over a
/// grid and measures physicality along every trajectory.
[[nodiscard]] ValidateReport cmd_validate(const ValidateSpec& spec,
                                          Execution exec = Execution::OpenMP);

// Helpers shared with the command-line front end.

/// `key=value` lines; `#` starts a comment; blank lines ignored.
[[nodiscard]] std::map<std::string, std::string> parse_config(std::istream& in);

/// Comma-separated list; an empty string yields an empty list.
[[nodiscard]] std::vector<double> parse_double_list(const std::string& s);
[[nodiscard]] std::vector<std::int64_t> parse_int_list(const std::string& s);

/// Uniform grid of `samples` points on [0, t_max]; one point gives {0}.
[[nodiscard]] std::vector<double> time_grid(double t_max, int samples);

}  // namespace zeno::cli

#endif  // ZENO_COMMANDS_HPP
