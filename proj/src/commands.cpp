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

#include "zeno/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace zeno::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void require_samples(int samples) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
}

void require_n_list(const std::vector<std::int64_t>& ns) {
  if (ns.empty()) throw std::invalid_argument("N list must not be empty");
  for (auto n : ns) {
    if (n < 1) throw std::invalid_argument("every N must be >= 1");
  }
}

std::string sci(double v) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.3e", v);
  return buf.data();
}

}  // namespace

std::vector<double> time_grid(double t_max, int samples) {
  require_samples(samples);
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument("t_max must be finite and >= 0");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(samples));
  if (samples == 1) return {0.0};
  for (int k = 0; k < samples; ++k) {
    out.push_back(k == samples - 1 ? t_max : t_max * k / (samples - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------

CsvTable cmd_free_decay(const FreeDecaySpec& spec, Execution exec) {
  spec.qubit.validate();
  const std::vector<double> times = time_grid(spec.t_max, spec.samples);
  const LindbladModel model = screening::free_decay_model(spec.gamma);
  const DensityMatrix rho0 = qubit_state(spec.qubit);
  const Coefficients c0 = analytic::initial_coeffs(spec.qubit);

  const auto rows = parallel::map(
      times.size(),
      [&](std::size_t i) {
        const double t = times[i];
        const Coefficients exact =
            analytic::free_decay_coeffs(spec.qubit, {spec.gamma}, t);
        const Coefficients num = extract_coefficients(
            evolve(model, rho0, t, spec.integrator), spec.qubit.psi,
            spec.integrator.tol);
        return std::vector<double>{t,     exact.P, exact.V,
                                   num.P, num.V,   analytic::fidelity(c0, exact)};
      },
      exec);

  CsvTable table({"t", "P_analytic", "V_analytic", "P_numeric", "V_numeric", "F"});
  for (const auto& r : rows) table.add_row(r);
  return table;
}

// ---------------------------------------------------------------------------

ScreenAtomSpec::Variant parse_variant(const std::string& s) {
  if (s == "analytic") return ScreenAtomSpec::Variant::Analytic;
  if (s == "simulated") return ScreenAtomSpec::Variant::Simulated;
  if (s == "both") return ScreenAtomSpec::Variant::Both;
  throw std::invalid_argument("unknown variant '" + s +
                              "' (expected analytic, simulated or both)");
}

CsvTable cmd_screen_atom(const ScreenAtomSpec& spec, Execution exec) {
  spec.qubit.validate();
  require_n_list(spec.n_list);
  const screening::AtomCavityModel model{spec.omega, spec.gamma, spec.fock_cutoff};
  model.validate();
  if (!(spec.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  const std::vector<double> times = time_grid(spec.t_max, spec.samples);

  const bool with_analytic = spec.variant != ScreenAtomSpec::Variant::Simulated;
  const bool with_sim = spec.variant != ScreenAtomSpec::Variant::Analytic;
  const Coefficients c0 = analytic::initial_coeffs(spec.qubit);

  std::vector<std::string> header{"t", "F_free"};
  for (auto n : spec.n_list) {
    const std::string base = "F_N" + std::to_string(n);
    if (with_analytic) header.push_back(base + (with_sim ? "_analytic" : ""));
    if (with_sim) header.push_back(base + "_sim");
  }

  screening::ProtocolOptions opts;
  opts.integrator = spec.integrator;

  const auto rows = parallel::map(
      times.size(),
      [&](std::size_t i) {
        const double t = times[i];
        std::vector<double> row{
            t, analytic::fidelity(c0, analytic::free_decay_coeffs(
                                          spec.qubit, {spec.gamma}, t))};
        for (auto n : spec.n_list) {
          if (with_analytic) {
            row.push_back(analytic::screened_fidelity(
                spec.qubit, {spec.omega, spec.gamma, n, t}));
          }
          if (with_sim) {
            row.push_back(
                screening::run_atom_screening(spec.qubit, model, t, n, opts)
                    .final_fidelity());
          }
        }
        return row;
      },
      exec);

  CsvTable table(std::move(header));
  for (const auto& r : rows) table.add_row(r);
  return table;
}

// ---------------------------------------------------------------------------

SweepNResult cmd_sweep_n(const SweepNSpec& spec, Execution exec) {
  spec.qubit.validate();
  if (!(spec.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(spec.gamma_t >= 0.0)) throw std::invalid_argument("gamma_t must be >= 0");
  if (!(spec.target > 0.0 && spec.target <= 1.0)) {
    throw std::invalid_argument("target fidelity must lie in (0, 1]");
  }
  for (double r : spec.omega_over_gamma) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("omega/gamma values must be finite and >= 0");
    }
  }
  analytic::AnalyticTolerances tol;
  tol.max_erasures = spec.n_max;
  const double t = spec.gamma_t / spec.gamma;

  struct Row {
    double n_min;
    std::string warning;
  };
  const auto rows = parallel::map(
      spec.omega_over_gamma.size(),
      [&](std::size_t i) -> Row {
        const double omega = spec.omega_over_gamma[i] * spec.gamma;
        try {
          return {static_cast<double>(analytic::minimal_erasures(
                      spec.qubit, omega, spec.gamma, t, spec.target, tol)),
                  {}};
        } catch (const analytic::UnreachableTarget& e) {
          return {kUnreachable, "omega/gamma=" + report::format_number(
                                    spec.omega_over_gamma[i]) + ": " + e.what()};
        }
      },
      exec);

  SweepNResult out{CsvTable({"omega_over_gamma", "N_min", "log_N_min"}), {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double n = rows[i].n_min;
    out.table.add_row({spec.omega_over_gamma[i], n,
                       n == kUnreachable ? kUnreachable : std::log(n)});
    if (!rows[i].warning.empty()) out.warnings.push_back(rows[i].warning);
  }
  return out;
}

// ---------------------------------------------------------------------------

CsvTable cmd_screen_field(const ScreenFieldSpec& spec, Execution exec) {
  require_n_list(spec.n_list);
  spec.initial.validate();
  const screening::FieldScreenModel model{spec.kappa, spec.gamma, spec.internal,
                                          spec.fock_cutoff};
  model.validate();
  const std::vector<double> times = time_grid(spec.t_max, spec.samples);
  screening::ProtocolOptions opts;
  opts.integrator = spec.integrator;

  std::vector<std::string> header{"t"};
  for (auto n : spec.n_list) header.push_back("F_N" + std::to_string(n));
  header.emplace_back("moment_probe_max");

  const auto rows = parallel::map(
      times.size(),
      [&](std::size_t i) {
        const double t = times[i];
        std::vector<double> row{t};
        double probe = 0.0;
        for (auto n : spec.n_list) {
          row.push_back(
              screening::run_field_screening(spec.initial, model, t, n, opts)
                  .final_fidelity());
          for (double m : screening::xi_moment_probe(model, t, n, opts)) {
            probe = std::max(probe, m);
          }
        }
        row.push_back(probe);
        return row;
      },
      exec);

  CsvTable table(std::move(header));
  for (const auto& r : rows) table.add_row(r);
  return table;
}

// ---------------------------------------------------------------------------

std::size_t ValidateReport::total_points() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.points;
  return n;
}

bool ValidateReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

std::string ValidateReport::to_text() const {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %8s %14s %12s  %s\n", "check", "points",
                "max_deviation", "tolerance", "status");
  os << line;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-28s %8zu %14s %12s  %s\n", c.name.c_str(),
                  c.points, sci(c.max_deviation).c_str(), sci(c.tolerance).c_str(),
                  c.passed() ? "PASS" : "FAIL");
    os << line;
    if (!c.passed()) ++failed;
  }
  if (total_points() == 0) {
    os << "warning: 0 checks (empty grid)\n";
  }
  os << "summary: " << checks.size() << " checks over " << total_points()
     << " points, " << failed << " failed\n";
  return os.str();
}

ValidateReport cmd_validate(const ValidateSpec& spec, Execution exec) {
  if (!(spec.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  for (double p : spec.p_list) QubitParams{p, 0.0}.validate();
  for (auto n : spec.n_list) {
    if (n < 1) throw std::invalid_argument("every N must be >= 1");
  }
  const double sim_gamma = spec.corrupt_gamma ? 2.0 * spec.gamma : spec.gamma;

  // Free decay: every p on a fixed time grid spanning γt ∈ [0, 2π].
  struct FreePoint {
    double p, t;
  };
  std::vector<FreePoint> free_points;
  for (double p : spec.p_list) {
    for (int k = 0; k <= 8; ++k) {
      free_points.push_back({p, 2.0 * std::numbers::pi * k / 8.0 / spec.gamma});
    }
  }
  const LindbladModel free_model = screening::free_decay_model(sim_gamma);
  const auto free_dev = parallel::map(
      free_points.size(),
      [&](std::size_t i) {
        const QubitParams q{free_points[i].p, 0.0};
        const Coefficients exact =
            analytic::free_decay_coeffs(q, {spec.gamma}, free_points[i].t);
        const Coefficients num = extract_coefficients(
            evolve(free_model, qubit_state(q), free_points[i].t, spec.integrator),
            0.0, spec.integrator.tol);
        return std::max(std::abs(num.P - exact.P), std::abs(num.V - exact.V));
      },
      exec);

  struct GridPoint {
    double p, omega, t;
    std::int64_t n;
  };
  std::vector<GridPoint> grid;
  for (double p : spec.p_list) {
    for (double r : spec.omega_over_gamma) {
      for (double gt : spec.gamma_t) {
        for (auto n : spec.n_list) {
          grid.push_back({p, r * spec.gamma, gt / spec.gamma, n});
        }
      }
    }
  }

  struct GridResult {
    double coeff_dev, fid_dev, cutoff_dev;
    double trace_drift, herm, neg_eig;
  };
  screening::ProtocolOptions opts;
  opts.integrator = spec.integrator;
  const auto results = parallel::map(
      grid.size(),
      [&](std::size_t i) {
        const GridPoint& g = grid[i];
        const QubitParams q{g.p, 0.0};
        const analytic::ScreenParams sp{g.omega, spec.gamma, g.n, g.t};
        const Coefficients exact = analytic::screened_coeffs(q, sp);
        const double f_exact = analytic::screened_fidelity(q, sp);

        const auto run1 = screening::run_atom_screening(
            q, {g.omega, sim_gamma, 1}, g.t, g.n, opts);
        const auto run3 = screening::run_atom_screening(
            q, {g.omega, sim_gamma, 3}, g.t, g.n, opts);
        const Coefficients& c1 = run1.coefficients.back();
        const Coefficients& c3 = run3.coefficients.back();

        GridResult r{};
        r.coeff_dev = std::max(std::abs(c1.P - exact.P), std::abs(c1.V - exact.V));
        r.fid_dev = std::abs(run1.final_fidelity() - f_exact);
        r.cutoff_dev = std::max(std::abs(c1.P - c3.P), std::abs(c1.V - c3.V));
        r.trace_drift = std::max(run1.max_trace_drift, run3.max_trace_drift);
        r.herm = std::max(run1.max_hermiticity_defect, run3.max_hermiticity_defect);
        r.neg_eig = std::max(0.0, -std::min(run1.min_eigenvalue, run3.min_eigenvalue));
        return r;
      },
      exec);

  auto max_of = [](auto first, auto last, auto proj) {
    double m = 0.0;
    for (auto it = first; it != last; ++it) m = std::max(m, proj(*it));
    return m;
  };
  const Tolerances& tol = spec.integrator.tol;
  ValidateReport report;
  report.checks.push_back(
      {"free_decay_oracle", free_dev.size(),
       max_of(free_dev.begin(), free_dev.end(), [](double d) { return d; }), 1e-8});
  auto grid_check = [&](const char* name, double tolerance, auto proj) {
    report.checks.push_back(
        {name, results.size(), max_of(results.begin(), results.end(), proj),
         tolerance});
  };
  grid_check("screened_coeff_oracle", 1e-6,
             [](const GridResult& r) { return r.coeff_dev; });
  grid_check("screened_fidelity_oracle", 1e-6,
             [](const GridResult& r) { return r.fid_dev; });
  grid_check("fock_cutoff_1_vs_3", 1e-10,
             [](const GridResult& r) { return r.cutoff_dev; });
  grid_check("trace_drift", tol.trace,
             [](const GridResult& r) { return r.trace_drift; });
  grid_check("hermiticity_defect", tol.hermiticity,
             [](const GridResult& r) { return r.herm; });
  grid_check("negative_eigenvalue", tol.psd,
             [](const GridResult& r) { return r.neg_eig; });
  return report;
}

// ---------------------------------------------------------------------------

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": empty key");
    }
    out[std::move(key)] = trim(line.substr(eq + 1));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (trim(s).empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace zeno::cli
