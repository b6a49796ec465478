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

// zeno-screen <subcommand> [--param value]... --out PATH [--format csv|svg|both]
//             [--config PATH]
//
// Exit codes: 0 success, 1 usage error, 2 numerical or validation failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zeno/commands.hpp"

namespace {

namespace fs = std::filesystem;
using namespace zeno;
using namespace zeno::cli;

constexpr int kUsageError = 1;
constexpr int kNumericalError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out;
  std::string format = "csv";
  std::string config;
  bool serial = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output path")->type_name("PATH");
  sub->add_option("--format", c.format, "csv, svg or both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));
  sub->add_option("--config", c.config, "key=value file; flags take precedence")
      ->type_name("PATH");
  sub->add_flag("--serial", c.serial, "Use the serial reference loop");
}

void add_integrator(CLI::App* sub, IntegratorConfig& cfg) {
  sub->add_option("--rel-tol", cfg.rel_tol, "Integrator relative tolerance");
  sub->add_option("--abs-tol", cfg.abs_tol, "Integrator absolute tolerance");
  sub->add_option("--initial-step", cfg.initial_step, "Integrator initial step");
  sub->add_option("--max-steps", cfg.max_steps, "Integrator step budget");
}

// Fills options that were not given on the command line from the config file.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  for (const auto& [key, value] : parse_config(in)) {
    if (key == "config") throw UsageError("config files cannot nest");
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw UsageError("unknown config key '" + key + "' for " + sub->get_name());
    }
    if (opt->count() > 0) continue;
    if (opt->get_expected_min() == 0) {
      // Flags accept true/false style values.
      opt->add_result(value == "true" || value == "1" ? "true" : "false");
    } else {
      opt->add_result(value);
    }
    try {
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

void require_given(CLI::App* sub, const std::string& name) {
  if (sub->get_option("--" + name)->count() == 0) {
    throw UsageError(sub->get_name() + ": --" + name + " is required");
  }
}

void emit(const CsvTable& table, const Common& c, const report::SvgOptions& svg) {
  const fs::path out(c.out);
  if (c.format == "csv" || c.format == "both") {
    report::write_file(out, report::to_csv(table));
  }
  if (c.format == "svg") {
    report::write_file(out, report::to_svg(table, svg));
  } else if (c.format == "both") {
    fs::path svg_path = out;
    svg_path.replace_extension(".svg");
    if (svg_path == out) svg_path += ".svg";
    report::write_file(svg_path, report::to_svg(table, svg));
  }
}

std::vector<std::int64_t> to_n_list(const std::string& s) {
  return parse_int_list(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Protect a decaying qubit by repeatedly resetting a lossy casing mode"};
  app.require_subcommand(1);
  app.name("zeno-screen");

  Common common;

  // free-decay
  FreeDecaySpec fd;
  auto* free_decay = app.add_subcommand("free-decay", "Bare qubit decay, numeric vs closed form");
  free_decay->add_option("--gamma", fd.gamma, "Decay rate γ");
  free_decay->add_option("--p", fd.qubit.p, "Excited-state probability");
  free_decay->add_option("--psi", fd.qubit.psi, "Relative phase ψ");
  free_decay->add_option("--t-max", fd.t_max, "Final time");
  free_decay->add_option("--samples", fd.samples, "Number of time samples");
  add_integrator(free_decay, fd.integrator);
  add_common(free_decay, common);

  // screen-atom
  ScreenAtomSpec sa;
  std::string sa_n_list = "1,4,16";
  std::string sa_variant = "analytic";
  auto* screen_atom = app.add_subcommand("screen-atom", "Fidelity vs time for an atom in an erased cavity");
  screen_atom->add_option("--p", sa.qubit.p, "Excited-state probability");
  screen_atom->add_option("--psi", sa.qubit.psi, "Relative phase ψ");
  screen_atom->add_option("--omega", sa.omega,
                          "Rabi frequency Ω (required; e.g. 0.1 over-damped, 1 under-damped)");
  screen_atom->add_option("--gamma", sa.gamma, "Cavity damping γ");
  screen_atom->add_option("--t-max", sa.t_max, "Final time");
  screen_atom->add_option("--samples", sa.samples, "Number of time samples");
  screen_atom->add_option("--n-list", sa_n_list, "Comma-separated erasure counts");
  screen_atom->add_option("--variant", sa_variant, "analytic, simulated or both");
  screen_atom->add_option("--fock-cutoff", sa.fock_cutoff, "Cavity Fock cutoff");
  add_integrator(screen_atom, sa.integrator);
  add_common(screen_atom, common);

  // sweep-n
  SweepNSpec sn;
  std::string sn_omegas = "0,0.5,1,2,4";
  auto* sweep_n = app.add_subcommand("sweep-n", "Minimal erasure count vs Ω/γ");
  sweep_n->add_option("--p", sn.qubit.p, "Excited-state probability");
  sweep_n->add_option("--gamma", sn.gamma, "Cavity damping γ");
  sweep_n->add_option("--gamma-t", sn.gamma_t, "Dimensionless total time γt");
  sweep_n->add_option("--target", sn.target, "Target fidelity");
  sweep_n->add_option("--omega-list", sn_omegas, "Comma-separated Ω/γ values");
  sweep_n->add_option("--n-max", sn.n_max, "Search cap for N");
  add_common(sweep_n, common);

  // screen-field
  ScreenFieldSpec sf;
  QubitParams sf_qubit{0.5, 0.0};
  std::string sf_internal = "detuning";
  double sf_strength = 1.0;
  std::string sf_n_list = "4,16,64,256";
  auto* screen_field = app.add_subcommand("screen-field", "Photonic qubit in coupled cavities with internal dynamics");
  screen_field->add_option("--p", sf_qubit.p, "Single-photon probability |β|²");
  screen_field->add_option("--psi", sf_qubit.psi, "Phase of β (β = e^{-iψ}√p)");
  screen_field->add_option("--kappa", sf.kappa, "Cavity-cavity coupling κ");
  screen_field->add_option("--gamma", sf.gamma, "Auxiliary-cavity damping γ");
  screen_field->add_option("--internal", sf_internal, "none, detuning or kerr");
  screen_field->add_option("--strength", sf_strength, "δ (detuning) or χ (kerr)");
  screen_field->add_option("--t-max", sf.t_max, "Final time");
  screen_field->add_option("--samples", sf.samples, "Number of time samples");
  screen_field->add_option("--n-list", sf_n_list, "Comma-separated erasure counts");
  screen_field->add_option("--fock-cutoff", sf.fock_cutoff, "Fock cutoff of both modes");
  add_integrator(screen_field, sf.integrator);
  add_common(screen_field, common);

  // validate
  ValidateSpec vs;
  std::string v_p = "0.1,0.5,0.9", v_omega = "0.1,0.25,1,4",
              v_gt = "0.5,3.141592653589793", v_n = "1,2,8,32";
  auto* validate = app.add_subcommand("validate", "Cross-validate simulation against closed forms");
  validate->add_option("--p-list", v_p, "Comma-separated p values");
  validate->add_option("--omega-list", v_omega, "Comma-separated Ω/γ values");
  validate->add_option("--gamma-t-list", v_gt, "Comma-separated γt values");
  validate->add_option("--n-list", v_n, "Comma-separated N values");
  validate->add_option("--gamma", vs.gamma, "Cavity damping γ");
  validate->add_flag("--corrupt-gamma", vs.corrupt_gamma,
                     "Negative control: simulate with doubled damping");
  add_integrator(validate, vs.integrator);
  add_common(validate, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!common.config.empty()) apply_config(sub, common.config);
    require_given(sub, "out");
    const Execution exec = common.serial ? Execution::Serial : Execution::OpenMP;

    if (sub == free_decay) {
      emit(cmd_free_decay(fd, exec), common,
           {"Free decay", "t", "fidelity / coefficients"});
    } else if (sub == screen_atom) {
      require_given(sub, "omega");
      sa.n_list = to_n_list(sa_n_list);
      sa.variant = parse_variant(sa_variant);
      emit(cmd_screen_atom(sa, exec), common, {"Screened atom fidelity", "t", "F"});
    } else if (sub == sweep_n) {
      sn.omega_over_gamma = parse_double_list(sn_omegas);
      const SweepNResult r = cmd_sweep_n(sn, exec);
      for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
      emit(r.table, common, {"Required erasures", "omega/gamma", "N_min"});
    } else if (sub == screen_field) {
      sf.initial = screening::FieldQubit::from_params(sf_qubit);
      sf.internal = {screening::parse_internal_kind(sf_internal), sf_strength};
      sf.n_list = to_n_list(sf_n_list);
      emit(cmd_screen_field(sf, exec), common,
           {"Screened field fidelity", "t", "F"});
    } else if (sub == validate) {
      vs.p_list = parse_double_list(v_p);
      vs.omega_over_gamma = parse_double_list(v_omega);
      vs.gamma_t = parse_double_list(v_gt);
      vs.n_list = parse_int_list(v_n);
      const ValidateReport report = cmd_validate(vs, exec);
      const std::string text = report.to_text();
      std::cout << text;
      report::write_file(common.out, text);
      if (report.total_points() == 0) std::cerr << "warning: 0 checks\n";
      return report.passed() ? 0 : kNumericalError;
    }
  } catch (const UsageError& e) {
    std::cerr << "zeno-screen: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "zeno-screen: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "zeno-screen: " << e.what() << '\n';
    return kNumericalError;
  }
  return 0;
}
