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

#include "zeno/screening.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace zeno::screening {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_cutoff(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("fock_cutoff must be >= 1");
}

void require_rate(double v, const char* name, bool strictly_positive) {
  const bool ok = std::isfinite(v) && (strictly_positive ? v > 0.0 : v >= 0.0);
  if (!ok) {
    throw std::invalid_argument(std::string(name) +
                                (strictly_positive ? " must be > 0" : " must be >= 0"));
  }
}

// Which factors are truncated bosonic modes, and how to count excitations in
// the product basis.
struct ModeLayout {
  HilbertSpace space;
  std::vector<bool> is_mode;  // per factor
  int cutoff;
  std::size_t casing;

  // Product-basis index -> per-factor level.
  [[nodiscard]] std::vector<int> levels(int index) const {
    std::vector<int> out(space.num_factors());
    for (std::size_t f = space.num_factors(); f-- > 0;) {
      out[f] = index % space.factor_dim(f);
      index /= space.factor_dim(f);
    }
    return out;
  }

  [[nodiscard]] int excitations(int index) const {
    int n = 0;
    for (int l : levels(index)) n += l;
    return n;
  }

  [[nodiscard]] double cutoff_population(const Matrix& rho) const {
    double pop = 0.0;
    for (int i = 0; i < space.dim(); ++i) {
      const auto lv = levels(i);
      for (std::size_t f = 0; f < lv.size(); ++f) {
        if (is_mode[f] && lv[f] == cutoff) {
          pop += rho(i, i).real();
          break;
        }
      }
    }
    return pop;
  }

  [[nodiscard]] int max_excitations(const Matrix& rho) const {
    int best = 0;
    for (int i = 0; i < space.dim(); ++i) {
      if (std::abs(rho(i, i)) > 1e-14) best = std::max(best, excitations(i));
    }
    return best;
  }
};

using Recorder = std::function<void(ProtocolTrace&, double, const DensityMatrix&)>;

ProtocolTrace run_segments(const DensityMatrix& joint0, const LindbladModel& model,
                           const ModeLayout& layout, double t, std::int64_t n,
                           const ProtocolOptions& opts, const Recorder& record) {
  if (n < 1) throw std::invalid_argument("erasure count N must be >= 1");
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("total time must be finite and >= 0");
  }
  opts.integrator.validate();

  std::optional<LindbladModel> eraser;
  if (opts.finite_erasure) {
    const FiniteErasure& fe = *opts.finite_erasure;
    require_rate(fe.duration, "finite erasure duration", false);
    require_rate(fe.rate, "finite erasure rate", false);
    const Operator casing_a =
        layout.casing == 0
            ? tensor(ops::annihilation(layout.cutoff),
                     Operator::identity(layout.space.without(0)))
            : tensor(Operator::identity(layout.space.without(1)),
                     ops::annihilation(layout.cutoff));
    eraser = model.with_collapse({casing_a, fe.rate});
  }

  const bool leak_checked = layout.cutoff > layout.max_excitations(joint0.matrix());

  ProtocolTrace trace;
  const Physicality ph0 = joint0.physicality();
  trace.max_trace_drift = ph0.trace_drift;
  trace.max_hermiticity_defect = ph0.hermiticity_defect;
  trace.min_eigenvalue = ph0.min_eigenvalue;

  auto absorb = [&](const Physicality& ph) {
    trace.max_trace_drift = std::max(trace.max_trace_drift, ph.trace_drift);
    trace.max_hermiticity_defect =
        std::max(trace.max_hermiticity_defect, ph.hermiticity_defect);
    trace.min_eigenvalue = std::min(trace.min_eigenvalue, ph.min_eigenvalue);
  };

  record(trace, 0.0, joint0);
  if (t == 0.0) return trace;

  const double segment = t / static_cast<double>(n);
  DensityMatrix rho = joint0;
  EvolveStats stats;
  for (std::int64_t k = 1; k <= n; ++k) {
    rho = evolve(model, rho, segment, opts.integrator, &stats);
    absorb(stats.before_renormalization);

    const double leak = layout.cutoff_population(rho.matrix());
    trace.max_cutoff_population = std::max(trace.max_cutoff_population, leak);
    if (leak_checked && leak > opts.leak_tol) {
      std::ostringstream os;
      os << "population " << leak << " reached the Fock cutoff "
         << layout.cutoff;
      throw NumericalError(os.str());
    }

    if (eraser) {
      rho = evolve(*eraser, rho, opts.finite_erasure->duration, opts.integrator,
                   &stats);
      absorb(stats.before_renormalization);
    } else {
      rho = erase_casing(rho, layout.casing);
    }
    const double now = k == n ? t : segment * static_cast<double>(k);
    record(trace, now, rho);
  }
  return trace;
}

}  // namespace

// ---------------------------------------------------------------------------

LindbladModel free_decay_model(double gamma) {
  require_rate(gamma, "gamma", true);
  return LindbladModel(Operator::zero(HilbertSpace::qubit()),
                       {{ops::sigma_minus(), gamma}});
}

void AtomCavityModel::validate() const {
  require_rate(omega, "omega", false);
  require_rate(gamma, "gamma", false);
  require_cutoff(fock_cutoff);
}

HilbertSpace AtomCavityModel::space() const {
  return HilbertSpace({2, fock_cutoff + 1});
}

LindbladModel AtomCavityModel::lindblad() const {
  validate();
  const Operator id_atom = Operator::identity(HilbertSpace::qubit());
  const Operator id_field = Operator::identity(HilbertSpace({fock_cutoff + 1}));
  const Operator sigma = tensor(ops::sigma_minus(), id_field);
  const Operator a = tensor(id_atom, ops::annihilation(fock_cutoff));
  const Operator h = Complex(0.0, omega) * (a.adjoint() * sigma - sigma.adjoint() * a);
  return LindbladModel(h, {{a, gamma}});
}

double InternalHamiltonian::energy(int n) const {
  switch (kind) {
    case Kind::None:
      return 0.0;
    case Kind::Detuning:
      return strength * n;
    case Kind::Kerr:
      return strength * n * n;
  }
  return 0.0;
}

Operator InternalHamiltonian::on_mode(int fock_cutoff) const {
  require_cutoff(fock_cutoff);
  const int d = fock_cutoff + 1;
  Matrix m = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) m(k, k) = energy(k);
  return {HilbertSpace({d}), std::move(m)};
}

std::string_view to_string(InternalHamiltonian::Kind kind) {
  switch (kind) {
    case InternalHamiltonian::Kind::None:
      return "none";
    case InternalHamiltonian::Kind::Detuning:
      return "detuning";
    case InternalHamiltonian::Kind::Kerr:
      return "kerr";
  }
  return "?";
}

InternalHamiltonian::Kind parse_internal_kind(std::string_view s) {
  if (s == "none") return InternalHamiltonian::Kind::None;
  if (s == "detuning") return InternalHamiltonian::Kind::Detuning;
  if (s == "kerr") return InternalHamiltonian::Kind::Kerr;
  throw std::invalid_argument("unknown internal Hamiltonian '" + std::string(s) +
                              "' (expected none, detuning or kerr)");
}

void FieldScreenModel::validate() const {
  require_rate(kappa, "kappa", false);
  require_rate(gamma, "gamma", false);
  if (!std::isfinite(internal.strength)) {
    throw std::invalid_argument("internal strength must be finite");
  }
  require_cutoff(fock_cutoff);
}

HilbertSpace FieldScreenModel::space() const {
  return HilbertSpace({fock_cutoff + 1, fock_cutoff + 1});
}

LindbladModel FieldScreenModel::lindblad() const {
  validate();
  const Operator id = Operator::identity(HilbertSpace({fock_cutoff + 1}));
  const Operator a = tensor(ops::annihilation(fock_cutoff), id);
  const Operator b = tensor(id, ops::annihilation(fock_cutoff));
  const Operator h = tensor(internal.on_mode(fock_cutoff), id) +
                     Complex(0.0, kappa) * (a * b.adjoint() - a.adjoint() * b);
  // Amplitude damping at γ means energy damping at 2γ.
  return LindbladModel(h, {{b, 2.0 * gamma}});
}

FieldQubit FieldQubit::from_params(const QubitParams& q) {
  const Vector v = q.ket();
  return {v(0), v(1)};
}

void FieldQubit::validate(double tol) const {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol) {
    throw std::invalid_argument("field qubit amplitudes must satisfy |α|²+|β|² = 1");
  }
}

// ---------------------------------------------------------------------------

DensityMatrix erase_casing(const DensityMatrix& rho_joint,
                           std::size_t casing_factor) {
  const HilbertSpace& s = rho_joint.space();
  if (casing_factor >= s.num_factors()) {
    throw std::invalid_argument("erase_casing: casing factor out of range");
  }
  const int left = s.dim_before(casing_factor);
  const int mid = s.factor_dim(casing_factor);
  const int right = s.dim_after(casing_factor);
  const Matrix& m = rho_joint.matrix();
  Matrix out = Matrix::Zero(s.dim(), s.dim());
  // Only the casing-ground block survives; it receives the casing trace.
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      for (int lp = 0; lp < left; ++lp) {
        for (int rp = 0; rp < right; ++rp) {
          Complex acc = 0.0;
          for (int j = 0; j < mid; ++j) {
            acc += m((l * mid + j) * right + r, (lp * mid + j) * right + rp);
          }
          out(l * mid * right + r, lp * mid * right + rp) = acc;
        }
      }
    }
  }
  return {s, std::move(out)};
}

ProtocolTrace run_atom_screening(const QubitParams& q, const AtomCavityModel& m,
                                 double t, std::int64_t n,
                                 const ProtocolOptions& opts) {
  q.validate();
  const LindbladModel model = m.lindblad();
  const DensityMatrix joint0 =
      tensor(qubit_state(q), ops::basis_state(m.fock_cutoff + 1, 0));
  const ModeLayout layout{m.space(), {false, true}, m.fock_cutoff, 1};
  const Tolerances& tol = opts.integrator.tol;

  return run_segments(joint0, model, layout, t, n, opts,
                      [&](ProtocolTrace& tr, double now, const DensityMatrix& rho) {
                        const DensityMatrix atom = partial_trace(rho, 0);
                        tr.times.push_back(now);
                        tr.coefficients.push_back(
                            extract_coefficients(atom, q.psi, tol));
                        tr.fidelities.push_back(fidelity_with_pure(atom, q));
                      });
}

ProtocolTrace run_field_screening(const FieldQubit& initial,
                                  const FieldScreenModel& m, double t,
                                  std::int64_t n, const ProtocolOptions& opts) {
  initial.validate();
  m.validate();
  if (opts.strict_short_time && n >= 1) {
    const double step = t / static_cast<double>(n);
    if (m.kappa * step > opts.short_time_limit ||
        m.gamma * step > opts.short_time_limit) {
      std::ostringstream os;
      os << "N=" << n << " is outside the short-time regime (κt/N="
         << m.kappa * step << ", γt/N=" << m.gamma * step << ")";
      throw std::invalid_argument(os.str());
    }
  }
  const int d = m.fock_cutoff + 1;
  Vector mode_a = Vector::Zero(d);
  mode_a(0) = initial.alpha;
  mode_a(1) = initial.beta;
  const DensityMatrix joint0 = tensor(DensityMatrix::pure(HilbertSpace({d}), mode_a),
                                      ops::basis_state(d, 0));
  const ModeLayout layout{m.space(), {true, true}, m.fock_cutoff, 1};

  return run_segments(
      joint0, m.lindblad(), layout, t, n, opts,
      [&](ProtocolTrace& tr, double now, const DensityMatrix& rho) {
        DensityMatrix reduced = partial_trace(rho, 0);
        Vector target(d);
        for (int k = 0; k < d; ++k) {
          target(k) = mode_a(k) * std::exp(-kI * m.internal.energy(k) * now);
        }
        tr.times.push_back(now);
        tr.fidelities.push_back(fidelity_with_pure(reduced, target));
        tr.reduced_states.push_back(std::move(reduced));
      });
}

std::vector<double> xi_moment_probe(const FieldScreenModel& m, double t,
                                    std::int64_t n, const ProtocolOptions& opts) {
  const ProtocolTrace tr = run_field_screening(FieldQubit{}, m, t, n, opts);
  const Matrix& rho = tr.reduced_states.back().matrix();
  const Matrix a = ops::annihilation(m.fock_cutoff).matrix();
  const Matrix ad = a.adjoint();
  const int d = m.fock_cutoff + 1;

  std::vector<double> out;
  out.reserve(kProbedMoments.size());
  for (const auto& [pm, pn] : kProbedMoments) {
    Matrix op = Matrix::Identity(d, d);
    for (int i = 0; i < pm; ++i) op = op * ad;
    for (int i = 0; i < pn; ++i) op = op * a;
    out.push_back(std::abs((op * rho).trace()));
  }
  return out;
}

}  // namespace zeno::screening
