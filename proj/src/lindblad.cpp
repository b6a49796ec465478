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

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace zeno {

namespace {

constexpr Complex kI{0.0, 1.0};

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct Rk4Workspace {
  Matrix k1, k2, k3, k4, tmp;
};

void rk4_step(const LindbladModel& model, const Matrix& y, double h,
              Rk4Workspace& w, Matrix& out) {
  model.apply(y, w.k1);
  w.tmp = y + (0.5 * h) * w.k1;
  model.apply(w.tmp, w.k2);
  w.tmp = y + (0.5 * h) * w.k2;
  model.apply(w.tmp, w.k3);
  w.tmp = y + h * w.k3;
  model.apply(w.tmp, w.k4);
  out = y + (h / 6.0) * (w.k1 + 2.0 * w.k2 + 2.0 * w.k3 + w.k4);
}

}  // namespace

LindbladModel::LindbladModel(Operator hamiltonian,
                             std::vector<Collapse> collapses,
                             const Tolerances& tol)
    : h_(std::move(hamiltonian)), collapses_(std::move(collapses)) {
  if (!h_.is_hermitian(tol.hermiticity)) {
    throw std::invalid_argument("LindbladModel: Hamiltonian is not Hermitian");
  }
  h_eff_ = h_.matrix();
  for (const Collapse& c : collapses_) {
    if (!(c.op.space() == h_.space())) {
      throw std::invalid_argument(
          "LindbladModel: collapse operator acts on a different space");
    }
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
      throw std::invalid_argument("LindbladModel: collapse rates must be >= 0");
    }
    const Matrix& l = c.op.matrix();
    h_eff_ -= (0.5 * kI * c.rate) * (l.adjoint() * l);
    jumps_.push_back(std::sqrt(c.rate) * l);
  }
}

LindbladModel LindbladModel::with_collapse(Collapse c) const {
  std::vector<Collapse> cs = collapses_;
  cs.push_back(std::move(c));
  return LindbladModel(h_, std::move(cs));
}

void LindbladModel::apply(const Matrix& rho, Matrix& out) const {
  out.noalias() = -kI * (h_eff_ * rho);
  out.noalias() += kI * (rho * h_eff_.adjoint());
  for (const Matrix& j : jumps_) out.noalias() += j * rho * j.adjoint();
}

Matrix LindbladModel::liouvillian() const {
  const int d = space().dim();
  const Matrix id = Matrix::Identity(d, d);
  Matrix l = Eigen::kroneckerProduct(id, (-kI * h_eff_).eval()).eval();
  l += Eigen::kroneckerProduct((kI * h_eff_.conjugate()).eval(), id).eval();
  for (const Matrix& j : jumps_) {
    l += Eigen::kroneckerProduct(j.conjugate().eval(), j).eval();
  }
  return l;
}

void IntegratorConfig::validate() const {
  if (!(initial_step > 0.0) || !(rel_tol > 0.0) || !(abs_tol > 0.0) ||
      max_steps <= 0) {
    throw std::invalid_argument("IntegratorConfig: all settings must be positive");
  }
}

Matrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho) {
  if (!(rho.space() == model.space())) {
    throw std::invalid_argument("lindblad_rhs: dimension mismatch");
  }
  Matrix out;
  model.apply(rho.matrix(), out);
  return out;
}

DensityMatrix evolve(const LindbladModel& model, const DensityMatrix& rho0,
                     double duration, const IntegratorConfig& config,
                     EvolveStats* stats) {
  config.validate();
  if (!(rho0.space() == model.space())) {
    throw std::invalid_argument("evolve: dimension mismatch");
  }
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("evolve: duration must be >= 0");
  }
  EvolveStats local;
  EvolveStats& st = stats != nullptr ? *stats : local;
  st = {};
  if (duration == 0.0) {
    st.before_renormalization = rho0.physicality();
    return rho0;
  }

  Matrix y = rho0.matrix();
  Matrix full, half, two_halves;
  Rk4Workspace w;
  double t = 0.0;
  double h = std::min(config.initial_step, duration);
  const double h_min = duration * 1e-14;

  while (t < duration) {
    if (st.accepted + st.rejected >= config.max_steps) {
      throw NumericalError("evolve: max_steps exceeded");
    }
    const double remaining = duration - t;
    const bool last = h >= remaining;
    if (last) h = remaining;

    rk4_step(model, y, h, w, full);
    rk4_step(model, y, 0.5 * h, w, half);
    rk4_step(model, half, 0.5 * h, w, two_halves);

    // Richardson: the two-half-step result is off by (y2 - y1)/15 to 5th order.
    const Matrix correction = (two_halves - full) / 15.0;
    const double err = max_abs(correction);
    const double scale = config.abs_tol + config.rel_tol * max_abs(two_halves);

    if (err <= scale) {
      y = two_halves + correction;
      t = last ? duration : t + h;
      ++st.accepted;
    } else {
      ++st.rejected;
    }
    const double factor =
        err == 0.0 ? 4.0 : std::clamp(0.9 * std::pow(scale / err, 0.2), 0.2, 4.0);
    h *= factor;
    if (t < duration && h < h_min) {
      throw NumericalError("evolve: step size underflow");
    }
  }

  st.before_renormalization = measure_physicality(y);
  const Physicality& ph = st.before_renormalization;
  if (ph.trace_drift > config.tol.trace) {
    std::ostringstream os;
    os << "evolve: trace drifted by " << ph.trace_drift;
    throw NumericalError(os.str());
  }
  if (ph.min_eigenvalue < -config.tol.psd) {
    std::ostringstream os;
    os << "evolve: positivity lost (min eigenvalue " << ph.min_eigenvalue << ")";
    throw NumericalError(os.str());
  }
  y /= y.trace();
  return {model.space(), std::move(y), config.tol};
}

Matrix evolve_fixed_step(const LindbladModel& model, const Matrix& rho0,
                         double duration, int steps) {
  if (steps < 1) throw std::invalid_argument("evolve_fixed_step: steps >= 1");
  const double h = duration / steps;
  Rk4Workspace w;
  Matrix y = rho0;
  Matrix next;
  for (int i = 0; i < steps; ++i) {
    rk4_step(model, y, h, w, next);
    y.swap(next);
  }
  return y;
}

DensityMatrix evolve_expm(const LindbladModel& model, const DensityMatrix& rho0,
                          double duration, const Tolerances& tol) {
  if (!(rho0.space() == model.space())) {
    throw std::invalid_argument("evolve_expm: dimension mismatch");
  }
  const int d = model.space().dim();
  const Matrix prop = (model.liouvillian() * duration).exp();
  const Eigen::Map<const Vector> v0(rho0.matrix().data(), d * d);
  Vector v = prop * v0;
  Matrix out = Eigen::Map<Matrix>(v.data(), d, d);
  return {model.space(), std::move(out), tol};
}

}  // namespace zeno
