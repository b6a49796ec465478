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

#include "zeno/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace zeno {

namespace {

void require_same_space(const HilbertSpace& a, const HilbertSpace& b,
                        const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": Hilbert space mismatch");
  }
}

void require_shape(const HilbertSpace& space, const Matrix& m,
                   const char* what) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols()
       << " but the space has dimension " << space.dim();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HilbertSpace

HilbertSpace::HilbertSpace(std::vector<int> factor_dims)
    : dims_(std::move(factor_dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("HilbertSpace needs at least one factor");
  }
  dim_ = 1;
  for (int d : dims_) {
    if (d < 1) {
      throw std::invalid_argument("HilbertSpace factor dimension must be >= 1");
    }
    dim_ *= d;
  }
}

int HilbertSpace::dim_before(std::size_t i) const {
  int d = 1;
  for (std::size_t k = 0; k < i; ++k) d *= dims_.at(k);
  return d;
}

int HilbertSpace::dim_after(std::size_t i) const {
  int d = 1;
  for (std::size_t k = i + 1; k < dims_.size(); ++k) d *= dims_[k];
  return d;
}

HilbertSpace HilbertSpace::without(std::size_t i) const {
  if (i >= dims_.size()) {
    throw std::invalid_argument("factor index out of range");
  }
  if (dims_.size() == 1) return HilbertSpace({1});
  std::vector<int> rest;
  rest.reserve(dims_.size() - 1);
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k != i) rest.push_back(dims_[k]);
  }
  return HilbertSpace(std::move(rest));
}

HilbertSpace HilbertSpace::operator*(const HilbertSpace& other) const {
  std::vector<int> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return HilbertSpace(std::move(dims));
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(HilbertSpace space, Matrix elements)
    : space_(std::move(space)), m_(std::move(elements)) {
  require_shape(space_, m_, "Operator");
}

Operator Operator::identity(const HilbertSpace& space) {
  return {space, Matrix::Identity(space.dim(), space.dim())};
}

Operator Operator::zero(const HilbertSpace& space) {
  return {space, Matrix::Zero(space.dim(), space.dim())};
}

Operator Operator::adjoint() const { return {space_, m_.adjoint()}; }

bool Operator::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::operator+(const Operator& o) const {
  require_same_space(space_, o.space_, "Operator::operator+");
  return {space_, m_ + o.m_};
}

Operator Operator::operator-(const Operator& o) const {
  require_same_space(space_, o.space_, "Operator::operator-");
  return {space_, m_ - o.m_};
}

Operator Operator::operator*(const Operator& o) const {
  require_same_space(space_, o.space_, "Operator::operator*");
  return {space_, m_ * o.m_};
}

Operator Operator::operator*(Complex s) const { return {space_, m_ * s}; }

// ---------------------------------------------------------------------------
// DensityMatrix

Physicality measure_physicality(const Matrix& rho) {
  Physicality ph;
  ph.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  ph.trace_drift = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  ph.min_eigenvalue = es.eigenvalues().minCoeff();
  return ph;
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix elements,
                             const Tolerances& tol)
    : space_(std::move(space)), m_(std::move(elements)) {
  require_shape(space_, m_, "DensityMatrix");
  const Physicality ph = measure_physicality(m_);
  std::ostringstream os;
  if (ph.hermiticity_defect > tol.hermiticity) {
    os << "DensityMatrix is not Hermitian (defect " << ph.hermiticity_defect
       << ")";
  } else if (ph.trace_drift > tol.trace) {
    os << "DensityMatrix trace deviates from 1 by " << ph.trace_drift;
  } else if (ph.min_eigenvalue < -tol.psd) {
    os << "DensityMatrix has negative eigenvalue " << ph.min_eigenvalue;
  } else {
    return;
  }
  throw NumericalError(os.str());
}

DensityMatrix DensityMatrix::pure(const HilbertSpace& space, const Vector& v,
                                  const Tolerances& tol) {
  if (v.size() != space.dim()) {
    throw std::invalid_argument("state vector length does not match space");
  }
  if (std::abs(v.squaredNorm() - 1.0) > tol.trace) {
    throw std::invalid_argument("state vector is not normalized");
  }
  return {space, v * v.adjoint(), tol};
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

// ---------------------------------------------------------------------------
// Qubit parametrization

void QubitParams::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("qubit excitation probability p must lie in [0, 1]");
  }
  if (!std::isfinite(psi)) {
    throw std::invalid_argument("qubit phase psi must be finite");
  }
}

Vector QubitParams::ket() const {
  validate();
  Vector v(2);
  v(0) = std::sqrt(1.0 - p);
  v(1) = std::polar(std::sqrt(p), -psi);
  return v;
}

bool Coefficients::is_physical(double tol) const {
  if (!(P >= -tol && P <= 1.0 + tol)) return false;
  const double bound = std::sqrt(std::clamp(P * (1.0 - P), 0.0, 0.25));
  return std::abs(V) <= bound + tol;
}

DensityMatrix qubit_state(const QubitParams& params) {
  return DensityMatrix::pure(HilbertSpace::qubit(), params.ket());
}

// ---------------------------------------------------------------------------
// Composition and reduction

Operator tensor(const Operator& a, const Operator& b) {
  return {a.space() * b.space(),
          Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval()};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return {a.space() * b.space(),
          Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval()};
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
  const HilbertSpace& s = rho.space();
  if (keep >= s.num_factors()) {
    throw std::invalid_argument("partial_trace: factor index out of range");
  }
  const int left = s.dim_before(keep);
  const int mid = s.factor_dim(keep);
  const int right = s.dim_after(keep);
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(mid, mid);
  for (int k = 0; k < mid; ++k) {
    for (int kp = 0; kp < mid; ++kp) {
      Complex acc = 0.0;
      for (int l = 0; l < left; ++l) {
        for (int r = 0; r < right; ++r) {
          acc += m((l * mid + k) * right + r, (l * mid + kp) * right + r);
        }
      }
      out(k, kp) = acc;
    }
  }
  return {HilbertSpace({mid}), std::move(out)};
}

DensityMatrix trace_out(const DensityMatrix& rho, std::size_t factor) {
  const HilbertSpace& s = rho.space();
  if (factor >= s.num_factors()) {
    throw std::invalid_argument("trace_out: factor index out of range");
  }
  const int left = s.dim_before(factor);
  const int mid = s.factor_dim(factor);
  const int right = s.dim_after(factor);
  const Matrix& m = rho.matrix();
  const int n = left * right;
  Matrix out = Matrix::Zero(n, n);
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      for (int lp = 0; lp < left; ++lp) {
        for (int rp = 0; rp < right; ++rp) {
          Complex acc = 0.0;
          for (int j = 0; j < mid; ++j) {
            acc += m((l * mid + j) * right + r, (lp * mid + j) * right + rp);
          }
          out(l * right + r, lp * right + rp) = acc;
        }
      }
    }
  }
  return {s.without(factor), std::move(out)};
}

// ---------------------------------------------------------------------------
// Fidelity and coefficients

double fidelity_with_pure(const DensityMatrix& rho, const Vector& target) {
  if (target.size() != rho.dim()) {
    throw std::invalid_argument("fidelity_with_pure: dimension mismatch");
  }
  const Complex f = target.dot(rho.matrix() * target);
  return std::clamp(f.real(), 0.0, 1.0);
}

double fidelity_with_pure(const DensityMatrix& rho, const QubitParams& params) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("fidelity_with_pure: expected a qubit state");
  }
  return fidelity_with_pure(rho, params.ket());
}

Coefficients extract_coefficients(const DensityMatrix& rho, double psi,
                                  const Tolerances& tol) {
  if (rho.dim() != 2) {
    throw std::invalid_argument("extract_coefficients: expected a qubit state");
  }
  // ⟨e|ρ|g⟩ = V e^{-iψ}; rotate back onto the real axis.
  const Complex aligned = rho(1, 0) * std::polar(1.0, psi);
  if (std::abs(aligned.imag()) > tol.phase) {
    std::ostringstream os;
    os << "coherence phase deviates from psi (imaginary residue "
       << aligned.imag() << ")";
    throw NumericalError(os.str());
  }
  return {rho(1, 1).real(), aligned.real()};
}

// ---------------------------------------------------------------------------

namespace ops {

Operator sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return {HilbertSpace::qubit(), std::move(m)};
}

Operator annihilation(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("Fock cutoff must be >= 1");
  const int d = cutoff + 1;
  Matrix m = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {HilbertSpace({d}), std::move(m)};
}

Operator number(int cutoff) {
  const Operator a = annihilation(cutoff);
  return a.adjoint() * a;
}

DensityMatrix basis_state(int dim, int k) {
  if (k < 0 || k >= dim) throw std::invalid_argument("basis index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(k, k) = 1.0;
  return {HilbertSpace({dim}), std::move(m)};
}

}  // namespace ops

}  // namespace zeno
