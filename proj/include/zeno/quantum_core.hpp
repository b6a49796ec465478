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

#ifndef ZENO_QUANTUM_CORE_HPP
#define ZENO_QUANTUM_CORE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace zeno {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Raised when a numerical computation leaves its validity envelope
/// (integrator failure, trace drift, lost positivity, phase rotation, ...).
/// Precondition violations use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tolerances for the density-matrix invariants.
struct Tolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
  double phase = 1e-6;
};

/// Ordered tensor-product structure. Factor 0 is the leftmost (most
/// significant) index of the composite basis.
class HilbertSpace {
 public:
  HilbertSpace() : HilbertSpace(std::vector<int>{1}) {}
  explicit HilbertSpace(std::vector<int> factor_dims);

  static HilbertSpace qubit() { return HilbertSpace({2}); }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::size_t num_factors() const { return dims_.size(); }
  [[nodiscard]] int factor_dim(std::size_t i) const { return dims_.at(i); }
  [[nodiscard]] const std::vector<int>& factor_dims() const { return dims_; }

  /// Product of factor dimensions strictly before / after factor i.
  [[nodiscard]] int dim_before(std::size_t i) const;
  [[nodiscard]] int dim_after(std::size_t i) const;

  /// This space with factor i removed.
  [[nodiscard]] HilbertSpace without(std::size_t i) const;

  [[nodiscard]] HilbertSpace operator*(const HilbertSpace& other) const;
  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  std::vector<int> dims_;
  int dim_ = 1;
};

/// Linear operator on a HilbertSpace. Hamiltonians are stored divided by
/// hbar, i.e. in angular-frequency units.
class Operator {
 public:
  Operator(HilbertSpace space, Matrix elements);

  static Operator identity(const HilbertSpace& space);
  static Operator zero(const HilbertSpace& space);

  [[nodiscard]] const HilbertSpace& space() const { return space_; }
  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] int dim() const { return space_.dim(); }

  [[nodiscard]] Operator adjoint() const;
  [[nodiscard]] bool is_hermitian(double tol) const;

  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator*(const Operator& o) const;
  Operator operator*(Complex s) const;

 private:
  HilbertSpace space_;
  Matrix m_;
};

inline Operator operator*(Complex s, const Operator& op) { return op * s; }

/// Physicality defects of a candidate density matrix.
struct Physicality {
  double hermiticity_defect = 0.0;  // max |ρ - ρ†|
  double trace_drift = 0.0;         // |Tr ρ - 1|
  double min_eigenvalue = 0.0;      // of the Hermitian part
};

[[nodiscard]] Physicality measure_physicality(const Matrix& rho);

/// Hermitian, unit-trace, positive semidefinite state. Construction
/// validates all three invariants.
class DensityMatrix {
 public:
  DensityMatrix(HilbertSpace space, Matrix elements,
                const Tolerances& tol = {});

  /// |v⟩⟨v| for a normalized state vector.
  static DensityMatrix pure(const HilbertSpace& space, const Vector& v,
                            const Tolerances& tol = {});

  [[nodiscard]] const HilbertSpace& space() const { return space_; }
  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] int dim() const { return space_.dim(); }
  [[nodiscard]] Complex operator()(int r, int c) const { return m_(r, c); }

  [[nodiscard]] double trace() const { return m_.trace().real(); }
  [[nodiscard]] double purity() const;
  [[nodiscard]] Physicality physicality() const {
    return measure_physicality(m_);
  }

 private:
  HilbertSpace space_;
  Matrix m_;
};

/// Initial qubit |Ψ⟩ = sqrt(1-p)|g⟩ + exp(-iψ) sqrt(p)|e⟩ with |g⟩ = 0, |e⟩ = 1.
struct QubitParams {
  double p = 0.0;
  double psi = 0.0;

  void validate() const;
  [[nodiscard]] Vector ket() const;
};

/// Populations and interference term of the reduced qubit
///   ρ = (1-P)|g⟩⟨g| + P|e⟩⟨e| + V(|g⟩⟨e| e^{iψ} + |e⟩⟨g| e^{-iψ}).
/// V is signed: under-damped dynamics can flip the coherence by π.
struct Coefficients {
  double P = 0.0;
  double V = 0.0;

  [[nodiscard]] bool is_physical(double tol) const;
};

[[nodiscard]] DensityMatrix qubit_state(const QubitParams& params);

[[nodiscard]] Operator tensor(const Operator& a, const Operator& b);
[[nodiscard]] DensityMatrix tensor(const DensityMatrix& a,
                                   const DensityMatrix& b);

/// Reduced state on factor `keep`.
[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix& rho,
                                          std::size_t keep);

/// Reduced state with factor `factor` traced out; the others keep their order.
[[nodiscard]] DensityMatrix trace_out(const DensityMatrix& rho,
                                      std::size_t factor);

/// ⟨Ψ|ρ|Ψ⟩ for the qubit target described by params.
[[nodiscard]] double fidelity_with_pure(const DensityMatrix& rho,
                                        const QubitParams& params);
[[nodiscard]] double fidelity_with_pure(const DensityMatrix& rho,
                                        const Vector& target);

/// Inverse of the (P, V) parametrization. Throws NumericalError when the
/// coherence is rotated away from the e^{-iψ} axis by more than tol.phase.
[[nodiscard]] Coefficients extract_coefficients(const DensityMatrix& rho,
                                                double psi,
                                                const Tolerances& tol = {});

/// Standard single-mode and two-level operators.
namespace ops {

/// σ = |g⟩⟨e| on a qubit.
[[nodiscard]] Operator sigma_minus();
/// Truncated annihilation operator on span{|0⟩ ... |cutoff⟩}.
[[nodiscard]] Operator annihilation(int cutoff);
[[nodiscard]] Operator number(int cutoff);
/// |k⟩⟨k| on a dim-dimensional factor.
[[nodiscard]] DensityMatrix basis_state(int dim, int k);

}  // namespace ops

}  // namespace zeno

#endif  // ZENO_QUANTUM_CORE_HPP
