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

#include "zeno/analytic.hpp"

#include <cmath>
#include <sstream>

namespace zeno::analytic {

namespace {

Complex ipow(Complex base, std::int64_t n) {
  Complex result{1.0, 0.0};
  while (n > 0) {
    if ((n & 1) != 0) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

// Per-segment decay factors of the excited population and of the coherence,
// including the e^{-γT/2} and e^{-γT/4} envelopes.
struct SegmentFactors {
  Complex population;
  Complex coherence;
};

SegmentFactors general_segment(double omega, double gamma, double T) {
  const Complex lambda = std::sqrt(Complex(gamma * gamma / 16.0 - omega * omega));
  const Complex l2 = lambda * lambda;
  const double g4 = gamma / 4.0;

  // Write sinh/cosh through exponentials already multiplied by the envelope;
  // Re(Λ) <= γ/4 keeps every exponent non-positive.
  const Complex ep2 = std::exp((2.0 * lambda - 2.0 * g4) * T);
  const Complex em2 = std::exp((-2.0 * lambda - 2.0 * g4) * T);
  const Complex sinh2 = 0.5 * (ep2 - em2);
  const Complex cosh2 = 0.5 * (ep2 + em2);
  const double env2 = std::exp(-2.0 * g4 * T);

  const Complex population = g4 / lambda * sinh2 +
                             (g4 * g4 - 0.5 * omega * omega) / l2 * cosh2 -
                             0.5 * omega * omega / l2 * env2;

  const Complex ep1 = std::exp((lambda - g4) * T);
  const Complex em1 = std::exp((-lambda - g4) * T);
  const Complex coherence = 0.5 * (ep1 + em1) + g4 / lambda * 0.5 * (ep1 - em1);
  return {population, coherence};
}

SegmentFactors critical_segment(double gamma, double T) {
  const double gT = gamma * T;
  return {std::exp(-gT / 2.0) * (1.0 + gT / 2.0 + gT * gT / 16.0),
          std::exp(-gT / 4.0) * (1.0 + gT / 4.0)};
}

void check_real(Complex value, const AnalyticTolerances& tol, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw NumericalError(std::string("screened_coeffs: non-finite ") + what);
  }
  if (std::abs(value.imag()) > tol.imag) {
    std::ostringstream os;
    os << "screened_coeffs: imaginary residue " << value.imag() << " in "
       << what;
    throw NumericalError(os.str());
  }
}

Coefficients assemble(const QubitParams& q, const ScreenParams& s,
                      const SegmentFactors& seg, const AnalyticTolerances& tol) {
  check_real(seg.population, tol, "population factor");
  check_real(seg.coherence, tol, "coherence factor");
  const Complex pop = ipow(seg.population, s.n_erasures);
  const Complex coh = ipow(seg.coherence, s.n_erasures);
  check_real(pop, tol, "population");
  check_real(coh, tol, "coherence");

  const Coefficients c0 = initial_coeffs(q);
  const Coefficients out{c0.P * pop.real(), c0.V * coh.real()};
  if (!out.is_physical(tol.physical)) {
    std::ostringstream os;
    os << "screened_coeffs: unphysical result P=" << out.P << " V=" << out.V;
    throw NumericalError(os.str());
  }
  return out;
}

}  // namespace

void ScreenParams::validate() const {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("omega must be finite and >= 0");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("gamma must be finite and > 0");
  }
  if (n_erasures < 1) {
    throw std::invalid_argument("erasure count N must be >= 1");
  }
  if (!(total_time >= 0.0) || !std::isfinite(total_time)) {
    throw std::invalid_argument("total time must be finite and >= 0");
  }
}

std::string_view to_string(BranchKind kind) {
  switch (kind) {
    case BranchKind::OverDamped:
      return "over-damped";
    case BranchKind::Critical:
      return "critical";
    case BranchKind::UnderDamped:
      return "under-damped";
  }
  return "?";
}

BranchKind classify_branch(double omega, double gamma,
                           const AnalyticTolerances& tol) {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (std::abs(omega - gamma / 4.0) <= tol.branch * gamma) {
    return BranchKind::Critical;
  }
  return omega < gamma / 4.0 ? BranchKind::OverDamped : BranchKind::UnderDamped;
}

Coefficients initial_coeffs(const QubitParams& q) {
  q.validate();
  return {q.p, std::sqrt(q.p * (1.0 - q.p))};
}

Coefficients free_decay_coeffs(const QubitParams& q, const FreeDecayParams& d,
                               double t) {
  if (!(d.gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
  const Coefficients c0 = initial_coeffs(q);
  return {c0.P * std::exp(-d.gamma * t), c0.V * std::exp(-d.gamma * t / 2.0)};
}

double fidelity(const Coefficients& initial, const Coefficients& now) {
  return (1.0 - initial.P) * (1.0 - now.P) + initial.P * now.P +
         2.0 * initial.V * now.V;
}

Coefficients screened_coeffs_general(const QubitParams& q,
                                     const ScreenParams& s,
                                     const AnalyticTolerances& tol) {
  s.validate();
  const double T = s.total_time / static_cast<double>(s.n_erasures);
  return assemble(q, s, general_segment(s.omega, s.gamma, T), tol);
}

Coefficients screened_coeffs_critical(const QubitParams& q,
                                      const ScreenParams& s) {
  s.validate();
  const double T = s.total_time / static_cast<double>(s.n_erasures);
  return assemble(q, s, critical_segment(s.gamma, T), AnalyticTolerances{});
}

Coefficients screened_coeffs(const QubitParams& q, const ScreenParams& s,
                             const AnalyticTolerances& tol) {
  s.validate();
  if (s.omega == 0.0 || s.total_time == 0.0) return initial_coeffs(q);
  if (classify_branch(s.omega, s.gamma, tol) == BranchKind::Critical) {
    return screened_coeffs_critical(q, s);
  }
  return screened_coeffs_general(q, s, tol);
}

double screened_fidelity(const QubitParams& q, const ScreenParams& s,
                         const AnalyticTolerances& tol) {
  return fidelity(initial_coeffs(q), screened_coeffs(q, s, tol));
}

std::int64_t minimal_erasures(const QubitParams& q, double omega, double gamma,
                              double t, double target_fidelity,
                              const AnalyticTolerances& tol) {
  if (!(target_fidelity <= 1.0) || !std::isfinite(target_fidelity)) {
    throw std::invalid_argument("target fidelity must be finite and <= 1");
  }
  if (tol.max_erasures < 1) {
    throw std::invalid_argument("max_erasures must be >= 1");
  }
  auto passes = [&](std::int64_t n) {
    return screened_fidelity(q, {omega, gamma, n, t}, tol) >= target_fidelity;
  };
  if (passes(1)) return 1;

  std::int64_t lo = 1;  // known to fail
  std::int64_t hi = 2;
  while (true) {
    if (hi >= tol.max_erasures) {
      hi = tol.max_erasures;
      if (hi <= lo || !passes(hi)) {
        std::ostringstream os;
        os << "target fidelity " << target_fidelity
           << " not reached within N <= " << tol.max_erasures;
        throw UnreachableTarget(os.str());
      }
      break;
    }
    if (passes(hi)) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace zeno::analytic
