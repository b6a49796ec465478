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

#ifndef ZENO_PARALLEL_HPP
#define ZENO_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zeno::parallel {

enum class Execution { Serial, OpenMP };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Serial reference: out[i] = f(i) in index order.
template <class F>
auto map_serial(std::size_t n, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

/// out[i] = f(i) with iterations spread over OpenMP threads. Each slot is
/// written by exactly one iteration, so the result does not depend on the
/// schedule. The lowest-index exception is rethrown after the loop.
template <class F>
auto map_openmp(std::size_t n, F&& f) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      slots[k].emplace(f(k));
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class F>
auto map(std::size_t n, F&& f, Execution exec = Execution::OpenMP) {
  if (exec == Execution::Serial) return map_serial(n, std::forward<F>(f));
  return map_openmp(n, std::forward<F>(f));
}

}  // namespace zeno::parallel

#endif  // ZENO_PARALLEL_HPP
