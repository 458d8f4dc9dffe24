#pragma once

#include <cstddef>

namespace fuzzyhom {

/// Selects between the OpenMP kernels and the serial reference path.
/// Both paths produce bit-identical results; the serial one is what the
/// tests compare against.
enum class Execution { Serial, Parallel };

/// Loops shorter than this stay serial even under Execution::Parallel.
inline constexpr std::size_t kParallelGrain = 16;

inline bool run_parallel(Execution exec, std::size_t work) {
  return exec == Execution::Parallel && work >= kParallelGrain;
}

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace fuzzyhom
