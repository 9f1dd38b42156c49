#pragma once

#include <cstdint>

namespace septower {

/// Knobs shared by every factorization entry point.
struct FactorOptions {
  /// Largest t-degree allowed for coefficients of candidate factors over
  /// F_p(t). Exceeding it raises ResourceError rather than guessing.
  int height_bound = 6;
  /// Seed for the randomized equal-degree splitting over finite fields.
  std::uint64_t seed = 0;
};

}  // namespace septower
