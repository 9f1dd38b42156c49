#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "septower/factor_options.hpp"
#include "septower/poly.hpp"

namespace septower {

/// f(x) = g(x^{p^e}) with g' != 0.
struct SeparableDecomposition {
  Poly g;
  unsigned e = 0;
};

[[nodiscard]] SeparableDecomposition separable_decompose(const Poly& f);

/// Number of distinct roots of f in an algebraic closure of its field.
[[nodiscard]] std::size_t distinct_root_count(const Poly& f);

struct Factorization {
  Elem unit;
  /// Monic irreducible factors with multiplicities, sorted deterministically.
  std::vector<std::pair<Poly, unsigned>> factors;

  [[nodiscard]] Poly product() const;
};

/// Complete factorization into irreducibles over f's field. Throws
/// ResourceError when a search over F_p(t) would exceed the height bound.
[[nodiscard]] Factorization factor(const Poly& f, const FactorOptions& opts = {});

struct IrreducibilityCertificate {
  bool irreducible = false;
  /// A nontrivial monic factor when reducible.
  std::optional<Poly> factor;
};

/// Irreducibility over f's field; constants and zero are not irreducible.
[[nodiscard]] IrreducibilityCertificate is_irreducible(const Poly& f, const FactorOptions& opts = {});

/// Distinct roots of f lying in N (f's field must be N or a lower stage of N),
/// sorted.
[[nodiscard]] std::vector<Elem> roots_in(const Poly& f, const Field& N, const FactorOptions& opts = {});

/// Norm of f from its field down to the base: det of multiplication by f on
/// the base basis, made monic.
[[nodiscard]] Poly norm_to_base(const Poly& f);

}  // namespace septower
