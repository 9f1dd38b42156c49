#pragma once

#include <vector>

#include "septower/embeddings.hpp"

namespace septower {

enum class Completeness { complete, sound_only };

/// Intermediate fields of E over its base, sorted by degree.
struct SubfieldLattice {
  Field ambient;
  std::vector<Subfield> nodes;
  Completeness completeness = Completeness::sound_only;
};

/// Span closed under products, containing 1, and closed under inverses of
/// its basis elements.
[[nodiscard]] bool validate_subfield(const Subfield& L);

/// All subfields of a finite E containing `over`, as kernels of
/// x -> x^(p^d) - x for the admissible d.
[[nodiscard]] SubfieldLattice subfields_finite(const Field& E, const Subfield& over);
[[nodiscard]] inline SubfieldLattice subfields_finite(const Field& E) {
  return subfields_finite(E, Subfield::base(E));
}

/// All subfields of a separable E with [E:K] <= 8 via the Galois
/// correspondence in ctx, which must contain a normal closure of E.
[[nodiscard]] SubfieldLattice subfields_separable(const Field& E, const SplittingContext& ctx);

/// K(a^(p^e)) in ... in K(a^p) in K(a) for an inseparable a, ambient a.field().
[[nodiscard]] SubfieldLattice canonical_chain(const Elem& a);

/// Picks the complete method when one applies, and the canonical chain of
/// the generator for simple inseparable extensions; CapabilityError otherwise.
[[nodiscard]] SubfieldLattice subfield_lattice(const Field& E, const SplittingContext& ctx);

/// Group of base-fixing automorphisms of the context field, with its
/// multiplication table (index of sigma o tau).
struct AutomorphismGroup {
  std::vector<Embedding> elements;  // elements[0] is the identity
  std::vector<std::vector<std::size_t>> table;
};

/// Hom_K(N, N) for the (normal) context field N; verifies the group laws.
[[nodiscard]] AutomorphismGroup automorphism_group(const SplittingContext& ctx, std::size_t max_order = 24);

/// Subgroups as sorted index lists, by brute-force closure.
[[nodiscard]] std::vector<std::vector<std::size_t>> subgroups(const AutomorphismGroup& G);

}  // namespace septower
