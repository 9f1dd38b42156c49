#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "septower/lattice.hpp"

namespace septower {

struct SeparatingPair {
  Embedding phi;
  Embedding psi;
  Subfield over;
};

/// Verdicts of the three equivalent criteria for an element or an extension.
/// An absent verdict means the criterion was not evaluated (see notes).
struct SeparabilityReport {
  std::string subject;
  std::size_t degree = 0;
  std::size_t hom_count = 0;
  std::optional<bool> by_derivative;
  std::optional<bool> by_witness;
  std::optional<bool> by_hom_count;
  unsigned exponent = 0;
  std::optional<SeparatingPair> pair;
  std::optional<Subfield> canonical;
  // The element the pair separates, or the one the canonical subfield excludes.
  std::optional<Elem> witness_element;
  std::vector<std::string> notes;

  /// The common verdict; InternalError when present verdicts disagree.
  [[nodiscard]] bool separable() const;
};

/// Criterion (i): the minimal polynomial has as many distinct roots as its degree.
[[nodiscard]] SeparabilityReport is_separable_element(const Elem& a);

/// Two embeddings of a.field() fixing L that move a differently, or nothing
/// when every pair agrees on a. PreconditionError when a lies in L.
[[nodiscard]] std::optional<std::pair<Embedding, Embedding>> separation_witness(const Elem& a, const Subfield& L,
                                                                              const SplittingContext& ctx);

/// Subfields of K(a) as subfields of a.field(), with their completeness: the
/// nodes of the lattice of a.field() inside K(a) when that lattice is
/// available, else the lattice of K[x]/(minpoly(a)) carried over.
/// CapabilityError when neither is available.
[[nodiscard]] SubfieldLattice subfields_of_simple(const Elem& a, const SplittingContext& ctx,
                                                  const FactorOptions& opts = {});

/// Separation witnesses quantified over the subfields of K(a). Inseparability
/// is certified over K(a^p) alone; separability needs the complete lattice of K(a).
[[nodiscard]] SeparabilityReport is_separable_element_by_witness(const Elem& a, const SplittingContext& ctx,
                                                                 const FactorOptions& opts = {});

/// K(a^(p^e)) for an inseparable a, after checking a is not in it and that
/// every pair of embeddings fixing it agrees on a.
[[nodiscard]] Subfield canonical_inseparable_witness(const Elem& a, const SplittingContext& ctx);

/// Number of distinct images of a under Hom_K(a.field(), N) against deg minpoly(a).
[[nodiscard]] SeparabilityReport hom_count_element(const Elem& a, const SplittingContext& ctx);

/// |Hom_L(E, N)| = [E:L].
[[nodiscard]] SeparabilityReport hom_count_criterion(const Field& E, const Subfield& over, const SplittingContext& ctx);
[[nodiscard]] inline SeparabilityReport hom_count_criterion(const Field& E, const SplittingContext& ctx) {
  return hom_count_criterion(E, Subfield::base(E), ctx);
}

/// All three criteria on one element; InternalError when they disagree.
[[nodiscard]] SeparabilityReport check_element(const Elem& a, const SplittingContext& ctx,
                                               const FactorOptions& opts = {});

/// All three criteria on E over its base: stage polynomials, generators and
/// the embedding count.
[[nodiscard]] SeparabilityReport check_extension(const Field& E, const SplittingContext& ctx,
                                                 const FactorOptions& opts = {});

struct HomGt1Result {
  // Absent when every proper node passes but the lattice is only sound.
  std::optional<bool> verdict;
  std::vector<std::pair<std::size_t, std::size_t>> counts;  // (dimension of L, |Hom_L(E, N)|)
};

/// |Hom_L(E, N)| > 1 for every proper node L of the lattice.
[[nodiscard]] HomGt1Result hom_gt1_criterion(const Field& E, const SplittingContext& ctx,
                                             const SubfieldLattice& lattice);

struct L1L2Result {
  bool containment = false;
  bool implication = false;
};

/// L1 inside L2, against: every pair agreeing on L2 agrees on L1.
[[nodiscard]] L1L2Result l1l2_check(const Subfield& L1, const Subfield& L2, const SplittingContext& ctx);

struct MembershipResult {
  bool by_embeddings = false;
  bool by_span = false;
};

/// a in K(b) decided by embedding pairs, next to the linear-algebra answer.
/// PreconditionError when the ambient extension is inseparable.
[[nodiscard]] MembershipResult membership_by_embeddings(const Elem& a, const Elem& b, const SplittingContext& ctx);

struct SeparableClosure {
  Subfield closure;
  std::size_t closure_degree = 0;
  std::size_t inseparable_degree = 0;
};

[[nodiscard]] SeparableClosure separable_closure(const Field& E);

struct PrimitiveSearchPlan {
  Elem alpha;
  Elem beta;
  std::vector<RatFunc> candidates;
};

/// Candidates 0, 1, 2, ..., t, t + 1, ... for the points alpha + c*beta,
/// more than bound of them.
[[nodiscard]] PrimitiveSearchPlan primitive_plan(const Elem& alpha, const Elem& beta, std::size_t bound);

struct PrimitiveResult {
  Elem element;
  std::size_t candidates_tried = 0;
};

/// gamma with K(gamma) = E. PreconditionError on inseparable E.
[[nodiscard]] PrimitiveResult primitive_element(const Field& E, const SplittingContext& ctx);

struct TransitivityReport {
  SeparabilityReport e_over_l;
  SeparabilityReport l_over_k;
  SeparabilityReport e_over_k;
  bool vacuous = false;
  bool holds = false;
};

/// E over the stage L over the base, each by the hom-count criterion.
[[nodiscard]] TransitivityReport transitivity_check(const Field& E, const Field& L, const SplittingContext& ctx);

/// Some n embeddings give det(sigma_i(a_j)) != 0. InputError on dependent input.
[[nodiscard]] bool det_criterion(const std::vector<Elem>& a, const SplittingContext& ctx);

}  // namespace septower
