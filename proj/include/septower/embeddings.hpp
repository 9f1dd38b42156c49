#pragma once

#include <compare>
#include <string>
#include <vector>

#include "septower/factor.hpp"
#include "septower/tower.hpp"

namespace septower {

/// A finite stand-in for an algebraic closure: a tower N in which the tracked
/// polynomials split into linear factors (with multiplicities).
class SplittingContext {
 public:
  struct Tracked {
    Poly poly;
    std::vector<Elem> roots;  // distinct, sorted
  };

  SplittingContext(Field N, std::vector<Tracked> tracked) : N_(std::move(N)), tracked_(std::move(tracked)) {}

  [[nodiscard]] const Field& field() const noexcept { return N_; }
  [[nodiscard]] const std::vector<Tracked>& tracked() const noexcept { return tracked_; }
  /// Distinct roots of f in N; uses the tracked list when f is tracked.
  [[nodiscard]] std::vector<Elem> roots_of(const Poly& f, const FactorOptions& opts = {}) const;

 private:
  Field N_;
  std::vector<Tracked> tracked_;
};

/// Adjoins roots of f over its field until f splits. The new generators are
/// named r1, r2, ... (skipping names already used in the tower).
[[nodiscard]] SplittingContext splitting_field(const Poly& f, const FactorOptions& opts = {});

/// A context N containing E as a lower stage and containing a normal closure
/// of E over the base: every base minimal polynomial of a generator of E
/// splits in N.
[[nodiscard]] SplittingContext splitting_context(const Field& E, const FactorOptions& opts = {});

/// Base-fixing homomorphism from a tower into the context field, stored as
/// the images of the stage generators (bottom up).
struct Embedding {
  Field domain;
  Field codomain;
  std::vector<Elem> images;

  friend bool operator==(const Embedding& a, const Embedding& b) {
    return a.domain == b.domain && a.codomain == b.codomain && a.images == b.images;
  }
  friend std::strong_ordering operator<=>(const Embedding& a, const Embedding& b) {
    return std::lexicographical_compare_three_way(a.images.begin(), a.images.end(), b.images.begin(),
                                                  b.images.end());
  }
  [[nodiscard]] std::string to_string() const;
};

/// Image of a (an element of the domain or of one of its lower stages).
[[nodiscard]] Elem apply(const Embedding& phi, const Elem& a);

/// The identity of E viewed as an embedding into N.
[[nodiscard]] Embedding inclusion(const Field& E, const Field& N);

/// Whether phi and psi coincide on L (checked on L's span basis).
[[nodiscard]] bool agree_on(const Embedding& phi, const Embedding& psi, const Subfield& L);

enum class HomMethod { automatic, root_chasing, frobenius };

/// All homomorphisms E -> ctx.field() fixing L pointwise, sorted. Throws
/// ContextError when some stage polynomial fails to split in the context.
[[nodiscard]] std::vector<Embedding> hom_set(const Field& E, const Subfield& L, const SplittingContext& ctx,
                                             HomMethod method = HomMethod::automatic);

/// Every extension of phi (defined on F) to the stage L over F.
[[nodiscard]] std::vector<Embedding> extend_embedding(const Embedding& phi, const Field& L,
                                                      const SplittingContext& ctx);

/// Number of distinct restrictions to L of the base-fixing homomorphisms of
/// L's ambient field, i.e. |Hom_K(L, Omega)|.
[[nodiscard]] std::size_t count_hom_subfield(const Subfield& L, const SplittingContext& ctx);

struct HomCount {
  std::size_t over_L = 0;  // |Hom_L(E, Omega)|
  std::size_t e_over_k = 0;
  std::size_t l_over_k = 0;
  std::size_t degree = 0;  // [E:K]
  bool tower_formula = false;
  bool degree_bound = false;
};

/// |Hom_L(E, Omega)| together with the tower-formula audit.
[[nodiscard]] HomCount count_hom(const Field& E, const Subfield& L, const SplittingContext& ctx);

}  // namespace septower
