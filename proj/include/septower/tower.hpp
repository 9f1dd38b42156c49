#pragma once

#include <optional>
#include <string>
#include <vector>

#include "septower/errors.hpp"
#include "septower/factor_options.hpp"
#include "septower/field.hpp"
#include "septower/linalg.hpp"
#include "septower/poly.hpp"

namespace septower {

/// Raised by make_extension when the defining polynomial splits.
class ReducibleError : public InputError {
 public:
  ReducibleError(const std::string& what, Poly factor) : InputError(what), factor_(std::move(factor)) {}
  [[nodiscard]] const Poly& factor() const noexcept { return factor_; }

 private:
  Poly factor_;
};

/// Adjoins a root of f (monic, degree >= 2, coefficients in parent or a lower
/// stage of it). Irreducibility over parent is certified by factorization;
/// throws ReducibleError exhibiting a factor otherwise.
[[nodiscard]] Field make_extension(const Field& parent, const Poly& f, std::string generator,
                                   const FactorOptions& opts = {});

/// The smallest intermediate field of ambient/base containing the generators,
/// represented by a base-linear basis closed under multiplication.
class Subfield {
 public:
  [[nodiscard]] static Subfield generated_by(const Field& ambient, std::vector<Elem> generators);
  /// The base field itself, basis {1}.
  [[nodiscard]] static Subfield base(const Field& ambient) { return generated_by(ambient, {}); }
  /// The whole ambient field.
  [[nodiscard]] static Subfield whole(const Field& ambient);
  /// A lower stage of the tower viewed inside ambient.
  [[nodiscard]] static Subfield stage(const Field& ambient, const Field& lower);

  [[nodiscard]] const Field& ambient() const noexcept { return ambient_; }
  [[nodiscard]] const std::vector<Elem>& generators() const noexcept { return generators_; }
  [[nodiscard]] const std::vector<Elem>& basis() const noexcept { return basis_; }
  /// Degree over the base field.
  [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }

  [[nodiscard]] bool contains(const Elem& a) const;
  /// Base coordinates of a with respect to basis(), when a lies in the subfield.
  [[nodiscard]] std::optional<std::vector<RatFunc>> coordinates(const Elem& a) const;
  [[nodiscard]] bool is_subset_of(const Subfield& other) const;
  [[nodiscard]] bool same_as(const Subfield& other) const {
    return dimension() == other.dimension() && is_subset_of(other);
  }

 private:
  Subfield(Field ambient, std::vector<Elem> generators);
  Field ambient_;
  std::vector<Elem> generators_;
  std::vector<Elem> basis_;
  linalg::SpanTracker<RatFunc> span_;
};

[[nodiscard]] inline std::vector<Elem> span_basis(const Subfield& L) { return L.basis(); }
[[nodiscard]] inline bool subfield_membership(const Elem& a, const Subfield& L) { return L.contains(a); }

/// Minimal polynomial of a over the base field, with coefficients in the base.
[[nodiscard]] Poly minimal_polynomial(const Elem& a);
/// Minimal polynomial of a over the subfield L; coefficients lie in L but are
/// returned as elements of L's ambient field.
[[nodiscard]] Poly minimal_polynomial(const Elem& a, const Subfield& L);

/// The unique r with r^p = a in a's field, if it exists.
[[nodiscard]] std::optional<Elem> pth_root(const Elem& a);

/// Base coordinates as a vector (the element's coordinate vector).
[[nodiscard]] inline const std::vector<RatFunc>& base_coords(const Elem& a) { return a.coords(); }

}  // namespace septower
