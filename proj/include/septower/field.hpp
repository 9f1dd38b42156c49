#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "septower/ratfunc.hpp"

namespace septower {

enum class FieldKind { prime, rational_function, extension };

struct FieldNode;
class Elem;

/// Shared, immutable handle to a base field (F_p or F_p(t)) or to a stage of
/// a tower K[x]/(f_1)[x]/(f_2)... Handles compare by identity: two separately
/// constructed towers are different fields even when isomorphic.
class Field {
 public:
  [[nodiscard]] static Field prime(std::uint32_t p);
  [[nodiscard]] static Field rational_function(std::uint32_t p);
  /// Adjoins a root of the monic polynomial with the given coefficients (low
  /// to high, elements of `parent`). Irreducibility is NOT checked here; use
  /// make_extension for certified construction.
  [[nodiscard]] static Field extension_unchecked(const Field& parent, std::string generator,
                                                 std::vector<Elem> minpoly);

  [[nodiscard]] FieldKind kind() const noexcept;
  [[nodiscard]] std::uint32_t characteristic() const noexcept;
  /// Absolute degree over the base field.
  [[nodiscard]] std::size_t degree() const noexcept;
  /// Degree of the top stage over its parent (1 for base fields).
  [[nodiscard]] std::size_t stage_degree() const noexcept;
  /// Number of stages above the base (0 for base fields).
  [[nodiscard]] std::size_t depth() const noexcept;
  [[nodiscard]] bool is_base() const noexcept { return depth() == 0; }
  /// True when the base is F_p.
  [[nodiscard]] bool is_finite() const noexcept;
  /// Number of elements; only meaningful for finite fields of size < 2^63.
  [[nodiscard]] std::uint64_t order() const;

  [[nodiscard]] Field parent() const;
  [[nodiscard]] Field base() const;
  /// stages()[0] is the base, stages().back() is *this.
  [[nodiscard]] std::vector<Field> stages() const;
  /// Generator names of stages 1..depth, bottom up.
  [[nodiscard]] std::vector<std::string> generator_names() const;
  [[nodiscard]] const std::string& generator_name() const;
  /// Monic defining polynomial of the top stage over parent(), low to high.
  [[nodiscard]] const std::vector<Elem>& minpoly() const;

  /// True when *this equals `other` or is one of its lower stages.
  [[nodiscard]] bool is_subfield_of(const Field& other) const noexcept;

  /// "F_2", "F_3(t)", "F_3(t)(s,u)".
  [[nodiscard]] std::string description() const;

  [[nodiscard]] const FieldNode* node() const noexcept { return node_.get(); }
  friend bool operator==(const Field& a, const Field& b) noexcept { return a.node_ == b.node_; }

 private:
  explicit Field(std::shared_ptr<const FieldNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const FieldNode> node_;
};

/// Element of a field handle, stored as its coordinate vector over the base
/// in the product power basis prod_i g_i^{e_i}, 0 <= e_i < stage degree i,
/// with the lowest stage varying fastest. Always fully reduced, so equality
/// is coordinate-wise.
class Elem {
 public:
  Elem(Field field, std::vector<RatFunc> coords);

  [[nodiscard]] static Elem zero(const Field& f);
  [[nodiscard]] static Elem one(const Field& f);
  [[nodiscard]] static Elem integer(const Field& f, std::int64_t c);
  [[nodiscard]] static Elem scalar(const Field& f, const RatFunc& c);
  /// The base variable t; requires an F_p(t) base.
  [[nodiscard]] static Elem t(const Field& f);
  /// Generator of the top stage of f.
  [[nodiscard]] static Elem generator(const Field& f);
  /// Basis element number `index` of the product power basis.
  [[nodiscard]] static Elem basis(const Field& f, std::size_t index);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<RatFunc>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::uint32_t characteristic() const noexcept { return field_.characteristic(); }

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;
  /// True when the element lies in the base field.
  [[nodiscard]] bool in_base() const noexcept;
  /// Largest t-degree among the coordinates.
  [[nodiscard]] int height() const noexcept;

  /// Same element viewed in a field having field() as a lower stage.
  [[nodiscard]] Elem lift(const Field& to) const;
  /// Same element viewed in the lower stage `to`; requires it to lie there.
  [[nodiscard]] Elem lower(const Field& to) const;
  /// Coordinates of the top stage as elements of parent().
  [[nodiscard]] std::vector<Elem> top_blocks() const;

  [[nodiscard]] Elem inverse() const;
  [[nodiscard]] Elem pow(std::uint64_t e) const;
  /// x -> x^p applied `times` times.
  [[nodiscard]] Elem frobenius(std::size_t times = 1) const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o) { return *this *= o.inverse(); }
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }
  friend Elem operator-(const Elem& a);

  friend bool operator==(const Elem& a, const Elem& b) noexcept {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates (high index first); deterministic ordering only.
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b) noexcept;

  /// Polynomial in the generator names with base coefficients, e.g. "s*u + (t + 1)".
  [[nodiscard]] std::string to_string() const;

 private:
  Field field_;
  std::vector<RatFunc> coords_;
};

[[nodiscard]] inline bool is_zero(const Elem& a) noexcept { return a.is_zero(); }

/// Brings two elements into a common field when one field is a lower stage of
/// the other; throws InputError otherwise.
[[nodiscard]] Field common_field(const Field& a, const Field& b);

}  // namespace septower
