#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "septower/field.hpp"

namespace septower {

/// Dense univariate polynomial over a field handle, coefficients low to high,
/// leading coefficient nonzero unless the polynomial is zero.
class Poly {
 public:
  /// Coefficients from a lower stage of `field` are lifted.
  Poly(Field field, std::vector<Elem> coeffs);

  [[nodiscard]] static Poly zero(const Field& f) { return Poly(f, {}); }
  [[nodiscard]] static Poly constant(const Elem& c) { return Poly(c.field(), {c}); }
  [[nodiscard]] static Poly x(const Field& f);
  [[nodiscard]] static Poly monomial(const Elem& c, std::size_t e);
  /// Integer coefficients, low to high.
  [[nodiscard]] static Poly from_ints(const Field& f, const std::vector<std::int64_t>& coeffs);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] const std::vector<Elem>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
  [[nodiscard]] bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  [[nodiscard]] const Elem& lead() const;
  /// Coefficient of x^i (zero beyond the degree).
  [[nodiscard]] Elem coeff(std::size_t i) const;

  [[nodiscard]] Poly lift(const Field& to) const;
  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly derivative() const;
  /// Horner evaluation in the common field of the coefficients and a.
  [[nodiscard]] Elem eval(const Elem& a) const;
  /// f(x + s).
  [[nodiscard]] Poly shift(const Elem& s) const;
  [[nodiscard]] Poly pow(std::uint64_t e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Elem& c);
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Degree first, then coefficients from the top; deterministic ordering only.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

  /// e.g. "x^2 + (s + 1)*x + t".
  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// (q, r) with a = q*b + r, deg r < deg b. Throws InputError when b = 0 or the
/// fields differ.
[[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
[[nodiscard]] Poly operator%(const Poly& a, const Poly& b);
/// Exact quotient; throws InternalError when b does not divide a.
[[nodiscard]] Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd. Throws InputError when both are zero.
[[nodiscard]] Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly gcd;  // monic
  Poly s;
  Poly t;    // s*a + t*b = gcd
};
[[nodiscard]] Bezout xgcd(const Poly& a, const Poly& b);

/// base^e mod m.
[[nodiscard]] Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);

/// h with f(x) = h(x^k) when every exponent of f is divisible by k.
[[nodiscard]] std::optional<Poly> deflate(const Poly& f, std::uint64_t k);
/// h(x^k).
[[nodiscard]] Poly inflate(const Poly& h, std::uint64_t k);

}  // namespace septower
