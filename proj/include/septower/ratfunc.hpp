#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "septower/fp_poly.hpp"

namespace septower {

/// Element of the rational function field F_p(t), kept in canonical form:
/// gcd(num, den) = 1, den monic, zero is 0/1. Elements of F_p itself are the
/// constants of this type, so one scalar type serves both base fields.
class RatFunc {
 public:
  [[nodiscard]] static RatFunc zero(std::uint32_t p) { return RatFunc(p, {}, {1}); }
  [[nodiscard]] static RatFunc one(std::uint32_t p) { return RatFunc(p, {1}, {1}); }
  [[nodiscard]] static RatFunc constant(std::uint32_t p, std::int64_t c);
  [[nodiscard]] static RatFunc t(std::uint32_t p) { return RatFunc(p, {0, 1}, {1}); }
  [[nodiscard]] static RatFunc polynomial(std::uint32_t p, FpPoly num);
  /// Normalizes; throws InputError on a zero denominator.
  [[nodiscard]] static RatFunc fraction(std::uint32_t p, FpPoly num, FpPoly den);

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] const FpPoly& num() const noexcept { return num_; }
  [[nodiscard]] const FpPoly& den() const noexcept { return den_; }
  [[nodiscard]] PrimeField prime_field() const noexcept { return PrimeField::unchecked(p_); }

  [[nodiscard]] bool is_zero() const noexcept { return num_.empty(); }
  [[nodiscard]] bool is_one() const noexcept { return num_.size() == 1 && num_[0] == 1 && den_.size() == 1; }
  /// True for elements of F_p.
  [[nodiscard]] bool is_constant() const noexcept { return num_.size() <= 1 && den_.size() == 1; }
  [[nodiscard]] bool is_polynomial() const noexcept { return den_.size() == 1; }
  /// max(deg num, deg den); 0 for constants.
  [[nodiscard]] int height() const noexcept;

  [[nodiscard]] RatFunc inverse() const;
  [[nodiscard]] RatFunc pow(std::uint64_t e) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);

  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Total order used only to make enumeration output deterministic.
  friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) noexcept;

  /// "0", "t^2 + 1", "(t + 1)/(t^2 + 2)".
  [[nodiscard]] std::string to_string() const;

 private:
  RatFunc(std::uint32_t p, FpPoly num, FpPoly den) : p_(p), num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  std::uint32_t p_;
  FpPoly num_;
  FpPoly den_;
};

[[nodiscard]] inline bool is_zero(const RatFunc& a) noexcept { return a.is_zero(); }

/// r with r^p = a when a lies in F_p(t^p); absent otherwise.
[[nodiscard]] std::optional<RatFunc> pth_root(const RatFunc& a);

/// Splits a = sum_{j<p} t^j * piece_j(t^p) and returns the pieces with t^p
/// renamed to t. Used for p-th roots inside towers.
[[nodiscard]] std::vector<RatFunc> frobenius_decimate(const RatFunc& a);

/// The polynomial whose coefficients are the base-p digits of code, constant
/// term first: 0, 1, ..., p - 1, t, t + 1, ...
[[nodiscard]] RatFunc small_scalar(std::uint32_t p, std::uint64_t code);

}  // namespace septower
