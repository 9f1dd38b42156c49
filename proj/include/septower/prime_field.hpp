#pragma once

#include <cstdint>

namespace septower {

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p on canonical residues in [0, p).
class PrimeField {
 public:
  /// Throws InputError unless 2 <= p <= 2^31 and p is prime.
  explicit PrimeField(std::uint32_t p);
  /// For characteristics already validated elsewhere.
  [[nodiscard]] static PrimeField unchecked(std::uint32_t p) noexcept { return PrimeField(p, 0); }

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }

  [[nodiscard]] std::uint32_t reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  [[nodiscard]] std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Requires a != 0.
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  PrimeField(std::uint32_t p, int) noexcept : p_(p) {}
  std::uint32_t p_;
};

}  // namespace septower
