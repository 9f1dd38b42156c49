#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "septower/prime_field.hpp"

namespace septower {

/// Dense polynomial in F_p[t], low-to-high, no trailing zeros. The zero
/// polynomial is the empty vector.
using FpPoly = std::vector<std::uint32_t>;

namespace fpx {

void trim(FpPoly& a);
/// -1 for the zero polynomial.
[[nodiscard]] int degree(const FpPoly& a) noexcept;
[[nodiscard]] inline bool is_zero(const FpPoly& a) noexcept { return a.empty(); }
[[nodiscard]] inline std::uint32_t lead(const FpPoly& a) noexcept { return a.empty() ? 0 : a.back(); }

[[nodiscard]] FpPoly constant(const PrimeField& F, std::int64_t c);
[[nodiscard]] FpPoly monomial(std::uint32_t c, std::size_t e);
[[nodiscard]] FpPoly add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
[[nodiscard]] FpPoly sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
[[nodiscard]] FpPoly neg(const PrimeField& F, const FpPoly& a);
[[nodiscard]] FpPoly mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
[[nodiscard]] FpPoly scale(const PrimeField& F, const FpPoly& a, std::uint32_t c);
[[nodiscard]] FpPoly pow(const PrimeField& F, const FpPoly& a, std::uint64_t e);
/// Throws InputError when b is zero.
[[nodiscard]] std::pair<FpPoly, FpPoly> divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b);
[[nodiscard]] FpPoly monic(const PrimeField& F, const FpPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
[[nodiscard]] FpPoly gcd(const PrimeField& F, FpPoly a, FpPoly b);
[[nodiscard]] std::uint32_t eval(const PrimeField& F, const FpPoly& a, std::uint32_t x);
/// a(t + s).
[[nodiscard]] FpPoly taylor_shift(const PrimeField& F, const FpPoly& a, std::uint32_t s);
/// Keep the coefficients of t^0 .. t^(n-1).
[[nodiscard]] FpPoly truncate(const FpPoly& a, std::size_t n);

/// Canonical text in the variable `var`, e.g. "t^2 + 2*t + 1".
[[nodiscard]] std::string to_string(const FpPoly& a, const std::string& var = "t");

}  // namespace fpx
}  // namespace septower
