#include "septower/prime_field.hpp"

#include <string>

#include "septower/errors.hpp"

namespace septower {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || std::uint64_t{p} > (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("characteristic must be a prime in [2, 2^31], got " + std::to_string(p));
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InputError("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

}  // namespace septower
