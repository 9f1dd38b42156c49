#include "septower/fp_poly.hpp"

#include <algorithm>

#include "septower/errors.hpp"

namespace septower::fpx {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FpPoly& a) noexcept { return static_cast<int>(a.size()) - 1; }

FpPoly constant(const PrimeField& F, std::int64_t c) {
  FpPoly r{F.reduce(c)};
  trim(r);
  return r;
}

FpPoly monomial(std::uint32_t c, std::size_t e) {
  if (c == 0) return {};
  FpPoly r(e + 1, 0);
  r[e] = c;
  return r;
}

FpPoly add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

FpPoly sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(r);
  return r;
}

FpPoly neg(const PrimeField& F, const FpPoly& a) {
  FpPoly r(a.size());
  std::transform(a.begin(), a.end(), r.begin(), [&](std::uint32_t c) { return F.neg(c); });
  return r;
}

FpPoly mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::uint64_t p = F.p();
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  FpPoly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  trim(r);
  return r;
}

FpPoly scale(const PrimeField& F, const FpPoly& a, std::uint32_t c) {
  if (c == 0) return {};
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

FpPoly pow(const PrimeField& F, const FpPoly& a, std::uint64_t e) {
  FpPoly result{1};
  FpPoly base = a;
  while (e > 0) {
    if (e & 1U) result = mul(F, result, base);
    e >>= 1U;
    if (e > 0) base = mul(F, base, base);
  }
  return result;
}

std::pair<FpPoly, FpPoly> divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  if (b.empty()) throw InputError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  FpPoly r = a;
  FpPoly q(a.size() - b.size() + 1, 0);
  const std::uint32_t inv_lead = F.inv(b.back());
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const std::size_t i = shift + b.size() - 1;
    const std::uint32_t c = F.mul(r[i], inv_lead);
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
    }
  }
  trim(q);
  trim(r);
  return {std::move(q), std::move(r)};
}

FpPoly monic(const PrimeField& F, const FpPoly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(F, a, F.inv(a.back()));
}

FpPoly gcd(const PrimeField& F, FpPoly a, FpPoly b) {
  while (!b.empty()) {
    auto r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

std::uint32_t eval(const PrimeField& F, const FpPoly& a, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

FpPoly taylor_shift(const PrimeField& F, const FpPoly& a, std::uint32_t s) {
  // Horner in the ring F_p[t]: acc = acc * (t + s) + a_i.
  FpPoly acc;
  const FpPoly lin = s == 0 ? FpPoly{0, 1} : FpPoly{s, 1};
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = add(F, mul(F, acc, lin), a[i] == 0 ? FpPoly{} : FpPoly{a[i]});
  }
  return acc;
}

FpPoly truncate(const FpPoly& a, std::size_t n) {
  if (a.size() <= n) return a;
  FpPoly r(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n));
  trim(r);
  return r;
}

std::string to_string(const FpPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    const std::uint32_t c = a[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace septower::fpx
