#include "septower/ratfunc.hpp"

#include <algorithm>

#include "septower/errors.hpp"

namespace septower {

RatFunc RatFunc::constant(std::uint32_t p, std::int64_t c) {
  return RatFunc(p, fpx::constant(PrimeField::unchecked(p), c), {1});
}

RatFunc RatFunc::polynomial(std::uint32_t p, FpPoly num) {
  fpx::trim(num);
  return RatFunc(p, std::move(num), {1});
}

RatFunc RatFunc::fraction(std::uint32_t p, FpPoly num, FpPoly den) {
  fpx::trim(num);
  fpx::trim(den);
  if (den.empty()) throw InputError("rational function with zero denominator");
  RatFunc r(p, std::move(num), std::move(den));
  r.normalize();
  return r;
}

void RatFunc::normalize() {
  const auto F = prime_field();
  if (num_.empty()) {
    den_ = {1};
    return;
  }
  if (den_.size() > 1) {
    auto g = fpx::gcd(F, num_, den_);
    if (g.size() > 1) {
      num_ = fpx::divmod(F, num_, g).first;
      den_ = fpx::divmod(F, den_, g).first;
    }
  }
  if (den_.back() != 1) {
    const auto inv = F.inv(den_.back());
    num_ = fpx::scale(F, num_, inv);
    den_ = fpx::scale(F, den_, inv);
  }
}

int RatFunc::height() const noexcept {
  return std::max(std::max(fpx::degree(num_), fpx::degree(den_)), 0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InputError("inverse of zero in F_" + std::to_string(p_) + "(t)");
  RatFunc r(p_, den_, num_);
  const auto F = prime_field();
  const auto inv = F.inv(r.den_.back());
  r.num_ = fpx::scale(F, r.num_, inv);
  r.den_ = fpx::scale(F, r.den_, inv);
  return r;
}

RatFunc RatFunc::pow(std::uint64_t e) const {
  RatFunc result = one(p_);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  const auto F = prime_field();
  if (den_.size() == 1 && o.den_.size() == 1) {
    num_ = fpx::add(F, num_, o.num_);
    return *this;
  }
  if (den_ == o.den_) {
    num_ = fpx::add(F, num_, o.num_);
  } else {
    num_ = fpx::add(F, fpx::mul(F, num_, o.den_), fpx::mul(F, o.num_, den_));
    den_ = fpx::mul(F, den_, o.den_);
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  const auto F = prime_field();
  if (num_.empty() || o.num_.empty()) {
    num_.clear();
    den_ = {1};
    return *this;
  }
  if (den_.size() == 1 && o.den_.size() == 1) {
    num_ = fpx::mul(F, num_, o.num_);
    return *this;
  }
  num_ = fpx::mul(F, num_, o.num_);
  den_ = fpx::mul(F, den_, o.den_);
  normalize();
  return *this;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = fpx::neg(a.prime_field(), a.num_);
  return r;
}

std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) noexcept {
  auto cmp = [](const FpPoly& x, const FpPoly& y) {
    if (x.size() != y.size()) return x.size() <=> y.size();
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] <=> y[i];
    }
    return std::strong_ordering::equal;
  };
  if (auto c = cmp(a.den_, b.den_); c != 0) return c;
  return cmp(a.num_, b.num_);
}

std::string RatFunc::to_string() const {
  if (den_.size() == 1) return fpx::to_string(num_);
  auto wrap = [](const FpPoly& x) {
    auto s = fpx::to_string(x);
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

// Exponents all divisible by p: returns the polynomial in t^p renamed to t.
std::optional<FpPoly> deflate_by_p(const FpPoly& a, std::uint32_t p) {
  if (a.empty()) return FpPoly{};
  FpPoly r((a.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % p != 0) return std::nullopt;
    r[i / p] = a[i];
  }
  return r;
}

}  // namespace

std::optional<RatFunc> pth_root(const RatFunc& a) {
  // Canonical form is preserved by Frobenius, so a is a p-th power iff both
  // halves are polynomials in t^p. Frobenius fixes F_p coefficient-wise.
  const auto p = a.characteristic();
  auto n = deflate_by_p(a.num(), p);
  if (!n) return std::nullopt;
  auto d = deflate_by_p(a.den(), p);
  if (!d) return std::nullopt;
  return RatFunc::fraction(p, std::move(*n), std::move(*d));
}

std::vector<RatFunc> frobenius_decimate(const RatFunc& a) {
  const auto p = a.characteristic();
  const auto F = a.prime_field();
  // a = num * den^(p-1) / den^p and den^p = den(t^p).
  const FpPoly m = fpx::mul(F, a.num(), fpx::pow(F, a.den(), p - 1));
  std::vector<RatFunc> out;
  out.reserve(p);
  for (std::uint32_t j = 0; j < p; ++j) {
    FpPoly piece;
    for (std::size_t i = j; i < m.size(); i += p) {
      if (piece.size() <= i / p) piece.resize(i / p + 1, 0);
      piece[i / p] = m[i];
    }
    out.push_back(RatFunc::fraction(p, std::move(piece), a.den()));
  }
  return out;
}

RatFunc small_scalar(std::uint32_t p, std::uint64_t code) {
  FpPoly a;
  while (code > 0) {
    a.push_back(static_cast<std::uint32_t>(code % p));
    code /= p;
  }
  fpx::trim(a);
  return RatFunc::polynomial(p, std::move(a));
}

}  // namespace septower
