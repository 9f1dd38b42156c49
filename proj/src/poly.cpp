#include "septower/poly.hpp"

#include <algorithm>

#include "septower/errors.hpp"

namespace septower {

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!(c.field() == field_)) c = c.lift(field_);
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x(const Field& f) { return Poly(f, {Elem::zero(f), Elem::one(f)}); }

Poly Poly::monomial(const Elem& c, std::size_t e) {
  std::vector<Elem> v(e + 1, Elem::zero(c.field()));
  v[e] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(Elem::integer(f, c));
  return Poly(f, std::move(v));
}

const Elem& Poly::lead() const {
  if (c_.empty()) throw InputError("zero polynomial has no leading coefficient");
  return c_.back();
}

Elem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem::zero(field_); }

Poly Poly::lift(const Field& to) const {
  if (to == field_) return *this;
  std::vector<Elem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.lift(to));
  return Poly(to, std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty() || is_monic()) return *this;
  const Elem inv = c_.back().inverse();
  std::vector<Elem> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c * inv);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  std::vector<Elem> v;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(c_[i] * Elem::integer(field_, static_cast<std::int64_t>(i % field_.characteristic())));
  }
  return Poly(field_, std::move(v));
}

Elem Poly::eval(const Elem& a) const {
  const Field f = common_field(field_, a.field());
  const Elem x = a.lift(f);
  Elem acc = Elem::zero(f);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].lift(f);
  return acc;
}

Poly Poly::shift(const Elem& s) const {
  const Field f = common_field(field_, s.field());
  const Poly lin(f, {s.lift(f), Elem::one(f)});
  Poly acc = zero(f);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly(f, {c_[i]});
  return acc;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result(field_, {Elem::one(field_)});
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!(field_ == o.field_)) {
    const Field f = common_field(field_, o.field_);
    *this = lift(f);
    return *this += o.lift(f);
  }
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Elem::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) {
    const Field f = common_field(a.field_, b.field_);
    return a.lift(f) * b.lift(f);
  }
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, Elem::zero(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Elem& c) {
  const Field f = common_field(a.field_, c.field());
  std::vector<Elem> v;
  v.reserve(a.c_.size());
  for (const auto& x : a.c_) v.push_back(x.lift(f) * c);
  return Poly(f, std::move(v));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elem& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono;
    if (i > 0) mono = var + (i > 1 ? "^" + std::to_string(i) : "");
    const std::string cs = c.to_string();
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (c.is_one()) {
      term = mono;
    } else if (cs.find_first_of(" /*") != std::string::npos) {
      term = "(" + cs + ")*" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (!(a.field() == b.field())) {
    const Field f = common_field(a.field(), b.field());
    return divmod(a.lift(f), b.lift(f));
  }
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly::zero(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> q(r.size() - db, Elem::zero(f));
  const Elem inv_lead = b.lead().inverse();
  const bool monic = b.lead().is_one();
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::size_t i = shift + db;
    if (r[i].is_zero()) continue;
    const Elem c = monic ? r[i] : r[i] * inv_lead;
    q[shift] = c;
    for (std::size_t j = 0; j < db; ++j) {
      if (!bc[j].is_zero()) r[shift + j] -= c * bc[j];
    }
    r[i] = Elem::zero(f);
  }
  r.resize(db, Elem::zero(f));
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  if (!(a.field() == b.field())) {
    const Field f = common_field(a.field(), b.field());
    return gcd(a.lift(f), b.lift(f));
  }
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InputError("gcd of two zero polynomials");
  if (!(a.field() == b.field())) {
    const Field f = common_field(a.field(), b.field());
    return xgcd(a.lift(f), b.lift(f));
  }
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0(f, {Elem::one(f)}), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1(f, {Elem::one(f)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const Elem inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly(m.field(), {Elem::one(m.field())}) % m;
  Poly b = base % m;
  while (e > 0) {
    if (e & 1U) result = (result * b) % m;
    e >>= 1U;
    if (e > 0) b = (b * b) % m;
  }
  return result;
}

std::optional<Poly> deflate(const Poly& f, std::uint64_t k) {
  if (k == 0) throw InputError("deflate by zero");
  const auto& c = f.coeffs();
  std::vector<Elem> v;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % k != 0) {
      if (!c[i].is_zero()) return std::nullopt;
      continue;
    }
    v.push_back(c[i]);
  }
  return Poly(f.field(), std::move(v));
}

Poly inflate(const Poly& h, std::uint64_t k) {
  if (h.is_zero()) return h;
  std::vector<Elem> v(static_cast<std::size_t>(h.degree()) * k + 1, Elem::zero(h.field()));
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) v[i * k] = h.coeffs()[i];
  return Poly(h.field(), std::move(v));
}

}  // namespace septower
