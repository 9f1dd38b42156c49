#include "septower/field.hpp"

#include <algorithm>
#include <span>

#include "septower/errors.hpp"
#include "septower/poly.hpp"

namespace septower {

struct FieldNode {
  FieldKind kind;
  std::uint32_t p;
  std::shared_ptr<const FieldNode> parent;
  std::string name;
  std::vector<Elem> minpoly;                       // monic, over parent, low to high
  std::vector<std::vector<RatFunc>> minpoly_coords;  // same, as parent coordinates
  std::size_t stage_degree = 1;
  std::size_t degree = 1;
  std::size_t depth = 0;
};

namespace {

using Coords = std::vector<RatFunc>;

bool all_zero(std::span<const RatFunc> v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& c) { return c.is_zero(); });
}

// out = a * b in the field described by n; spans have n.degree entries.
void mul_into(const FieldNode& n, std::span<const RatFunc> a, std::span<const RatFunc> b,
              std::span<RatFunc> out) {
  if (n.depth == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const FieldNode& parent = *n.parent;
  const std::size_t d = n.stage_degree;
  const std::size_t blk = parent.degree;
  const RatFunc zero = RatFunc::zero(n.p);
  Coords prod((2 * d - 1) * blk, zero);
  Coords tmp(blk, zero);
  std::vector<bool> a_nz(d), b_nz(d);
  for (std::size_t i = 0; i < d; ++i) {
    a_nz[i] = !all_zero(a.subspan(i * blk, blk));
    b_nz[i] = !all_zero(b.subspan(i * blk, blk));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!a_nz[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b_nz[j]) continue;
      mul_into(parent, a.subspan(i * blk, blk), b.subspan(j * blk, blk), tmp);
      for (std::size_t k = 0; k < blk; ++k) prod[(i + j) * blk + k] += tmp[k];
    }
  }
  // Reduce modulo the monic stage polynomial, top degree first.
  for (std::size_t i = 2 * d - 1; i-- > d;) {
    std::span<const RatFunc> c(prod.data() + i * blk, blk);
    if (all_zero(c)) continue;
    const Coords lead(c.begin(), c.end());
    for (std::size_t j = 0; j < d; ++j) {
      const auto& m = n.minpoly_coords[j];
      if (all_zero(m)) continue;
      mul_into(parent, lead, m, tmp);
      for (std::size_t k = 0; k < blk; ++k) prod[(i - d + j) * blk + k] -= tmp[k];
    }
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d * blk), out.begin());
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::prime(std::uint32_t p) {
  PrimeField check(p);
  auto n = std::make_shared<FieldNode>();
  n->kind = FieldKind::prime;
  n->p = check.p();
  return Field(std::move(n));
}

Field Field::rational_function(std::uint32_t p) {
  PrimeField check(p);
  auto n = std::make_shared<FieldNode>();
  n->kind = FieldKind::rational_function;
  n->p = check.p();
  return Field(std::move(n));
}

Field Field::extension_unchecked(const Field& parent, std::string generator, std::vector<Elem> minpoly) {
  Poly f(parent, std::move(minpoly));
  if (f.degree() < 2) throw InputError("defining polynomial must have degree >= 2");
  if (!f.is_monic()) throw InputError("defining polynomial must be monic");
  auto n = std::make_shared<FieldNode>();
  n->kind = FieldKind::extension;
  n->p = parent.characteristic();
  n->parent = parent.node_;
  n->name = std::move(generator);
  n->minpoly = f.coeffs();
  for (const auto& c : n->minpoly) n->minpoly_coords.push_back(c.coords());
  n->stage_degree = static_cast<std::size_t>(f.degree());
  n->degree = parent.degree() * n->stage_degree;
  n->depth = parent.depth() + 1;
  return Field(std::move(n));
}

FieldKind Field::kind() const noexcept { return node_->kind; }
std::uint32_t Field::characteristic() const noexcept { return node_->p; }
std::size_t Field::degree() const noexcept { return node_->degree; }
std::size_t Field::stage_degree() const noexcept { return node_->stage_degree; }
std::size_t Field::depth() const noexcept { return node_->depth; }

bool Field::is_finite() const noexcept {
  const FieldNode* n = node_.get();
  while (n->parent) n = n->parent.get();
  return n->kind == FieldKind::prime;
}

std::uint64_t Field::order() const {
  if (!is_finite()) throw InputError(description() + " is infinite");
  std::uint64_t q = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (q > (std::uint64_t{1} << 62) / characteristic()) throw ResourceError("field order overflows 64 bits");
    q *= characteristic();
  }
  return q;
}

Field Field::parent() const {
  if (!node_->parent) throw InputError(description() + " has no parent stage");
  return Field(node_->parent);
}

Field Field::base() const {
  auto n = node_;
  while (n->parent) n = n->parent;
  return Field(n);
}

std::vector<Field> Field::stages() const {
  std::vector<Field> out;
  for (auto n = node_; n; n = n->parent) out.push_back(Field(n));
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> Field::generator_names() const {
  std::vector<std::string> out;
  for (const auto& s : stages()) {
    if (!s.is_base()) out.push_back(s.generator_name());
  }
  return out;
}

const std::string& Field::generator_name() const { return node_->name; }
const std::vector<Elem>& Field::minpoly() const { return node_->minpoly; }

bool Field::is_subfield_of(const Field& other) const noexcept {
  for (const FieldNode* n = other.node_.get(); n; n = n->parent.get()) {
    if (n == node_.get()) return true;
  }
  return false;
}

std::string Field::description() const {
  const auto b = base();
  std::string out = "F_" + std::to_string(characteristic());
  if (b.kind() == FieldKind::rational_function) out += "(t)";
  const auto names = generator_names();
  if (!names.empty()) {
    out += "(";
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    out += ")";
  }
  return out;
}

Field common_field(const Field& a, const Field& b) {
  if (a.is_subfield_of(b)) return b;
  if (b.is_subfield_of(a)) return a;
  throw InputError("field mismatch: " + a.description() + " vs " + b.description());
}

// ---------------------------------------------------------------------------
// Elem

Elem::Elem(Field field, std::vector<RatFunc> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_.degree()) throw InputError("coordinate vector has the wrong length");
  for (const auto& c : coords_) {
    if (c.characteristic() != field_.characteristic()) throw InputError("coordinate has the wrong characteristic");
    if (field_.is_finite() && !c.is_constant()) throw InputError("non-constant coordinate over a finite base");
  }
}

Elem Elem::zero(const Field& f) { return Elem(f, Coords(f.degree(), RatFunc::zero(f.characteristic()))); }

Elem Elem::one(const Field& f) { return integer(f, 1); }

Elem Elem::integer(const Field& f, std::int64_t c) { return scalar(f, RatFunc::constant(f.characteristic(), c)); }

Elem Elem::scalar(const Field& f, const RatFunc& c) {
  Coords v(f.degree(), RatFunc::zero(f.characteristic()));
  v[0] = c;
  return Elem(f, std::move(v));
}

Elem Elem::t(const Field& f) {
  if (f.base().kind() != FieldKind::rational_function) throw InputError("t is only defined over F_p(t)");
  return scalar(f, RatFunc::t(f.characteristic()));
}

Elem Elem::generator(const Field& f) {
  if (f.is_base()) throw InputError("base field has no generator");
  return basis(f, f.parent().degree());
}

Elem Elem::basis(const Field& f, std::size_t index) {
  if (index >= f.degree()) throw InputError("basis index out of range");
  Coords v(f.degree(), RatFunc::zero(f.characteristic()));
  v[index] = RatFunc::one(f.characteristic());
  return Elem(f, std::move(v));
}

bool Elem::is_zero() const noexcept { return all_zero(coords_); }

bool Elem::is_one() const noexcept {
  if (!coords_[0].is_one()) return false;
  return all_zero(std::span<const RatFunc>(coords_).subspan(1));
}

bool Elem::in_base() const noexcept { return all_zero(std::span<const RatFunc>(coords_).subspan(1)); }

int Elem::height() const noexcept {
  int h = 0;
  for (const auto& c : coords_) h = std::max(h, c.height());
  return h;
}

Elem Elem::lift(const Field& to) const {
  if (to == field_) return *this;
  if (!field_.is_subfield_of(to)) {
    throw InputError("cannot lift from " + field_.description() + " to " + to.description());
  }
  Coords v = coords_;
  v.resize(to.degree(), RatFunc::zero(field_.characteristic()));
  return Elem(to, std::move(v));
}

Elem Elem::lower(const Field& to) const {
  if (to == field_) return *this;
  if (!to.is_subfield_of(field_)) {
    throw InputError("cannot lower from " + field_.description() + " to " + to.description());
  }
  if (!all_zero(std::span<const RatFunc>(coords_).subspan(to.degree()))) {
    throw InputError("element does not lie in " + to.description());
  }
  return Elem(to, Coords(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(to.degree())));
}

std::vector<Elem> Elem::top_blocks() const {
  const Field parent = field_.parent();
  const std::size_t blk = parent.degree();
  std::vector<Elem> out;
  for (std::size_t i = 0; i < field_.stage_degree(); ++i) {
    out.emplace_back(parent, Coords(coords_.begin() + static_cast<std::ptrdiff_t>(i * blk),
                                    coords_.begin() + static_cast<std::ptrdiff_t>((i + 1) * blk)));
  }
  return out;
}

Elem Elem::inverse() const {
  if (is_zero()) throw InputError("inverse of zero in " + field_.description());
  if (field_.is_base()) return scalar(field_, coords_[0].inverse());
  // Extended Euclid against the stage polynomial, with coefficient
  // arithmetic (and inversion) happening one stage down.
  const Field parent = field_.parent();
  const Poly a(parent, top_blocks());
  const Poly m(parent, field_.minpoly());
  const auto bz = xgcd(a, m);
  if (bz.gcd.degree() != 0) throw InternalError("stage polynomial of " + field_.description() + " is reducible");
  Coords v;
  v.reserve(field_.degree());
  for (std::size_t i = 0; i < field_.stage_degree(); ++i) {
    const auto c = bz.s.coeff(i);
    v.insert(v.end(), c.coords().begin(), c.coords().end());
  }
  return Elem(field_, std::move(v));
}

Elem Elem::pow(std::uint64_t e) const {
  Elem result = one(field_);
  Elem base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Elem Elem::frobenius(std::size_t times) const {
  Elem r = *this;
  for (std::size_t i = 0; i < times; ++i) r = r.pow(characteristic());
  return r;
}

Elem& Elem::operator+=(const Elem& o) {
  if (!(field_ == o.field_)) {
    const Field f = common_field(field_, o.field_);
    *this = lift(f);
    return *this += o.lift(f);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  if (!(field_ == o.field_)) {
    const Field f = common_field(field_, o.field_);
    *this = lift(f);
    return *this -= o.lift(f);
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  if (!(field_ == o.field_)) {
    const Field f = common_field(field_, o.field_);
    *this = lift(f);
    return *this *= o.lift(f);
  }
  Coords out(coords_.size(), RatFunc::zero(characteristic()));
  mul_into(*field_.node(), coords_, o.coords_, out);
  coords_ = std::move(out);
  return *this;
}

Elem operator-(const Elem& a) {
  Elem r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) noexcept {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
  for (std::size_t i = a.coords_.size(); i-- > 0;) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Elem::to_string() const {
  const auto stages = field_.stages();
  std::string out;
  for (std::size_t idx = coords_.size(); idx-- > 0;) {
    const RatFunc& c = coords_[idx];
    if (c.is_zero()) continue;
    std::string mono;
    std::size_t rest = idx;
    for (std::size_t s = 1; s < stages.size(); ++s) {
      const std::size_t d = stages[s].stage_degree();
      const std::size_t e = rest % d;
      rest /= d;
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += stages[s].generator_name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string term;
    const std::string cs = c.to_string();
    if (mono.empty()) {
      term = cs;
    } else if (c.is_one()) {
      term = mono;
    } else if (cs.find_first_of(" /") != std::string::npos) {
      term = "(" + cs + ")*" + mono;
    } else {
      term = cs + "*" + mono;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace septower
