#include "septower/tower.hpp"

#include "septower/errors.hpp"
#include "septower/factor.hpp"

namespace septower {

Field make_extension(const Field& parent, const Poly& f, std::string generator, const FactorOptions& opts) {
  if (!f.field().is_subfield_of(parent)) {
    throw InputError("defining polynomial has coefficients outside " + parent.description());
  }
  if (f.degree() < 2) throw InputError("defining polynomial must have degree at least 2");
  if (!f.is_monic()) throw InputError("defining polynomial must be monic");
  if (generator.empty()) throw InputError("generator name must be nonempty");
  const auto g = f.lift(parent);
  auto cert = is_irreducible(g, opts);
  if (!cert.irreducible) {
    throw ReducibleError(g.to_string() + " is reducible over " + parent.description() + ", factor " +
                             cert.factor->to_string(),
                         *cert.factor);
  }
  return Field::extension_unchecked(parent, std::move(generator), g.coeffs());
}

namespace {

std::vector<Elem> lifted(const Field& ambient, std::vector<Elem> v) {
  for (auto& a : v) {
    if (!a.field().is_subfield_of(ambient)) {
      throw InputError("subfield generator " + a.to_string() + " is not in " + ambient.description());
    }
    a = a.lift(ambient);
  }
  return v;
}

RatFunc zero_of(const Field& f) { return RatFunc::zero(f.characteristic()); }
RatFunc one_of(const Field& f) { return RatFunc::one(f.characteristic()); }

}  // namespace

Subfield::Subfield(Field ambient, std::vector<Elem> generators)
    : ambient_(std::move(ambient)),
      generators_(std::move(generators)),
      span_(zero_of(ambient_), one_of(ambient_)) {
  // Breadth-first closure: every product (basis element) * (generator) is
  // either new or already spanned, so the span ends up being K[generators].
  std::vector<Elem> frontier{Elem::one(ambient_)};
  span_.insert(frontier.front().coords());
  basis_ = frontier;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& b : frontier) {
      for (const auto& g : generators_) {
        auto v = b * g;
        if (span_.insert(v.coords())) {
          basis_.push_back(v);
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
}

Subfield Subfield::generated_by(const Field& ambient, std::vector<Elem> generators) {
  return Subfield(ambient, lifted(ambient, std::move(generators)));
}

Subfield Subfield::whole(const Field& ambient) { return stage(ambient, ambient); }

Subfield Subfield::stage(const Field& ambient, const Field& lower) {
  if (!lower.is_subfield_of(ambient)) {
    throw InputError(lower.description() + " is not a stage of " + ambient.description());
  }
  std::vector<Elem> gens;
  const auto stages = lower.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) gens.push_back(Elem::generator(stages[i]));
  return generated_by(ambient, std::move(gens));
}

bool Subfield::contains(const Elem& a) const { return coordinates(a).has_value(); }

std::optional<std::vector<RatFunc>> Subfield::coordinates(const Elem& a) const {
  if (!a.field().is_subfield_of(ambient_)) {
    throw InputError(a.to_string() + " is not in " + ambient_.description());
  }
  return span_.express(a.lift(ambient_).coords());
}

bool Subfield::is_subset_of(const Subfield& other) const {
  if (!(ambient_ == other.ambient_)) throw InputError("subfields of different fields");
  for (const auto& b : basis_) {
    if (!other.contains(b)) return false;
  }
  return true;
}

Poly minimal_polynomial(const Elem& a, const Subfield& L) {
  const auto& E = L.ambient();
  if (!a.field().is_subfield_of(E)) throw InputError(a.to_string() + " is not in " + E.description());
  const auto x = a.lift(E);
  const auto& basis = L.basis();
  const std::size_t m = basis.size();

  // Look for the first k with a^k in the K-span of {b_j a^i : i < k}.
  linalg::SpanTracker<RatFunc> span(zero_of(E), one_of(E));
  Elem power = Elem::one(E);
  for (std::size_t k = 0;; ++k) {
    if (k > 0) {
      if (auto c = span.express(power.coords())) {
        std::vector<Elem> coeffs(k + 1, Elem::zero(E));
        coeffs[k] = Elem::one(E);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            const auto& cij = (*c)[i * m + j];
            if (!cij.is_zero()) coeffs[i] -= Elem::scalar(E, cij) * basis[j];
          }
        }
        return Poly(E, std::move(coeffs));
      }
    }
    if (k > E.degree()) throw InternalError("minimal polynomial search exceeded the field degree");
    for (const auto& b : basis) {
      if (!span.insert((b * power).coords())) {
        throw InternalError("powers of an element became dependent over a subfield out of order");
      }
    }
    power *= x;
  }
}

Poly minimal_polynomial(const Elem& a) {
  const auto m = minimal_polynomial(a, Subfield::base(a.field()));
  const auto K = a.field().base();
  std::vector<Elem> c;
  c.reserve(m.coeffs().size());
  for (const auto& e : m.coeffs()) c.push_back(e.lower(K));
  return Poly(K, std::move(c));
}

std::optional<Elem> pth_root(const Elem& a) {
  const auto& F = a.field();
  const auto p = F.characteristic();
  if (F.is_finite()) {
    if (F.is_base()) return a;
    return a.pow(F.order() / p);
  }
  if (F.is_base()) {
    auto r = pth_root(a.coords()[0]);
    if (!r) return std::nullopt;
    return Elem::scalar(F, *r);
  }

  // Over F_p(t) towers: write the root as sum c_i e_i, so a = sum c_i^p e_i^p.
  // Each c_i^p lies in F_p(t^p); splitting every coordinate along
  // 1, t, ..., t^(p-1) turns this into a linear system over F_p(t^p).
  const auto D = F.degree();
  auto row_of = [&](const Elem& v) {
    std::vector<RatFunc> row;
    row.reserve(D * p);
    for (const auto& c : v.coords()) {
      for (auto& piece : frobenius_decimate(c)) row.push_back(std::move(piece));
    }
    return row;
  };
  linalg::SpanTracker<RatFunc> span(RatFunc::zero(p), RatFunc::one(p));
  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < D; ++i) {
    if (span.insert(row_of(Elem::basis(F, i).frobenius()))) accepted.push_back(i);
  }
  const auto sol = span.express(row_of(a));
  if (!sol) return std::nullopt;
  std::vector<RatFunc> coords(D, RatFunc::zero(p));
  for (std::size_t k = 0; k < accepted.size(); ++k) coords[accepted[k]] = (*sol)[k];
  Elem r(F, std::move(coords));
  if (!(r.frobenius() == a)) throw InternalError("p-th root failed verification");
  return r;
}

}  // namespace septower
