#include "septower/separability.hpp"

#include <algorithm>
#include <set>

#include "septower/errors.hpp"

namespace septower {

namespace {

std::vector<Elem> generators_in(const Field& E) {
  std::vector<Elem> gens;
  const auto stages = E.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) gens.push_back(Elem::generator(stages[i]).lift(E));
  return gens;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Element of E with base coordinates given by the base-p digits of code.
Elem element_from_code(const Field& E, std::uint64_t code) {
  const auto p = E.characteristic();
  std::vector<RatFunc> coords;
  for (std::size_t i = 0; i < E.degree(); ++i) {
    coords.push_back(RatFunc::constant(p, static_cast<std::int64_t>(code % p)));
    code /= p;
  }
  return Elem(E, std::move(coords));
}

// Sends an element of the simple field K[x]/(minpoly(a)) to the matching
// polynomial in a.
Elem to_ambient(const Elem& x, const Elem& a) {
  const auto& E = a.field();
  Elem acc = Elem::zero(E);
  Elem power = Elem::one(E);
  for (const auto& c : x.coords()) {
    if (!c.is_zero()) acc += Elem::scalar(E, c) * power;
    power *= a;
  }
  return acc;
}

std::size_t minpoly_degree(const Elem& a) { return static_cast<std::size_t>(minimal_polynomial(a).degree()); }

std::string verdict_name(const std::optional<bool>& v) {
  if (!v) return "n/a";
  return *v ? "separable" : "inseparable";
}

}  // namespace

bool SeparabilityReport::separable() const {
  std::optional<bool> common;
  for (const auto& v : {by_derivative, by_witness, by_hom_count}) {
    if (!v) continue;
    if (common && *common != *v) {
      throw InternalError("separability criteria disagree on " + subject + ": derivative " +
                          verdict_name(by_derivative) + ", witness " + verdict_name(by_witness) + ", hom count " +
                          verdict_name(by_hom_count));
    }
    common = v;
  }
  if (!common) throw InternalError("no separability criterion was evaluated for " + subject);
  return *common;
}

SeparabilityReport is_separable_element(const Elem& a) {
  const auto m = minimal_polynomial(a);
  SeparabilityReport r;
  r.subject = a.to_string();
  r.degree = static_cast<std::size_t>(m.degree());
  r.exponent = separable_decompose(m).e;
  r.by_derivative = distinct_root_count(m) == r.degree;
  return r;
}

std::optional<std::pair<Embedding, Embedding>> separation_witness(const Elem& a, const Subfield& L,
                                                                  const SplittingContext& ctx) {
  const auto& E = a.field();
  if (!(L.ambient() == E)) throw InputError("subfield is not inside " + E.description());
  if (L.contains(a)) throw PreconditionError(a.to_string() + " lies in the subfield; nothing to separate");
  const auto homs = hom_set(E, L, ctx);
  if (homs.empty()) throw ContextError("no embeddings of " + E.description() + " into the context");
  const auto first = apply(homs.front(), a);
  for (std::size_t i = 1; i < homs.size(); ++i) {
    if (apply(homs[i], a) != first) return std::make_pair(homs.front(), homs[i]);
  }
  return std::nullopt;
}

SubfieldLattice subfields_of_simple(const Elem& a, const SplittingContext& ctx, const FactorOptions& opts) {
  const auto& E = a.field();
  const auto m = minimal_polynomial(a);
  if (m.degree() == 1) return {E, {Subfield::base(E)}, Completeness::complete};
  const auto Ka = Subfield::generated_by(E, {a});
  std::optional<SubfieldLattice> whole;
  if (E.is_finite()) {
    whole = subfields_finite(E);
  } else if (E.degree() <= 8 && hom_set(E, Subfield::base(E), ctx).size() == E.degree()) {
    whole = subfields_separable(E, ctx);
  }
  if (whole) {
    SubfieldLattice out{E, {}, whole->completeness};
    for (auto& L : whole->nodes) {
      if (L.is_subset_of(Ka)) out.nodes.push_back(std::move(L));
    }
    return out;
  }
  const auto Fa = Field::extension_unchecked(E.base(), "a", m.coeffs());
  const auto local = Fa.is_finite() ? subfields_finite(Fa) : subfield_lattice(Fa, splitting_context(Fa, opts));
  SubfieldLattice out{E, {}, local.completeness};
  for (const auto& node : local.nodes) {
    std::vector<Elem> gens;
    for (const auto& b : node.basis()) gens.push_back(to_ambient(b, a));
    out.nodes.push_back(Subfield::generated_by(E, std::move(gens)));
  }
  return out;
}

Subfield canonical_inseparable_witness(const Elem& a, const SplittingContext& ctx) {
  const auto e = separable_decompose(minimal_polynomial(a)).e;
  if (e == 0) throw PreconditionError(a.to_string() + " is separable; it has no inseparability witness");
  auto L = Subfield::generated_by(a.field(), {a.frobenius(e)});
  if (L.contains(a)) throw InternalError(a.to_string() + " lies in its own canonical witness subfield");
  if (separation_witness(a, L, ctx)) throw InternalError("embeddings separate " + a.to_string() + " over K(a^(p^e))");
  return L;
}

SeparabilityReport is_separable_element_by_witness(const Elem& a, const SplittingContext& ctx,
                                                   const FactorOptions& opts) {
  SeparabilityReport r;
  r.subject = a.to_string();
  r.degree = minpoly_degree(a);
  if (r.degree == 1) {
    r.by_witness = true;
    r.notes.push_back(r.subject + " lies in the base field; no subfield excludes it");
    return r;
  }
  const auto& E = a.field();
  const auto below = Subfield::generated_by(E, {a.frobenius()});
  if (!below.contains(a) && !separation_witness(a, below, ctx)) {
    r.by_witness = false;
    r.exponent = separable_decompose(minimal_polynomial(a)).e;
    r.canonical = canonical_inseparable_witness(a, ctx);
    r.witness_element = a;
    return r;
  }
  const auto lattice = subfields_of_simple(a, ctx, opts);
  for (const auto& L : lattice.nodes) {
    if (L.contains(a)) continue;
    auto w = separation_witness(a, L, ctx);
    if (!w) {
      r.by_witness = false;
      r.canonical = L;
      r.witness_element = a;
      r.notes.push_back("no pair of embeddings separates " + r.subject + " over a subfield of degree " +
                        std::to_string(L.dimension()));
      return r;
    }
    if (!r.pair) {
      r.pair = SeparatingPair{std::move(w->first), std::move(w->second), L};
      r.witness_element = a;
    }
  }
  if (lattice.completeness != Completeness::complete) {
    throw CapabilityError("subfields of K(" + r.subject + ") are not known to be complete");
  }
  r.by_witness = true;
  return r;
}

SeparabilityReport hom_count_element(const Elem& a, const SplittingContext& ctx) {
  const auto& E = a.field();
  std::set<Elem> images;
  for (const auto& phi : hom_set(E, Subfield::base(E), ctx)) images.insert(apply(phi, a));
  SeparabilityReport r;
  r.subject = a.to_string();
  r.degree = minpoly_degree(a);
  r.hom_count = images.size();
  r.by_hom_count = r.hom_count == r.degree;
  return r;
}

SeparabilityReport hom_count_criterion(const Field& E, const Subfield& over, const SplittingContext& ctx) {
  SeparabilityReport r;
  r.subject = E.description();
  r.degree = E.degree() / over.dimension();
  r.hom_count = hom_set(E, over, ctx).size();
  r.by_hom_count = r.hom_count == r.degree;
  return r;
}

SeparabilityReport check_element(const Elem& a, const SplittingContext& ctx, const FactorOptions& opts) {
  auto r = is_separable_element(a);
  r.hom_count = hom_count_element(a, ctx).hom_count;
  r.by_hom_count = r.hom_count == r.degree;
  try {
    auto w = is_separable_element_by_witness(a, ctx, opts);
    r.by_witness = w.by_witness;
    r.pair = std::move(w.pair);
    r.canonical = std::move(w.canonical);
    r.witness_element = std::move(w.witness_element);
    r.notes.insert(r.notes.end(), w.notes.begin(), w.notes.end());
  } catch (const CapabilityError& e) {
    r.notes.push_back(std::string("witness criterion not evaluated: ") + e.what());
  }
  if (!r.separable() && !r.canonical) {
    r.canonical = canonical_inseparable_witness(a, ctx);
    r.witness_element = a;
  }
  if (r.separable() && !r.pair && r.degree > 1) {
    const auto base = Subfield::base(a.field());
    auto w = separation_witness(a, base, ctx);
    if (!w) throw InternalError("separable element " + r.subject + " has no separating pair over the base");
    r.pair = SeparatingPair{std::move(w->first), std::move(w->second), base};
    r.witness_element = a;
  }
  return r;
}

SeparabilityReport check_extension(const Field& E, const SplittingContext& ctx, const FactorOptions& opts) {
  auto r = hom_count_criterion(E, ctx);
  bool distinct = true;
  const auto stages = E.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) {
    const Poly f(stages[i].parent(), stages[i].minpoly());
    distinct = distinct && distinct_root_count(f) == static_cast<std::size_t>(f.degree());
  }
  r.by_derivative = distinct;

  bool unknown = false;
  std::optional<SeparatingPair> top_pair;
  std::optional<Elem> top_element;
  for (const auto& g : generators_in(E)) {
    try {
      auto w = is_separable_element_by_witness(g, ctx, opts);
      if (!*w.by_witness) {
        r.by_witness = false;
        r.canonical = std::move(w.canonical);
        r.witness_element = g;
        r.exponent = w.exponent;
        break;
      }
      top_pair = std::move(w.pair);
      top_element = g;
    } catch (const CapabilityError& e) {
      unknown = true;
      r.notes.push_back(std::string("witness criterion not evaluated for ") + g.to_string() + ": " + e.what());
    }
  }
  if (!r.by_witness && !unknown) r.by_witness = true;

  if (r.separable()) {
    r.pair = std::move(top_pair);
    r.witness_element = std::move(top_element);
    if (!r.pair && !E.is_base()) {
      const auto base = Subfield::base(E);
      const auto top = Elem::generator(E);
      auto w = separation_witness(top, base, ctx);
      if (!w) throw InternalError("separable extension with no separating pair for its generator");
      r.pair = SeparatingPair{std::move(w->first), std::move(w->second), base};
      r.witness_element = top;
    }
  } else if (!r.canonical) {
    for (const auto& g : generators_in(E)) {
      const auto e = separable_decompose(minimal_polynomial(g)).e;
      if (e == 0) continue;
      r.canonical = canonical_inseparable_witness(g, ctx);
      r.witness_element = g;
      r.exponent = e;
      break;
    }
    if (!r.canonical) throw InternalError("inseparable extension with separable generators");
  }
  return r;
}

HomGt1Result hom_gt1_criterion(const Field& E, const SplittingContext& ctx, const SubfieldLattice& lattice) {
  if (!(lattice.ambient == E)) throw InputError("lattice does not belong to " + E.description());
  HomGt1Result out;
  bool all_pass = true;
  for (const auto& L : lattice.nodes) {
    if (L.dimension() == E.degree()) continue;
    const auto count = hom_set(E, L, ctx).size();
    out.counts.emplace_back(L.dimension(), count);
    all_pass = all_pass && count > 1;
  }
  if (!all_pass) {
    out.verdict = false;
  } else if (lattice.completeness == Completeness::complete) {
    out.verdict = true;
  }
  if (out.verdict && *out.verdict != *hom_count_criterion(E, ctx).by_hom_count) {
    throw InternalError("hom>1 criterion and hom-count criterion disagree on " + E.description());
  }
  return out;
}

L1L2Result l1l2_check(const Subfield& L1, const Subfield& L2, const SplittingContext& ctx) {
  const auto& E = L1.ambient();
  if (!(L2.ambient() == E)) throw InputError("subfields live in different fields");
  L1L2Result out;
  out.containment = L1.is_subset_of(L2);
  const auto homs = hom_set(E, Subfield::base(E), ctx);
  auto restrict = [&](const Embedding& phi, const Subfield& L) {
    std::vector<Elem> v;
    for (const auto& b : L.basis()) v.push_back(apply(phi, b));
    return v;
  };
  std::vector<std::vector<Elem>> on1;
  std::vector<std::vector<Elem>> on2;
  for (const auto& phi : homs) {
    on1.push_back(restrict(phi, L1));
    on2.push_back(restrict(phi, L2));
  }
  out.implication = true;
  for (std::size_t i = 0; i < homs.size() && out.implication; ++i) {
    for (std::size_t j = i + 1; j < homs.size(); ++j) {
      if (on2[i] == on2[j] && on1[i] != on1[j]) {
        out.implication = false;
        break;
      }
    }
  }
  return out;
}

MembershipResult membership_by_embeddings(const Elem& a, const Elem& b, const SplittingContext& ctx) {
  const auto E = common_field(a.field(), b.field());
  const auto x = a.lift(E);
  const auto y = b.lift(E);
  if (!*hom_count_criterion(E, ctx).by_hom_count) {
    throw PreconditionError(E.description() + " is not separable over its base");
  }
  MembershipResult out;
  out.by_span = Subfield::generated_by(E, {y}).contains(x);
  std::vector<std::pair<Elem, Elem>> images;
  for (const auto& phi : hom_set(E, Subfield::base(E), ctx)) images.emplace_back(apply(phi, y), apply(phi, x));
  out.by_embeddings = true;
  for (std::size_t i = 0; i < images.size() && out.by_embeddings; ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i].first == images[j].first && images[i].second != images[j].second) {
        out.by_embeddings = false;
        break;
      }
    }
  }
  return out;
}

SeparableClosure separable_closure(const Field& E) {
  const auto D = E.degree();
  const std::uint64_t p = E.characteristic();
  std::size_t m = 0;
  for (std::uint64_t q = 1; q < D; q *= p) ++m;
  std::vector<Elem> gens;
  for (const auto& g : generators_in(E)) {
    auto h = g.frobenius(m);
    const auto& c = h.coords();
    const auto lead = std::find_if(c.rbegin(), c.rend(), [](const RatFunc& r) { return !r.is_zero(); });
    if (lead != c.rend()) h *= Elem::scalar(E, lead->inverse());
    gens.push_back(std::move(h));
  }
  auto closure = Subfield::generated_by(E, std::move(gens));
  const auto d = closure.dimension();
  return {std::move(closure), d, D / d};
}

PrimitiveSearchPlan primitive_plan(const Elem& alpha, const Elem& beta, std::size_t bound) {
  PrimitiveSearchPlan plan{alpha, beta, {}};
  for (std::uint64_t code = 0; code <= bound; ++code) plan.candidates.push_back(small_scalar(alpha.characteristic(), code));
  return plan;
}

PrimitiveResult primitive_element(const Field& E, const SplittingContext& ctx) {
  if (!*hom_count_criterion(E, ctx).by_hom_count) {
    throw PreconditionError(E.description() + " is not separable; no primitive element is guaranteed");
  }
  const auto D = E.degree();
  if (E.is_base()) return {Elem::one(E), 1};
  const auto gens = generators_in(E);
  PrimitiveResult out{gens.back(), 0};

  if (E.is_finite()) {
    const auto primes = prime_divisors(D);
    auto escapes = [&](const Elem& g) {
      return std::all_of(primes.begin(), primes.end(), [&](std::uint64_t l) { return g.frobenius(D / l) != g; });
    };
    Elem sum = Elem::zero(E);
    for (const auto& g : gens) sum += g;
    std::vector<Elem> first{gens.back(), sum};
    for (const auto& g : first) {
      ++out.candidates_tried;
      if (escapes(g)) {
        out.element = g;
        return out;
      }
    }
    for (std::uint64_t code = 0; code < E.order(); ++code) {
      const auto g = element_from_code(E, code);
      ++out.candidates_tried;
      if (escapes(g)) {
        out.element = g;
        return out;
      }
    }
    throw InternalError("no element of " + E.description() + " escapes its maximal subfields");
  }

  Elem gamma = gens.front();
  out.candidates_tried = 1;
  for (std::size_t k = 1; k < gens.size(); ++k) {
    const auto target = Subfield::generated_by(E, {gamma, gens[k]}).dimension();
    const auto plan = primitive_plan(gamma, gens[k], D * D);
    bool found = false;
    for (const auto& c : plan.candidates) {
      const auto g = plan.alpha + Elem::scalar(E, c) * plan.beta;
      ++out.candidates_tried;
      if (minpoly_degree(g) == target) {
        gamma = g;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("primitive element search exhausted its candidates");
  }
  if (minpoly_degree(gamma) != D) throw InternalError("primitive element candidate has the wrong degree");
  out.element = gamma;
  return out;
}

TransitivityReport transitivity_check(const Field& E, const Field& L, const SplittingContext& ctx) {
  if (!L.is_subfield_of(E)) throw InputError(L.description() + " is not a stage of " + E.description());
  TransitivityReport out{hom_count_criterion(E, Subfield::stage(E, L), ctx), hom_count_criterion(L, ctx),
                         hom_count_criterion(E, ctx)};
  out.vacuous = !(*out.e_over_l.by_hom_count && *out.l_over_k.by_hom_count);
  out.holds = out.vacuous || *out.e_over_k.by_hom_count;
  return out;
}

bool det_criterion(const std::vector<Elem>& a, const SplittingContext& ctx) {
  if (a.empty()) throw InputError("det criterion needs at least one element");
  Field E = a.front().field();
  for (const auto& x : a) E = common_field(E, x.field());
  const auto p = E.characteristic();
  linalg::Matrix<RatFunc> rows;
  std::vector<Elem> v;
  for (const auto& x : a) {
    v.push_back(x.lift(E));
    rows.push_back(v.back().coords());
  }
  if (linalg::rank(rows, RatFunc::one(p)) != a.size()) throw InputError("elements are linearly dependent");

  const auto homs = hom_set(E, Subfield::base(E), ctx);
  const auto n = v.size();
  if (homs.size() < n) return false;
  std::vector<std::vector<Elem>> images;
  for (const auto& phi : homs) {
    std::vector<Elem> row;
    for (const auto& x : v) row.push_back(apply(phi, x));
    images.push_back(std::move(row));
  }
  const auto& N = ctx.field();
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    linalg::Matrix<Elem> m;
    for (auto i : pick) m.push_back(images[i]);
    if (!linalg::determinant(std::move(m), Elem::zero(N), Elem::one(N)).is_zero()) return true;
    std::size_t i = n;
    while (i-- > 0 && pick[i] == homs.size() - n + i) {
    }
    if (i == static_cast<std::size_t>(-1)) return false;
    ++pick[i];
    for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace septower
