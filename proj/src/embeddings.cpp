#include "septower/embeddings.hpp"

#include <algorithm>
#include <set>

#include "septower/errors.hpp"

namespace septower {

std::vector<Elem> SplittingContext::roots_of(const Poly& f, const FactorOptions& opts) const {
  for (const auto& t : tracked_) {
    if (t.poly == f) return t.roots;
  }
  return roots_in(f, N_, opts);
}

namespace {

std::string fresh_name(const std::vector<std::string>& used, std::size_t& counter) {
  for (;;) {
    auto name = "r" + std::to_string(++counter);
    if (std::find(used.begin(), used.end(), name) == used.end()) return name;
  }
}

// Adjoins roots of f (coefficients in a lower stage of N) until it splits;
// returns the enlarged field and the distinct roots. After adjoining a root r
// of an irreducible piece g, the cofactor g / (x - r) is all that needs
// factoring anew besides the remaining nonlinear pieces.
std::pair<Field, std::vector<Elem>> split_over(Field N, const Poly& f, std::size_t& counter,
                                                const FactorOptions& opts) {
  std::vector<Poly> pieces;
  for (const auto& [g, m] : factor(f.lift(N), opts).factors) pieces.push_back(g);
  for (;;) {
    const auto nonlinear = std::find_if(pieces.begin(), pieces.end(), [](const Poly& g) { return g.degree() > 1; });
    if (nonlinear == pieces.end()) break;
    const Poly g = *nonlinear;
    // Factors are certified irreducible, so the unchecked constructor is safe.
    N = Field::extension_unchecked(N, fresh_name(N.generator_names(), counter), g.coeffs());
    std::vector<Poly> next;
    for (const auto& q : pieces) {
      auto lifted = q.lift(N);
      if (q.degree() == 1) {
        next.push_back(std::move(lifted));
        continue;
      }
      if (q == g) {
        const auto linear = Poly::x(N) - Poly::constant(Elem::generator(N));
        next.push_back(linear);
        lifted = exact_div(lifted, linear);
        if (lifted.degree() == 1) {
          next.push_back(std::move(lifted));
          continue;
        }
      }
      for (const auto& [h, m] : factor(lifted, opts).factors) next.push_back(h);
    }
    pieces = std::move(next);
  }
  std::vector<Elem> roots;
  for (const auto& g : pieces) roots.push_back(-g.coeff(0).lift(N));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return {N, roots};
}

std::vector<Elem> stage_generators(const Field& E) {
  std::vector<Elem> gens;
  const auto stages = E.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) gens.push_back(Elem::generator(stages[i]));
  return gens;
}

Elem image(const Embedding& phi, const Elem& a) {
  const auto& F = a.field();
  if (F.is_base()) return Elem::scalar(phi.codomain, a.coords()[0]);
  const auto blocks = a.top_blocks();
  const auto& g = phi.images.at(F.depth() - 1);
  Elem acc = Elem::zero(phi.codomain);
  for (std::size_t i = blocks.size(); i-- > 0;) {
    acc = acc * g;
    if (!blocks[i].is_zero()) acc += image(phi, blocks[i]);
  }
  return acc;
}

void check_context(const Field& E, const SplittingContext& ctx) {
  if (!E.is_subfield_of(ctx.field())) {
    throw InputError(E.description() + " is not a stage of the context field " + ctx.field().description());
  }
}

std::size_t stage_root_count(const Field& stage) {
  return distinct_root_count(Poly(stage.parent(), stage.minpoly()));
}

// Images of the stage generator under extensions of phi (defined on the
// parent of `stage`): roots of the base minimal polynomial of the generator
// that are also roots of phi applied to the stage polynomial.
std::vector<Elem> extension_images(const Embedding& phi, const Field& stage, const SplittingContext& ctx) {
  const auto& N = ctx.field();
  std::vector<Elem> coeffs;
  for (const auto& c : stage.minpoly()) coeffs.push_back(image(phi, c));
  const Poly target(N, std::move(coeffs));
  const auto mu = minimal_polynomial(Elem::generator(stage));
  std::vector<Elem> out;
  for (const auto& r : ctx.roots_of(mu)) {
    if (target.eval(r).is_zero()) out.push_back(r);
  }
  if (out.size() != stage_root_count(stage)) {
    throw ContextError("stage polynomial of " + stage.generator_name() + " does not split in " +
                       N.description());
  }
  return out;
}

std::vector<Embedding> filter_fixing(std::vector<Embedding> homs, const Subfield& L) {
  const Field N = homs.empty() ? L.ambient() : homs.front().codomain;
  std::vector<Embedding> out;
  for (auto& phi : homs) {
    const bool fixes = std::all_of(L.basis().begin(), L.basis().end(),
                                   [&](const Elem& b) { return image(phi, b) == b.lift(N); });
    if (fixes) out.push_back(std::move(phi));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SplittingContext splitting_field(const Poly& f, const FactorOptions& opts) {
  if (f.is_zero()) throw PreconditionError("splitting field of the zero polynomial");
  std::size_t counter = 0;
  auto [N, roots] = split_over(f.field(), f, counter, opts);
  return SplittingContext(N, {{f, std::move(roots)}});
}

SplittingContext splitting_context(const Field& E, const FactorOptions& opts) {
  Field N = E;
  std::size_t counter = 0;
  std::vector<Poly> polys;
  for (const auto& g : stage_generators(E)) {
    auto mu = minimal_polynomial(g);
    if (std::find(polys.begin(), polys.end(), mu) == polys.end()) polys.push_back(std::move(mu));
  }
  std::vector<SplittingContext::Tracked> tracked;
  for (const auto& mu : polys) {
    auto [bigger, roots] = split_over(N, mu, counter, opts);
    N = bigger;
    tracked.push_back({mu, std::move(roots)});
  }
  // Later stages only enlarge N; roots found earlier stay valid.
  for (auto& t : tracked) {
    for (auto& r : t.roots) r = r.lift(N);
    std::sort(t.roots.begin(), t.roots.end());
  }
  return SplittingContext(N, std::move(tracked));
}

std::string Embedding::to_string() const {
  const auto names = domain.generator_names();
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ", ";
    out += names[i] + " -> " + images[i].to_string();
  }
  return out.empty() ? "id" : out;
}

Elem apply(const Embedding& phi, const Elem& a) {
  if (!a.field().is_subfield_of(phi.domain)) {
    throw InputError(a.to_string() + " is not in the domain " + phi.domain.description());
  }
  return image(phi, a);
}

Embedding inclusion(const Field& E, const Field& N) {
  if (!E.is_subfield_of(N)) throw InputError(E.description() + " is not a stage of " + N.description());
  auto gens = stage_generators(E);
  for (auto& g : gens) g = g.lift(N);
  return {E, N, std::move(gens)};
}

bool agree_on(const Embedding& phi, const Embedding& psi, const Subfield& L) {
  if (!(phi.domain == psi.domain) || !(phi.codomain == psi.codomain)) {
    throw InputError("embeddings with different domains or codomains");
  }
  return std::all_of(L.basis().begin(), L.basis().end(),
                     [&](const Elem& b) { return apply(phi, b) == apply(psi, b); });
}

std::vector<Embedding> hom_set(const Field& E, const Subfield& L, const SplittingContext& ctx, HomMethod method) {
  check_context(E, ctx);
  if (!(L.ambient() == E)) throw InputError("subfield is not inside " + E.description());
  const auto& N = ctx.field();
  if (method == HomMethod::automatic) method = E.is_finite() ? HomMethod::frobenius : HomMethod::root_chasing;

  std::vector<Embedding> all;
  if (method == HomMethod::frobenius) {
    if (!E.is_finite()) throw CapabilityError("Frobenius enumeration needs a finite field");
    auto gens = stage_generators(E);
    for (auto& g : gens) g = g.lift(N);
    for (std::size_t j = 0; j < E.degree(); ++j) {
      all.push_back({E, N, gens});
      for (auto& g : gens) g = g.frobenius();
    }
    return filter_fixing(std::move(all), L);
  }

  const auto stages = E.stages();
  all.push_back({stages[0], N, {}});
  for (std::size_t i = 1; i < stages.size(); ++i) {
    std::vector<Embedding> next;
    for (const auto& phi : all) {
      for (auto& r : extension_images(phi, stages[i], ctx)) {
        auto images = phi.images;
        images.push_back(std::move(r));
        next.push_back({stages[i], N, std::move(images)});
      }
    }
    all = std::move(next);
  }
  return filter_fixing(std::move(all), L);
}

std::vector<Embedding> extend_embedding(const Embedding& phi, const Field& L, const SplittingContext& ctx) {
  check_context(L, ctx);
  if (L.is_base() || !(L.parent() == phi.domain)) {
    throw InputError(L.description() + " is not a single stage over " + phi.domain.description());
  }
  std::vector<Embedding> out;
  for (auto& r : extension_images(phi, L, ctx)) {
    auto images = phi.images;
    images.push_back(std::move(r));
    out.push_back({L, phi.codomain, std::move(images)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_hom_subfield(const Subfield& L, const SplittingContext& ctx) {
  const auto& E = L.ambient();
  std::set<std::vector<Elem>> restrictions;
  for (const auto& phi : hom_set(E, Subfield::base(E), ctx)) {
    std::vector<Elem> v;
    for (const auto& b : L.basis()) v.push_back(apply(phi, b));
    restrictions.insert(std::move(v));
  }
  return restrictions.size();
}

HomCount count_hom(const Field& E, const Subfield& L, const SplittingContext& ctx) {
  HomCount c;
  c.over_L = hom_set(E, L, ctx).size();
  c.e_over_k = hom_set(E, Subfield::base(E), ctx).size();
  // For a simple L the count is the number of distinct roots of a minimal
  // polynomial, which does not go through E at all.
  if (L.generators().size() == 1) {
    c.l_over_k = distinct_root_count(minimal_polynomial(L.generators().front()));
  } else if (L.generators().empty()) {
    c.l_over_k = 1;
  } else {
    c.l_over_k = count_hom_subfield(L, ctx);
  }
  c.degree = E.degree();
  c.tower_formula = c.e_over_k == c.over_L * c.l_over_k;
  c.degree_bound = c.e_over_k <= c.degree;
  return c;
}

}  // namespace septower
