#include "septower/factor.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "septower/errors.hpp"
#include "septower/tower.hpp"

namespace septower {

using FactorList = std::vector<std::pair<Poly, unsigned>>;

namespace {

struct Ctx {
  FactorOptions opts;
  std::mt19937_64 rng;
  explicit Ctx(const FactorOptions& o) : opts(o), rng(o.seed) {}
};

void add_factor(FactorList& out, const Poly& g, unsigned m) {
  for (auto& [h, k] : out) {
    if (h == g) {
      k += m;
      return;
    }
  }
  out.emplace_back(g, m);
}

FactorList factor_monic(const Poly& f, Ctx& ctx);

// ---------------------------------------------------------------------------
// Finite fields: distinct-degree, then equal-degree splitting with the
// absolute trace as the splitting map.

Poly random_poly_below(const Field& F, int degree, Ctx& ctx) {
  const auto p = F.characteristic();
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  std::vector<Elem> c;
  for (int i = 0; i < degree; ++i) {
    std::vector<RatFunc> v;
    for (std::size_t j = 0; j < F.degree(); ++j) v.push_back(RatFunc::constant(p, digit(ctx.rng)));
    c.emplace_back(F, std::move(v));
  }
  return Poly(F, std::move(c));
}

void equal_degree_split(const Poly& g, int d, Ctx& ctx, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto& F = g.field();
  const auto p = F.characteristic();
  const auto trace_terms = F.degree() * static_cast<std::size_t>(d);
  for (;;) {
    const auto a = random_poly_below(F, g.degree(), ctx);
    auto term = a;
    auto tr = a;
    for (std::size_t j = 1; j < trace_terms; ++j) {
      term = pow_mod(term, p, g);
      tr += term;
    }
    for (std::uint32_t c = 0; c < p; ++c) {
      const auto shifted = tr - Poly::constant(Elem::integer(F, c));
      if (shifted.is_zero()) continue;
      const auto u = gcd(g, shifted);
      if (u.degree() > 0 && u.degree() < g.degree()) {
        equal_degree_split(u, d, ctx, out);
        equal_degree_split(exact_div(g, u), d, ctx, out);
        return;
      }
    }
  }
}

std::vector<Poly> finite_split(const Poly& f, Ctx& ctx) {
  const auto& F = f.field();
  const auto q = F.order();
  const auto x = Poly::x(F);
  std::vector<Poly> out;
  Poly rest = f;
  Poly h = x % rest;
  for (int i = 1; rest.degree() >= 2 * i; ++i) {
    h = pow_mod(h, q, rest);
    const auto d = gcd(rest, h - x);
    if (d.degree() > 0) {
      equal_degree_split(d, i, ctx, out);
      rest = exact_div(rest, d);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// ---------------------------------------------------------------------------
// F_p(t): monic polynomials in x with F_p[t] coefficients, searched one
// t-adic layer at a time.

using BiPoly = std::vector<FpPoly>;  // index = x-degree

int bideg(const BiPoly& f) { return static_cast<int>(f.size()) - 1; }

BiPoly bi_trunc(const BiPoly& f, std::size_t prec) {
  BiPoly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(fpx::truncate(c, prec));
  return r;
}

// Long division by the monic g; the remainder is left in r, the quotient
// returned. With prec > 0 every coefficient is reduced mod t^prec.
BiPoly bi_divide(const PrimeField& P, BiPoly r, const BiPoly& g, std::size_t prec) {
  const int k = bideg(g);
  const int n = bideg(r);
  BiPoly q(n >= k ? static_cast<std::size_t>(n - k + 1) : 0);
  for (int i = n; i >= k; --i) {
    const auto c = r[i];
    r[i].clear();
    if (c.empty()) continue;
    q[i - k] = c;
    for (int l = 0; l < k; ++l) {
      if (g[l].empty()) continue;
      auto prod = fpx::mul(P, c, g[l]);
      if (prec > 0) prod = fpx::truncate(prod, prec);
      r[i - k + l] = fpx::sub(P, r[i - k + l], prod);
    }
  }
  r.resize(static_cast<std::size_t>(std::min(n + 1, k)));
  return q;
}

bool bi_remainder_zero(const PrimeField& P, const BiPoly& f, const BiPoly& g, std::size_t prec) {
  BiPoly r = prec > 0 ? bi_trunc(f, prec) : f;
  const int k = bideg(g);
  const int n = bideg(r);
  for (int i = n; i >= k; --i) {
    const auto c = r[i];
    if (c.empty()) continue;
    for (int l = 0; l < k; ++l) {
      if (g[l].empty()) continue;
      auto prod = fpx::mul(P, c, g[l]);
      if (prec > 0) prod = fpx::truncate(prod, prec);
      r[i - k + l] = fpx::sub(P, r[i - k + l], prod);
    }
  }
  for (int l = 0; l < std::min(k, n + 1); ++l) {
    if (!r[l].empty()) return false;
  }
  return true;
}

BiPoly bi_shift(const PrimeField& P, const BiPoly& f, std::uint32_t a) {
  BiPoly r;
  for (const auto& c : f) r.push_back(fpx::taylor_shift(P, c, a));
  return r;
}

FpPoly bi_specialize(const PrimeField& P, const BiPoly& f, std::uint32_t a) {
  FpPoly r;
  for (const auto& c : f) r.push_back(fpx::eval(P, c, a));
  fpx::trim(r);
  return r;
}

FpPoly fp_derivative(const PrimeField& P, const FpPoly& a) {
  FpPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(P.mul(a[i], P.reduce(static_cast<std::int64_t>(i))));
  fpx::trim(d);
  return d;
}

// Every monic divisor of degree k of h over F_p.
std::vector<FpPoly> monic_divisors(const PrimeField& P, const FpPoly& h, int k, Ctx& ctx) {
  const auto p = P.p();
  const auto Fp = Field::prime(p);
  std::vector<Elem> c;
  for (auto v : h) c.push_back(Elem::integer(Fp, v));
  const auto fac = factor_monic(Poly(Fp, std::move(c)).monic(), ctx);

  std::vector<FpPoly> irr;
  std::vector<unsigned> mult;
  for (const auto& [g, m] : fac) {
    FpPoly a;
    for (const auto& e : g.coeffs()) {
      const auto& num = e.coords()[0].num();
      a.push_back(num.empty() ? 0 : num[0]);
    }
    irr.push_back(std::move(a));
    mult.push_back(m);
  }
  std::vector<FpPoly> out;
  auto rec = [&](auto&& self, std::size_t i, int remaining, FpPoly acc) -> void {
    if (remaining == 0) {
      out.push_back(std::move(acc));
      return;
    }
    if (i == irr.size()) return;
    FpPoly cur = acc;
    for (unsigned j = 0; j <= mult[i]; ++j) {
      const int used = static_cast<int>(j) * fpx::degree(irr[i]);
      if (used > remaining) break;
      self(self, i + 1, remaining - used, cur);
      cur = fpx::mul(P, cur, irr[i]);
    }
  };
  rec(rec, 0, k, FpPoly{1});
  return out;
}

class BivariateSearch {
 public:
  BivariateSearch(std::uint32_t p, Ctx& ctx) : P_(p), ctx_(ctx) {}

  std::vector<BiPoly> factor(const BiPoly& f) {
    const int n = bideg(f);
    if (n <= 1) return {f};
    for (int k = 1; 2 * k <= n; ++k) {
      if (auto g = find_factor(f, k)) {
        auto r1 = factor(*g);
        auto r2 = factor(exact_quotient(f, *g));
        r1.insert(r1.end(), r2.begin(), r2.end());
        return r1;
      }
    }
    return {f};
  }

 private:
  BiPoly exact_quotient(const BiPoly& f, const BiPoly& g) { return bi_divide(P_, f, g, 0); }

  // b[i] bounds the t-degree of the coefficient of x^(k-i) in a monic
  // degree-k factor: its roots have t-degree at most rho.
  std::vector<int> degree_bounds(const BiPoly& f, int k) const {
    const int n = bideg(f);
    std::vector<int> b(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 1; j <= k; ++j) {
      int best = 0;
      for (int i = 0; i < n; ++i) {
        if (f[i].empty()) continue;
        best = std::max(best, j * fpx::degree(f[i]) / (n - i));
      }
      b[j] = best;
    }
    return b;
  }

  std::optional<BiPoly> find_factor(const BiPoly& f, int k) {
    const auto bounds = degree_bounds(f, k);
    const int top = *std::max_element(bounds.begin(), bounds.end());
    if (top > ctx_.opts.height_bound) {
      throw ResourceError("factor search over F_" + std::to_string(P_.p()) +
                          "(t) needs coefficient height " + std::to_string(top) + " > bound " +
                          std::to_string(ctx_.opts.height_bound));
    }

    // Prefer a specialization t = a where f stays squarefree, so that each
    // layer lifts uniquely.
    std::uint32_t shift = 0;
    for (std::uint32_t a = 0; a < P_.p(); ++a) {
      const auto h = bi_specialize(P_, f, a);
      const auto d = fp_derivative(P_, h);
      if (!d.empty() && fpx::degree(fpx::gcd(P_, h, d)) == 0) {
        shift = a;
        break;
      }
    }
    const auto fs = bi_shift(P_, f, shift);
    const auto f0 = bi_specialize(P_, fs, 0);

    for (const auto& g0 : monic_divisors(P_, f0, k, ctx_)) {
      BiPoly g;
      for (auto c : g0) g.push_back(c ? FpPoly{c} : FpPoly{});
      if (auto found = lift(fs, g, bounds, 1, top)) {
        auto back = bi_shift(P_, *found, P_.neg(shift));
        if (bi_remainder_zero(P_, f, back, 0)) return back;
      }
    }
    return std::nullopt;
  }

  std::optional<BiPoly> lift(const BiPoly& fs, const BiPoly& g, const std::vector<int>& bounds, int layer,
                             int top) {
    if (layer > top) {
      // Undo the shift in the caller; here only exact divisibility matters.
      if (bi_remainder_zero(P_, fs, g, 0)) return g;
      return std::nullopt;
    }
    const int k = bideg(g);
    std::vector<int> free;  // x-exponents whose coefficient may gain a t^layer term
    for (int i = 1; i <= k; ++i) {
      if (bounds[i] >= layer) free.push_back(k - i);
    }
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free.size(); ++i) count *= P_.p();
    const auto prec = static_cast<std::size_t>(layer) + 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      BiPoly cand = g;
      auto c = code;
      for (int e : free) {
        const auto digit = static_cast<std::uint32_t>(c % P_.p());
        c /= P_.p();
        if (digit == 0) continue;
        cand[e] = fpx::add(P_, cand[e], fpx::monomial(digit, static_cast<std::size_t>(layer)));
      }
      if (!bi_remainder_zero(P_, fs, cand, prec)) continue;
      if (auto r = lift(fs, cand, bounds, layer + 1, top)) return r;
    }
    return std::nullopt;
  }

  PrimeField P_;
  Ctx& ctx_;
};

std::vector<Poly> ratfunc_split(const Poly& f, Ctx& ctx) {
  const auto& K = f.field();
  const auto p = K.characteristic();
  const PrimeField P(p);
  const int n = f.degree();

  FpPoly L{1};
  for (const auto& c : f.coeffs()) {
    const auto& den = c.coords()[0].den();
    L = fpx::divmod(P, fpx::mul(P, L, den), fpx::gcd(P, L, den)).first;
  }
  // f~(x) = L^n f(x / L) is monic with polynomial coefficients.
  BiPoly ft(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    const auto& c = f.coeffs()[i].coords()[0];
    auto num = fpx::mul(P, c.num(), fpx::divmod(P, L, c.den()).first);
    ft[i] = fpx::mul(P, num, fpx::pow(P, L, static_cast<std::uint64_t>(n - 1 - i)));
  }
  ft[n] = {1};

  BivariateSearch search(p, ctx);
  std::vector<Poly> out;
  for (const auto& g : search.factor(ft)) {
    const int k = bideg(g);
    std::vector<Elem> c;
    for (int i = 0; i <= k; ++i) {
      const auto den = fpx::pow(P, L, static_cast<std::uint64_t>(k - i));
      c.push_back(Elem::scalar(K, RatFunc::fraction(p, g[i], den)));
    }
    out.emplace_back(K, std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Towers over F_p(t): shift until the norm has the expected number of
// distinct roots, factor the norm over F_p(t), and pull the factors back
// with gcds.

std::size_t separable_degree(const Field& N) {
  std::size_t d = 1;
  const auto stages = N.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) {
    d *= distinct_root_count(Poly(stages[i].parent(), stages[i].minpoly()));
  }
  return d;
}

std::vector<Elem> tower_generators(const Field& N) {
  std::vector<Elem> gens;
  const auto stages = N.stages();
  for (std::size_t i = 1; i < stages.size(); ++i) gens.push_back(Elem::generator(stages[i]).lift(N));
  return gens;
}

// Shifts of small height: F_p-combinations of the generators and of their
// pairwise products.
std::vector<Elem> cheap_shifts(const Field& N) {
  const auto p = N.characteristic();
  auto gens = tower_generators(N);
  const std::size_t g = gens.size();
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) gens.push_back(gens[i] * gens[j]);
  }
  std::vector<Elem> out{Elem::zero(N)};
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < gens.size() && count < 64; ++i) count *= p;
  for (std::uint64_t code = 1; code < count; ++code) {
    Elem s = Elem::zero(N);
    auto c = code;
    for (const auto& v : gens) {
      if (c % p) s += Elem::integer(N, static_cast<std::int64_t>(c % p)) * v;
      c /= p;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Shifts with growing t-multiples. sum_i c^(i+1) theta_i is a nonzero
// polynomial condition in c, so all but finitely many c separate any two
// embeddings.
std::vector<Elem> generic_shifts(const Field& N) {
  const auto p = N.characteristic();
  const auto gens = tower_generators(N);
  std::vector<Elem> out;
  for (std::uint64_t code = p; code <= p + 40; ++code) {
    const auto c = small_scalar(p, code);
    Elem s = Elem::zero(N);
    for (std::size_t i = 0; i < gens.size(); ++i) s += Elem::scalar(N, c.pow(i + 1)) * gens[i];
    out.push_back(std::move(s));
  }
  return out;
}

// Root-height estimate driving the size of the search over F_p(t).
double height_score(const Poly& h) {
  double best = 0;
  const int n = h.degree();
  for (int i = 0; i < n; ++i) {
    const auto& c = h.coeffs()[i].coords()[0];
    if (c.is_zero()) continue;
    best = std::max(best, static_cast<double>(c.height()) / (n - i));
  }
  return best;
}

// f is squarefree with f' != 0 and its coefficients generate the top stage.
std::vector<Poly> tower_split_top(const Poly& f, Ctx& ctx) {
  const auto& N = f.field();
  const auto target = static_cast<std::size_t>(f.degree()) * separable_degree(N);

  auto attempt = [&](const Elem& s, const Poly& nm) {
    const auto fs = f.shift(s);
    std::vector<Poly> out;
    auto product = Poly::constant(Elem::one(N));
    // The height bound is stated for factors over N; norm factors have
    // roots that are sums of conjugates, so the bound scales with [N:K].
    Ctx norm_ctx = ctx;
    norm_ctx.opts.height_bound = ctx.opts.height_bound * static_cast<int>(N.degree());
    for (const auto& [h, m] : factor_monic(nm, norm_ctx)) {
      const auto g = gcd(fs, h.lift(N));
      if (g.degree() <= 0) continue;
      auto back = g.shift(-s);
      product = product * back;
      out.push_back(std::move(back));
    }
    if (!(product == f)) throw InternalError("norm factorization did not reconstruct " + f.to_string());
    return out;
  };

  std::optional<std::pair<Elem, Poly>> best;
  double best_score = 0;
  for (const auto& s : cheap_shifts(N)) {
    auto nm = norm_to_base(f.shift(s));
    if (distinct_root_count(nm) != target) continue;
    const double score = height_score(nm);
    if (!best || score < best_score) {
      best_score = score;
      best.emplace(s, std::move(nm));
    }
  }
  if (best) return attempt(best->first, best->second);
  for (const auto& s : generic_shifts(N)) {
    auto nm = norm_to_base(f.shift(s));
    if (distinct_root_count(nm) == target) return attempt(s, nm);
  }
  throw ResourceError("no admissible shift found for norm factorization of " + f.to_string());
}

bool lies_in(const Elem& a, const Field& stage) {
  const auto& c = a.coords();
  for (std::size_t i = stage.degree(); i < c.size(); ++i) {
    if (!c[i].is_zero()) return false;
  }
  return true;
}

// Factors over the lowest stage holding the coefficients, then refines the
// factors one stage at a time, which keeps every norm small.
std::vector<Poly> tower_split(const Poly& f, Ctx& ctx) {
  const auto& N = f.field();
  const auto stages = N.stages();
  std::size_t low = 0;
  while (!std::all_of(f.coeffs().begin(), f.coeffs().end(),
                      [&](const Elem& c) { return lies_in(c, stages[low]); })) {
    ++low;
  }
  if (low + 1 == stages.size()) return tower_split_top(f, ctx);

  std::vector<Elem> lowered;
  for (const auto& c : f.coeffs()) lowered.push_back(c.lower(stages[low]));
  std::vector<Poly> pieces;
  for (const auto& [g, m] : factor_monic(Poly(stages[low], std::move(lowered)), ctx)) pieces.push_back(g);
  for (std::size_t st = low + 1; st < stages.size(); ++st) {
    std::vector<Poly> next;
    for (const auto& g : pieces) {
      const auto lifted = g.lift(stages[st]);
      if (lifted.degree() == 1) {
        next.push_back(lifted);
        continue;
      }
      for (auto& h : tower_split_top(lifted, ctx)) next.push_back(std::move(h));
    }
    pieces = std::move(next);
  }
  return pieces;
}

std::vector<Poly> split_separable(const Poly& f, Ctx& ctx) {
  const auto& F = f.field();
  if (F.is_finite()) return finite_split(f, ctx);
  if (F.is_base()) return ratfunc_split(f, ctx);
  return tower_split(f, ctx);
}

// An irreducible q gives q(x^p) = qhat(x)^p when every coefficient of q is a
// p-th power, and an irreducible q(x^p) otherwise.
std::pair<Poly, unsigned> peel(const Poly& q) {
  const auto p = q.field().characteristic();
  std::vector<Elem> roots;
  for (const auto& c : q.coeffs()) {
    auto r = pth_root(c);
    if (!r) return {inflate(q, p), 1};
    roots.push_back(std::move(*r));
  }
  Poly qhat(q.field(), std::move(roots));
  if (!(qhat.pow(p) == inflate(q, p))) throw InternalError("p-power peel failed to reproduce q(x^p)");
  return {qhat, p};
}

FactorList factor_monic(const Poly& f, Ctx& ctx) {
  FactorList out;
  if (f.degree() <= 0) return out;
  if (f.degree() == 1) {
    out.emplace_back(f, 1);
    return out;
  }
  const auto p = f.field().characteristic();
  const auto df = f.derivative();
  if (df.is_zero()) {
    const auto h = deflate(f, p);
    if (!h) throw InternalError("vanishing derivative without a p-th power substitution");
    for (const auto& [q, m] : factor_monic(*h, ctx)) {
      const auto [r, k] = peel(q);
      add_factor(out, r, k * m);
    }
    return out;
  }
  const auto d = gcd(f, df);
  if (d.degree() == 0) {
    for (const auto& g : split_separable(f, ctx)) add_factor(out, g, 1);
    return out;
  }
  for (const auto& part : {exact_div(f, d), d}) {
    for (const auto& [q, m] : factor_monic(part, ctx)) add_factor(out, q, m);
  }
  return out;
}

void require_nonzero(const Poly& f, const char* what) {
  if (f.is_zero()) throw PreconditionError(std::string(what) + " of the zero polynomial");
}

}  // namespace

SeparableDecomposition separable_decompose(const Poly& f) {
  require_nonzero(f, "separable decomposition");
  const auto p = f.field().characteristic();
  SeparableDecomposition sd{f, 0};
  while (sd.g.degree() > 0 && sd.g.derivative().is_zero()) {
    auto h = deflate(sd.g, p);
    if (!h) throw InternalError("vanishing derivative without a p-th power substitution");
    sd.g = std::move(*h);
    ++sd.e;
  }
  return sd;
}

std::size_t distinct_root_count(const Poly& f) {
  require_nonzero(f, "distinct root count");
  const auto g = separable_decompose(f).g;
  if (g.degree() <= 0) return 0;
  const auto d = gcd(g, g.derivative());
  if (d.degree() == 0) return static_cast<std::size_t>(g.degree());
  // g = u * d, so roots(g) = roots(u) + roots(d) - roots(gcd(u, d)). The
  // naive deg g - deg gcd(g, g') undercounts when an irreducible factor of g
  // is itself inseparable, e.g. x (x^2 - t) over F_2(t).
  const auto u = exact_div(g, d);
  return distinct_root_count(u) + distinct_root_count(d) - distinct_root_count(gcd(u, d));
}

Poly Factorization::product() const {
  auto r = Poly::constant(unit);
  for (const auto& [g, m] : factors) r = r * g.pow(m);
  return r;
}

Factorization factor(const Poly& f, const FactorOptions& opts) {
  require_nonzero(f, "factorization");
  Ctx ctx(opts);
  Factorization out{f.lead(), {}};
  out.factors = factor_monic(f.monic(), ctx);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

IrreducibilityCertificate is_irreducible(const Poly& f, const FactorOptions& opts) {
  require_nonzero(f, "irreducibility test");
  if (f.degree() <= 0) return {false, std::nullopt};
  const auto fac = factor(f, opts);
  if (fac.factors.size() == 1 && fac.factors[0].second == 1) return {true, std::nullopt};
  return {false, fac.factors.front().first};
}

std::vector<Elem> roots_in(const Poly& f, const Field& N, const FactorOptions& opts) {
  require_nonzero(f, "root search");
  if (!f.field().is_subfield_of(N)) {
    throw InputError(f.to_string() + " has coefficients outside " + N.description());
  }
  const auto g = f.lift(N);
  std::vector<Elem> roots;
  if (g.degree() <= 0) return roots;
  for (const auto& [h, m] : factor(g, opts).factors) {
    if (h.degree() == 1) roots.push_back(-h.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    if (!g.eval(r).is_zero()) throw InternalError("root failed evaluation check");
  }
  return roots;
}

Poly norm_to_base(const Poly& f) {
  require_nonzero(f, "norm");
  const auto& N = f.field();
  const auto K = N.base();
  const auto D = N.degree();
  if (D == 1) return f.monic();

  // M[r][j] = coordinate r of (e_j * f) as a polynomial over K.
  std::vector<std::vector<Poly>> M(D, std::vector<Poly>(D, Poly::zero(K)));
  for (std::size_t j = 0; j < D; ++j) {
    const auto e = Elem::basis(N, j);
    std::vector<std::vector<Elem>> cols(D);
    for (const auto& c : f.coeffs()) {
      const auto prod = e * c;
      for (std::size_t r = 0; r < D; ++r) cols[r].push_back(Elem::scalar(K, prod.coords()[r]));
    }
    for (std::size_t r = 0; r < D; ++r) M[r][j] = Poly(K, std::move(cols[r]));
  }

  // Fraction-free (Bareiss) elimination over K[x].
  auto prev = Poly::constant(Elem::one(K));
  for (std::size_t k = 0; k + 1 < D; ++k) {
    std::size_t sel = k;
    while (sel < D && M[sel][k].is_zero()) ++sel;
    if (sel == D) throw InternalError("norm of a nonzero polynomial vanished");
    std::swap(M[k], M[sel]);
    for (std::size_t i = k + 1; i < D; ++i) {
      for (std::size_t j = k + 1; j < D; ++j) {
        M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      }
      M[i][k] = Poly::zero(K);
    }
    prev = M[k][k];
  }
  const auto& det = M[D - 1][D - 1];
  if (det.is_zero()) throw InternalError("norm of a nonzero polynomial vanished");
  return det.monic();
}

}  // namespace septower
