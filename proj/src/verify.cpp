#include <functional>
#include <map>
#include <random>
#include <set>

#include "septower/workbench.hpp"

namespace septower {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"F4", "base Fp 2\ngen w : x^2 + x + 1\n"},
      {"F16", "base Fp 2\ngen w : x^2 + x + 1\ngen v : x^2 + x + w\n"},
      {"F8", "base Fp 2\ngen b : x^3 + x + 1\n"},
      {"F27", "base Fp 3\ngen c : x^3 + 2*x + 2\n"},
      {"F64", "base Fp 2\ngen a : x^6 + x + 1\n"},
      {"F81", "base Fp 3\ngen d : x^4 + 2*x^3 + 2\n"},
      {"F729", "base Fp 3\ngen e : x^6 + 2*x^4 + x^2 + 2*x + 2\n"},
      {"F4096", "base Fp 2\ngen g : x^12 + x^3 + 1\n"},
      {"sqrt_t_2", "base FpT 2\ngen r : x^2 - t\n"},
      {"fourth_root_t", "base FpT 2\ngen q : x^4 - t\n"},
      {"quartic_insep", "base FpT 2\ngen a : x^4 + x^2 + t\n"},
      {"artin_schreier", "base FpT 2\ngen z : x^2 + x + t\n"},
      {"sqrt_t_3", "base FpT 3\ngen s : x^2 - t\n"},
      {"cube_root_t", "base FpT 3\ngen c : x^3 - t\n"},
      {"biquadratic", "base FpT 3\ngen s : x^2 - t\ngen u : x^2 - (t + 1)\n"},
      {"nested", "base FpT 3\ngen s : x^2 - t\ngen u : x^2 - (s + 1)\n"},
      {"sqrt_t_5", "base FpT 5\ngen s : x^2 - t\n"},
      {"fifth_root_t", "base FpT 5\ngen r : x^5 - t\n"},
  };
  return corpus;
}

Tower corpus_tower(const std::string& name, const FactorOptions& opts) {
  for (const auto& e : builtin_corpus()) {
    if (e.name == name) return load_tower(e.text, opts);
  }
  throw InputError("no corpus entry named '" + name + "'");
}

namespace {

struct Loaded {
  Tower tower;
  SplittingContext ctx;
};

class Workspace {
 public:
  explicit Workspace(const FactorOptions& opts) : opts_(opts) {}

  const Loaded& get(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end()) {
      auto tower = corpus_tower(name, opts_);
      auto ctx = splitting_context(tower.field, opts_);
      it = cache_.emplace(name, Loaded{std::move(tower), std::move(ctx)}).first;
    }
    return it->second;
  }
  const FactorOptions& opts() const { return opts_; }
  std::mt19937_64 rng(int salt) const { return std::mt19937_64(opts_.seed * 1000003ULL + static_cast<unsigned>(salt)); }

 private:
  FactorOptions opts_;
  std::map<std::string, Loaded> cache_;
};

Elem random_element(std::mt19937_64& rng, const Field& F) {
  const auto p = F.characteristic();
  std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
  std::vector<RatFunc> coords;
  for (std::size_t i = 0; i < F.degree(); ++i) {
    FpPoly c{digit(rng)};
    if (!F.is_finite()) c.push_back(digit(rng));
    fpx::trim(c);
    coords.push_back(RatFunc::polynomial(p, std::move(c)));
  }
  return Elem(F, std::move(coords));
}

std::vector<Elem> all_elements(const Field& F) {
  std::vector<Elem> out;
  const auto p = F.characteristic();
  for (std::uint64_t code = 0; code < F.order(); ++code) {
    std::vector<RatFunc> coords;
    auto c = code;
    for (std::size_t i = 0; i < F.degree(); ++i) {
      coords.push_back(RatFunc::constant(p, static_cast<std::int64_t>(c % p)));
      c /= p;
    }
    out.emplace_back(F, std::move(coords));
  }
  return out;
}

// Rank of 1, a, a^2, ..., a^(D-1): the degree of K(a) without minimal polynomials.
std::size_t power_rank(const Elem& a) {
  linalg::Matrix<RatFunc> rows;
  Elem x = Elem::one(a.field());
  for (std::size_t i = 0; i < a.field().degree(); ++i) {
    rows.push_back(x.coords());
    x *= a;
  }
  return linalg::rank(rows, RatFunc::one(a.characteristic()));
}

std::size_t restriction_count(const Subfield& M, const Subfield& over, const SplittingContext& ctx) {
  const auto& E = M.ambient();
  std::set<std::vector<Elem>> seen;
  for (const auto& phi : hom_set(E, over, ctx)) {
    std::vector<Elem> v;
    for (const auto& b : M.basis()) v.push_back(apply(phi, b));
    seen.insert(std::move(v));
  }
  return seen.size();
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// The monic polynomial of degree d whose lower coefficients are the base-p digits of code.
Poly monic_from_code(const Field& F, int d, std::uint64_t code) {
  const auto p = F.characteristic();
  std::vector<std::int64_t> c;
  for (int i = 0; i < d; ++i) {
    c.push_back(static_cast<std::int64_t>(code % p));
    code /= p;
  }
  c.push_back(1);
  return Poly::from_ints(F, c);
}

// Brute-force factorization of a monic f: strip the lowest-degree monic divisor until 1 is left.
std::map<Poly, unsigned> trial_factor(Poly f) {
  const auto& F = f.field();
  std::map<Poly, unsigned> out;
  int d = 1;
  while (f.degree() > 0) {
    if (2 * d > f.degree()) {
      ++out[f];
      break;
    }
    bool found = false;
    for (std::uint64_t code = 0; code < ipow(F.characteristic(), d) && !found; ++code) {
      const auto g = monic_from_code(F, d, code);
      if (divmod(f, g).second.is_zero()) {
        ++out[g];
        f = exact_div(f, g);
        found = true;
      }
    }
    if (!found) ++d;
  }
  return out;
}

using Check = std::function<void(CriterionResult&, Workspace&)>;

void require(CriterionResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    r.details.push_back("violated: " + what);
  }
}

void c1_factor(CriterionResult& r, Workspace& ws) {
  std::size_t total = 0;
  for (std::uint32_t p : {2U, 3U}) {
    const auto F = Field::prime(p);
    for (int n = 1; n <= 4; ++n) {
      for (std::uint64_t code = 0; code < ipow(p, n); ++code) {
        const auto f = monic_from_code(F, n, code);
        const auto fac = factor(f, ws.opts());
        std::map<Poly, unsigned> got(fac.factors.begin(), fac.factors.end());
        require(r, got == trial_factor(f), "factorization of " + f.to_string() + " over F_" + std::to_string(p));
        require(r, fac.product() == f, "product reconstruction of " + f.to_string());
        ++total;
      }
    }
  }
  r.details.push_back(std::to_string(total) + " monic polynomials of degree <= 4 over F_2 and F_3");
}

void c2_tower(CriterionResult& r, Workspace& ws) {
  std::size_t towers = 0;
  for (const auto* name : {"F4096", "F729"}) {
    const auto& w = ws.get(name);
    const auto lattice = subfields_finite(w.tower.field);
    const auto& nodes = lattice.nodes;
    for (const auto& K : nodes) {
      for (const auto& L : nodes) {
        if (!K.is_subset_of(L)) continue;
        for (const auto& M : nodes) {
          if (!L.is_subset_of(M)) continue;
          const auto mk = restriction_count(M, K, w.ctx);
          const auto ml = restriction_count(M, L, w.ctx);
          const auto lk = restriction_count(L, K, w.ctx);
          require(r, mk == ml * lk,
                  std::string(name) + " chain of degrees " + std::to_string(K.dimension()) + "|" +
                      std::to_string(L.dimension()) + "|" + std::to_string(M.dimension()));
          require(r, mk == M.dimension() / K.dimension(), std::string(name) + " count equals the relative degree");
          ++towers;
        }
      }
    }
  }
  const auto& bq = ws.get("biquadratic");
  const auto s = bq.tower.symbols.at("s");
  auto c = count_hom(bq.tower.field, Subfield::generated_by(bq.tower.field, {s}), bq.ctx);
  require(r, c.tower_formula && c.e_over_k == 4, "biquadratic: 4 = 2 * 2");
  ++towers;
  const auto& qi = ws.get("quartic_insep");
  const auto a = qi.tower.symbols.at("a");
  c = count_hom(qi.tower.field, Subfield::generated_by(qi.tower.field, {a * a}), qi.ctx);
  require(r, c.tower_formula && c.e_over_k == 2 && c.over_L == 1 && c.l_over_k == 2, "x^4 + x^2 + t: 2 = 1 * 2");
  ++towers;
  require(r, towers >= 50, "at least 50 towers");
  r.details.push_back(std::to_string(towers) + " towers checked");
}

const std::vector<std::string>& function_field_corpus() {
  static const std::vector<std::string> names = {"sqrt_t_2", "fourth_root_t", "quartic_insep", "artin_schreier",
                                                 "sqrt_t_3", "cube_root_t",  "biquadratic",   "nested",
                                                 "sqrt_t_5", "fifth_root_t"};
  return names;
}

void c3_criteria(CriterionResult& r, Workspace& ws) {
  std::size_t checked = 0;
  std::size_t separable = 0;
  auto run = [&](const Elem& a, const SplittingContext& ctx) {
    const auto rep = check_element(a, ctx, ws.opts());
    const bool complete = rep.by_derivative && rep.by_witness && rep.by_hom_count;
    require(r, complete, "all three criteria evaluated on " + a.to_string());
    separable += rep.separable();
    ++checked;
  };
  for (const auto* name : {"F16", "F27"}) {
    const auto& w = ws.get(name);
    for (const auto& a : all_elements(w.tower.field)) run(a, w.ctx);
  }
  auto rng = ws.rng(3);
  for (const auto& name : function_field_corpus()) {
    const auto& w = ws.get(name);
    const auto stages = w.tower.field.stages();
    for (std::size_t i = 1; i < stages.size(); ++i) run(Elem::generator(stages[i]).lift(w.tower.field), w.ctx);
    for (int i = 0; i < 20; ++i) run(random_element(rng, w.tower.field), w.ctx);
  }
  r.details.push_back(std::to_string(checked) + " elements, " + std::to_string(separable) + " separable");
}

void c4_canonical(CriterionResult& r, Workspace& ws) {
  for (const auto* name : {"sqrt_t_2", "cube_root_t", "fifth_root_t", "fourth_root_t", "quartic_insep"}) {
    const auto& w = ws.get(name);
    const auto& E = w.tower.field;
    const auto a = Elem::generator(E);
    const auto L = canonical_inseparable_witness(a, w.ctx);
    require(r, !L.contains(a), std::string(name) + ": generator outside K(a^(p^e))");
    const auto homs = hom_set(E, L, w.ctx);
    std::size_t separating = 0;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      for (std::size_t j = i + 1; j < homs.size(); ++j) separating += apply(homs[i], a) != apply(homs[j], a);
    }
    require(r, separating == 0, std::string(name) + ": no separating pair over K(a^(p^e))");
    r.details.push_back(std::string(name) + ": [L:K] = " + std::to_string(L.dimension()) + ", " +
                        std::to_string(homs.size()) + " embeddings over L");
  }
}

void c5_l1l2(CriterionResult& r, Workspace& ws) {
  const auto& w = ws.get("F4096");
  const auto lattice = subfields_finite(w.tower.field);
  std::size_t pairs = 0;
  for (const auto& L1 : lattice.nodes) {
    for (const auto& L2 : lattice.nodes) {
      const auto x = l1l2_check(L1, L2, w.ctx);
      require(r, x.containment == x.implication,
              "pair of degrees " + std::to_string(L1.dimension()) + ", " + std::to_string(L2.dimension()));
      ++pairs;
    }
  }
  require(r, pairs == 36, "36 subfield pairs");
  const auto& ins = ws.get("sqrt_t_2");
  const auto& E = ins.tower.field;
  const auto x = l1l2_check(Subfield::whole(E), Subfield::base(E), ins.ctx);
  require(r, !x.containment && x.implication, "equivalence fails for L1 = E, L2 = K on K(t^(1/2))");
  r.details.push_back(std::to_string(pairs) + " pairs of F_2^12; converse failure on K(t^(1/2)) exhibited");
}

void c6_hom_gt1(CriterionResult& r, Workspace& ws) {
  const auto& f = ws.get("F4096");
  auto res = hom_gt1_criterion(f.tower.field, f.ctx, subfields_finite(f.tower.field));
  require(r, res.verdict == std::optional<bool>(true), "F_2^12: every proper subfield has more than one embedding");
  const auto& bq = ws.get("biquadratic");
  res = hom_gt1_criterion(bq.tower.field, bq.ctx, subfields_separable(bq.tower.field, bq.ctx));
  require(r, res.verdict == std::optional<bool>(true), "biquadratic: every proper subfield passes");
  require(r, res.counts.size() == 4, "biquadratic has four proper subfields");
  const auto& ins = ws.get("sqrt_t_2");
  res = hom_gt1_criterion(ins.tower.field, ins.ctx, canonical_chain(Elem::generator(ins.tower.field)));
  require(r, res.verdict == std::optional<bool>(false) && res.counts.size() == 1 && res.counts[0].second == 1,
          "K(t^(1/2)): criterion fails at L = K");
}

void c7_primitive(CriterionResult& r, Workspace& ws) {
  const auto& bq = ws.get("biquadratic");
  auto pe = primitive_element(bq.tower.field, bq.ctx);
  require(r, pe.candidates_tried <= 20, "biquadratic: found within 20 candidates");
  require(r, power_rank(pe.element) == 4 && minimal_polynomial(pe.element).degree() == 4,
          "biquadratic: degree 4 by both oracles");
  r.details.push_back("biquadratic: " + pe.element.to_string() + " after " + std::to_string(pe.candidates_tried) +
                      " candidates");
  for (const auto* name : {"F16", "F81"}) {
    const auto& w = ws.get(name);
    pe = primitive_element(w.tower.field, w.ctx);
    require(r, power_rank(pe.element) == w.tower.field.degree(), std::string(name) + ": generator of full degree");
    r.details.push_back(std::string(name) + ": " + pe.element.to_string());
  }
}

void c8_kalpha(CriterionResult& r, Workspace& ws) {
  for (const auto* name :
       {"F4", "F16", "F8", "F27", "F64", "F81", "artin_schreier", "sqrt_t_3", "biquadratic", "nested", "sqrt_t_5"}) {
    const auto& w = ws.get(name);
    const auto rep = hom_count_criterion(w.tower.field, w.ctx);
    require(r, rep.hom_count == rep.degree, std::string(name) + ": |Hom| = degree");
  }
  auto rep = hom_count_criterion(ws.get("sqrt_t_2").tower.field, ws.get("sqrt_t_2").ctx);
  require(r, rep.hom_count == 1 && rep.degree == 2, "K(t^(1/2)): 1 < 2");
  rep = hom_count_criterion(ws.get("quartic_insep").tower.field, ws.get("quartic_insep").ctx);
  require(r, rep.hom_count == 2 && rep.degree == 4, "x^4 + x^2 + t: 2 < 4");
}

void c9_closure(CriterionResult& r, Workspace& ws) {
  const auto& w = ws.get("quartic_insep");
  const auto& E = w.tower.field;
  const auto a = Elem::generator(E);
  const auto sc = separable_closure(E);
  require(r, sc.closure_degree == 2 && sc.inseparable_degree == 2, "[closure:K] = 2 and [E:closure] = 2");
  require(r, sc.closure.same_as(Subfield::generated_by(E, {a * a})), "closure = K(a^2)");
  auto rng = ws.rng(9);
  auto in_closure = [&]() {
    Elem x = Elem::zero(E);
    for (const auto& b : sc.closure.basis()) x += random_element(rng, E.base()).lift(E) * b;
    return x;
  };
  for (int i = 0; i < 100; ++i) {
    const auto x = in_closure();
    const auto y = in_closure();
    require(r, *is_separable_element(x + y).by_derivative && *hom_count_element(x + y, w.ctx).by_hom_count,
            "sum of separable elements is separable");
    require(r, *is_separable_element(x * y).by_derivative && *hom_count_element(x * y, w.ctx).by_hom_count,
            "product of separable elements is separable");
  }
  int outside = 0;
  while (outside < 20) {
    const auto z = random_element(rng, E);
    if (sc.closure.contains(z)) continue;
    require(r, !*is_separable_element(z).by_derivative && !*hom_count_element(z, w.ctx).by_hom_count,
            "element outside the closure is inseparable");
    ++outside;
  }
  r.details.push_back("100 pairs inside the closure, 20 elements outside");
}

void c10_transitivity(CriterionResult& r, Workspace& ws) {
  const auto& f = ws.get("F16");
  const auto F4 = f.tower.field.parent();
  auto tr = transitivity_check(f.tower.field, F4, f.ctx);
  require(r, *tr.e_over_l.by_hom_count && *tr.l_over_k.by_hom_count && *tr.e_over_k.by_hom_count,
          "F2 < F4 < F16 all separable");
  const auto& n = ws.get("nested");
  tr = transitivity_check(n.tower.field, n.tower.field.parent(), n.ctx);
  require(r, *tr.e_over_l.by_hom_count && *tr.l_over_k.by_hom_count && *tr.e_over_k.by_hom_count,
          "K < K(s) < K(s)(u) all separable");
  require(r, tr.e_over_k.hom_count == 4 && tr.e_over_l.hom_count == 2 && tr.l_over_k.hom_count == 2, "4 = 2 * 2");
}

void c11_det(CriterionResult& r, Workspace& ws) {
  const auto& f = ws.get("F4");
  const auto& F4 = f.tower.field;
  require(r, det_criterion({Elem::one(F4), Elem::generator(F4)}, f.ctx), "(1, w) over F_2");
  const auto& bq = ws.get("biquadratic");
  std::vector<Elem> basis;
  for (std::size_t j = 0; j < bq.tower.field.degree(); ++j) basis.push_back(Elem::basis(bq.tower.field, j));
  require(r, det_criterion(basis, bq.ctx), "basis of the biquadratic");
  const auto& ins = ws.get("sqrt_t_2");
  require(r, !det_criterion({Elem::one(ins.tower.field), Elem::generator(ins.tower.field)}, ins.ctx),
          "(1, t^(1/2)) over F_2(t)");
}

struct Entry {
  int id;
  const char* title;
  Check run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {1, "factorization agrees with trial division", c1_factor},
      {2, "tower formula for embedding counts", c2_tower},
      {3, "derivative, witness and hom-count criteria agree", c3_criteria},
      {4, "canonical inseparability witness", c4_canonical},
      {5, "containment of subfields matches agreement of embeddings", c5_l1l2},
      {6, "more than one embedding over every proper subfield", c6_hom_gt1},
      {7, "primitive elements", c7_primitive},
      {8, "embedding count equals degree exactly for separable extensions", c8_kalpha},
      {9, "separable closure and closure laws", c9_closure},
      {10, "transitivity of separability", c10_transitivity},
      {11, "determinant criterion", c11_det},
  };
  return list;
}

CriterionResult run_entry(const Entry& e, Workspace& ws) {
  CriterionResult r{e.id, e.title, true, {}};
  try {
    e.run(r, ws);
  } catch (const Error& err) {
    r.pass = false;
    r.details.push_back(std::string("error: ") + err.what());
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> verify_paper(const FactorOptions& opts) {
  Workspace ws(opts);
  std::vector<CriterionResult> out;
  for (const auto& e : entries()) out.push_back(run_entry(e, ws));

  // Sampling criteria rerun from scratch must reproduce their reports byte for byte.
  CriterionResult det{12, "deterministic reports", true, {}};
  Workspace again(opts);
  for (int id : {3, 9}) {
    const auto& e = entries()[static_cast<std::size_t>(id - 1)];
    const auto first = verification_json({out[static_cast<std::size_t>(id - 1)]}).dump();
    const auto second = verification_json({run_entry(e, again)}).dump();
    require(det, first == second, "criterion " + std::to_string(id) + " reproduces its report");
  }
  det.details.push_back("criteria 3 and 9 rerun with the same seed");
  out.push_back(std::move(det));
  return out;
}

}  // namespace septower
