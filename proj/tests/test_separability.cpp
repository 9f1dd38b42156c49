#include <random>
#include <set>

#include "doctest.h"
#include "septower/expr.hpp"
#include "septower/separability.hpp"
#include "test_support.hpp"

using namespace septower;

namespace {

Field ext(const Field& parent, const std::string& name, const std::string& poly) {
  return make_extension(parent, parse_poly(parent, poly), name);
}

struct Corpus {
  Field F2 = Field::prime(2);
  Field F4 = ext(F2, "w", "x^2 + x + 1");
  Field F16 = ext(F4, "v", "x^2 + x + w");
  Field K3 = Field::rational_function(3);
  Field S = ext(K3, "s", "x^2 - t");
  Field E = ext(S, "u", "x^2 - t - 1");
  Field K2 = Field::rational_function(2);
  Field R = ext(K2, "r", "x^2 - t");
  Field Q = ext(K2, "q", "x^4 - t");
  Field A = ext(K2, "a", "x^4 + x^2 + t");
};

// Irreducible m is separable exactly when gcd(m, m') = 1.
bool coprime_with_derivative(const Elem& a) {
  const auto m = minimal_polynomial(a);
  return gcd(m, m.derivative()).degree() == 0;
}

// Degree of K(a) as the rank of 1, a, a^2, ... in base coordinates.
std::size_t power_rank(const Elem& a) {
  const auto p = a.characteristic();
  linalg::Matrix<RatFunc> rows;
  Elem x = Elem::one(a.field());
  for (std::size_t i = 0; i < a.field().degree(); ++i) {
    rows.push_back(x.coords());
    x *= a;
  }
  return linalg::rank(rows, RatFunc::one(p));
}

}  // namespace

TEST_CASE("derivative criterion examples") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto R = ext(Field::rational_function(p), "r", "x^" + std::to_string(p) + " - t");
    const auto rep = is_separable_element(Elem::generator(R));
    CHECK(rep.degree == p);
    CHECK_FALSE(*rep.by_derivative);
    CHECK(rep.exponent == 1);
  }
  Corpus C;
  const auto s = is_separable_element(Elem::generator(C.S));
  CHECK(*s.by_derivative);
  CHECK(s.exponent == 0);
  const auto a = is_separable_element(Elem::generator(C.A));
  CHECK(a.degree == 4);
  CHECK_FALSE(*a.by_derivative);
  CHECK(distinct_root_count(minimal_polynomial(Elem::generator(C.A))) == 2);
}

TEST_CASE("separation witness examples") {
  Corpus C;
  const auto w = Elem::generator(C.F4);
  const auto c4 = splitting_context(C.F4);
  const auto pair = separation_witness(w, Subfield::base(C.F4), c4);
  REQUIRE(pair);
  CHECK(apply(pair->first, w) == w);
  CHECK(apply(pair->second, w) == w + Elem::one(C.F4));

  const auto r = Elem::generator(C.R);
  CHECK_FALSE(separation_witness(r, Subfield::base(C.R), splitting_context(C.R)));

  const auto ce = splitting_context(C.E);
  const auto s = Elem::generator(C.S).lift(C.E);
  const auto over_u = Subfield::generated_by(C.E, {Elem::generator(C.E)});
  const auto sp = separation_witness(s, over_u, ce);
  REQUIRE(sp);
  CHECK(apply(sp->first, s) == -apply(sp->second, s));
  CHECK(agree_on(sp->first, sp->second, over_u));

  CHECK_THROWS_AS((void)separation_witness(s, Subfield::whole(C.E), ce), PreconditionError);
}

TEST_CASE("witness criterion over the subfields of K(a)") {
  Corpus C;
  auto rep = is_separable_element_by_witness(Elem::generator(C.F4), splitting_context(C.F4));
  CHECK(*rep.by_witness);
  REQUIRE(rep.pair);
  CHECK(rep.pair->over.dimension() == 1);

  rep = is_separable_element_by_witness(Elem::generator(C.R), splitting_context(C.R));
  CHECK_FALSE(*rep.by_witness);
  REQUIRE(rep.canonical);
  CHECK(rep.canonical->dimension() == 1);

  const auto ca = splitting_context(C.A);
  const auto a = Elem::generator(C.A);
  rep = is_separable_element_by_witness(a, ca);
  CHECK_FALSE(*rep.by_witness);
  REQUIRE(rep.canonical);
  CHECK(rep.canonical->dimension() == 2);
  CHECK(rep.canonical->contains(a * a));
  CHECK_FALSE(separation_witness(a, Subfield::generated_by(C.A, {a * a}), ca));
  // Over K the two embeddings still separate a: only the layer above K(a^2) is inseparable.
  CHECK(separation_witness(a, Subfield::base(C.A), ca));

  const auto ce = splitting_context(C.E);
  for (const auto& g : {Elem::generator(C.S).lift(C.E), Elem::generator(C.E),
                        Elem::generator(C.S).lift(C.E) + Elem::generator(C.E)}) {
    CHECK(*is_separable_element_by_witness(g, ce).by_witness);
  }
}

TEST_CASE("canonical inseparability witness") {
  Corpus C;
  const auto r = Elem::generator(C.R);
  auto L = canonical_inseparable_witness(r, splitting_context(C.R));
  CHECK(L.dimension() == 1);
  CHECK(hom_set(C.R, L, splitting_context(C.R)).size() == 1);

  const auto a = Elem::generator(C.A);
  L = canonical_inseparable_witness(a, splitting_context(C.A));
  CHECK(L.dimension() == 2);
  CHECK(L.contains(a * a));
  CHECK_FALSE(L.contains(a));

  const auto q = Elem::generator(C.Q);
  L = canonical_inseparable_witness(q, splitting_context(C.Q));
  CHECK(L.dimension() == 1);
  CHECK(separable_decompose(minimal_polynomial(q)).e == 2);

  CHECK_THROWS_AS((void)canonical_inseparable_witness(Elem::generator(C.S), splitting_context(C.S)),
                  PreconditionError);
}

TEST_CASE("hom-count criterion examples") {
  Corpus C;
  auto rep = hom_count_criterion(C.F16, splitting_context(C.F16));
  CHECK(rep.hom_count == 4);
  CHECK(rep.degree == 4);
  CHECK(*rep.by_hom_count);
  rep = hom_count_criterion(C.R, splitting_context(C.R));
  CHECK(rep.hom_count == 1);
  CHECK(rep.degree == 2);
  CHECK_FALSE(*rep.by_hom_count);
  rep = hom_count_criterion(C.A, splitting_context(C.A));
  CHECK(rep.hom_count == 2);
  CHECK(rep.degree == 4);
  CHECK_FALSE(*rep.by_hom_count);
}

TEST_CASE("hom>1 criterion examples") {
  Corpus C;
  const auto c16 = splitting_context(C.F16);
  auto res = hom_gt1_criterion(C.F16, c16, subfields_finite(C.F16));
  CHECK(res.verdict == std::optional<bool>(true));
  CHECK(res.counts == std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {2, 2}});

  const auto cr = splitting_context(C.R);
  res = hom_gt1_criterion(C.R, cr, canonical_chain(Elem::generator(C.R)));
  CHECK(res.verdict == std::optional<bool>(false));
  CHECK(res.counts == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}});

  const auto F64 = ext(C.F2, "b", "x^6 + x + 1");
  res = hom_gt1_criterion(F64, splitting_context(F64), subfields_finite(F64));
  CHECK(res.verdict == std::optional<bool>(true));
  CHECK(res.counts.size() == 3);

  auto partial = subfields_finite(C.F16);
  partial.completeness = Completeness::sound_only;
  CHECK_FALSE(hom_gt1_criterion(C.F16, c16, partial).verdict);

  const auto ca = splitting_context(C.A);
  res = hom_gt1_criterion(C.A, ca, canonical_chain(Elem::generator(C.A)));
  CHECK(res.verdict == std::optional<bool>(false));
}

TEST_CASE("L1L2 examples and equivalence") {
  Corpus C;
  const auto c16 = splitting_context(C.F16);
  const auto F2in = Subfield::base(C.F16);
  const auto F4in = Subfield::stage(C.F16, C.F4);
  auto r = l1l2_check(F4in, F4in, c16);
  CHECK((r.containment && r.implication));
  r = l1l2_check(F4in, F2in, c16);
  CHECK((!r.containment && !r.implication));
  r = l1l2_check(F2in, F4in, c16);
  CHECK((r.containment && r.implication));

  const auto F64 = ext(C.F2, "b", "x^6 + x + 1");
  const auto c64 = splitting_context(F64);
  const auto lat = subfields_finite(F64);
  for (const auto& L1 : lat.nodes) {
    for (const auto& L2 : lat.nodes) {
      const auto x = l1l2_check(L1, L2, c64);
      CHECK(x.containment == x.implication);
    }
  }

  const auto cr = splitting_context(C.R);
  r = l1l2_check(Subfield::whole(C.R), Subfield::base(C.R), cr);
  CHECK_FALSE(r.containment);
  CHECK(r.implication);
}

TEST_CASE("membership by embeddings") {
  Corpus C;
  const auto c16 = splitting_context(C.F16);
  const auto w = Elem::generator(C.F4).lift(C.F16);
  const auto v = Elem::generator(C.F16);
  auto m = membership_by_embeddings(w, v, c16);
  CHECK((m.by_embeddings && m.by_span));
  m = membership_by_embeddings(v, w, c16);
  CHECK((!m.by_embeddings && !m.by_span));
  m = membership_by_embeddings(v, v, c16);
  CHECK((m.by_embeddings && m.by_span));

  const auto ce = splitting_context(C.E);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto a = testing::random_elem(rng, C.E, 1);
    const auto b = testing::random_elem(rng, C.E, 1);
    m = membership_by_embeddings(a, b, ce);
    CHECK(m.by_embeddings == m.by_span);
  }
  CHECK_THROWS_AS((void)membership_by_embeddings(Elem::generator(C.R), Elem::generator(C.R), splitting_context(C.R)),
                  PreconditionError);
}

TEST_CASE("separable closure examples") {
  Corpus C;
  auto sc = separable_closure(C.A);
  const auto a = Elem::generator(C.A);
  CHECK(sc.closure_degree == 2);
  CHECK(sc.inseparable_degree == 2);
  CHECK(sc.closure.contains(a * a));
  CHECK(minimal_polynomial(a * a) == parse_poly(C.K2, "x^2 + x + t"));

  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto R = ext(Field::rational_function(p), "r", "x^" + std::to_string(p) + " - t");
    sc = separable_closure(R);
    CHECK(sc.closure_degree == 1);
    CHECK(sc.inseparable_degree == p);
  }
  sc = separable_closure(C.F16);
  CHECK(sc.closure_degree == 4);
  CHECK(sc.closure.same_as(Subfield::whole(C.F16)));
  CHECK(separable_closure(C.E).closure_degree == 4);
  CHECK(separable_closure(C.Q).closure_degree == 1);
}

TEST_CASE("primitive element examples") {
  Corpus C;
  auto pe = primitive_element(C.F16, splitting_context(C.F16));
  CHECK_FALSE(Subfield::stage(C.F16, C.F4).contains(pe.element));
  CHECK(power_rank(pe.element) == 4);

  pe = primitive_element(C.E, splitting_context(C.E));
  const auto s = Elem::generator(C.S).lift(C.E);
  const auto u = Elem::generator(C.E);
  CHECK(pe.element == s + u);
  CHECK(power_rank(pe.element) == 4);
  CHECK(minimal_polynomial(pe.element).degree() == 4);
  CHECK(pe.candidates_tried == 3);

  pe = primitive_element(C.S, splitting_context(C.S));
  CHECK(pe.element == Elem::generator(C.S));
  CHECK(pe.candidates_tried == 1);

  const auto plan = primitive_plan(s, u, 16);
  CHECK(plan.candidates.size() > 16);
  for (std::size_t i = 0; i < plan.candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < plan.candidates.size(); ++j) CHECK(plan.candidates[i] != plan.candidates[j]);
  }

  CHECK_THROWS_AS((void)primitive_element(C.A, splitting_context(C.A)), PreconditionError);

  const auto F3 = Field::prime(3);
  const auto F9 = ext(F3, "i", "x^2 + 1");
  const auto F81 = ext(F9, "j", "x^2 - i - 1");
  pe = primitive_element(F81, splitting_context(F81));
  CHECK(power_rank(pe.element) == 4);
}

TEST_CASE("transitivity examples") {
  Corpus C;
  auto tr = transitivity_check(C.F16, C.F4, splitting_context(C.F16));
  CHECK(*tr.e_over_l.by_hom_count);
  CHECK(*tr.l_over_k.by_hom_count);
  CHECK(*tr.e_over_k.by_hom_count);
  CHECK(tr.holds);
  CHECK_FALSE(tr.vacuous);

  const auto S1 = ext(C.S, "u", "x^2 - s - 1");
  tr = transitivity_check(S1, C.S, splitting_context(S1));
  CHECK(tr.e_over_l.hom_count == 2);
  CHECK(tr.l_over_k.hom_count == 2);
  CHECK(tr.e_over_k.hom_count == 4);
  CHECK(tr.e_over_k.degree == 4);
  CHECK(tr.holds);

  tr = transitivity_check(C.R, C.R, splitting_context(C.R));
  CHECK(*tr.e_over_l.by_hom_count);
  CHECK_FALSE(*tr.l_over_k.by_hom_count);
  CHECK(tr.vacuous);
  CHECK(tr.holds);
}

TEST_CASE("determinant criterion") {
  Corpus C;
  const auto c4 = splitting_context(C.F4);
  const auto w = Elem::generator(C.F4);
  CHECK(det_criterion({Elem::one(C.F4), w}, c4));
  CHECK(det_criterion({Elem::one(C.F4)}, c4));
  CHECK_THROWS_AS((void)det_criterion({w, w}, c4), InputError);

  const auto cr = splitting_context(C.R);
  CHECK_FALSE(det_criterion({Elem::one(C.R), Elem::generator(C.R)}, cr));
  CHECK(det_criterion({Elem::generator(C.R)}, cr));

  // Invariance under an invertible change of basis a -> a*M.
  const auto ce = splitting_context(C.E);
  std::vector<Elem> basis;
  for (std::size_t j = 0; j < 4; ++j) basis.push_back(Elem::basis(C.E, j));
  CHECK(det_criterion(basis, ce));
  std::mt19937_64 rng(11);
  const auto p = C.E.characteristic();
  for (int trial = 0; trial < 3; ++trial) {
    linalg::Matrix<RatFunc> M(4, std::vector<RatFunc>(4, RatFunc::zero(p)));
    do {
      for (auto& row : M) {
        for (auto& x : row) x = RatFunc::polynomial(p, testing::random_fp_poly(rng, p, 1));
      }
    } while (linalg::rank(M, RatFunc::one(p)) != 4);
    std::vector<Elem> b;
    for (std::size_t j = 0; j < 4; ++j) {
      Elem x = Elem::zero(C.E);
      for (std::size_t i = 0; i < 4; ++i) x += Elem::scalar(C.E, M[i][j]) * basis[i];
      b.push_back(x);
    }
    CHECK(det_criterion(b, ce));
  }
  const auto ca = splitting_context(C.A);
  std::vector<Elem> abasis;
  for (std::size_t j = 0; j < 4; ++j) abasis.push_back(Elem::basis(C.A, j));
  CHECK_FALSE(det_criterion(abasis, ca));
  CHECK(det_criterion({abasis[0], abasis[1]}, ca));
}

TEST_CASE("extension reports") {
  const auto S = ext(Field::rational_function(3), "s", "x^2 - t");
  auto rep = check_extension(S, splitting_context(S));
  CHECK(rep.separable());
  CHECK(rep.hom_count == 2);
  CHECK(rep.degree == 2);
  CHECK(*rep.by_derivative);
  CHECK(*rep.by_witness);
  REQUIRE(rep.pair);
  const auto s = Elem::generator(S);
  CHECK(apply(rep.pair->phi, s) == -apply(rep.pair->psi, s));

  const auto R = ext(Field::rational_function(2), "r", "x^2 - t");
  rep = check_extension(R, splitting_context(R));
  CHECK_FALSE(rep.separable());
  REQUIRE(rep.canonical);
  CHECK(rep.canonical->dimension() == 1);
  CHECK(rep.exponent == 1);

  Corpus C;
  rep = check_extension(C.F16, splitting_context(C.F16));
  CHECK(rep.separable());
  CHECK(rep.hom_count == 4);
  rep = check_extension(C.A, splitting_context(C.A));
  CHECK_FALSE(rep.separable());
  CHECK(rep.canonical->dimension() == 2);
  rep = check_extension(C.E, splitting_context(C.E));
  CHECK(rep.separable());
  CHECK(*rep.by_witness);

  const auto base = check_element(Elem::integer(C.F4, 1), splitting_context(C.F4));
  CHECK(base.degree == 1);
  CHECK(base.separable());
}

TEST_CASE("criteria agree on sampled elements") {
  Corpus C;
  std::mt19937_64 rng(3);
  for (const auto& F : {C.F16, C.E, C.A, C.Q}) {
    const auto ctx = splitting_context(F);
    for (int i = 0; i < 6; ++i) {
      const auto a = testing::random_elem(rng, F, 1);
      const auto rep = check_element(a, ctx);
      CHECK(rep.separable() == coprime_with_derivative(a));
      if (rep.pair) {
        CHECK(agree_on(rep.pair->phi, rep.pair->psi, rep.pair->over));
        CHECK(apply(rep.pair->phi, a) != apply(rep.pair->psi, a));
      }
      if (rep.canonical) {
        CHECK_FALSE(rep.canonical->contains(a));
        CHECK_FALSE(separation_witness(a, *rep.canonical, ctx));
      }
    }
  }
}

TEST_CASE("closure laws") {
  Corpus C;
  std::mt19937_64 rng(17);
  const auto ca = splitting_context(C.A);
  const auto sc = separable_closure(C.A);
  const auto& basis = sc.closure.basis();
  auto sample_closure = [&]() {
    Elem x = Elem::zero(C.A);
    for (const auto& b : basis) x += Elem::scalar(C.A, testing::random_ratfunc(rng, 2, 1)) * b;
    return x;
  };
  for (int i = 0; i < 8; ++i) {
    const auto x = sample_closure();
    const auto y = sample_closure();
    CHECK(*is_separable_element(x + y).by_derivative);
    CHECK(*is_separable_element(x * y).by_derivative);
    CHECK(*hom_count_element(x * y, ca).by_hom_count);
  }
  for (int i = 0; i < 8; ++i) {
    const auto z = testing::random_elem(rng, C.A, 1);
    if (sc.closure.contains(z)) continue;
    CHECK_FALSE(*is_separable_element(z).by_derivative);
    CHECK_FALSE(*hom_count_element(z, ca).by_hom_count);
  }
  const auto ce = splitting_context(C.E);
  for (int i = 0; i < 8; ++i) {
    const auto x = testing::random_elem(rng, C.E, 1);
    const auto y = testing::random_elem(rng, C.E, 1);
    CHECK(*hom_count_element(x + y, ce).by_hom_count);
    CHECK(*hom_count_element(x * y, ce).by_hom_count);
  }
}

TEST_CASE("verdicts do not depend on the ambient tower") {
  Corpus C;
  const auto s_small = Elem::generator(C.S);
  const auto s_big = s_small.lift(C.E);
  CHECK(check_element(s_small, splitting_context(C.S)).separable() ==
        check_element(s_big, splitting_context(C.E)).separable());

  const auto r_small = Elem::generator(C.R);
  const auto R4 = ext(C.R, "q", "x^2 - r");
  const auto r_big = r_small.lift(R4);
  const auto a = check_element(r_small, splitting_context(C.R));
  const auto b = check_element(r_big, splitting_context(R4));
  CHECK(a.separable() == b.separable());
  CHECK(a.hom_count == b.hom_count);

  // Separable over K stays separable over every intermediate field.
  const auto ce = splitting_context(C.E);
  const auto lat = subfields_separable(C.E, ce);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 4; ++i) {
    const auto x = testing::random_elem(rng, C.E, 1);
    for (const auto& L : lat.nodes) {
      std::set<Elem> images;
      for (const auto& phi : hom_set(C.E, L, ce)) images.insert(apply(phi, x));
      CHECK(images.size() == static_cast<std::size_t>(minimal_polynomial(x, L).degree()));
    }
  }
}
