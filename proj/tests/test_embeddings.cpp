#include <algorithm>
#include <random>

#include "doctest.h"
#include "septower/embeddings.hpp"
#include "septower/expr.hpp"
#include "test_support.hpp"

using namespace septower;

namespace {

Field ext(const Field& parent, const std::string& name, const std::string& poly) {
  return make_extension(parent, parse_poly(parent, poly), name);
}

struct Towers {
  Field F2 = Field::prime(2);
  Field F4 = ext(F2, "w", "x^2 + x + 1");
  Field F16 = ext(F4, "v", "x^2 + x + w");
  Field K3 = Field::rational_function(3);
  Field S = ext(K3, "s", "x^2 - t");
  Field E = ext(S, "u", "x^2 - t - 1");
  Field K2 = Field::rational_function(2);
  Field R2 = ext(K2, "r", "x^2 - t");
  Field R4 = ext(R2, "q", "x^2 - r");
};

std::size_t stage_product(const Field& E) {
  std::size_t n = 1;
  const auto st = E.stages();
  for (std::size_t i = 1; i < st.size(); ++i) n *= distinct_root_count(Poly(st[i].parent(), st[i].minpoly()));
  return n;
}

}  // namespace

TEST_CASE("splitting field examples") {
  const auto K3 = Field::rational_function(3);
  auto ctx = splitting_field(parse_poly(K3, "x^2 - t"));
  CHECK(ctx.field().degree() == 2);
  REQUIRE(ctx.tracked().size() == 1);
  CHECK(ctx.tracked()[0].roots.size() == 2);
  const auto r = Elem::generator(ctx.field());
  const auto& roots = ctx.tracked()[0].roots;
  CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
  CHECK(std::find(roots.begin(), roots.end(), -r) != roots.end());

  for (std::uint32_t p : {2U, 3U}) {
    const auto K = Field::rational_function(p);
    ctx = splitting_field(parse_poly(K, "x^" + std::to_string(p) + " - t"));
    CHECK(ctx.field().degree() == p);
    CHECK(ctx.tracked()[0].roots.size() == 1);
  }

  ctx = splitting_field(parse_poly(Field::prime(2), "x^2 + x + 1"));
  CHECK(ctx.field().degree() == 2);
  CHECK(ctx.tracked()[0].roots.size() == 2);

  // A non-normal cubic needs a second stage.
  const auto K2 = Field::rational_function(2);
  ctx = splitting_field(parse_poly(K2, "x^3 - t"));
  CHECK(ctx.field().degree() == 6);
  CHECK(ctx.tracked()[0].roots.size() == 3);
}

TEST_CASE("hom_set examples") {
  Towers T;
  const auto c4 = splitting_context(T.F4);
  const auto homs = hom_set(T.F4, Subfield::base(T.F4), c4);
  REQUIRE(homs.size() == 2);
  const auto w = Elem::generator(T.F4);
  CHECK(homs[0].images[0] == w);
  CHECK(homs[1].images[0] == w + Elem::one(T.F4));

  const auto cr = splitting_context(T.R2);
  CHECK(hom_set(T.R2, Subfield::base(T.R2), cr).size() == 1);

  const auto c16 = splitting_context(T.F16);
  CHECK(hom_set(T.F16, Subfield::stage(T.F16, T.F4), c16).size() == 2);
}

TEST_CASE("apply examples and homomorphism laws") {
  Towers T;
  const auto c4 = splitting_context(T.F4);
  const auto frob = hom_set(T.F4, Subfield::base(T.F4), c4)[1];
  const auto w = Elem::generator(T.F4);
  CHECK(apply(frob, w) == w + Elem::one(T.F4));
  CHECK(apply(frob, w) == w * w);
  CHECK(apply(frob, Elem::one(T.F4)).is_one());

  const auto cs = splitting_context(T.S);
  const auto homs = hom_set(T.S, Subfield::base(T.S), cs);
  REQUIRE(homs.size() == 2);
  const auto s = Elem::generator(T.S);
  for (const auto& phi : homs) {
    CHECK(apply(phi, s * s) == Elem::t(T.S));
    CHECK(apply(phi, Elem::t(T.S)) == Elem::t(T.S));
  }

  std::mt19937_64 rng(2);
  for (const auto& F : {T.F16, T.E, T.R4}) {
    const auto ctx = splitting_context(F);
    for (const auto& phi : hom_set(F, Subfield::base(F), ctx)) {
      for (int i = 0; i < 8; ++i) {
        const auto a = testing::random_elem(rng, F, 1);
        const auto b = testing::random_elem(rng, F, 1);
        const auto c = testing::random_elem(rng, F, 1);
        CHECK(apply(phi, a * b + c) == apply(phi, a) * apply(phi, b) + apply(phi, c));
      }
      // Injective: the images of a basis stay independent.
      linalg::SpanTracker<RatFunc> span(RatFunc::zero(F.characteristic()), RatFunc::one(F.characteristic()));
      for (std::size_t j = 0; j < F.degree(); ++j) CHECK(span.insert(apply(phi, Elem::basis(F, j)).coords()));
    }
  }
}

TEST_CASE("agree_on examples") {
  Towers T;
  const auto c4 = splitting_context(T.F4);
  const auto homs = hom_set(T.F4, Subfield::base(T.F4), c4);
  const auto& id = homs[0];
  const auto& frob = homs[1];
  CHECK(agree_on(id, id, Subfield::whole(T.F4)));
  CHECK(agree_on(id, frob, Subfield::base(T.F4)));
  CHECK_FALSE(agree_on(id, frob, Subfield::whole(T.F4)));
}

TEST_CASE("extend_embedding examples") {
  Towers T;
  const auto c4 = splitting_context(T.F4);
  const auto id2 = inclusion(T.F2, c4.field());
  CHECK(extend_embedding(id2, T.F4, c4).size() == 2);

  const auto cr = splitting_context(T.R2);
  CHECK(extend_embedding(inclusion(T.K2, cr.field()), T.R2, cr).size() == 1);

  const auto ce = splitting_context(T.E);
  const auto s = Elem::generator(T.S).lift(ce.field());
  const auto phi_s = Embedding{T.S, ce.field(), {-s}};
  const auto ext2 = extend_embedding(phi_s, T.E, ce);
  REQUIRE(ext2.size() == 2);
  const auto u = Elem::generator(T.E).lift(ce.field());
  CHECK(ext2[0].images[1] == -ext2[1].images[1]);
  CHECK((ext2[0].images[1] == u || ext2[1].images[1] == u));
}

TEST_CASE("count_hom examples with the tower audit") {
  Towers T;
  const auto c16 = splitting_context(T.F16);
  auto c = count_hom(T.F16, Subfield::generated_by(T.F16, {Elem::generator(T.F4)}), c16);
  CHECK(c.e_over_k == 4);
  CHECK(c.over_L == 2);
  CHECK(c.l_over_k == 2);
  CHECK(c.tower_formula);

  c = count_hom(T.R4, Subfield::base(T.R4), splitting_context(T.R4));
  CHECK(c.e_over_k == 1);
  CHECK(c.degree == 4);
  CHECK(c.degree_bound);

  c = count_hom(T.E, Subfield::base(T.E), splitting_context(T.E));
  CHECK(c.e_over_k == 4);
  CHECK(c.tower_formula);
}

TEST_CASE("completeness and the Frobenius fast path") {
  Towers T;
  const auto K2 = Field::rational_function(2);
  const auto C = ext(K2, "c", "x^3 - t");
  for (const auto& F : {T.F4, T.F16, T.E, T.R4, C}) {
    const auto ctx = splitting_context(F);
    const auto homs = hom_set(F, Subfield::base(F), ctx);
    CHECK(homs.size() == stage_product(F));
    CHECK(homs.size() <= F.degree());
    for (std::size_t i = 1; i < homs.size(); ++i) CHECK(homs[i - 1] < homs[i]);
  }
  CHECK(splitting_context(C).field().degree() == 6);

  for (const auto& F : {T.F4, T.F16}) {
    const auto ctx = splitting_context(F);
    for (const auto& L : {Subfield::base(F), Subfield::whole(F)}) {
      CHECK(hom_set(F, L, ctx, HomMethod::frobenius) == hom_set(F, L, ctx, HomMethod::root_chasing));
    }
  }
}

TEST_CASE("a context that is too small is reported") {
  Towers T;
  const auto K3 = Field::rational_function(3);
  const SplittingContext small(T.S, {});
  CHECK_NOTHROW((void)hom_set(T.S, Subfield::base(T.S), small));
  const auto ctx_s = splitting_context(T.S);
  CHECK_THROWS_AS((void)hom_set(T.E, Subfield::base(T.E), ctx_s), InputError);
  const auto C = ext(K3, "c", "x^2 - t - 2");
  const auto D = ext(C, "d", "x^2 - t");
  const SplittingContext only_c(D, {});
  CHECK_NOTHROW((void)hom_set(D, Subfield::base(D), only_c));
  const auto K2 = Field::rational_function(2);
  const auto cube = ext(K2, "c", "x^3 - t");
  const SplittingContext not_normal(cube, {});
  CHECK_THROWS_AS((void)hom_set(cube, Subfield::base(cube), not_normal), ContextError);
}
