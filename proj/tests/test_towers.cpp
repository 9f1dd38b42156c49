#include <random>

#include "doctest.h"
#include "septower/expr.hpp"
#include "septower/factor.hpp"
#include "septower/tower.hpp"
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
};

}  // namespace

TEST_CASE("make_extension certifies irreducibility") {
  Towers T;
  CHECK(T.F4.degree() == 2);
  CHECK(T.F16.degree() == 4);
  CHECK(T.F16.stage_degree() == 2);
  CHECK(T.E.degree() == 4);
  CHECK(T.E.description() == "F_3(t)(s,u)");

  const auto K2 = Field::rational_function(2);
  const auto I = ext(K2, "s", "x^2 - t");
  CHECK(I.degree() == 2);

  try {
    (void)ext(T.F2, "a", "x^2 + 1");
    FAIL("expected a reducibility error");
  } catch (const ReducibleError& e) {
    CHECK(e.factor() == parse_poly(T.F2, "x + 1"));
  }
  CHECK_THROWS_AS((void)ext(T.F2, "a", "x"), InputError);
  CHECK_THROWS_AS((void)make_extension(T.F2, parse_poly(T.F2, "x^2") + Poly::x(T.F2), "a"),
                  ReducibleError);
  CHECK_THROWS_AS((void)make_extension(T.K3, Poly::from_ints(T.K3, {1, 0, 2}), "a"), InputError);
  CHECK_THROWS_AS((void)ext(T.S, "a", "x^2 - t"), ReducibleError);
}

TEST_CASE("element arithmetic examples") {
  Towers T;
  const auto w = Elem::generator(T.F4);
  CHECK((w * (w + Elem::one(T.F4))).is_one());
  CHECK(w.inverse() == w + Elem::one(T.F4));
  const auto s = Elem::generator(T.S);
  CHECK(s * s == Elem::t(T.S));
  CHECK_THROWS_AS((void)Elem::zero(T.F4).inverse(), InputError);
}

TEST_CASE("field axioms and Frobenius on random tower elements") {
  Towers T;
  std::mt19937_64 rng(4);
  for (const auto& F : {T.F16, T.E}) {
    const auto p = F.characteristic();
    for (int i = 0; i < 25; ++i) {
      const auto a = testing::random_elem(rng, F);
      const auto b = testing::random_elem(rng, F);
      const auto c = testing::random_elem(rng, F);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("minimal polynomial examples") {
  Towers T;
  const auto w = Elem::generator(T.F4);
  CHECK(minimal_polynomial(w + Elem::one(T.F4)) == parse_poly(T.F2, "x^2 + x + 1"));
  CHECK(minimal_polynomial(Elem::t(T.K3)) == parse_poly(T.K3, "x - t"));
  const auto su = parse_elem(T.E, "s + u");
  const auto m = minimal_polynomial(su);
  CHECK(m.degree() == 4);
  // Product of (x - (+-s) - (+-u)) expanded by hand.
  CHECK(m == parse_poly(T.K3, "x^4 - 2*(2*t+1)*x^2 + 1"));
  CHECK(m.eval(su).is_zero());
}

TEST_CASE("minimal polynomials vanish and have degree equal to the power span") {
  Towers T;
  std::mt19937_64 rng(8);
  for (const auto& F : {T.F16, T.E}) {
    for (int i = 0; i < 15; ++i) {
      const auto a = testing::random_elem(rng, F, 1);
      const auto m = minimal_polynomial(a);
      CHECK(m.is_monic());
      CHECK(m.eval(a).is_zero());
      CHECK(F.degree() % static_cast<std::size_t>(m.degree()) == 0);
      CHECK(static_cast<std::size_t>(m.degree()) == Subfield::generated_by(F, {a}).dimension());
      CHECK(is_irreducible(m).irreducible);
    }
  }
}

TEST_CASE("subfield membership and span bases") {
  Towers T;
  const auto w = Elem::generator(T.F4).lift(T.F16);
  CHECK(Subfield::generated_by(T.F4, {Elem::generator(T.F4)}).contains(Elem::generator(T.F4)));
  CHECK_FALSE(Subfield::generated_by(T.F16, {w}).contains(Elem::generator(T.F16)));
  CHECK(span_basis(Subfield::base(T.F16)).size() == 1);
  CHECK(span_basis(Subfield::generated_by(T.F16, {w})).size() == 2);

  const auto s = Elem::generator(T.S).lift(T.E);
  const auto u = Elem::generator(T.E);
  const auto Ls = Subfield::generated_by(T.E, {s});
  CHECK(span_basis(Ls) == std::vector<Elem>{Elem::one(T.E), s});
  const auto Lsu = Subfield::generated_by(T.E, {s + u});
  CHECK(subfield_membership(s * u, Lsu));
  CHECK(Lsu.same_as(Subfield::whole(T.E)));
  CHECK(Ls.same_as(Subfield::stage(T.E, T.S)));
  CHECK_FALSE(subfield_membership(u, Ls));
  CHECK(subfield_membership(s * u, Subfield::generated_by(T.E, {s * u})));
}

TEST_CASE("membership agrees with degree of the relative minimal polynomial") {
  Towers T;
  std::mt19937_64 rng(12);
  const auto s = Elem::generator(T.S).lift(T.E);
  const auto u = Elem::generator(T.E);
  const std::vector<Subfield> subs{Subfield::base(T.E), Subfield::generated_by(T.E, {s}),
                                   Subfield::generated_by(T.E, {u}), Subfield::generated_by(T.E, {s * u}),
                                   Subfield::whole(T.E)};
  for (const auto& L : subs) {
    CHECK(T.E.degree() % L.dimension() == 0);
    for (int i = 0; i < 6; ++i) {
      // Mix elements of L with general ones.
      auto a = testing::random_elem(rng, T.E, 1);
      if (i % 2 == 0) {
        a = Elem::zero(T.E);
        for (const auto& b : L.basis()) a += testing::random_elem(rng, T.K3, 1).lift(T.E) * b;
      }
      const auto m = minimal_polynomial(a, L);
      CHECK(m.eval(a).is_zero());
      CHECK(L.contains(a) == (m.degree() == 1));
      for (const auto& c : m.coeffs()) CHECK(L.contains(c));
    }
  }
}

TEST_CASE("p-th roots in towers") {
  Towers T;
  std::mt19937_64 rng(15);
  for (const auto& F : {T.F16, T.E}) {
    for (int i = 0; i < 10; ++i) {
      const auto a = testing::random_elem(rng, F, 1);
      CHECK(pth_root(a.frobenius()) == a);
    }
  }
  CHECK_FALSE(pth_root(Elem::generator(T.E)).has_value());
  const auto K2 = Field::rational_function(2);
  const auto I = ext(K2, "s", "x^2 - t");
  CHECK(pth_root(Elem::t(I)) == Elem::generator(I));
  CHECK_FALSE(pth_root(Elem::generator(I)).has_value());
}
