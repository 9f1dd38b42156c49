#include <random>

#include "doctest.h"
#include "septower/errors.hpp"
#include "septower/expr.hpp"
#include "test_support.hpp"

using namespace septower;

TEST_CASE("prime field construction checks primality") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(13));
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(9), InputError);
  CHECK_THROWS_AS((void)Field::rational_function(4), InputError);
  PrimeField F(7);
  CHECK(F.mul(3, F.inv(3)) == 1);
  CHECK(F.reduce(-1) == 6);
}

TEST_CASE("poly arithmetic examples") {
  const auto F2 = Field::prime(2);
  const auto a = parse_poly(F2, "x + 1");
  CHECK(a * a == parse_poly(F2, "x^2 + 1"));
  auto [q, r] = divmod(parse_poly(F2, "x^2 + 1"), a);
  CHECK(q == a);
  CHECK(r.is_zero());

  const auto K3 = Field::rational_function(3);
  CHECK(parse_poly(K3, "x^2 - t") + parse_poly(K3, "t") == parse_poly(K3, "x^2"));

  CHECK_THROWS_AS((void)divmod(a, Poly::zero(F2)), InputError);
  const auto F3 = Field::prime(3);
  CHECK_THROWS_AS((void)(parse_poly(F2, "x") + parse_poly(F3, "x")), InputError);
}

TEST_CASE("poly gcd examples") {
  const auto F3 = Field::prime(3);
  CHECK(gcd(parse_poly(F3, "x^2 - 1"), parse_poly(F3, "x - 1")) == parse_poly(F3, "x - 1"));
  const auto f = parse_poly(F3, "2*x^2 + x + 1");
  CHECK(gcd(f, Poly::zero(F3)) == f.monic());
  const auto F2 = Field::prime(2);
  // x^4+x^2+1 = (x^2+x+1)^2 in characteristic 2.
  CHECK(parse_poly(F2, "(x^2+x+1)^2") == parse_poly(F2, "x^4+x^2+1"));
  CHECK(gcd(parse_poly(F2, "x^4+x^2+1"), parse_poly(F2, "x^2+x+1")) == parse_poly(F2, "x^2+x+1"));
  CHECK_THROWS_AS((void)gcd(Poly::zero(F2), Poly::zero(F2)), InputError);
}

TEST_CASE("formal derivative drops multiples of p") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto K = Field::rational_function(p);
    CHECK(parse_poly(K, "x^" + std::to_string(p) + " - t").derivative().is_zero());
  }
  const auto K2 = Field::rational_function(2);
  CHECK(parse_poly(K2, "x^2 + x + t").derivative() == parse_poly(K2, "1"));
  const auto F3 = Field::prime(3);
  CHECK(parse_poly(F3, "x^3 + 2*x").derivative() == parse_poly(F3, "2"));
}

TEST_CASE("poly evaluation") {
  const auto F2 = Field::prime(2);
  const auto F4 = Field::extension_unchecked(F2, "w", parse_poly(F2, "x^2+x+1").coeffs());
  const auto w = Elem::generator(F4);
  CHECK(parse_poly(F2, "x^2+x+1").eval(w).is_zero());

  const auto K3 = Field::rational_function(3);
  CHECK(parse_poly(K3, "x^2 - t").eval(Elem::zero(K3)) == -Elem::t(K3));
  CHECK(parse_poly(K3, "x - t").eval(Elem::t(K3)).is_zero());
}

TEST_CASE("pth_root examples") {
  const auto t2 = RatFunc::t(2);
  CHECK(pth_root(t2 * t2) == t2);
  CHECK_FALSE(pth_root(t2).has_value());
  const auto t3 = RatFunc::t(3);
  // (t + t^2)^3 = t^3 + t^6 in characteristic 3.
  const auto r = t3 + t3 * t3;
  CHECK(r.pow(3) == t3.pow(3) + t3.pow(6));
  CHECK(pth_root(t3.pow(3) + t3.pow(6)) == r);
  CHECK(pth_root(RatFunc::one(3) / (t3.pow(3) + RatFunc::one(3))) == RatFunc::one(3) / (t3 + RatFunc::one(3)));
}

TEST_CASE("ratfunc canonical form and ring laws on random samples") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (int i = 0; i < 100; ++i) {
      const auto a = testing::random_ratfunc(rng, p, 3);
      const auto b = testing::random_ratfunc(rng, p, 3);
      const auto c = testing::random_ratfunc(rng, p, 3);
      CHECK((a + -a).is_zero());
      CHECK(RatFunc::fraction(p, a.num(), a.den()) == a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(fpx::lead(a.den()) == 1);
      CHECK(fpx::gcd(a.prime_field(), a.num(), a.den()).size() <= 1 + (a.num().empty() ? 1U : 0U));
    }
  }
}

TEST_CASE("pth_root inverts Frobenius on random samples") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (int i = 0; i < 200; ++i) {
      const auto a = testing::random_ratfunc(rng, p, 3);
      CHECK(pth_root(a.pow(p)) == a);
    }
  }
}

TEST_CASE("pth_root absent exactly when bounded exhaustive search finds no root") {
  // Candidate roots num/den with both parts of degree <= height of the input.
  auto all_polys = [](std::uint32_t p, int max_deg) {
    std::vector<FpPoly> out;
    std::size_t count = 1;
    for (int i = 0; i <= max_deg; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      FpPoly a;
      std::size_t c = code;
      for (int i = 0; i <= max_deg; ++i) {
        a.push_back(static_cast<std::uint32_t>(c % p));
        c /= p;
      }
      fpx::trim(a);
      out.push_back(a);
    }
    return out;
  };
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2U, 3U}) {
    const auto candidates = all_polys(p, 2);
    for (int i = 0; i < 30; ++i) {
      // Mix inputs that are p-th powers with inputs that usually are not.
      auto a = testing::random_ratfunc(rng, p, 2);
      if (i % 2 == 0) a = a.pow(p);
      bool found = false;
      for (const auto& n : candidates) {
        for (const auto& d : candidates) {
          if (d.empty() || found) continue;
          if (RatFunc::fraction(p, n, d).pow(p) == a) found = true;
        }
      }
      CHECK(pth_root(a).has_value() == found);
    }
  }
}

TEST_CASE("polynomial ring axioms and divmod identity on random samples") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2U, 3U}) {
    const auto K = Field::rational_function(p);
    for (int i = 0; i < 30; ++i) {
      const auto a = testing::random_poly(rng, K, 3);
      const auto b = testing::random_poly(rng, K, 2);
      const auto c = testing::random_poly(rng, K, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (b.is_zero()) continue;
      auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      if (!a.is_zero()) {
        const auto g = gcd(a, b);
        CHECK(g.is_monic());
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
      }
    }
  }
}

TEST_CASE("expression parser") {
  const auto K = Field::rational_function(3);
  CHECK(parse_poly(K, "x^2 - (t + 1)") == parse_poly(K, "x*x + 2*t + 2"));
  CHECK(parse_poly(K, "x/2") == parse_poly(K, "2*x"));
  CHECK(parse_elem(K, "(t^2 - 1)/(t - 1)") == parse_elem(K, "t + 1"));
  CHECK_THROWS_AS((void)parse_poly(K, "x^2 + y"), SyntaxError);
  CHECK_THROWS_AS((void)parse_poly(K, "x^"), SyntaxError);
  CHECK_THROWS_AS((void)parse_poly(K, "(x + 1"), SyntaxError);
  CHECK_THROWS_AS((void)parse_poly(K, "1/x"), SyntaxError);
  CHECK_THROWS_AS((void)parse_elem(K, "x + 1"), SyntaxError);
  CHECK_THROWS_AS((void)parse_poly(Field::prime(2), "x + t"), SyntaxError);
  try {
    (void)parse_poly(K, "x + $");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("printing round-trips through the parser") {
  const auto K = Field::rational_function(3);
  const auto L = Field::extension_unchecked(K, "s", parse_poly(K, "x^2 - t").coeffs());
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto f = testing::random_poly(rng, L, 3, 2);
    CHECK(parse_poly(L, f.to_string()) == f);
    const auto d = testing::random_elem(rng, K);
    if (d.is_zero()) continue;
    const auto a = testing::random_elem(rng, L) / d.lift(L);
    CHECK(parse_elem(L, a.to_string()) == a);
  }
}
