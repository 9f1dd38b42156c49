#pragma once

#include <random>

#include "septower/expr.hpp"
#include "septower/field.hpp"
#include "septower/poly.hpp"

namespace septower::testing {

inline FpPoly random_fp_poly(std::mt19937_64& rng, std::uint32_t p, int max_degree) {
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  FpPoly a(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : a) c = coef(rng);
  fpx::trim(a);
  return a;
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, std::uint32_t p, int max_degree) {
  FpPoly den;
  do {
    den = random_fp_poly(rng, p, max_degree);
  } while (den.empty());
  return RatFunc::fraction(p, random_fp_poly(rng, p, max_degree), den);
}

/// Random element with coordinates of bounded height (constants over F_p).
inline Elem random_elem(std::mt19937_64& rng, const Field& f, int max_height = 2) {
  std::vector<RatFunc> v;
  const auto p = f.characteristic();
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (f.is_finite()) {
      v.push_back(RatFunc::polynomial(p, random_fp_poly(rng, p, 0)));
    } else {
      v.push_back(RatFunc::polynomial(p, random_fp_poly(rng, p, max_height)));
    }
  }
  return Elem(f, std::move(v));
}

inline Poly random_poly(std::mt19937_64& rng, const Field& f, int degree, int max_height = 1) {
  std::vector<Elem> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_elem(rng, f, max_height));
  return Poly(f, std::move(c));
}

}  // namespace septower::testing
