#include "septower/lattice.hpp"

#include <algorithm>
#include <map>

#include "septower/errors.hpp"

namespace septower {

namespace {

bool node_less(const Subfield& a, const Subfield& b) {
  if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
  return a.basis() < b.basis();
}

void add_node(std::vector<Subfield>& nodes, Subfield L) {
  for (const auto& n : nodes) {
    if (n.same_as(L)) return;
  }
  nodes.push_back(std::move(L));
}

SubfieldLattice finish(const Field& E, std::vector<Subfield> nodes, Completeness c) {
  std::sort(nodes.begin(), nodes.end(), node_less);
  for (const auto& n : nodes) {
    if (!validate_subfield(n)) throw InternalError("computed subfield failed validation");
  }
  return {E, std::move(nodes), c};
}

// Elements of E (as coordinate vectors) killed by every map in `maps`,
// each given by the images of E's basis in N.
std::vector<Elem> common_kernel(const Field& E, const std::vector<std::vector<Elem>>& maps) {
  const auto p = E.characteristic();
  const auto D = E.degree();
  linalg::Matrix<RatFunc> rows;
  for (const auto& images : maps) {
    const auto height = images.front().coords().size();
    for (std::size_t r = 0; r < height; ++r) {
      std::vector<RatFunc> row;
      for (std::size_t j = 0; j < D; ++j) row.push_back(images[j].coords()[r]);
      rows.push_back(std::move(row));
    }
  }
  std::vector<Elem> out;
  for (auto& v : linalg::nullspace(std::move(rows), D, RatFunc::zero(p), RatFunc::one(p))) {
    out.emplace_back(E, std::move(v));
  }
  return out;
}

std::uint64_t closure_mask(const AutomorphismGroup& G, std::uint64_t mask) {
  for (;;) {
    std::uint64_t next = mask;
    for (std::size_t a = 0; a < G.elements.size(); ++a) {
      if (!(mask >> a & 1U)) continue;
      for (std::size_t b = 0; b < G.elements.size(); ++b) {
        if (mask >> b & 1U) next |= std::uint64_t{1} << G.table[a][b];
      }
    }
    if (next == mask) return mask;
    mask = next;
  }
}

}  // namespace

bool validate_subfield(const Subfield& L) {
  const auto& E = L.ambient();
  if (!L.contains(Elem::one(E))) return false;
  const auto& b = L.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero() || !L.contains(b[i].inverse())) return false;
    for (std::size_t j = i; j < b.size(); ++j) {
      if (!L.contains(b[i] * b[j])) return false;
    }
  }
  return E.degree() % L.dimension() == 0;
}

SubfieldLattice subfields_finite(const Field& E, const Subfield& over) {
  if (!E.is_finite()) throw InputError(E.description() + " is not a finite field");
  if (!(over.ambient() == E)) throw InputError("subfield is not inside " + E.description());
  const auto n = E.degree();
  const auto m = over.dimension();
  if (n % m != 0) throw InputError("degree of the subfield does not divide the field degree");
  std::vector<Subfield> nodes;
  for (std::size_t d = m; d <= n; d += m) {
    if (n % d != 0) continue;
    std::vector<Elem> images;
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = Elem::basis(E, j);
      images.push_back(e.frobenius(d) - e);
    }
    auto L = Subfield::generated_by(E, common_kernel(E, {images}));
    if (L.dimension() != d) throw InternalError("Frobenius fixed field has the wrong degree");
    if (!over.is_subset_of(L)) throw InputError("the given subfield is not the subfield of its degree");
    add_node(nodes, std::move(L));
  }
  return finish(E, std::move(nodes), Completeness::complete);
}

AutomorphismGroup automorphism_group(const SplittingContext& ctx, std::size_t max_order) {
  const auto& N = ctx.field();
  auto homs = hom_set(N, Subfield::base(N), ctx);
  if (homs.size() > max_order) {
    throw CapabilityError("automorphism group of order " + std::to_string(homs.size()) + " exceeds " +
                          std::to_string(max_order));
  }
  const auto id = inclusion(N, N);
  const auto it = std::find(homs.begin(), homs.end(), id);
  if (it == homs.end()) throw InternalError("identity missing from the automorphism list");
  std::rotate(homs.begin(), it, it + 1);

  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i].images, i);
  AutomorphismGroup G{homs, {}};
  for (const auto& sigma : homs) {
    std::vector<std::size_t> row;
    for (const auto& tau : homs) {
      std::vector<Elem> images;
      for (const auto& g : tau.images) images.push_back(apply(sigma, g));
      const auto found = index.find(images);
      if (found == index.end()) throw InternalError("composition of automorphisms left the set");
      row.push_back(found->second);
    }
    G.table.push_back(std::move(row));
  }
  return G;
}

std::vector<std::vector<std::size_t>> subgroups(const AutomorphismGroup& G) {
  if (G.elements.size() > 64) throw CapabilityError("group too large for subgroup enumeration");
  std::vector<std::uint64_t> found{1};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 0; g < G.elements.size(); ++g) {
      if (found[i] >> g & 1U) continue;
      const auto h = closure_mask(G, found[i] | std::uint64_t{1} << g);
      if (std::find(found.begin(), found.end(), h) == found.end()) found.push_back(h);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto mask : found) {
    std::vector<std::size_t> v;
    for (std::size_t g = 0; g < G.elements.size(); ++g) {
      if (mask >> g & 1U) v.push_back(g);
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

SubfieldLattice subfields_separable(const Field& E, const SplittingContext& ctx) {
  const auto D = E.degree();
  if (D > 8) throw CapabilityError("subfield enumeration via automorphisms is limited to degree 8");
  if (hom_set(E, Subfield::base(E), ctx).size() != D) {
    throw PreconditionError(E.description() + " is not separable over its base");
  }
  const auto& N = ctx.field();
  const auto G = automorphism_group(ctx);
  const auto egens = inclusion(E, N).images;
  auto fixes_E = [&](std::size_t s) {
    const auto& im = G.elements[s].images;
    return std::equal(egens.begin(), egens.end(), im.begin());
  };

  std::vector<Subfield> nodes;
  for (const auto& H : subgroups(G)) {
    bool contains_stabilizer = true;
    for (std::size_t s = 0; s < G.elements.size(); ++s) {
      if (fixes_E(s) && std::find(H.begin(), H.end(), s) == H.end()) contains_stabilizer = false;
    }
    if (!contains_stabilizer) continue;
    std::vector<std::vector<Elem>> maps;
    for (auto s : H) {
      if (s == 0) continue;
      std::vector<Elem> images;
      for (std::size_t j = 0; j < D; ++j) {
        const auto e = Elem::basis(E, j);
        images.push_back(apply(G.elements[s], e) - e.lift(N));
      }
      maps.push_back(std::move(images));
    }
    auto gens = maps.empty() ? std::vector<Elem>{} : common_kernel(E, maps);
    if (maps.empty()) {
      for (std::size_t j = 0; j < D; ++j) gens.push_back(Elem::basis(E, j));
    }
    add_node(nodes, Subfield::generated_by(E, std::move(gens)));
  }
  return finish(E, std::move(nodes), Completeness::complete);
}

SubfieldLattice canonical_chain(const Elem& a) {
  const auto& E = a.field();
  const auto m = minimal_polynomial(a);
  const auto sd = separable_decompose(m);
  if (sd.e == 0) throw PreconditionError(a.to_string() + " is separable; no canonical chain");
  std::vector<Subfield> nodes{Subfield::base(E)};
  for (unsigned j = sd.e + 1; j-- > 0;) add_node(nodes, Subfield::generated_by(E, {a.frobenius(j)}));
  return finish(E, std::move(nodes), Completeness::sound_only);
}

SubfieldLattice subfield_lattice(const Field& E, const SplittingContext& ctx) {
  if (E.is_finite()) return subfields_finite(E);
  const bool separable = hom_set(E, Subfield::base(E), ctx).size() == E.degree();
  if (separable && E.degree() <= 8) return subfields_separable(E, ctx);
  if (!separable && E.depth() == 1) return canonical_chain(Elem::generator(E));
  throw CapabilityError("no subfield enumeration available for " + E.description());
}

}  // namespace septower
