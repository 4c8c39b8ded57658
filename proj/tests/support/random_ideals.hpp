#pragma once

// Zero-dimensional test ideals with a known quotient dimension.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "charclass/groebner.hpp"
#include "charclass/polynomial.hpp"
#include "charclass/random.hpp"

namespace charclass::testing {

struct KnownIdeal {
  std::vector<Polynomial> generators;
  std::uint64_t dimension;
};

// Random polynomial in the first `vars` variables with total degree <= max_deg.
inline Polynomial random_poly(const RingPtr& ring, RandomScalarSource& src, int terms, unsigned max_deg,
                              std::size_t vars) {
  std::vector<std::pair<Monomial, Coeff>> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m(ring->nvars());
    unsigned budget = static_cast<unsigned>(src.next_u64() % (max_deg + 1));
    for (unsigned b = 0; b < budget && vars > 0; ++b) ++m[src.next_u64() % vars];
    t.emplace_back(m, src.next_scalar(ring->field()));
  }
  return Polynomial::from_terms(ring, std::move(t));
}

// Triangular system p_j = x_j^{e_j} + (terms of x_j-degree < e_j in x_0..x_j),
// which presents k[x]/I as a free module of rank prod e_j, followed by a random
// invertible linear change of coordinates and a few redundant combinations.
inline KnownIdeal random_known_ideal(const RingPtr& ring, RandomScalarSource& src, std::uint64_t max_dim) {
  const std::size_t k = ring->nvars();
  const PrimeField& F = ring->field();
  std::vector<unsigned> e(k, 1);
  std::uint64_t dim = 1;
  for (std::size_t j = 0; j < k; ++j) {
    unsigned cap = static_cast<unsigned>(max_dim / dim);
    e[j] = 1 + static_cast<unsigned>(src.next_u64() % std::min<unsigned>(cap, 4));
    dim *= e[j];
  }
  std::vector<Polynomial> tri;
  for (std::size_t j = 0; j < k; ++j) {
    Polynomial p = Polynomial::variable(ring, j).pow(e[j]);
    for (int t = 0; t < 4; ++t) {
      Polynomial tail = random_poly(ring, src, 1, e[j] + 1, j);
      unsigned xe = static_cast<unsigned>(src.next_u64() % e[j]);
      p += tail * Polynomial::variable(ring, j).pow(xe);
    }
    tri.push_back(p);
  }
  // x -> A x + b with A unit upper triangular, hence invertible.
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < k; ++j) {
    Polynomial img = Polynomial::variable(ring, j) + Polynomial::constant(ring, src.next_scalar(F));
    for (std::size_t i = j + 1; i < k; ++i)
      img += Polynomial::variable(ring, i).scaled(src.next_scalar(F));
    images.push_back(img);
  }
  std::vector<Polynomial> gens;
  for (const auto& p : tri) gens.push_back(substitute(p, images));
  std::vector<Polynomial> base = gens;
  for (int extra = 0; extra < 2; ++extra) {
    Polynomial c = random_combination(base, src);
    c = c * random_poly(ring, src, 2, 1, k);
    if (!c.is_zero()) gens.push_back(c);
  }
  return {gens, dim};
}

// Count monomials with every exponent < bound that no leading monomial divides.
inline std::uint64_t brute_force_standard(const GroebnerBasis& G, unsigned bound) {
  const std::size_t k = G.ring()->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : G.elements()) leads.push_back(g.monomial_at(0));
  std::uint64_t count = 0;
  Monomial m(k, 0);
  while (true) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) {
      for (std::size_t i = 0; i < k; ++i)
        if (l[i] > m[i]) return false;
      return true;
    });
    count += standard;
    std::size_t i = 0;
    while (i < k && ++m[i] == bound) m[i++] = 0;
    if (i == k) break;
  }
  return count;
}

}  // namespace charclass::testing
