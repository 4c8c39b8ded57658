#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "charclass/polynomial.hpp"

namespace charclass {

// A homogeneous ideal of k[x_0..x_n] given by generators. Zero generators are
// dropped on construction.
struct IdealSpec {
  std::vector<Polynomial> generators;
  std::size_t n = 0;           // ambient projective dimension (ring has n+1 variables)
  int d = -1;                  // common generator degree, or -1 when mixed
  bool homogeneous = true;
  std::optional<int> codim;    // filled in once known

  static IdealSpec from_generators(std::vector<Polynomial> gens);

  const RingPtr& ring() const { return generators.front().ring(); }
  bool equalized() const noexcept { return d >= 0; }
};

// Replaces every generator of degree e < max degree d by its products with
// all monomials of degree d - e. The result generates the degree >= d
// truncation of the ideal, which defines the same projective scheme.
IdealSpec equalize_degrees(const IdealSpec& ideal);

// Monomials of total degree `degree` in the ring's variables, largest first.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace charclass
