#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charclass/deadline.hpp"
#include "charclass/polynomial.hpp"

namespace charclass {

struct GroebnerOptions {
  const Deadline* deadline = nullptr;
};

// A Groebner basis of the ideal generated by some polynomials, with respect
// to the monomial order of their ring. Reduced bases are monic, inter-reduced
// and sorted by increasing leading monomial, so equal ideals give equal bases.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, bool reduced)
      : ring_(std::move(ring)), basis_(std::move(basis)), reduced_(reduced) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }
  bool reduced() const noexcept { return reduced_; }
  bool is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  bool reduced_;
};

// Reduced Groebner basis by Buchberger's algorithm with Gebauer-Moeller pair
// pruning and sugar-degree pair selection. `ring` fixes the order when `gens`
// is empty.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const GroebnerOptions& options = {});
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& options = {});
// Same ideal, computed with respect to `order`.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool is_zero_dimensional(const GroebnerBasis& basis);

// Number of standard monomials. Throws DimensionError unless zero-dimensional.
std::uint64_t quotient_dimension(const GroebnerBasis& basis);

// Generators of the ideal intersected with the subring of the variables not
// listed in `front_vars`, returned in the ring of `gens`.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& front_vars,
                                  const GroebnerOptions& options = {});

// Monic gcd, computed as f*g / lcm(f, g) with lcm from (t*f) cap ((1-t)*g).
Polynomial gcd_poly(const Polynomial& f, const Polynomial& g);
Polynomial lcm_poly(const Polynomial& f, const Polynomial& g);

// Monic product of the distinct irreducible factors of a nonzero homogeneous f.
// Throws UnsupportedError when deg f >= p.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace charclass
