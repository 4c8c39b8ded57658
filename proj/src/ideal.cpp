#include "charclass/ideal.hpp"

#include <algorithm>

namespace charclass {

IdealSpec IdealSpec::from_generators(std::vector<Polynomial> gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  if (gens.empty()) throw UnsupportedError("the zero ideal is not supported");
  const RingPtr& ring = gens.front().ring();
  if (ring->nvars() == 0) throw UnsupportedError("ideal ring has no variables");
  for (const auto& g : gens)
    if (!same_ring(*g.ring(), *ring)) throw RingMismatch("generators belong to different rings");

  IdealSpec spec;
  spec.n = ring->nvars() - 1;
  spec.homogeneous = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  int d = gens.front().total_degree();
  for (const auto& g : gens)
    if (g.total_degree() != d) d = -1;
  spec.d = spec.homogeneous ? d : -1;
  spec.generators = std::move(gens);
  return spec;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  Monomial current(nvars, 0);
  // Lexicographic enumeration with the first variable's exponent descending.
  auto recurse = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      current[var] = static_cast<Exponent>(remaining);
      out.push_back(current);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      current[var] = static_cast<Exponent>(e);
      self(self, var + 1, remaining - e);
    }
    current[var] = 0;
  };
  recurse(recurse, 0, degree);
  return out;
}

IdealSpec equalize_degrees(const IdealSpec& ideal) {
  if (ideal.generators.empty()) throw UnsupportedError("the zero ideal is not supported");
  if (!ideal.homogeneous) throw UnsupportedError("degree equalization needs a homogeneous ideal");
  if (ideal.equalized()) return ideal;

  const RingPtr& ring = ideal.ring();
  int d = 0;
  for (const auto& g : ideal.generators) d = std::max(d, g.total_degree());

  std::vector<Polynomial> out;
  auto push_unique = [&](Polynomial p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  for (const auto& g : ideal.generators) {
    const int e = g.total_degree();
    if (e == d) {
      push_unique(g);
      continue;
    }
    for (const auto& m : monomials_of_degree(ring->nvars(), static_cast<unsigned>(d - e)))
      push_unique(g * Polynomial::monomial(ring, m));
  }
  IdealSpec result = IdealSpec::from_generators(std::move(out));
  result.codim = ideal.codim;
  return result;
}

}  // namespace charclass
