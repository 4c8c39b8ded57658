#pragma once

// Random inputs for the class formulas.

#include <cstddef>
#include <vector>

#include "charclass/chow.hpp"
#include "charclass/random.hpp"

namespace charclass::testing {

// Random valid degree list for a map of degree d from P^n with codimension nu:
// g_j = d^j below nu, 0 <= g_j <= d^j above, and g_nu < d^nu.
inline ProjectiveDegrees random_degrees(RandomScalarSource& src, std::size_t n, unsigned d, std::size_t nu) {
  std::vector<BigInt> g(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt top = int_pow(d, static_cast<unsigned>(j));
    if (j < nu) {
      g[j] = top;
    } else {
      g[j] = BigInt(src.next_u64() % 1000000) % (top + 1);
      if (j == nu && g[j] == top) g[j] = top - 1;
    }
  }
  return ProjectiveDegrees(std::move(g));
}

// Integer coefficient vector of length 1..max_len with entries in [-bound, bound].
inline std::vector<BigInt> random_int_poly(RandomScalarSource& src, std::size_t max_len, std::int64_t bound) {
  std::vector<BigInt> p(1 + src.next_u64() % max_len);
  for (auto& c : p) c = static_cast<std::int64_t>(src.next_u64() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return p;
}

}  // namespace charclass::testing
