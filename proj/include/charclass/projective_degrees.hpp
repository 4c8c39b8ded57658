#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "charclass/chow.hpp"
#include "charclass/deadline.hpp"
#include "charclass/ideal.hpp"
#include "charclass/random.hpp"

namespace charclass {

// The counting system for g_i in k[x_0..x_n, T]:
//   P_1..P_i       random combinations of the generators
//   L_1..L_{n-i}   random linear forms in x
//   L_A            random affine form 1 - sum nu_j x_j
//   S              1 - T * (random combination)
// Its number of solutions is g_i.
struct DegreeSystem {
  std::size_t i = 0;
  RingPtr ring;
  std::vector<Polynomial> generators;
  // Stream id of the scalars behind each generator, in generator order.
  std::vector<std::uint64_t> streams;

  std::size_t combination_count() const noexcept { return i; }
  std::size_t linear_count() const noexcept { return generators.size() - i - 2; }
};

struct DegreeOptions {
  unsigned retries = 5;
  // Recompute every g_i this many times with independent scalars and require
  // agreement; disagreement triggers a fresh round.
  unsigned verify = 0;
  // Compute g_1..g_n concurrently.
  bool parallel = false;
  // Eliminate the linear forms by substitution before the Groebner basis.
  bool substitute_linear = true;
  const Deadline* deadline = nullptr;
};

// Pre: I equalized, 1 <= i <= n. Scalars come from substreams of `src`
// keyed by i, `attempt` and the generator slot.
DegreeSystem build_degree_system(const IdealSpec& I, std::size_t i, const RandomScalarSource& src,
                                 std::uint64_t attempt = 0);

// Number of solutions of the system. Throws DimensionError when the system is
// not zero-dimensional and GenericityError when the linear part is degenerate.
std::uint64_t count_solutions(const DegreeSystem& system, const DegreeOptions& options = {});

// g_i, resampling up to options.retries times on a degenerate draw.
std::uint64_t projective_degree_i(const IdealSpec& I, std::size_t i, const RandomScalarSource& src,
                                  const DegreeOptions& options = {});

// (1, g_1, ..., g_n). Unequalized ideals are equalized first.
ProjectiveDegrees projective_degrees(const IdealSpec& I, const RandomScalarSource& src,
                                     const DegreeOptions& options = {});

// g_0 + g_1 h + ... + g_n h^n
ChowClass shadow_class(const ProjectiveDegrees& g);

}  // namespace charclass
