#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "charclass/polynomial.hpp"

namespace charclass {

// Counter-based scalar generator: the k-th draw is a pure function of
// (seed, stream, k), so identical keys replay identical sequences on every
// platform and independent streams can be consumed from different threads.
class RandomScalarSource {
 public:
  RandomScalarSource(std::uint64_t seed, std::uint64_t stream) noexcept : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::uint64_t position() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;
  // Uniform in [0, p), by rejection.
  Coeff next_scalar(const PrimeField& field) noexcept;

  // A derived stream whose id depends only on this stream's id and `label`.
  RandomScalarSource substream(std::uint64_t label) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

// Random linear form in the first `var_count` ring variables (all when unset):
// sum mu_j x_j when `affine` is false, 1 - sum nu_j x_j when true. A draw with
// every scalar zero is discarded and redrawn.
Polynomial random_form(const RingPtr& ring, RandomScalarSource& src, bool affine,
                       std::optional<std::size_t> var_count = std::nullopt);

// sum lambda_j gens[j] with uniform lambda_j; zero results are redrawn.
Polynomial random_combination(const std::vector<Polynomial>& gens, RandomScalarSource& src);

}  // namespace charclass
