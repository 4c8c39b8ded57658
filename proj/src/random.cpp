#include "charclass/random.hpp"

#include <limits>

namespace charclass {

namespace {

// A zero draw has probability p^-k; cap the loop to surface broken streams.
constexpr int kMaxRedraws = 64;

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t RandomScalarSource::next_u64() noexcept {
  std::uint64_t key = mix64(seed_ ^ mix64(stream_ + 0x632be59bd9b4e019ULL));
  return mix64(key + mix64(counter_++));
}

Coeff RandomScalarSource::next_scalar(const PrimeField& field) noexcept {
  const std::uint64_t p = field.characteristic();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  for (;;) {
    std::uint64_t x = next_u64();
    if (x < limit) return static_cast<Coeff>(x % p);
  }
}

RandomScalarSource RandomScalarSource::substream(std::uint64_t label) const noexcept {
  return RandomScalarSource(seed_, mix64(stream_ * 0x9e3779b97f4a7c15ULL ^ mix64(label)));
}

Polynomial random_form(const RingPtr& ring, RandomScalarSource& src, bool affine,
                       std::optional<std::size_t> var_count) {
  const std::size_t count = var_count.value_or(ring->nvars());
  if (count == 0 || count > ring->nvars()) throw UnsupportedError("random_form needs at least one variable");
  const auto& F = ring->field();
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    std::vector<std::pair<Monomial, Coeff>> terms;
    bool any = false;
    for (std::size_t j = 0; j < count; ++j) {
      Coeff c = src.next_scalar(F);
      if (c == 0) continue;
      any = true;
      Monomial m(ring->nvars(), 0);
      m[j] = 1;
      terms.emplace_back(std::move(m), affine ? F.neg(c) : c);
    }
    if (!any) continue;
    if (affine) terms.emplace_back(Monomial(ring->nvars(), 0), 1);
    return Polynomial::from_terms(ring, std::move(terms));
  }
  throw GenericityError("random stream produced only zero linear forms");
}

Polynomial random_combination(const std::vector<Polynomial>& gens, RandomScalarSource& src) {
  if (gens.empty()) throw UnsupportedError("random_combination needs at least one generator");
  const auto& F = gens.front().field();
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    Polynomial sum(gens.front().ring());
    for (const auto& g : gens) sum += g.scaled(src.next_scalar(F));
    if (!sum.is_zero()) return sum;
  }
  throw GenericityError("random stream produced only zero combinations");
}

}  // namespace charclass
