#include "charclass/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace charclass {

namespace {

constexpr unsigned kMaxDegree = std::numeric_limits<Exponent>::max();

// Scratch buffers reused across in-place merges on one thread.
thread_local std::vector<Coeff> scratch_coeffs;
thread_local std::vector<Exponent> scratch_exps;

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)), stride_(ring_->nvars() + 1) {}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
  Polynomial p(std::move(ring));
  c = p.field().reduce(c);
  if (c != 0) {
    p.coeffs_.push_back(c);
    p.exps_.assign(p.stride_, 0);
  }
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars(), 0);
  if (index >= m.size()) throw UnsupportedError("variable index out of range");
  m[index] = 1;
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& exponents, Coeff c) {
  std::vector<std::pair<Monomial, Coeff>> terms;
  terms.emplace_back(exponents, c);
  return from_terms(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Coeff>> terms) {
  Polynomial p(std::move(ring));
  const std::size_t n = p.ring_->nvars();
  p.coeffs_.reserve(terms.size());
  p.exps_.reserve(terms.size() * p.stride_);
  for (auto& [mono, c] : terms) {
    if (mono.size() != n) throw RingMismatch("monomial length does not match the ring");
    unsigned deg = 0;
    for (auto e : mono) deg += e;
    if (deg > kMaxDegree) throw UnsupportedError("monomial degree exceeds the supported range");
    p.coeffs_.push_back(p.field().reduce(c));
    p.exps_.push_back(static_cast<Exponent>(deg));
    p.exps_.insert(p.exps_.end(), mono.begin(), mono.end());
  }
  p.sort_and_combine();
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Coeff> coeffs, std::vector<Exponent> exps) {
  Polynomial p(std::move(ring));
  p.coeffs_ = std::move(coeffs);
  p.exps_ = std::move(exps);
  return p;
}

void Polynomial::sort_and_combine() {
  const std::size_t count = coeffs_.size();
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring_->compare(raw(a), raw(b)) > 0;
  });
  std::vector<Coeff> coeffs;
  std::vector<Exponent> exps;
  coeffs.reserve(count);
  exps.reserve(count * stride_);
  const auto& F = field();
  for (std::size_t k = 0; k < count;) {
    Coeff c = 0;
    std::size_t j = k;
    while (j < count && ring_->compare(raw(idx[j]), raw(idx[k])) == 0) c = F.add(c, coeffs_[idx[j++]]);
    if (c != 0) {
      coeffs.push_back(c);
      exps.insert(exps.end(), raw(idx[k]), raw(idx[k]) + stride_);
    }
    k = j;
  }
  coeffs_ = std::move(coeffs);
  exps_ = std::move(exps);
}

int Polynomial::total_degree() const noexcept {
  int deg = -1;
  for (std::size_t k = 0; k < size(); ++k) deg = std::max<int>(deg, term_degree(k));
  return deg;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (std::size_t k = 1; k < size(); ++k)
    if (term_degree(k) != term_degree(0)) return false;
  return true;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
  unsigned deg = 0;
  for (std::size_t k = 0; k < size(); ++k) deg = std::max<unsigned>(deg, raw(k)[var + 1]);
  return deg;
}

Coeff Polynomial::coefficient_of(const Monomial& exponents) const {
  if (exponents.size() != ring_->nvars()) throw RingMismatch("monomial length does not match the ring");
  for (std::size_t k = 0; k < size(); ++k)
    if (std::equal(exponents.begin(), exponents.end(), raw(k) + 1)) return coeffs_[k];
  return 0;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!same_ring(*ring_, *other.ring_)) throw RingMismatch("polynomials belong to different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = field().neg(c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_ring(other);
  std::vector<Exponent> unit(stride_, 0);
  sub_mul_term(field().neg(1), unit.data(), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_ring(other);
  std::vector<Exponent> unit(stride_, 0);
  sub_mul_term(1, unit.data(), other);
  return *this;
}

void Polynomial::sub_mul_term(Coeff c, const Exponent* m, const Polynomial& g) {
  if (c == 0 || g.is_zero()) return;
  const auto& F = field();
  const Coeff nc = F.neg(c);
  if (static_cast<unsigned>(m[0]) + g.term_degree(0) > kMaxDegree)
    throw UnsupportedError("monomial degree exceeds the supported range");

  auto& out_c = scratch_coeffs;
  auto& out_e = scratch_exps;
  out_c.clear();
  out_e.clear();
  out_c.reserve(size() + g.size());
  out_e.reserve((size() + g.size()) * stride_);

  std::vector<Exponent> shifted(stride_);
  auto load = [&](std::size_t j) {
    const Exponent* src = g.raw(j);
    for (std::size_t s = 0; s < stride_; ++s) shifted[s] = static_cast<Exponent>(src[s] + m[s]);
  };

  std::size_t i = 0, j = 0;
  const std::size_t ni = size(), nj = g.size();
  if (nj) load(0);
  while (i < ni && j < nj) {
    int cmp = ring_->compare(raw(i), shifted.data());
    if (cmp > 0) {
      out_c.push_back(coeffs_[i]);
      out_e.insert(out_e.end(), raw(i), raw(i) + stride_);
      ++i;
    } else if (cmp < 0) {
      out_c.push_back(F.mul(nc, g.coeffs_[j]));
      out_e.insert(out_e.end(), shifted.begin(), shifted.end());
      if (++j < nj) load(j);
    } else {
      Coeff v = F.add(coeffs_[i], F.mul(nc, g.coeffs_[j]));
      if (v != 0) {
        out_c.push_back(v);
        out_e.insert(out_e.end(), raw(i), raw(i) + stride_);
      }
      ++i;
      if (++j < nj) load(j);
    }
  }
  for (; i < ni; ++i) {
    out_c.push_back(coeffs_[i]);
    out_e.insert(out_e.end(), raw(i), raw(i) + stride_);
  }
  while (j < nj) {
    out_c.push_back(F.mul(nc, g.coeffs_[j]));
    out_e.insert(out_e.end(), shifted.begin(), shifted.end());
    if (++j < nj) load(j);
  }
  coeffs_.swap(out_c);
  exps_.swap(out_e);
}

Polynomial Polynomial::scaled(Coeff c) const {
  c = field().reduce(c);
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& v : r.coeffs_) v = field().mul(v, c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(field().inverse(leading_coeff()));
}

Polynomial Polynomial::mul_term(Coeff c, const Exponent* m) const {
  Polynomial r(ring_);
  if (c == 0 || is_zero()) return r;
  if (static_cast<unsigned>(m[0]) + term_degree(0) > kMaxDegree)
    throw UnsupportedError("monomial degree exceeds the supported range");
  r.coeffs_.resize(size());
  r.exps_.resize(exps_.size());
  for (std::size_t k = 0; k < size(); ++k) {
    r.coeffs_[k] = field().mul(coeffs_[k], c);
    for (std::size_t s = 0; s < stride_; ++s)
      r.exps_[k * stride_ + s] = static_cast<Exponent>(exps_[k * stride_ + s] + m[s]);
  }
  return r;
}

namespace {

// Product of terms [lo, hi) of a with all of b, by divide and conquer so each
// merge combines lists of comparable length.
Polynomial mul_range(const Polynomial& a, std::size_t lo, std::size_t hi, const Polynomial& b) {
  if (hi - lo == 1) return b.mul_term(a.coeff(lo), a.raw(lo));
  std::size_t mid = lo + (hi - lo) / 2;
  Polynomial left = mul_range(a, lo, mid, b);
  left += mul_range(a, mid, hi, b);
  return left;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  return mul_range(small, 0, small.size(), large);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (same_ring(*ring_, *target)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  if (!(ring_->field() == target->field())) throw RingMismatch("coefficient fields differ");
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(ring_->nvars(), kAbsent);
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    auto idx = target->index_of(ring_->names()[v]);
    if (idx)
      map[v] = *idx;
    else if (involves(v))
      throw RingMismatch("variable '" + ring_->names()[v] + "' is missing from the target ring");
  }
  Polynomial r(target);
  r.coeffs_ = coeffs_;
  r.exps_.assign(size() * r.stride_, 0);
  for (std::size_t k = 0; k < size(); ++k) {
    Exponent* dst = r.exps_.data() + k * r.stride_;
    dst[0] = raw(k)[0];
    for (std::size_t v = 0; v < ring_->nvars(); ++v)
      if (map[v] != kAbsent) dst[map[v] + 1] = raw(k)[v + 1];
  }
  r.sort_and_combine();
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  const auto& names = ring_->names();
  for (std::size_t k = 0; k < size(); ++k) {
    std::int64_t c = field().symmetric(coeffs_[k]);
    bool negative = c < 0;
    std::int64_t mag = negative ? -c : c;
    if (k == 0)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    bool first_factor = true;
    if (mag != 1 || term_degree(k) == 0) {
      out << mag;
      first_factor = false;
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      Exponent e = raw(k)[v + 1];
      if (e == 0) continue;
      if (!first_factor) out << '*';
      out << names[v];
      if (e > 1) out << '^' << e;
      first_factor = false;
    }
  }
  return out.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(*a.ring_, *b.ring_) && a.coeffs_ == b.coeffs_ && a.exps_ == b.exps_;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t var) {
  if (var >= f.ring()->nvars()) throw UnsupportedError("variable index out of range");
  const auto& F = f.field();
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    Exponent e = f.raw(k)[var + 1];
    if (e == 0) continue;
    Coeff c = F.mul(f.coeff(k), F.reduce(e));
    if (c == 0) continue;
    Monomial m = f.monomial_at(k);
    --m[var];
    terms.emplace_back(std::move(m), c);
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
  if (images.size() != f.ring()->nvars()) throw RingMismatch("substitution needs one image per variable");
  if (images.empty()) throw RingMismatch("substitution into an empty ring");
  const RingPtr& target = images.front().ring();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Polynomial result(target);
  for (std::size_t k = 0; k < f.size(); ++k) {
    Polynomial term = Polynomial::constant(target, f.coeff(k));
    for (std::size_t v = 0; v < images.size(); ++v) {
      Exponent e = f.raw(k)[v + 1];
      if (e) term = term * power(v, e);
    }
    result += term;
  }
  return result;
}

bool divides(const Exponent* a, const Exponent* b, std::size_t stride) noexcept {
  if (a[0] > b[0]) return false;
  for (std::size_t s = 1; s < stride; ++s)
    if (a[s] > b[s]) return false;
  return true;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
  if (!same_ring(*f.ring(), *g.ring())) throw RingMismatch("polynomials belong to different rings");
  const auto& F = f.field();
  const std::size_t stride = f.stride();
  const Coeff inv_lc = F.inverse(g.leading_coeff());
  Polynomial remainder = f;
  std::vector<std::pair<Monomial, Coeff>> quotient;
  std::vector<Exponent> m(stride);
  while (!remainder.is_zero()) {
    if (!divides(g.leading_raw(), remainder.leading_raw(), stride))
      throw InternalError("exact division failed: " + g.to_string() + " does not divide " + f.to_string());
    for (std::size_t s = 0; s < stride; ++s)
      m[s] = static_cast<Exponent>(remainder.leading_raw()[s] - g.leading_raw()[s]);
    Coeff c = F.mul(remainder.leading_coeff(), inv_lc);
    quotient.emplace_back(Monomial(m.begin() + 1, m.end()), c);
    remainder.sub_mul_term(c, m.data(), g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

}  // namespace charclass
