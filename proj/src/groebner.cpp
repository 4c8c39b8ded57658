#include "charclass/groebner.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace charclass {

namespace {

// One bit per variable (folded mod 64): a cheap necessary condition for divisibility.
using DivMask = std::uint64_t;

DivMask mask_of(const Exponent* m, std::size_t stride) noexcept {
  DivMask mask = 0;
  for (std::size_t s = 1; s < stride; ++s)
    if (m[s]) mask |= DivMask{1} << ((s - 1) & 63);
  return mask;
}

void lcm_of(const Exponent* a, const Exponent* b, Exponent* out, std::size_t stride) noexcept {
  unsigned deg = 0;
  for (std::size_t s = 1; s < stride; ++s) {
    out[s] = std::max(a[s], b[s]);
    deg += out[s];
  }
  out[0] = static_cast<Exponent>(deg);
}

bool coprime(const Exponent* a, const Exponent* b, std::size_t stride) noexcept {
  for (std::size_t s = 1; s < stride; ++s)
    if (a[s] && b[s]) return false;
  return true;
}

void quotient_of(const Exponent* num, const Exponent* den, Exponent* out, std::size_t stride) noexcept {
  for (std::size_t s = 0; s < stride; ++s) out[s] = static_cast<Exponent>(num[s] - den[s]);
}

// Sum of polynomials kept in buckets of geometrically growing capacity, so
// adding a short reducer does not re-merge a long dividend. Leading terms are
// popped in decreasing order.
class GeoBucket {
 public:
  explicit GeoBucket(const Ring& ring)
      : ring_(ring), field_(ring.field()), stride_(ring.nvars() + 1), unit_(stride_, 0) {}

  // this += c * m * (terms from..end of g); m null means the unit monomial.
  void add(Coeff c, const Exponent* m, const Polynomial& g, std::size_t from = 0) {
    if (c == 0 || from >= g.size()) return;
    if (!m) m = unit_.data();
    if (static_cast<unsigned>(m[0]) + g.term_degree(from) > std::numeric_limits<Exponent>::max())
      throw UnsupportedError("monomial degree exceeds the supported range");
    const std::size_t n = g.size() - from;
    std::size_t k = 0;
    while (capacity(k) < n) ++k;
    slot(k);
    merge(buckets_[k], g.raw(from), n, c, m, [&](std::size_t j) { return g.coeff(from + j); });
    carry(k);
  }

  // Removes the leading term into (c, mono); false once the sum is zero.
  bool pop(Coeff& c, Exponent* mono) {
    for (;;) {
      int best = -1;
      for (std::size_t k = 0; k < buckets_.size(); ++k) {
        if (buckets_[k].empty()) continue;
        if (best < 0 || ring_.compare(buckets_[k].head(stride_), buckets_[best].head(stride_)) > 0)
          best = static_cast<int>(k);
      }
      if (best < 0) return false;
      std::copy_n(buckets_[best].head(stride_), stride_, mono);
      Coeff sum = 0;
      for (auto& b : buckets_) {
        if (b.empty() || !std::equal(mono, mono + stride_, b.head(stride_))) continue;
        sum = field_.add(sum, b.c[b.start]);
        ++b.start;
      }
      if (sum != 0) {
        c = sum;
        return true;
      }
    }
  }

 private:
  struct Bucket {
    std::vector<Coeff> c;
    std::vector<Exponent> e;
    std::size_t start = 0;
    std::size_t size() const noexcept { return c.size() - start; }
    bool empty() const noexcept { return start == c.size(); }
    const Exponent* head(std::size_t stride) const noexcept { return e.data() + start * stride; }
    void clear() noexcept {
      c.clear();
      e.clear();
      start = 0;
    }
  };

  static std::size_t capacity(std::size_t k) noexcept { return std::size_t{8} << (2 * k); }

  void slot(std::size_t k) {
    if (buckets_.size() <= k) buckets_.resize(k + 1);
  }

  // dst += mult * shift * source, where source has n terms starting at exps.
  template <class CoeffAt>
  void merge(Bucket& dst, const Exponent* exps, std::size_t n, Coeff mult, const Exponent* shift,
             CoeffAt coeff_at) {
    out_c_.clear();
    out_e_.clear();
    out_c_.reserve(dst.size() + n);
    out_e_.reserve((dst.size() + n) * stride_);
    std::vector<Exponent>& cur = shifted_;
    cur.resize(stride_);
    auto load = [&](std::size_t j) {
      const Exponent* src = exps + j * stride_;
      for (std::size_t s = 0; s < stride_; ++s) cur[s] = static_cast<Exponent>(src[s] + shift[s]);
    };
    std::size_t i = dst.start, j = 0;
    const std::size_t ni = dst.c.size();
    if (n) load(0);
    auto keep_dst = [&] {
      out_c_.push_back(dst.c[i]);
      out_e_.insert(out_e_.end(), dst.e.begin() + i * stride_, dst.e.begin() + (i + 1) * stride_);
      ++i;
    };
    auto keep_src = [&] {
      out_c_.push_back(field_.mul(mult, coeff_at(j)));
      out_e_.insert(out_e_.end(), cur.begin(), cur.end());
      if (++j < n) load(j);
    };
    while (i < ni && j < n) {
      const int cmp = ring_.compare(dst.e.data() + i * stride_, cur.data());
      if (cmp > 0) {
        keep_dst();
      } else if (cmp < 0) {
        keep_src();
      } else {
        const Coeff v = field_.add(dst.c[i], field_.mul(mult, coeff_at(j)));
        if (v != 0) {
          out_c_.push_back(v);
          out_e_.insert(out_e_.end(), cur.begin(), cur.end());
        }
        ++i;
        if (++j < n) load(j);
      }
    }
    while (i < ni) keep_dst();
    while (j < n) keep_src();
    dst.c.swap(out_c_);
    dst.e.swap(out_e_);
    dst.start = 0;
  }

  // Pushes overfull buckets upward.
  void carry(std::size_t k) {
    while (buckets_[k].size() > capacity(k)) {
      slot(k + 1);
      Bucket& lo = buckets_[k];
      const std::size_t off = lo.start;
      merge(buckets_[k + 1], lo.e.data() + off * stride_, lo.size(), 1, unit_.data(),
            [&](std::size_t j) { return lo.c[off + j]; });
      buckets_[k].clear();
      ++k;
    }
  }

  const Ring& ring_;
  const PrimeField& field_;
  std::size_t stride_;
  std::vector<Exponent> unit_;
  std::vector<Exponent> shifted_;
  std::vector<Coeff> out_c_;
  std::vector<Exponent> out_e_;
  std::vector<Bucket> buckets_;
};

// Drains `acc` into a fully reduced polynomial, appended after the terms
// already in (rc, re). `find` maps a monomial to a reducer or null.
template <class Find>
Polynomial reduce_bucket(const RingPtr& ring, GeoBucket& acc, Find&& find, std::vector<Coeff> rc = {},
                         std::vector<Exponent> re = {}) {
  const PrimeField& F = ring->field();
  const std::size_t stride = ring->nvars() + 1;
  std::vector<Exponent> mono(stride), shift(stride);
  Coeff c = 0;
  while (acc.pop(c, mono.data())) {
    const Polynomial* r = find(mono.data());
    if (!r) {
      rc.push_back(c);
      re.insert(re.end(), mono.begin(), mono.end());
      continue;
    }
    quotient_of(mono.data(), r->leading_raw(), shift.data(), stride);
    const Coeff lc = r->leading_coeff();
    const Coeff q = lc == 1 ? c : F.mul(c, F.inverse(lc));
    acc.add(F.neg(q), shift.data(), *r, 1);
  }
  return Polynomial::from_sorted(ring, std::move(rc), std::move(re));
}

struct Element {
  Polynomial poly;
  DivMask mask;
  unsigned sugar;
};

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  std::vector<Exponent> lcm;
  DivMask lcm_mask;
  unsigned sugar;
};

class BuchbergerEngine {
 public:
  BuchbergerEngine(RingPtr ring, const GroebnerOptions& options)
      : ring_(std::move(ring)), stride_(ring_->nvars() + 1), field_(ring_->field()), options_(options) {}

  GroebnerBasis run(std::vector<Polynomial> gens) {
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    if (gens.empty()) return GroebnerBasis(ring_, {}, true);
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.total_degree() < b.total_degree();
    });

    for (auto& g : gens) {
      const unsigned sugar = static_cast<unsigned>(g.total_degree());
      Polynomial h = reduce(g);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis();
      insert(h.monic(), sugar);
    }

    while (!pairs_.empty()) {
      if (options_.deadline) options_.deadline->check();
      CriticalPair pair = take_next_pair();
      Polynomial h = reduced_s_polynomial(pair);
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit_basis();
      insert(h.monic(), pair.sugar);
    }
    return finish();
  }

 private:
  GroebnerBasis unit_basis() const { return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, true); }

  const Element* find_reducer(const Exponent* m) const noexcept {
    const DivMask mask = mask_of(m, stride_);
    for (std::size_t idx : active_) {
      const Element& e = elements_[idx];
      if ((e.mask & ~mask) == 0 && divides(e.poly.leading_raw(), m, stride_)) return &e;
    }
    return nullptr;
  }

  Polynomial reduce(const Polynomial& f) const {
    GeoBucket acc(*ring_);
    acc.add(1, nullptr, f);
    return reduce_with(acc);
  }

  Polynomial reduce_with(GeoBucket& acc) const {
    return reduce_bucket(ring_, acc, [this](const Exponent* m) -> const Polynomial* {
      const Element* e = find_reducer(m);
      return e ? &e->poly : nullptr;
    });
  }

  // Basis elements are monic, so the leading terms of the two multiples cancel.
  Polynomial reduced_s_polynomial(const CriticalPair& pair) const {
    const Polynomial& a = elements_[pair.i].poly;
    const Polynomial& b = elements_[pair.j].poly;
    std::vector<Exponent> ma(stride_), mb(stride_);
    quotient_of(pair.lcm.data(), a.leading_raw(), ma.data(), stride_);
    quotient_of(pair.lcm.data(), b.leading_raw(), mb.data(), stride_);
    GeoBucket acc(*ring_);
    acc.add(1, ma.data(), a, 1);
    acc.add(field_.neg(1), mb.data(), b, 1);
    return reduce_with(acc);
  }

  CriticalPair make_pair(std::size_t i, std::size_t j) const {
    CriticalPair p{i, j, std::vector<Exponent>(stride_), 0, 0};
    const Element& a = elements_[i];
    const Element& b = elements_[j];
    lcm_of(a.poly.leading_raw(), b.poly.leading_raw(), p.lcm.data(), stride_);
    p.lcm_mask = mask_of(p.lcm.data(), stride_);
    const unsigned lcm_deg = p.lcm[0];
    p.sugar = std::max(a.sugar + lcm_deg - a.poly.term_degree(0), b.sugar + lcm_deg - b.poly.term_degree(0));
    return p;
  }

  bool lcm_divides(const CriticalPair& a, const CriticalPair& b) const noexcept {
    return (a.lcm_mask & ~b.lcm_mask) == 0 && divides(a.lcm.data(), b.lcm.data(), stride_);
  }

  CriticalPair take_next_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& p = pairs_[k];
      const auto& q = pairs_[best];
      if (p.sugar < q.sugar || (p.sugar == q.sugar && ring_->compare(p.lcm.data(), q.lcm.data()) < 0)) best = k;
    }
    CriticalPair pair = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return pair;
  }

  // Gebauer-Moeller update: product criterion, chain criterion on the new
  // pairs, and pruning of old pairs made redundant by the new element.
  void insert(Polynomial h, unsigned sugar) {
    const std::size_t hi = elements_.size();
    const DivMask hmask = mask_of(h.leading_raw(), stride_);
    elements_.push_back(Element{std::move(h), hmask, sugar});
    const Exponent* hlm = elements_[hi].poly.leading_raw();

    std::vector<CriticalPair> candidates;
    candidates.reserve(active_.size());
    for (std::size_t g : active_) candidates.push_back(make_pair(g, hi));

    std::vector<CriticalPair> kept;
    while (!candidates.empty()) {
      CriticalPair p = std::move(candidates.back());
      candidates.pop_back();
      const bool disjoint = coprime(hlm, elements_[p.i].poly.leading_raw(), stride_);
      bool dominated = false;
      if (!disjoint) {
        for (const auto& q : candidates)
          if (lcm_divides(q, p)) {
            dominated = true;
            break;
          }
        if (!dominated)
          for (const auto& q : kept)
            if (lcm_divides(q, p)) {
              dominated = true;
              break;
            }
      }
      if (disjoint || !dominated) kept.push_back(std::move(p));
    }

    std::vector<Exponent> tmp(stride_);
    std::erase_if(pairs_, [&](const CriticalPair& p) {
      if ((hmask & ~p.lcm_mask) != 0 || !divides(hlm, p.lcm.data(), stride_)) return false;
      lcm_of(elements_[p.i].poly.leading_raw(), hlm, tmp.data(), stride_);
      if (std::equal(tmp.begin(), tmp.end(), p.lcm.begin())) return false;
      lcm_of(elements_[p.j].poly.leading_raw(), hlm, tmp.data(), stride_);
      if (std::equal(tmp.begin(), tmp.end(), p.lcm.begin())) return false;
      return true;
    });

    for (auto& p : kept)
      if (!coprime(hlm, elements_[p.i].poly.leading_raw(), stride_)) pairs_.push_back(std::move(p));

    std::erase_if(active_, [&](std::size_t g) {
      const Element& e = elements_[g];
      return (hmask & ~e.mask) == 0 && divides(hlm, e.poly.leading_raw(), stride_);
    });
    active_.push_back(hi);
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> basis;
    basis.reserve(active_.size());
    for (std::size_t idx : active_) basis.push_back(elements_[idx].poly);
    // Inter-reduce tails against the (minimal) set of leading terms.
    std::vector<Polynomial> reduced;
    reduced.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Polynomial& f = basis[k];
      GeoBucket acc(*ring_);
      acc.add(1, nullptr, f, 1);
      auto find = [&](const Exponent* m) -> const Polynomial* {
        for (std::size_t other = 0; other < basis.size(); ++other)
          if (other != k && divides(basis[other].leading_raw(), m, stride_)) return &basis[other];
        return nullptr;
      };
      std::vector<Coeff> rc{f.leading_coeff()};
      std::vector<Exponent> re(f.leading_raw(), f.leading_raw() + stride_);
      reduced.push_back(reduce_bucket(ring_, acc, find, std::move(rc), std::move(re)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_raw(), b.leading_raw()) < 0;
    });
    return GroebnerBasis(ring_, std::move(reduced), true);
  }

  RingPtr ring_;
  std::size_t stride_;
  const PrimeField& field_;
  const GroebnerOptions& options_;
  std::vector<Element> elements_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
};

RingPtr common_ring(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!same_ring(*g.ring(), *gens.front().ring())) throw RingMismatch("generators belong to different rings");
  return gens.front().ring();
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring, const GroebnerOptions& options) {
  for (const auto& g : gens)
    if (!same_ring(*g.ring(), *ring)) throw RingMismatch("generators belong to different rings");
  return BuchbergerEngine(ring, options).run(gens);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& options) {
  if (gens.empty()) throw RingMismatch("buchberger needs a ring; pass one explicitly for empty input");
  return buchberger(gens, common_ring(gens), options);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw RingMismatch("buchberger needs a ring; pass one explicitly for empty input");
  RingPtr target = common_ring(gens)->with_order(order);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.in_ring(target));
  return buchberger(moved, target, options);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!same_ring(*f.ring(), *basis.ring())) throw RingMismatch("normal_form: polynomial and basis rings differ");
  const std::size_t stride = f.stride();
  GeoBucket acc(*f.ring());
  acc.add(1, nullptr, f);
  return reduce_bucket(f.ring(), acc, [&](const Exponent* m) -> const Polynomial* {
    for (const auto& g : basis.elements())
      if (divides(g.leading_raw(), m, stride)) return &g;
    return nullptr;
  });
}

bool is_zero_dimensional(const GroebnerBasis& basis) {
  if (basis.is_unit()) return true;
  const std::size_t n = basis.ring()->nvars();
  std::vector<bool> seen(n, false);
  for (const auto& g : basis.elements()) {
    const Exponent* lm = g.leading_raw();
    std::size_t nonzero = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (lm[v + 1]) {
        ++nonzero;
        var = v;
      }
    if (nonzero == 1) seen[var] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::uint64_t quotient_dimension(const GroebnerBasis& basis) {
  if (!is_zero_dimensional(basis)) throw DimensionError("quotient ring is not finite dimensional");
  if (basis.is_unit()) return 0;
  const std::size_t n = basis.ring()->nvars();
  const std::size_t stride = n + 1;
  std::vector<std::vector<Exponent>> leads;
  for (const auto& g : basis.elements()) leads.emplace_back(g.leading_raw(), g.leading_raw() + stride);

  std::vector<Exponent> m(stride, 0);
  std::uint64_t count = 1;  // the monomial 1
  // Each standard monomial is reached once, by raising variables in
  // non-decreasing index order; standard monomials form an order ideal.
  std::function<void(std::size_t)> walk = [&](std::size_t first) {
    for (std::size_t v = first; v < n; ++v) {
      ++m[v + 1];
      ++m[0];
      bool standard = std::none_of(leads.begin(), leads.end(),
                                   [&](const std::vector<Exponent>& lm) { return divides(lm.data(), m.data(), stride); });
      if (standard) {
        ++count;
        walk(v);
      }
      --m[v + 1];
      --m[0];
    }
  };
  walk(0);
  return count;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& front_vars,
                                  const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const RingPtr& ring = common_ring(gens);
  std::vector<bool> front(ring->nvars(), false);
  for (std::size_t v : front_vars) {
    if (v >= front.size()) throw UnsupportedError("eliminate: variable index out of range");
    front[v] = true;
  }
  if (std::find(front.begin(), front.end(), true) == front.end()) {
    auto basis = buchberger(gens, ring, options);
    return basis.elements();
  }
  GroebnerBasis basis = buchberger(gens, MonomialOrder::block(front), options);
  std::vector<Polynomial> out;
  for (const auto& g : basis.elements()) {
    bool free = std::none_of(front_vars.begin(), front_vars.end(), [&](std::size_t v) { return g.involves(v); });
    if (free) out.push_back(g.in_ring(ring));
  }
  return out;
}

Polynomial lcm_poly(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(*f.ring(), *g.ring())) throw RingMismatch("lcm_poly: rings differ");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  if (f.is_constant()) return g.monic();
  if (g.is_constant()) return f.monic();
  const RingPtr& ring = f.ring();
  std::string name = "t";
  while (ring->index_of(name)) name += "_";
  RingPtr extended = ring->with_variable(name);
  const std::size_t t = extended->nvars() - 1;
  Polynomial tvar = Polynomial::variable(extended, t);
  Polynomial one = Polynomial::constant(extended, 1);
  std::vector<Polynomial> gens{tvar * f.in_ring(extended), (one - tvar) * g.in_ring(extended)};
  auto inter = eliminate(gens, {t});
  if (inter.size() != 1) throw InternalError("intersection of principal ideals is not principal");
  return inter.front().in_ring(ring).monic();
}

Polynomial gcd_poly(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(*f.ring(), *g.ring())) throw RingMismatch("gcd_poly: rings differ");
  if (f.is_zero() && g.is_zero()) throw UnsupportedError("gcd of two zero polynomials");
  if (g.is_zero()) return f.monic();
  if (f.is_zero()) return g.monic();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), 1);
  if (f.monic() == g.monic()) return f.monic();
  Polynomial lcm = lcm_poly(f, g);
  return exact_divide(f * g, lcm).monic();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw UnsupportedError("squarefree part of the zero polynomial");
  if (!f.is_homogeneous()) throw UnsupportedError("squarefree_part needs a homogeneous polynomial");
  const auto p = f.field().characteristic();
  if (static_cast<std::uint64_t>(f.total_degree()) >= p)
    throw UnsupportedError("degree " + std::to_string(f.total_degree()) + " is not below the characteristic " +
                           std::to_string(p) + "; choose a larger prime");
  Polynomial current = f.monic();
  for (;;) {
    if (current.is_constant()) return current;
    Polynomial common = current;
    for (std::size_t v = 0; v < current.ring()->nvars() && !common.is_constant(); ++v) {
      Polynomial df = partial_derivative(current, v);
      if (!df.is_zero()) common = gcd_poly(common, df);
    }
    if (common.is_constant()) return current;
    current = exact_divide(current, common).monic();
  }
}

}  // namespace charclass
