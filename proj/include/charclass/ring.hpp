#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charclass/field.hpp"

namespace charclass {

using Exponent = std::uint16_t;
using Monomial = std::vector<Exponent>;

// Graded reverse lexicographic order, or a two-block elimination order with
// grevlex inside each block. In a block order every monomial that involves a
// front variable is larger than every monomial in back variables only.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder{}; }
  static MonomialOrder block(std::vector<bool> front);

  bool is_block() const noexcept { return !front_.empty(); }
  const std::vector<bool>& front() const noexcept { return front_; }
  bool is_front(std::size_t var) const noexcept { return var < front_.size() && front_[var]; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<bool> front_;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable names, coefficient field and monomial order of a polynomial ring.
// Rings are shared immutable values; polynomials hold a RingPtr.
class Ring {
 public:
  static RingPtr make(std::vector<std::string> names, PrimeField field = PrimeField{},
                      MonomialOrder order = MonomialOrder::grevlex());
  // x0..x{count-1}
  static RingPtr standard(std::size_t count, PrimeField field = PrimeField{}, const std::string& prefix = "x");

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const PrimeField& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  RingPtr with_order(MonomialOrder order) const;
  // Same variables plus `name` as the last (smallest) variable.
  RingPtr with_variable(const std::string& name) const;

  // Compare two stored monomials (slot 0 holds the total degree, slots 1..n the
  // exponents). Returns <0, 0, >0.
  int compare(const Exponent* a, const Exponent* b) const noexcept {
    return order_.is_block() ? compare_block(a, b) : compare_grevlex(a, b);
  }

  friend bool same_ring(const Ring& a, const Ring& b) noexcept {
    return &a == &b || (a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_);
  }

 private:
  Ring(std::vector<std::string> names, PrimeField field, MonomialOrder order)
      : names_(std::move(names)), field_(field), order_(std::move(order)) {}

  int compare_grevlex(const Exponent* a, const Exponent* b) const noexcept {
    if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
    for (std::size_t i = names_.size(); i >= 1; --i)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }
  int compare_block(const Exponent* a, const Exponent* b) const noexcept;

  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
};

}  // namespace charclass
