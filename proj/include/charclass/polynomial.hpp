#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "charclass/ring.hpp"

namespace charclass {

// Sparse polynomial over GF(p). Terms are kept sorted by the ring's monomial
// order, largest first, with nonzero coefficients and distinct monomials.
//
// Storage is flat: term k owns coeffs_[k] and exps_[k * stride .. (k+1) * stride),
// where slot 0 is the total degree and slots 1..nvars are the exponents.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& exponents, Coeff c = 1);
  // Sums duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, Coeff>> terms);
  // Adopts flat arrays that already satisfy the class invariant (sorted,
  // distinct monomials, nonzero reduced coefficients). Not checked.
  static Polynomial from_sorted(RingPtr ring, std::vector<Coeff> coeffs, std::vector<Exponent> exps);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  std::size_t stride() const noexcept { return stride_; }

  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return is_zero() || (size() == 1 && exps_[0] == 0); }

  Coeff coeff(std::size_t k) const noexcept { return coeffs_[k]; }
  // Stored monomial (degree slot + exponents) of term k.
  const Exponent* raw(std::size_t k) const noexcept { return exps_.data() + k * stride_; }
  std::span<const Exponent> exponents(std::size_t k) const noexcept {
    return {raw(k) + 1, stride_ - 1};
  }
  unsigned term_degree(std::size_t k) const noexcept { return raw(k)[0]; }
  Monomial monomial_at(std::size_t k) const { return Monomial(raw(k) + 1, raw(k) + stride_); }

  Coeff leading_coeff() const noexcept { return coeffs_.front(); }
  const Exponent* leading_raw() const noexcept { return exps_.data(); }

  // -1 for the zero polynomial.
  int total_degree() const noexcept;
  bool is_homogeneous() const noexcept;
  // Highest power of variable `var` occurring in any term.
  unsigned degree_in(std::size_t var) const noexcept;
  bool involves(std::size_t var) const noexcept { return degree_in(var) > 0; }
  Coeff coefficient_of(const Monomial& exponents) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(Coeff c) const;
  // Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  // c * m * this, where m is a stored monomial (degree slot included).
  Polynomial mul_term(Coeff c, const Exponent* m) const;
  Polynomial pow(unsigned e) const;

  // this -= c * m * g, in place. Used by reductions.
  void sub_mul_term(Coeff c, const Exponent* m, const Polynomial& g);

  // Re-express over `target`, matching variables by name. Variables missing
  // from `target` must not occur in this polynomial.
  Polynomial in_ring(const RingPtr& target) const;

  // Human form with coefficients in the symmetric range, e.g. "4*x1*x2 - x0^3".
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_same_ring(const Polynomial& other) const;
  void sort_and_combine();

  RingPtr ring_;
  std::size_t stride_;
  std::vector<Coeff> coeffs_;
  std::vector<Exponent> exps_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// Replaces every variable x_j by images[j] (all images in one target ring).
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

// Exact division f / g. Throws InternalError if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Exponent-vector helpers on stored monomials (degree slot + exponents).
bool divides(const Exponent* a, const Exponent* b, std::size_t stride) noexcept;

}  // namespace charclass
