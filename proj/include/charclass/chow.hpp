#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charclass/errors.hpp"

namespace charclass {

using BigInt = boost::multiprecision::cpp_int;

// An element of A_*(P^n) = Z[h]/(h^{n+1}), stored as c_0..c_n (c_i multiplies h^i).
class ChowClass {
 public:
  explicit ChowClass(std::size_t n) : coeffs_(n + 1) {}
  // Missing high coefficients are zero; more than n+1 coefficients is an error.
  ChowClass(std::size_t n, std::vector<BigInt> coeffs);
  ChowClass(std::size_t n, std::initializer_list<std::int64_t> coeffs);

  static ChowClass one(std::size_t n) { return ChowClass(n, {1}); }
  static ChowClass h_power(std::size_t n, std::size_t k);
  // 1 + a*h
  static ChowClass linear(std::size_t n, const BigInt& a);

  std::size_t n() const noexcept { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(const BigInt& k, ChowClass a);
  ChowClass operator-() const;
  // Multiply by h^k.
  ChowClass shifted(std::size_t k) const;
  ChowClass pow(unsigned e) const;

  // "16*h^2 - 128*h^3 + 768*h^4"; zero terms omitted, "0" for the zero class.
  std::string to_string() const;

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

ChowClass chow_mul(const ChowClass& a, const ChowClass& b);
// b with a*b = c_0^2 when c_0 = +-1. Throws UnsupportedError otherwise.
ChowClass chow_unit_inverse(const ChowClass& a);
// Degree of the zero-dimensional part: the coefficient of h^n.
BigInt integral(const ChowClass& a);

// Projective degrees (g_0..g_n) of a rational map from P^n.
struct ProjectiveDegrees {
  std::vector<BigInt> g;

  ProjectiveDegrees() = default;
  explicit ProjectiveDegrees(std::vector<BigInt> values) : g(std::move(values)) {}
  ProjectiveDegrees(std::initializer_list<std::int64_t> values);

  std::size_t n() const noexcept { return g.empty() ? 0 : g.size() - 1; }
  // g_0 = 1 and g_i >= 0.
  bool valid() const;

  friend bool operator==(const ProjectiveDegrees&, const ProjectiveDegrees&) = default;
};

BigInt binomial(unsigned n, unsigned k);
BigInt int_pow(const BigInt& base, unsigned e);

// Codimension read off a degree list of a map of degree d: the first j with
// g_j != d^j, or n+1 when there is none (empty base scheme).
std::size_t codim_from_degrees(const ProjectiveDegrees& g, unsigned d);

// s(V, P^n) = 1 - sum_i g_i h^i / (1 + d h)^{i+1}
ChowClass segre_from_degrees(const ProjectiveDegrees& g, unsigned d);

// Segre coefficients via the residual-degree recurrence with deg(R_j) = g_j:
// s_p = d^j - g_j - sum_{i<p} C(j, p-i) d^{p-i} s_i, j = codim + p,
// where s_p multiplies h^{codim+p}.
ChowClass ejp_segre_from_degrees(const ProjectiveDegrees& g, unsigned d, std::size_t codim);

// Inverse of segre_from_degrees: g_j = sum_i C(j,i) d^{j-i} s~_i with s~_0 = 1
// and s~_i = -[h^i] s.
ProjectiveDegrees g_from_segre(const ChowClass& s, unsigned d, std::size_t codim);

// c_SM of a hypersurface from the projective degrees of its polar map:
// (1+h)^{n+1} - sum_j g_j (-h)^j (1+h)^{n-j}.
ChowClass csm_from_polar_degrees(const ProjectiveDegrees& g);

// c_SM of a degree-d hypersurface V from the Segre class of its singularity
// subscheme Y:
//   c(TP^n) cap ( s(V) + sum_m sum_j C(n-m, j) (-V)^j (-1)^{n-m-j} s_{m+j}(Y) ),
// with [V] = d h, s(V) = d h / (1 + d h), and s_k(Y) the dimension-k piece of
// sY (the coefficient of h^{n-k}).
ChowClass csm_from_singularity_segre(const ChowClass& sY, unsigned d);

// c_SM of a smooth complete intersection of the given degrees:
// (1+h)^{n+1} prod_i d_i h / (1 + d_i h).
ChowClass suwa_ci_csm(const std::vector<unsigned>& degrees, std::size_t n);

// p(t) -> (t p(-t-1) + p(0)) / (t+1), on coefficient lists p_0..p_k.
std::vector<BigInt> involution_polynomial(const std::vector<BigInt>& p);

// Euler characteristics (chi(V), chi(V cap L_1), ...) of general linear
// sections, from c_SM(V) read as p(t) = sum_k c_{n-k} t^k. Trailing zero
// entries are trimmed (one entry is always kept).
std::vector<BigInt> aluffi_involution(const ChowClass& csm);

}  // namespace charclass
