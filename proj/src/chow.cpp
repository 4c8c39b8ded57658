#include "charclass/chow.hpp"

#include <sstream>

namespace charclass {

ChowClass::ChowClass(std::size_t n, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > n + 1) throw UnsupportedError("class has more than n+1 coefficients");
  coeffs_.resize(n + 1);
}

ChowClass::ChowClass(std::size_t n, std::initializer_list<std::int64_t> coeffs)
    : ChowClass(n, std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

ChowClass ChowClass::h_power(std::size_t n, std::size_t k) {
  ChowClass c(n);
  if (k <= n) c.coeffs_[k] = 1;
  return c;
}

ChowClass ChowClass::linear(std::size_t n, const BigInt& a) {
  ChowClass c = one(n);
  if (n >= 1) c.coeffs_[1] = a;
  return c;
}

bool ChowClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  if (other.n() != n()) throw UnsupportedError("Chow classes live in different ambient dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  if (other.n() != n()) throw UnsupportedError("Chow classes live in different ambient dimensions");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  if (a.n() != b.n()) throw UnsupportedError("Chow classes live in different ambient dimensions");
  ChowClass r(a.n());
  for (std::size_t i = 0; i <= a.n(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.n(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

ChowClass operator*(const BigInt& k, ChowClass a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

ChowClass ChowClass::operator-() const {
  ChowClass r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ChowClass ChowClass::shifted(std::size_t k) const {
  ChowClass r(n());
  for (std::size_t i = 0; i + k <= n(); ++i) r.coeffs_[i + k] = coeffs_[i];
  return r;
}

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass result = one(n());
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string ChowClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'h';
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b) { return a * b; }

ChowClass chow_unit_inverse(const ChowClass& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1) throw UnsupportedError("class " + a.to_string() + " is not a unit");
  // b_0 = c0, b_k = -c0 * sum_{i=1..k} a_i b_{k-i}  gives a*b = c0^2 = 1.
  ChowClass b(a.n());
  b[0] = c0;
  for (std::size_t k = 1; k <= a.n(); ++k) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -c0 * acc;
  }
  return b;
}

BigInt integral(const ChowClass& a) { return a[a.n()]; }

ProjectiveDegrees::ProjectiveDegrees(std::initializer_list<std::int64_t> values)
    : g(values.begin(), values.end()) {}

bool ProjectiveDegrees::valid() const {
  if (g.empty() || g.front() != 1) return false;
  for (const auto& v : g)
    if (v < 0) return false;
  return true;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt int_pow(const BigInt& base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

std::size_t codim_from_degrees(const ProjectiveDegrees& g, unsigned d) {
  for (std::size_t j = 0; j < g.g.size(); ++j)
    if (g.g[j] != int_pow(d, static_cast<unsigned>(j))) return j;
  return g.g.size();
}

namespace {

void require_degrees(const ProjectiveDegrees& g) {
  if (g.g.empty()) throw UnsupportedError("empty projective degree list");
}

}  // namespace

ChowClass segre_from_degrees(const ProjectiveDegrees& g, unsigned d) {
  require_degrees(g);
  if (d < 1) throw UnsupportedError("segre_from_degrees needs d >= 1");
  const std::size_t n = g.n();
  const ChowClass inv = chow_unit_inverse(ChowClass::linear(n, d));
  ChowClass sum(n);
  ChowClass power = inv;  // (1 + d h)^{-(i+1)}
  for (std::size_t i = 0; i <= n; ++i) {
    sum += g.g[i] * power.shifted(i);
    power = power * inv;
  }
  return ChowClass::one(n) - sum;
}

ChowClass ejp_segre_from_degrees(const ProjectiveDegrees& g, unsigned d, std::size_t codim) {
  require_degrees(g);
  const std::size_t n = g.n();
  if (codim < 1 || codim > n + 1) throw UnsupportedError("codimension out of range");
  ChowClass s(n);
  std::vector<BigInt> coeff;  // coeff[p] multiplies h^{codim + p}
  for (std::size_t j = codim; j <= n; ++j) {
    const std::size_t p = j - codim;
    BigInt value = int_pow(d, static_cast<unsigned>(j)) - g.g[j];
    for (std::size_t i = 0; i < p; ++i)
      value -= binomial(static_cast<unsigned>(j), static_cast<unsigned>(p - i)) *
               int_pow(d, static_cast<unsigned>(p - i)) * coeff[i];
    coeff.push_back(value);
    s[j] = value;
  }
  return s;
}

ProjectiveDegrees g_from_segre(const ChowClass& s, unsigned d, std::size_t codim) {
  const std::size_t n = s.n();
  if (codim < 1 || codim > n + 1) throw UnsupportedError("codimension out of range");
  for (std::size_t i = 0; i < codim && i <= n; ++i)
    if (s[i] != 0) throw UnsupportedError("Segre class has a nonzero term below its codimension");
  std::vector<BigInt> tilde(n + 1);
  tilde[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) tilde[i] = -s[i];
  std::vector<BigInt> g(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      g[j] += binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)) *
              int_pow(d, static_cast<unsigned>(j - i)) * tilde[i];
  return ProjectiveDegrees(std::move(g));
}

ChowClass csm_from_polar_degrees(const ProjectiveDegrees& g) {
  require_degrees(g);
  const std::size_t n = g.n();
  const ChowClass one_plus_h = ChowClass::linear(n, 1);
  ChowClass result = one_plus_h.pow(static_cast<unsigned>(n + 1));
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt sign = (j % 2 == 0) ? 1 : -1;
    result -= (sign * g.g[j]) * one_plus_h.pow(static_cast<unsigned>(n - j)).shifted(j);
  }
  return result;
}

ChowClass csm_from_singularity_segre(const ChowClass& sY, unsigned d) {
  const std::size_t n = sY.n();
  auto dim_piece = [&](std::size_t k) -> BigInt { return k <= n ? sY[n - k] : BigInt(0); };
  ChowClass inner(n);
  for (std::size_t m = 0; m <= n; ++m)
    for (std::size_t j = 0; j <= n - m; ++j) {
      // (-V)^j = (-d)^j h^j acting on a dimension-(m+j) class lands in dimension m.
      BigInt term = binomial(static_cast<unsigned>(n - m), static_cast<unsigned>(j)) *
                    int_pow(BigInt(-static_cast<std::int64_t>(d)), static_cast<unsigned>(j)) * dim_piece(m + j);
      if ((n - m - j) % 2 == 1) term = -term;
      inner[n - m] += term;
    }
  const ChowClass sV = BigInt(d) * ChowClass::h_power(n, 1) * chow_unit_inverse(ChowClass::linear(n, d));
  const ChowClass tangent = ChowClass::linear(n, 1).pow(static_cast<unsigned>(n + 1));
  return tangent * (sV + inner);
}

ChowClass suwa_ci_csm(const std::vector<unsigned>& degrees, std::size_t n) {
  if (degrees.empty() || degrees.size() > n) throw UnsupportedError("suwa_ci_csm needs between 1 and n degrees");
  ChowClass result = ChowClass::linear(n, 1).pow(static_cast<unsigned>(n + 1));
  for (unsigned d : degrees) {
    if (d < 1) throw UnsupportedError("complete intersection degrees must be positive");
    result = result * (BigInt(d) * ChowClass::h_power(n, 1)) * chow_unit_inverse(ChowClass::linear(n, d));
  }
  return result;
}

std::vector<BigInt> involution_polynomial(const std::vector<BigInt>& p) {
  if (p.empty()) return {};
  const std::size_t L = p.size();
  // q(t) = t * p(-t-1) + p(0), degree <= L.
  std::vector<BigInt> shifted(L);  // p(-t-1)
  std::vector<BigInt> power{1};    // (-t-1)^k
  for (std::size_t k = 0; k < L; ++k) {
    for (std::size_t i = 0; i < power.size(); ++i) shifted[i] += p[k] * power[i];
    std::vector<BigInt> next(power.size() + 1);
    for (std::size_t i = 0; i < power.size(); ++i) {
      next[i] -= power[i];
      next[i + 1] -= power[i];
    }
    power = std::move(next);
  }
  std::vector<BigInt> q(L + 1);
  q[0] = p[0];
  for (std::size_t i = 0; i < L; ++i) q[i + 1] += shifted[i];
  // Synthetic division by (t + 1), from the top coefficient down.
  std::vector<BigInt> quotient(L);
  BigInt carry = 0;
  for (std::size_t i = L + 1; i-- > 1;) {
    carry = q[i] - carry;
    quotient[i - 1] = carry;
  }
  if (q[0] - carry != 0) throw InternalError("involution: division by (t+1) is not exact");
  return quotient;
}

std::vector<BigInt> aluffi_involution(const ChowClass& csm) {
  const std::size_t n = csm.n();
  std::vector<BigInt> p(n + 1);
  for (std::size_t k = 0; k <= n; ++k) p[k] = csm[n - k];
  std::vector<BigInt> image = involution_polynomial(p);
  for (std::size_t k = 1; k < image.size(); k += 2) image[k] = -image[k];
  while (image.size() > 1 && image.back() == 0) image.pop_back();
  return image;
}

}  // namespace charclass
