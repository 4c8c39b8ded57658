#include <doctest.h>

#include <set>

#include "charclass/errors.hpp"
#include "charclass/field.hpp"
#include "charclass/ideal.hpp"
#include "charclass/parser.hpp"
#include "charclass/polynomial.hpp"
#include "charclass/random.hpp"

using namespace charclass;

namespace {

RingPtr ring5() { return Ring::standard(5); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

// Random polynomial with up to `terms` terms of degree <= max_deg.
Polynomial random_poly(const RingPtr& ring, RandomScalarSource& src, int terms, unsigned max_deg) {
  std::vector<std::pair<Monomial, Coeff>> t;
  for (int k = 0; k < terms; ++k) {
    Monomial m(ring->nvars());
    unsigned budget = static_cast<unsigned>(src.next_u64() % (max_deg + 1));
    for (unsigned b = 0; b < budget; ++b) ++m[src.next_u64() % ring->nvars()];
    t.emplace_back(m, src.next_scalar(ring->field()));
  }
  return Polynomial::from_terms(ring, std::move(t));
}

}  // namespace

TEST_CASE("field inverse") {
  CHECK(PrimeField(7).inverse(2) == 4);
  PrimeField f;
  CHECK(f.characteristic() == 32749);
  CHECK(f.inverse(1) == 1);
  CHECK(f.inverse(32748) == 32748);
  for (Coeff a = 1; a < 500; ++a) CHECK(f.mul(a, f.inverse(a)) == 1);
  CHECK_THROWS_AS(f.inverse(0), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(15), UnsupportedError);
  CHECK_THROWS_AS(PrimeField(2), UnsupportedError);
}

TEST_CASE("parse examples") {
  auto r = ring5();
  Polynomial f0 = P("4*x3*x2*x4*x1 - x0^3*x1", r);
  CHECK(f0.size() == 2);
  CHECK(f0.is_homogeneous());
  CHECK(f0.total_degree() == 4);
  CHECK(P("x0 - x0", r).is_zero());
  CHECK(P("(x0+x1)^2", r) == P("x0^2 + 2*x0*x1 + x1^2", r));
  CHECK(P("-x0 + 3", r) == P("3 - x0", r));
}

TEST_CASE("parse errors carry positions") {
  auto r = ring5();
  try {
    parse_polynomial("x0 + y7", r, 3, 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 10);
    CHECK(e.exit_code() == 2);
  }
  CHECK_THROWS_AS(parse_polynomial("2 x0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 $ x1", r), ParseError);
}

TEST_CASE("multiplication") {
  auto r = ring5();
  Polynomial f0 = P("4*x3*x2*x4*x1 - x0^3*x1", r);
  Polynomial f1 = P("x0*x1*x3*x4 - x2^3*x3", r);
  CHECK((f0 * Polynomial(r)).is_zero());
  CHECK(P("x0", r) * P("x0", r) == P("x0^2", r));
  Polynomial prod = f0 * f1;
  CHECK(prod.size() == 4);
  CHECK(prod.total_degree() == 8);
  // Expanded independently with sympy.
  CHECK(prod == P("-x0^4*x1^2*x3*x4 + x0^3*x1*x2^3*x3 + 4*x0*x1^2*x2*x3^2*x4^2 - 4*x1*x2^4*x3^2*x4", r));
}

TEST_CASE("ring axioms on random triples") {
  auto r = Ring::standard(4);
  RandomScalarSource src(11, 0);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = random_poly(r, src, 6, 4), b = random_poly(r, src, 6, 4), c = random_poly(r, src, 6, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("to_string round trip") {
  auto r = Ring::standard(4);
  RandomScalarSource src(12, 0);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = random_poly(r, src, 8, 5);
    CHECK(parse_polynomial(a.to_string(), r) == a);
  }
  CHECK(P("x1*x2*4 - x0^3", r).to_string() == "-x0^3 + 4*x1*x2");
  CHECK(Polynomial(r).to_string() == "0");
}

TEST_CASE("partial derivatives") {
  auto r = ring5();
  Polynomial f0 = P("4*x3*x2*x4*x1 - x0^3*x1", r);
  CHECK(partial_derivative(f0, 0) == P("-3*x0^2*x1", r));
  CHECK(partial_derivative(P("x0^3", r), 1).is_zero());
  auto small = Ring::standard(2, PrimeField(7));
  CHECK(partial_derivative(parse_polynomial("x0^7 + x1", small), 0).is_zero());

  auto r4 = Ring::standard(4);
  RandomScalarSource src(13, 0);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(r4, src, 6, 5), b = random_poly(r4, src, 6, 5);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(partial_derivative(a + b, j) == partial_derivative(a, j) + partial_derivative(b, j));
      CHECK(partial_derivative(a * b, j) == partial_derivative(a, j) * b + a * partial_derivative(b, j));
    }
  }
}

TEST_CASE("Euler relation for homogeneous forms") {
  auto r = Ring::standard(4);
  RandomScalarSource src(14, 0);
  for (unsigned e = 1; e <= 6; ++e) {
    std::vector<Polynomial> monos;
    for (const auto& m : monomials_of_degree(4, e)) monos.push_back(Polynomial::monomial(r, m));
    Polynomial f = random_combination(monos, src);
    Polynomial lhs(r);
    for (std::size_t j = 0; j < 4; ++j) lhs += Polynomial::variable(r, j) * partial_derivative(f, j);
    CHECK(lhs == f.scaled(e));
  }
}

TEST_CASE("exact division and substitution") {
  auto r = Ring::standard(3);
  Polynomial a = P("x0^2 + 3*x1*x2 - x2", r), b = P("x0 - 5*x1 + 2", r);
  CHECK(exact_divide(a * b, b) == a);
  CHECK_THROWS_AS(exact_divide(a * b + P("1", r), b), InternalError);
  // x0 -> x1 + x2, x1 -> 2, x2 -> x2
  Polynomial s = substitute(P("x0^2 - x1*x2", r), {P("x1 + x2", r), P("2", r), P("x2", r)});
  CHECK(s == P("x1^2 + 2*x1*x2 + x2^2 - 2*x2", r));
}

TEST_CASE("random forms and combinations") {
  auto r = Ring::standard(4);
  RandomScalarSource a(5, 3), b(5, 3);
  Polynomial la = random_form(r, a, false), lb = random_form(r, b, false);
  CHECK(la == lb);
  CHECK(!la.is_zero());
  CHECK(la.is_homogeneous());
  CHECK(la.total_degree() == 1);
  Polynomial aff = random_form(r, a, true);
  CHECK(aff.coefficient_of(Monomial(4, 0)) == 1);

  RandomScalarSource c(5, 4);
  CHECK(random_form(r, c, false) != lb);

  auto r5 = ring5();
  Polynomial f0 = P("4*x3*x2*x4*x1 - x0^3*x1", r5);
  Polynomial f1 = P("x0*x1*x3*x4 - x2^3*x3", r5);
  RandomScalarSource s1(9, 1), s2(9, 1);
  Polynomial c1 = random_combination({f0, f1}, s1);
  CHECK(c1 == random_combination({f0, f1}, s2));
  // The combination lies in span(f0, f1): its terms are those of f0 and f1.
  Coeff l0 = c1.coefficient_of({3, 1, 0, 0, 0});
  Coeff l1 = c1.coefficient_of({1, 1, 0, 1, 1});
  const PrimeField& F = r5->field();
  CHECK(c1 == f0.scaled(F.neg(l0)) + f1.scaled(l1));
  CHECK(P("3*x0 - 5*x1", r5) == P("x0", r5).scaled(3) + P("x1", r5).scaled(F.neg(5)));
}

TEST_CASE("random source determinism and uniform range") {
  PrimeField F;
  RandomScalarSource a(1, 2), b(1, 2);
  std::set<Coeff> seen;
  for (int i = 0; i < 2000; ++i) {
    Coeff x = a.next_scalar(F);
    CHECK(x == b.next_scalar(F));
    CHECK(x < F.characteristic());
    seen.insert(x);
  }
  CHECK(seen.size() > 1900);
  CHECK(a.substream(7).next_u64() == b.substream(7).next_u64());
  CHECK(a.substream(7).stream() != a.substream(8).stream());
}

TEST_CASE("degree equalization") {
  auto r3 = Ring::standard(3);
  IdealSpec I = IdealSpec::from_generators({P("x0", r3), P("x1^2", r3)});
  CHECK(!I.equalized());
  IdealSpec E = equalize_degrees(I);
  CHECK(E.d == 2);
  std::set<std::string> got;
  for (const auto& g : E.generators) got.insert(g.to_string());
  CHECK(got == std::set<std::string>{"x0^2", "x0*x1", "x0*x2", "x1^2"});
  for (const auto& g : E.generators) CHECK(g.is_homogeneous());

  IdealSpec same = IdealSpec::from_generators({P("x0*x1", r3), P("x2^2", r3)});
  CHECK(equalize_degrees(same).generators == same.generators);

  auto r2 = Ring::standard(2);
  IdealSpec lin = IdealSpec::from_generators({P("x0", r2)});
  CHECK(lin.n == 1);
  CHECK(equalize_degrees(lin).d == 1);
  CHECK(equalize_degrees(lin).generators.size() == 1);

  CHECK_THROWS_AS(IdealSpec::from_generators({Polynomial(r2)}), UnsupportedError);
}
