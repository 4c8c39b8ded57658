#include <doctest.h>

#include <algorithm>

#include "charclass/errors.hpp"
#include "charclass/groebner.hpp"
#include "charclass/parser.hpp"
#include "../support/random_ideals.hpp"

using namespace charclass;
using charclass::testing::random_known_ideal;
using charclass::testing::random_poly;
using charclass::testing::brute_force_standard;

namespace {

RingPtr xy() { return Ring::make({"x", "y"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

std::vector<Polynomial> Ps(std::initializer_list<const char*> texts, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, r));
  return out;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto r = xy();
  GroebnerBasis a = buchberger(Ps({"x^2", "x*y"}, r));
  CHECK(a.elements() == Ps({"x*y", "x^2"}, r));
  GroebnerBasis b = buchberger(Ps({"x + y", "x - y"}, r));
  CHECK(b.elements() == Ps({"y", "x"}, r));
  GroebnerBasis c = buchberger(Ps({"1 - x", "x"}, r));
  CHECK(c.is_unit());
  CHECK(c.elements() == Ps({"1"}, r));
}

TEST_CASE("normal form") {
  auto r = xy();
  GroebnerBasis G = buchberger(Ps({"x^2 - y", "x*y - 1"}, r));
  CHECK(normal_form(P("(x^2 - y)*(x + 3*y^2) + (x*y - 1)*y", r), G).is_zero());
  CHECK(normal_form(P("y", r), buchberger(Ps({"x"}, r))) == P("y", r));

  auto r3 = Ring::standard(3);
  RandomScalarSource src(21, 0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens{random_poly(r3, src, 4, 3, 3), random_poly(r3, src, 4, 3, 3)};
    GroebnerBasis H = buchberger(gens);
    Polynomial f = random_poly(r3, src, 8, 5, 3);
    Polynomial nf = normal_form(f, H);
    CHECK(normal_form(nf, H) == nf);
    // f - NF(f) lies in the ideal.
    CHECK(normal_form(f - nf, H).is_zero());
    for (const auto& g : gens) CHECK(normal_form(g * f, H).is_zero());
  }
}

TEST_CASE("zero dimensionality and quotient dimension") {
  auto r = xy();
  GroebnerBasis a = buchberger(Ps({"x^2", "y"}, r));
  CHECK(is_zero_dimensional(a));
  CHECK(quotient_dimension(a) == 2);
  GroebnerBasis b = buchberger(Ps({"x*y"}, r));
  CHECK(!is_zero_dimensional(b));
  CHECK_THROWS_AS(quotient_dimension(b), DimensionError);
  GroebnerBasis c = buchberger(Ps({"1"}, r));
  CHECK(is_zero_dimensional(c));
  CHECK(quotient_dimension(c) == 0);
}

TEST_CASE("random linear forms plus one affine form cut one point") {
  auto r = Ring::standard(5);
  RandomScalarSource src(22, 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 4; ++j) gens.push_back(random_form(r, src, false));
    gens.push_back(random_form(r, src, true));
    CHECK(quotient_dimension(buchberger(gens)) == 1);
  }
}

TEST_CASE("quotient dimension on ideals of known dimension") {
  RandomScalarSource src(23, 0);
  int checked = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    auto r = Ring::standard(k);
    for (int trial = 0; trial < 20; ++trial) {
      auto known = random_known_ideal(r, src, 12);
      GroebnerBasis G = buchberger(known.generators);
      REQUIRE(is_zero_dimensional(G));
      CHECK(quotient_dimension(G) == known.dimension);
      CHECK(brute_force_standard(G, 13) == known.dimension);
      ++checked;
    }
  }
  CHECK(checked == 60);
}

TEST_CASE("reduced bases are canonical under generator permutation") {
  auto r = Ring::standard(3);
  RandomScalarSource src(24, 0);
  for (int trial = 0; trial < 25; ++trial) {
    auto known = random_known_ideal(r, src, 12);
    GroebnerBasis G = buchberger(known.generators);
    auto gens = known.generators;
    std::reverse(gens.begin(), gens.end());
    CHECK(buchberger(gens) == G);
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
    for (auto& g : gens) g = g.scaled(7);
    CHECK(buchberger(gens) == G);
    // Feeding a basis back in is a fixed point.
    CHECK(buchberger(G.elements()) == G);
  }
}

TEST_CASE("elimination") {
  auto r = Ring::make({"t", "x"});
  CHECK(eliminate(Ps({"t*x"}, r), {0}).empty());
  CHECK(eliminate(Ps({"t - x"}, r), {0}).empty());
  auto r2 = Ring::make({"t", "x", "y"});
  auto out = eliminate(Ps({"t - x^2", "t - y"}, r2), {0});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == P("x^2 - y", r2));
  // (t f, (1-t) g) cap k[x,y] = (lcm(f,g))
  auto lcm = eliminate(Ps({"t*x*(x+y)", "(1-t)*y*(x+y)"}, r2), {0});
  REQUIRE(lcm.size() == 1);
  CHECK(lcm[0] == P("x*y*(x+y)", r2).monic());
}

TEST_CASE("gcd and lcm") {
  auto r = xy();
  CHECK(gcd_poly(P("x*(x+y)", r), P("y*(x+y)", r)) == P("x + y", r));
  CHECK(gcd_poly(P("3*x^2 + y^2", r), Polynomial(r)) == P("3*x^2 + y^2", r).monic());
  CHECK(lcm_poly(P("x*(x+y)", r), P("y*(x+y)", r)) == P("x*y*(x+y)", r));

  auto r5 = Ring::standard(5);
  Polynomial f0 = P("4*x3*x2*x4*x1 - x0^3*x1", r5);
  Polynomial f1 = P("x0*x1*x3*x4 - x2^3*x3", r5);
  // f0 = x1*(4*x2*x3*x4 - x0^3), f1 = x3*(x0*x1*x4 - x2^3): no shared factor.
  CHECK(gcd_poly(f0, f1) == P("1", r5));
  CHECK(lcm_poly(f0, f1).total_degree() == 8);

  auto r3 = Ring::standard(3);
  RandomScalarSource src(25, 0);
  for (int trial = 0; trial < 12; ++trial) {
    Polynomial common = random_poly(r3, src, 3, 2, 3);
    Polynomial a = random_poly(r3, src, 3, 2, 3) * common;
    Polynomial b = random_poly(r3, src, 3, 2, 3) * common;
    if (a.is_zero() || b.is_zero()) continue;
    Polynomial g = gcd_poly(a, b), l = lcm_poly(a, b);
    CHECK_NOTHROW(exact_divide(a, g));
    CHECK_NOTHROW(exact_divide(b, g));
    CHECK_NOTHROW(exact_divide(l, a));
    CHECK_NOTHROW(exact_divide(l, b));
    // f g = gcd * lcm up to a unit.
    CHECK((a * b).monic() == (g * l).monic());
    if (!common.is_constant()) CHECK_NOTHROW(exact_divide(g, common));
  }
}

TEST_CASE("squarefree part") {
  auto r = xy();
  CHECK(squarefree_part(P("x^2*y", r)) == P("x*y", r));
  CHECK(squarefree_part(P("(x+y)^3", r)) == P("x + y", r));
  CHECK(squarefree_part(P("(x+y)^2*(x-y)^3*x", r)) == P("(x+y)*(x-y)*x", r).monic());
  auto r5 = Ring::standard(5);
  Polynomial prod = P("(4*x3*x2*x4*x1 - x0^3*x1)*(x0*x1*x3*x4 - x2^3*x3)", r5);
  Polynomial sq = squarefree_part(prod);
  CHECK(sq == prod.monic());
  CHECK(squarefree_part(sq) == sq);

  auto small = Ring::make({"x", "y"}, PrimeField(5));
  CHECK_THROWS_AS(squarefree_part(parse_polynomial("x^5 + y^5", small)), UnsupportedError);
}
