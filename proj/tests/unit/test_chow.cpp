#include <doctest.h>

#include "charclass/chow.hpp"
#include "charclass/random.hpp"
#include "../support/random_classes.hpp"

using namespace charclass;
using charclass::testing::random_degrees;

namespace {

std::vector<BigInt> ints(std::initializer_list<std::int64_t> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("ring arithmetic and printing") {
  ChowClass a(4, {1, 2, 0, 3});
  ChowClass b(4, {0, 1, -1});
  CHECK((a * b).coeffs() == ints({0, 1, 1, -2, 3}));
  CHECK(chow_mul(a, ChowClass::one(4)) == a);
  CHECK(a * chow_unit_inverse(a) == ChowClass::one(4));
  ChowClass neg(3, {-1, 5, 2});
  CHECK(neg * chow_unit_inverse(neg) == ChowClass::one(3));
  CHECK_THROWS_AS(chow_unit_inverse(ChowClass(3, {2, 1})), UnsupportedError);
  CHECK(integral(a) == 0);
  CHECK(integral(ChowClass(2, {0, 2, 2})) == 2);
  CHECK(ChowClass(4, {0, 0, 16, -128, 768}).to_string() == "16*h^2 - 128*h^3 + 768*h^4");
  CHECK(ChowClass(2, {1, 1, -1}).to_string() == "1 + h - h^2");
  CHECK(ChowClass(3).to_string() == "0");
  CHECK_THROWS_AS(ChowClass(1, {1, 2, 3}), UnsupportedError);
}

TEST_CASE("Segre class from projective degrees") {
  CHECK(segre_from_degrees({1, 4, 0, 0, 0}, 4).coeffs() == ints({0, 0, 16, -128, 768}));
  CHECK(segre_from_degrees({1, 1, 1, 1, 1}, 1).is_zero());
  CHECK(segre_from_degrees({1, 0, 0}, 2).coeffs() == ints({0, 2, -4}));
  CHECK_THROWS_AS(segre_from_degrees({1, 0}, 0), UnsupportedError);
}

TEST_CASE("residual recurrence agrees with the closed formula") {
  ProjectiveDegrees ex{1, 4, 0, 0, 0};
  CHECK(codim_from_degrees(ex, 4) == 2);
  CHECK(ejp_segre_from_degrees(ex, 4, 2) == segre_from_degrees(ex, 4));
  CHECK(codim_from_degrees({1, 1, 1}, 1) == 3);
  CHECK(ejp_segre_from_degrees({1, 1, 1}, 1, 3).is_zero());

  RandomScalarSource src(31, 0);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + src.next_u64() % 7;
    unsigned d = 1 + static_cast<unsigned>(src.next_u64() % 5);
    std::size_t nu = 1 + src.next_u64() % n;
    if (d == 1) nu = n + 1;
    ProjectiveDegrees g = random_degrees(src, n, d, nu);
    std::size_t codim = codim_from_degrees(g, d);
    CHECK(ejp_segre_from_degrees(g, d, codim) == segre_from_degrees(g, d));
  }
}

TEST_CASE("degree list round trip through the Segre class") {
  RandomScalarSource src(32, 0);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + src.next_u64() % 8;
    unsigned d = 2 + static_cast<unsigned>(src.next_u64() % 4);
    std::size_t nu = 1 + src.next_u64() % n;
    ProjectiveDegrees g = random_degrees(src, n, d, nu);
    CHECK(g_from_segre(segre_from_degrees(g, d), d, codim_from_degrees(g, d)) == g);
  }
  CHECK_THROWS_AS(g_from_segre(ChowClass(2, {0, 1, 0}), 2, 2), UnsupportedError);
}

TEST_CASE("c_SM from polar degrees") {
  CHECK(csm_from_polar_degrees({1, 3, 6, 6, 2}).coeffs() == ints({0, 4, 7, 9, 5}));
  CHECK(csm_from_polar_degrees({1, 7, 23, 29, 12}).coeffs() == ints({0, 8, 2, 10, 5}));
  // Smooth conic: polar map is a linear isomorphism of P^2.
  CHECK(csm_from_polar_degrees({1, 1, 1}) == suwa_ci_csm({2}, 2));
}

TEST_CASE("singularity Segre route agrees with the polar route") {
  RandomScalarSource src(33, 0);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + src.next_u64() % 7;
    unsigned e = 1 + static_cast<unsigned>(src.next_u64() % 4);  // gradient degree d - 1
    std::size_t nu = 1 + src.next_u64() % (n + 1);
    ProjectiveDegrees g = random_degrees(src, n, e, e == 1 ? n + 1 : std::min(nu, n));
    ChowClass sY = segre_from_degrees(g, e);
    CHECK(csm_from_singularity_segre(sY, e + 1) == csm_from_polar_degrees(g));
  }
}

TEST_CASE("Suwa formula") {
  CHECK(suwa_ci_csm({2}, 2).coeffs() == ints({0, 2, 2}));
  CHECK(suwa_ci_csm({1}, 3).coeffs() == ints({0, 1, 3, 3}));
  CHECK(suwa_ci_csm({1, 1}, 3).coeffs() == ints({0, 0, 1, 2}));
  CHECK_THROWS_AS(suwa_ci_csm({}, 3), UnsupportedError);
  CHECK_THROWS_AS(suwa_ci_csm({1, 1, 1}, 2), UnsupportedError);
}

TEST_CASE("involution") {
  CHECK(involution_polynomial(ints({5, 8, 12})) == ints({5, 4, 12}));
  CHECK(aluffi_involution(ChowClass(4, {0, 0, 12, 8, 5})) == ints({5, -4, 12}));
  CHECK(aluffi_involution(suwa_ci_csm({1}, 3)) == ints({3, 2, 1}));
  CHECK(aluffi_involution(ChowClass(3, {0, 0, 0, 7})) == ints({7}));

  RandomScalarSource src(34, 0);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t len = 1 + src.next_u64() % 9;
    std::vector<BigInt> p(len);
    for (auto& c : p) c = static_cast<std::int64_t>(src.next_u64() % 2001) - 1000;
    CHECK(involution_polynomial(involution_polynomial(p)) == p);
  }
}
