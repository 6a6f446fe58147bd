#include <doctest.h>

#include "drw/witt_scalar.hpp"

using namespace drw;

namespace {
WittScalar S(unsigned p, unsigned M, std::uint64_t v) { return WittScalar(p, M, v); }
}  // namespace

TEST_SUITE("witt_scalar") {
  TEST_CASE("precision validation") {
    CHECK_THROWS_AS(validate_precision(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(validate_precision(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(validate_precision(2, 70), std::invalid_argument);
    CHECK_NOTHROW(validate_precision(3, 6));
  }

  TEST_CASE("ring operations modulo p^M") {
    CHECK(S(2, 3, 5) + S(2, 3, 5) == S(2, 3, 2));
    CHECK(S(3, 2, 8) + S(3, 2, 1) == S(3, 2, 0));
    CHECK(S(2, 3, 3) * S(2, 3, 3) == S(2, 3, 1));
    CHECK(S(3, 2, 3) * S(3, 2, 3) == S(3, 2, 0));
    CHECK(-S(2, 3, 1) == S(2, 3, 7));
    CHECK(S(2, 3, 5) + S(2, 3, 0) == S(2, 3, 5));
    CHECK(WittScalar::from_integer(2, 3, BigInt(-1)) == S(2, 3, 7));
    CHECK_THROWS(S(2, 3, 1) + S(3, 3, 1));
  }

  TEST_CASE("Z_(p) multiplication") {
    CHECK(mul_zp_rational(Rational(1, 3), S(2, 3, 3)) == S(2, 3, 1));
    CHECK(mul_zp_rational(Rational(3), S(2, 3, 1)) == S(2, 3, 3));
    CHECK_THROWS_AS(mul_zp_rational(Rational(1, 3), S(3, 2, 1)), std::domain_error);
  }

  TEST_CASE("teichmuller representatives") {
    CHECK(teichmuller(3, 2, 0) == S(3, 2, 0));
    CHECK(teichmuller(3, 2, 1) == S(3, 2, 1));
    CHECK(teichmuller(3, 2, 2) == S(3, 2, 8));
    CHECK(teichmuller(5, 2, 2) == S(5, 2, 7));
    CHECK_THROWS(teichmuller(3, 2, 3));
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      for (std::uint64_t c = 0; c < p; ++c) {
        WittScalar t = teichmuller(p, 4, c);
        WittScalar tp(p, 4, 1);
        for (unsigned k = 0; k < p; ++k) tp *= t;
        CHECK(tp == t);
        CHECK(t.residue() % p == c);
      }
    }
  }

  TEST_CASE("F and V on W(F_p)") {
    CHECK(frobenius(S(2, 3, 5)) == S(2, 3, 5));
    CHECK(frobenius(S(2, 3, 0)) == S(2, 3, 0));
    CHECK(frobenius(teichmuller(3, 3, 2)) == teichmuller(3, 3, 2));
    CHECK(verschiebung(S(2, 3, 3)) == S(2, 3, 6));
    CHECK(verschiebung(S(2, 3, 0)) == S(2, 3, 0));
    for (std::uint64_t v = 0; v < 27; ++v) CHECK(frobenius(verschiebung(S(3, 3, v))) == S(3, 3, v).times_p_power(1));
  }

  TEST_CASE("V-adic valuation") {
    CHECK(valuation_v(S(2, 3, 6)).value == 1);
    CHECK_FALSE(valuation_v(S(2, 3, 6)).saturated);
    CHECK(valuation_v(S(2, 3, 1)).value == 0);
    auto zero = valuation_v(S(2, 3, 0));
    CHECK(zero.saturated);
    CHECK(zero.value == 3);
  }
}
