#include <doctest.h>

#include "drw/element.hpp"
#include "drw/sampling.hpp"
#include "helpers.hpp"

using namespace drw;
using drw::test::E;

TEST_SUITE("element") {
  TEST_CASE("canonical sums") {
    Context ctx{2, 1, 3};
    auto x = E(ctx, 3, {"1/2"}, {1});
    CHECK(DRWElement::zero(ctx) + x == x);
    CHECK((x + (-x)).is_zero());
    CHECK((E(ctx, 1, {"1"}) + E(ctx, 7, {"1"})).is_zero());
    auto y = E(ctx, 1, {"1"});
    CHECK((x + y).size() == 2);
    CHECK(E(ctx, 8, {"1"}).is_zero());
  }

  TEST_CASE("degree and homogeneous parts") {
    Context ctx{2, 2, 4};
    auto x = E(ctx, 1, {"1", "1"}) + E(ctx, 1, {"1", "1"}, {2}) + E(ctx, 3, {"1/2", "1"}, {1, 2});
    CHECK_FALSE(x.degree().has_value());
    CHECK(x.homogeneous_part(1) == E(ctx, 1, {"1", "1"}, {2}));
    CHECK(x.homogeneous_part(2).degree() == 2);
  }

  TEST_CASE("scalar multiplication") {
    Context ctx{2, 1, 3};
    auto x = E(ctx, 3, {"1"});
    CHECK(scalar_mul(ctx.scalar(1), x) == x);
    CHECK(scalar_mul(ctx.scalar(0), x).is_zero());
    CHECK(scalar_mul(ctx.scalar(2), x) == E(ctx, 6, {"1"}));
  }

  TEST_CASE("differential") {
    Context ctx{2, 1, 3};
    CHECK(differential(E(ctx, 1, {"1"})) == E(ctx, 1, {"1"}, {1}));
    CHECK(differential(E(ctx, 1, {"2"})) == E(ctx, 2, {"2"}, {1}));
    CHECK(differential(E(ctx, 1, {"1/2"})) == E(ctx, 1, {"1/2"}, {1}));
    CHECK(differential(DRWElement::one(ctx)).is_zero());
    // I_0 = ∅ means the term is already exact.
    CHECK(differential(E(ctx, 1, {"1"}, {1})).is_zero());
  }

  TEST_CASE("Frobenius") {
    Context ctx{2, 1, 3};
    CHECK(frobenius(E(ctx, 1, {"1"})) == E(ctx, 1, {"2"}));
    CHECK(frobenius(E(ctx, 1, {"1/2"})) == E(ctx, 2, {"1"}));
    CHECK(frobenius(E(ctx, 1, {"1/2"}, {1})) == E(ctx, 1, {"1"}, {1}));
  }

  TEST_CASE("Verschiebung") {
    Context ctx{2, 1, 3};
    CHECK(verschiebung(E(ctx, 1, {"1"})) == E(ctx, 1, {"1/2"}));
    CHECK(verschiebung(E(ctx, 1, {"2"})) == E(ctx, 2, {"1"}));
    CHECK(verschiebung(E(ctx, 1, {"1"}, {1})) == E(ctx, 2, {"1/2"}, {1}));
    CHECK(verschiebung(DRWElement::one(ctx)) == DRWElement::scalar(ctx, ctx.scalar(2)));
  }

  TEST_CASE("projections") {
    Context ctx{2, 1, 3};
    auto dfrp = E(ctx, 1, {"1/2"}, {1});
    CHECK(project_dfrp(dfrp) == dfrp);
    CHECK(project_frp(dfrp).is_zero());
    CHECK(classify(dfrp.terms().begin()->first) == Summand::ExactFractional);
    CHECK(dfrp_preimage(dfrp) == E(ctx, 1, {"1/2"}));
    CHECK_THROWS_AS(dfrp_preimage(E(ctx, 1, {"1"})), std::invalid_argument);
    CHECK(summand_of(dfrp + E(ctx, 1, {"1"})) == std::nullopt);
    CHECK(summand_of(DRWElement::zero(ctx)) == Summand::Integral);
  }

  TEST_CASE("rendering") {
    Context ctx{2, 2, 3};
    CHECK(drw::test::str(E(ctx, 3, {"3/2", "0"})) == "e(3; 3/2, 0; {})");
    CHECK(drw::test::str(E(ctx, 1, {"1/2", "1/2"}, {2})) == "e(1; 1/2, 1/2; {2})");
    CHECK(drw::test::str(DRWElement::zero(ctx)) == "0");
  }

  TEST_CASE("random: F V = p, d d = 0, projections, exact round trip") {
    for (unsigned p : {2u, 3u}) {
      Context ctx{p, 3, 5};
      for (std::uint64_t t = 0; t < 200; ++t) {
        Sampler s(ctx, trial_seed(17, t));
        DRWElement x = s.element();
        CAPTURE(x);
        CHECK(frobenius(verschiebung(x)) == scalar_mul(ctx.scalar(p), x));
        CHECK(differential(differential(x)).is_zero());
        CHECK(project_int(x) + project_frp(x) + project_dfrp(x) == x);
        CHECK(project_frac(x) == project_frp(x) + project_dfrp(x));
        DRWElement y = s.element_in(Summand::ExactFractional);
        CHECK(differential(dfrp_preimage(y)) == y);
        CHECK(summand_of(dfrp_preimage(y)) == Summand::PureFractional);
        // dF = pFd and Vd = pdV
        CHECK(differential(frobenius(x)) == scalar_mul(ctx.scalar(p), frobenius(differential(x))));
        CHECK(verschiebung(differential(x)) == scalar_mul(ctx.scalar(p), differential(verschiebung(x))));
        CHECK(frobenius(differential(verschiebung(x))) == differential(x));
      }
    }
  }
}
