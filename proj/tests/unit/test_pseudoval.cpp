#include <doctest.h>

#include "drw/checks.hpp"
#include "drw/product.hpp"
#include "drw/pseudoval.hpp"
#include "helpers.hpp"

using namespace drw;
using drw::test::E;
using drw::test::teich_X;

namespace {
const Rational half(1, 2);
ExtendedRational Q(long num, long den = 1) { return ExtendedRational(Rational(num, den)); }
}  // namespace

TEST_SUITE("pseudoval") {
  TEST_CASE("gamma") {
    Context ctx{2, 1, 6};
    CHECK(gamma(DRWElement::zero(ctx), half).value.is_pos_inf());
    CHECK(gamma(verschiebung_power(teich_X(ctx, 1, 3), 2), half).value == Q(13, 8));
    CHECK(gamma(differential(teich_X(ctx, 1)), half).value == Q(-1, 2));
    CHECK(gamma(E(ctx, 4, {"1"}, {1}), half).value == Q(3, 2));
    CHECK_THROWS_AS(gamma(DRWElement::one(ctx), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(zeta(DRWElement::one(ctx), Rational(-1)), std::invalid_argument);
  }

  TEST_CASE("zeta") {
    Context one{2, 1, 6};
    CHECK(zeta(DRWElement::one(one), half).value == Q(0));
    CHECK(zeta(E(one, 1, {"3/2"}), half).value == Q(1, 4));
    Context two{2, 2, 6};
    CHECK(zeta(E(two, 1, {"1/2", "1/2"}, {2}), half).value == Q(3, 2));
    // I_0 = ∅: u counted #I times; valV scaled by 2n
    CHECK(zeta(E(two, 2, {"1/2", "1/2"}, {1}), half).value == Q(4 + 1) - Q(1, 2));
    CHECK(zeta(DRWElement::zero(two), half).value.is_pos_inf());
    CHECK_FALSE(zeta(E(two, 2, {"1/2", "1/2"}, {1}), half).lower_bound_only);
  }

  TEST_CASE("per-term closed forms") {
    Context ctx{3, 2, 4};
    Sampler s(ctx, 99);
    for (int t = 0; t < 200; ++t) {
      BasicElement e = s.basic();
      DRWElement x = DRWElement::basic(ctx, e);
      Rational eps(1, 3);
      unsigned v = valuation_v(e.eta).value;
      Rational size = e.a.total();
      Rational u(e.a.u());
      Rational k(static_cast<unsigned long>(e.degree() + (e.lower_interval_empty() ? 0 : 1)));
      CHECK(gamma(x, eps).value == ExtendedRational(Rational(v) + u - eps * size));
      CHECK(zeta(x, eps).value == ExtendedRational(Rational(4 * v) + k * u - eps * size));
    }
  }

  TEST_CASE("margins") {
    CHECK(margin(ExtendedRational::pos_inf(), ExtendedRational::pos_inf()).is_pos_inf());
    CHECK(margin(Q(1), ExtendedRational::pos_inf()).is_neg_inf());
    CHECK(margin(Q(1), Q(3, 2)) == Q(-1, 2));
  }

  TEST_CASE("axioms on fixed elements") {
    Context ctx{2, 2, 6};
    auto x = E(ctx, 1, {"3/4", "0"});
    auto y = differential(verschiebung_power(teich_X(ctx, 2), 2));
    for (const auto& eps : {Rational(1, 3), half, Rational(1)}) {
      AxiomReport r = check_axioms(x, y, eps);
      CHECK(r.all_hold());
      CHECK(r.checks.size() == 5);
      CHECK(r.zeta_neg_x.value == r.zeta_x.value);
    }
    AxiomReport z = check_axioms(DRWElement::zero(ctx), y, half);
    CHECK(z.all_hold());
  }

  TEST_CASE("table constants") {
    using S = Summand;
    CHECK(table_constant(S::PureFractional, S::PureFractional, S::Integral) == std::optional<int>(2));
    CHECK(table_constant(S::PureFractional, S::PureFractional, S::PureFractional) == std::optional<int>(1));
    CHECK(table_constant(S::PureFractional, S::PureFractional, S::ExactFractional) == std::optional<int>(3));
    CHECK(table_constant(S::PureFractional, S::Integral, S::ExactFractional) == std::optional<int>(1));
    auto zero_cell = table_constant(S::Integral, S::Integral, S::PureFractional);
    REQUIRE(zero_cell.has_value());
    CHECK_FALSE(zero_cell->has_value());
    zero_cell = table_constant(S::ExactFractional, S::ExactFractional, S::PureFractional);
    REQUIRE(zero_cell.has_value());
    CHECK_FALSE(zero_cell->has_value());
    CHECK_FALSE(table_constant(S::Integral, S::PureFractional, S::Integral).has_value());
  }

  TEST_CASE("product table on fixed elements") {
    Context ctx{2, 2, 6};
    auto ints = E(ctx, 1, {"1", "2"}) + E(ctx, 2, {"3", "0"}, {1});
    TableReport r = check_product_table(ints, ints, half);
    CHECK(r.all_hold());
    CHECK(r.cells[1].holds);
    CHECK_FALSE(r.cells[1].constant.has_value());

    auto frp = E(ctx, 1, {"1/2", "1"});
    auto dfrp = E(ctx, 1, {"1/2", "1"}, {1});
    r = check_product_table(ints, frp, half);
    CHECK(r.swapped);
    CHECK(r.row_x == Summand::PureFractional);
    CHECK(r.all_hold());
    r = check_product_table(dfrp, dfrp + E(ctx, 3, {"1/4", "1/4"}, {1}), half);
    CHECK(r.all_hold());
    CHECK(project_frp(dfrp * dfrp).is_zero());
    CHECK_THROWS_AS(check_product_table(frp + ints, frp, half), std::invalid_argument);
  }

  TEST_CASE("counterexamples") {
    Context ctx{2, 2, 6};
    auto r = gamma_counterexample(ctx, 1, 1, half);
    CHECK(r.gamma_x.value == Q(3, 4));
    CHECK(r.gamma_y.value == Q(3, 4));
    CHECK(r.gamma_product.value == Q(1, 2));
    CHECK(r.matches_closed_forms);
    CHECK(r.violated);
    r = gamma_counterexample(ctx, 2, 1, half);
    CHECK(r.gamma_product.value == Q(1, 2));
    CHECK(r.product == E(ctx, 1, {"1/2", "1/2"}, {2}));
    CHECK(r.violated);
    r = gamma_counterexample(ctx, 1, 2, half);
    CHECK(r.gamma_x.value == Q(13, 8));
    CHECK(r.gamma_y.value == Q(15, 8));
    CHECK(r.gamma_product.value == Q(3, 2));
    CHECK_THROWS_AS(gamma_counterexample(ctx, 1, 0, half), std::invalid_argument);
    CHECK_THROWS_AS(gamma_counterexample(ctx, 1, 6, half), std::invalid_argument);
    CHECK_THROWS_AS(gamma_counterexample(Context{2, 1, 6}, 2, 1, half), std::invalid_argument);
  }

  TEST_CASE("sandwich") {
    Context ctx{3, 2, 5};
    auto one = compare_gamma_zeta(DRWElement::one(ctx), half);
    CHECK(one.holds);
    CHECK(one.zeta.value == Q(0));
    auto zero = compare_gamma_zeta(DRWElement::zero(ctx), half);
    CHECK(zero.holds);
    CHECK(zero.upper.value.is_pos_inf());
    Sampler s(ctx, 5);
    for (int t = 0; t < 200; ++t) CHECK(compare_gamma_zeta(s.element(), Rational(1, 3)).holds);
  }

  TEST_CASE("zeta(dx) >= zeta(x) and F, V keep zeta finite") {
    for (unsigned p : {2u, 3u}) {
      Context ctx{p, 3, 6};
      Sampler s(ctx, 2024 + p);
      for (int t = 0; t < 200; ++t) {
        DRWElement x = s.element();
        CHECK(zeta(differential(x), half).value >= zeta(x, half).value);
        CHECK(zeta(frobenius(x), half).value.kind() != ExtendedRational::Kind::NegInf);
        CHECK(zeta(verschiebung(x), half).value.kind() != ExtendedRational::Kind::NegInf);
      }
    }
  }

  TEST_CASE("random axiom and table runs") {
    for (unsigned p : {2u, 3u}) {
      Context ctx{p, 2, 6};
      AxiomRun a = run_axiom_trials(ctx, Rational(1, 3), 100, 8);
      CHECK(a.failures == 0);
      for (const auto& row : run_table_trials(ctx, Rational(1), 40, 9)) {
        CAPTURE(to_string(row.row_x));
        CAPTURE(to_string(row.row_y));
        CHECK(row.failures == 0);
      }
    }
  }
}
