#include "drw/pseudoval.hpp"

#include <stdexcept>

#include "drw/product.hpp"

namespace drw {

namespace {

void require_positive(const Rational& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive, got " + to_string(eps));
}

template <typename TermValue>
Evaluation minimize(const DRWElement& x, TermValue term_value) {
  Evaluation out;
  for (const auto& [key, eta] : x.terms()) {
    VAdicValuation v = valuation_v(eta);
    ExtendedRational value(term_value(key, v.value));
    if (value < out.value) {
      out.value = value;
      out.lower_bound_only = v.saturated;
    } else if (value == out.value && v.saturated) {
      out.lower_bound_only = out.lower_bound_only || v.saturated;
    }
  }
  return out;
}

ExtendedRational scale(const ExtendedRational& x, const Rational& k) {
  if (!x.is_finite()) return x;
  return ExtendedRational(Rational(x.value() * k));
}

Rational max_total(const DRWElement& x) {
  Rational best(0);
  for (const auto& [key, eta] : x.terms()) {
    if (key.total_weight() > best) best = key.total_weight();
  }
  return best;
}

}  // namespace

Rational gamma_term(const TermKey& key, unsigned val_v, const Rational& eps) {
  return Rational(val_v + key.u()) - eps * key.total_weight();
}

Rational zeta_term(const TermKey& key, unsigned val_v, const Rational& eps) {
  const auto n = key.weight().nvars();
  const auto k = key.degree() + (key.lower_interval_empty() ? 0 : 1);
  Rational fixed(static_cast<unsigned long>(2 * n * val_v + k * key.u()));
  return fixed - eps * key.total_weight();
}

Evaluation gamma(const DRWElement& x, const Rational& eps) {
  require_positive(eps);
  return minimize(x, [&](const TermKey& key, unsigned v) { return gamma_term(key, v, eps); });
}

Evaluation zeta(const DRWElement& x, const Rational& eps) {
  require_positive(eps);
  return minimize(x, [&](const TermKey& key, unsigned v) { return zeta_term(key, v, eps); });
}

ExtendedRational margin(const ExtendedRational& lhs, const ExtendedRational& bound) {
  if (lhs.is_pos_inf()) return ExtendedRational::pos_inf();
  if (bound.is_pos_inf()) return ExtendedRational::neg_inf();
  return lhs - bound;
}

bool AxiomReport::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

AxiomReport check_axioms(const DRWElement& x, const DRWElement& y, const Rational& eps) {
  require_positive(eps);
  const Context& ctx = x.context();
  AxiomReport r;
  r.zeta_x = zeta(x, eps);
  r.zeta_y = zeta(y, eps);
  r.zeta_neg_x = zeta(-x, eps);
  r.zeta_sum = zeta(x + y, eps);
  const DRWElement product = mul(x, y);
  r.zeta_product = zeta(product, eps);

  Evaluation zero = zeta(DRWElement::zero(ctx), eps);
  r.checks.push_back({"zero", zero.value, zero.value.is_pos_inf()});
  Evaluation one = zeta(DRWElement::one(ctx), eps);
  r.checks.push_back({"one", one.value, one.value == ExtendedRational(0)});

  ExtendedRational neg = r.zeta_neg_x.value.is_finite() && r.zeta_x.value.is_finite()
                             ? r.zeta_neg_x.value - r.zeta_x.value
                             : ExtendedRational(r.zeta_neg_x.value == r.zeta_x.value ? 0 : 1);
  r.checks.push_back({"negation", neg, neg == ExtendedRational(0)});

  ExtendedRational sum_margin = margin(r.zeta_sum.value, min(r.zeta_x.value, r.zeta_y.value));
  r.checks.push_back({"sum", sum_margin, sum_margin >= ExtendedRational(0)});

  if (r.zeta_x.value.is_finite() && r.zeta_y.value.is_finite()) {
    ExtendedRational bound = r.zeta_x.value + r.zeta_y.value;
    ExtendedRational m = margin(r.zeta_product.value, bound);
    r.checks.push_back({"product", m, m >= ExtendedRational(0)});
    r.truncation_floor = ExtendedRational(Rational(2 * ctx.nvars * ctx.precision) - eps * (max_total(x) + max_total(y)));
    r.conclusive = r.truncation_floor >= bound;
  } else {
    r.checks.push_back({"product", ExtendedRational::pos_inf(), true});
  }
  return r;
}

std::optional<std::optional<int>> table_constant(Summand x, Summand y, Summand target) {
  using S = Summand;
  constexpr std::optional<int> inf = std::nullopt;
  auto row = [&](std::optional<int> c_int, std::optional<int> c_frp, std::optional<int> c_dfrp) {
    switch (target) {
      case S::Integral: return c_int;
      case S::PureFractional: return c_frp;
      case S::ExactFractional: return c_dfrp;
    }
    return c_int;
  };
  if (x == S::Integral && y == S::Integral) return row(0, inf, inf);
  if (x == S::PureFractional && y == S::Integral) return row(inf, 0, 1);
  if (x == S::ExactFractional && y == S::Integral) return row(inf, 0, 0);
  if (x == S::PureFractional && y == S::PureFractional) return row(2, 1, 3);
  if (x == S::ExactFractional && y == S::PureFractional) return row(0, 0, 1);
  if (x == S::ExactFractional && y == S::ExactFractional) return row(0, inf, 0);
  return std::nullopt;
}

bool TableReport::all_hold() const {
  for (const auto& c : cells) {
    if (!c.holds) return false;
  }
  return true;
}

TableReport check_product_table(const DRWElement& x, const DRWElement& y, const Rational& eps) {
  require_positive(eps);
  auto sx = summand_of(x);
  auto sy = summand_of(y);
  if (!sx || !sy) throw std::invalid_argument("check_product_table needs each factor in a single summand");

  TableReport r{*sx, *sy, false, {}};
  if (!table_constant(*sx, *sy, Summand::Integral)) {
    r.row_x = *sy;
    r.row_y = *sx;
    r.swapped = true;
  }
  const DRWElement product = mul(x, y);
  const ExtendedRational bound = zeta(x, eps).value + zeta(y, eps).value;
  const Summand targets[] = {Summand::Integral, Summand::PureFractional, Summand::ExactFractional};
  for (std::size_t k = 0; k < 3; ++k) {
    TableCell& cell = r.cells[k];
    cell.target = targets[k];
    cell.constant = *table_constant(r.row_x, r.row_y, cell.target);
    DRWElement part = project(product, cell.target);
    cell.projection = zeta(part, eps);
    if (!cell.constant) {
      cell.margin = part.is_zero() ? ExtendedRational::pos_inf() : ExtendedRational::neg_inf();
      cell.holds = part.is_zero();
    } else if (!bound.is_finite()) {
      // One factor is zero, so is the product.
      cell.margin = ExtendedRational::pos_inf();
      cell.holds = part.is_zero();
    } else {
      cell.margin = margin(cell.projection.value, bound + ExtendedRational(*cell.constant));
      cell.holds = cell.margin >= ExtendedRational(0);
    }
  }
  return r;
}

CounterexampleReport gamma_counterexample(const Context& ctx, int which, unsigned m, const Rational& eps) {
  require_positive(eps);
  if (which != 1 && which != 2) throw std::invalid_argument("counterexample must be 1 or 2");
  if (m < 1 || m + 1 > ctx.precision) {
    throw std::invalid_argument("m must satisfy 1 <= m <= M - 1");
  }
  if (which == 2 && ctx.nvars < 2) throw std::invalid_argument("the second counterexample needs two variables");
  if (ctx.nvars < 1) throw std::invalid_argument("at least one variable is needed");

  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= ctx.p;
  const Index second = which == 1 ? 0 : 1;
  DRWElement x = verschiebung_power(
      DRWElement::teichmuller_monomial(ctx, WeightFunction::unit(ctx.p, ctx.nvars, 0, pm - 1)), m);
  DRWElement y = differential(
      verschiebung_power(DRWElement::teichmuller_monomial(ctx, WeightFunction::unit(ctx.p, ctx.nvars, second, 1)), m));
  DRWElement product = mul(x, y);

  CounterexampleReport r{x, y, product, gamma(x, eps), gamma(y, eps), gamma(product, eps), {}, {}, {}, false, false};
  const Rational big_m(static_cast<unsigned long>(m));
  const Rational pm_q(static_cast<unsigned long>(pm));
  r.expected_x = big_m - eps * Rational(static_cast<unsigned long>(pm - 1)) / pm_q;
  r.expected_y = big_m - eps / pm_q;
  r.expected_product = big_m - eps;
  r.matches_closed_forms = r.gamma_x.value == ExtendedRational(r.expected_x) &&
                           r.gamma_y.value == ExtendedRational(r.expected_y) &&
                           r.gamma_product.value == ExtendedRational(r.expected_product);
  r.violated = r.gamma_product.value < r.gamma_x.value + r.gamma_y.value;
  return r;
}

SandwichReport compare_gamma_zeta(const DRWElement& x, const Rational& eps) {
  require_positive(eps);
  const auto n = x.context().nvars;
  if (n == 0) throw std::invalid_argument("compare_gamma_zeta needs n >= 1");
  const Rational two_n(static_cast<unsigned long>(2 * n));
  SandwichReport r;
  r.upper = gamma(x, eps / two_n);
  r.upper.value = scale(r.upper.value, two_n);
  r.zeta = zeta(x, eps);
  r.lower = gamma(x, eps);
  r.holds = r.upper.value >= r.zeta.value && r.zeta.value >= r.lower.value;
  return r;
}

}  // namespace drw
