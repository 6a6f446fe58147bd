#pragma once

// The growth functions gamma_eps and zeta_eps on finite sums of basic
// elements, the pseudovaluation axiom checks and the product table.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "drw/element.hpp"

namespace drw {

/// A value of gamma or zeta. Terms whose coefficient is only known to lie in
/// V^M contribute 2nM (resp. M) as a lower bound; lower_bound_only is set when
/// such a term attains the minimum. Canonical elements never store zero
/// coefficients, so the flag only appears for hand-built term lists.
struct Evaluation {
  ExtendedRational value = ExtendedRational::pos_inf();
  bool lower_bound_only = false;
};

/// valV(eta) + u(a) - eps |a|.
Rational gamma_term(const TermKey& key, unsigned val_v, const Rational& eps);
/// 2n valV(eta) + k u(a) - eps |a| with k = #I if I_0 = ∅, #I + 1 otherwise.
Rational zeta_term(const TermKey& key, unsigned val_v, const Rational& eps);

/// Both throw std::invalid_argument unless eps > 0.
Evaluation gamma(const DRWElement& x, const Rational& eps);
Evaluation zeta(const DRWElement& x, const Rational& eps);

/// lhs - bound, read as +∞ when lhs = +∞ and as −∞ when only the bound is +∞.
ExtendedRational margin(const ExtendedRational& lhs, const ExtendedRational& bound);

struct AxiomCheck {
  std::string name;
  ExtendedRational margin;
  bool holds = false;
};

struct AxiomReport {
  Evaluation zeta_x, zeta_y, zeta_neg_x, zeta_sum, zeta_product;
  /// zero, one, negation, sum, product.
  std::vector<AxiomCheck> checks;
  /// Lowest zeta any term dropped from x*y by the truncation at p^M could have.
  ExtendedRational truncation_floor = ExtendedRational::pos_inf();
  /// The product bound would survive any term lost to truncation.
  bool conclusive = true;

  bool all_hold() const;
};

AxiomReport check_axioms(const DRWElement& x, const DRWElement& y, const Rational& eps);

struct TableCell {
  Summand target;
  /// The table constant c, or nullopt for a cell requiring an exact zero.
  std::optional<int> constant;
  Evaluation projection;
  ExtendedRational margin;
  bool holds = false;
};

struct TableReport {
  /// The row actually checked; (x, y) is swapped when the table lists (y, x).
  Summand row_x, row_y;
  bool swapped = false;
  std::array<TableCell, 3> cells;

  bool all_hold() const;
};

/// The table constant for row (x, y) and column target, if that row is listed.
std::optional<std::optional<int>> table_constant(Summand x, Summand y, Summand target);

/// Throws std::invalid_argument if x or y mixes summands.
TableReport check_product_table(const DRWElement& x, const DRWElement& y, const Rational& eps);

struct CounterexampleReport {
  DRWElement x, y, product;
  Evaluation gamma_x, gamma_y, gamma_product;
  Rational expected_x, expected_y, expected_product;
  bool matches_closed_forms = false;
  bool violated = false;
};

/// which = 1: V^m[X^{p^m-1}] * dV^m[X]; which = 2: V^m[X^{p^m-1}] * dV^m[Y].
/// Requires 1 <= m <= M - 1 and n >= 2 for which = 2.
CounterexampleReport gamma_counterexample(const Context& ctx, int which, unsigned m, const Rational& eps);

struct SandwichReport {
  Evaluation upper;  // 2n gamma_{eps/2n}(x)
  Evaluation zeta;
  Evaluation lower;  // gamma_eps(x)
  bool holds = false;
};

SandwichReport compare_gamma_zeta(const DRWElement& x, const Rational& eps);

}  // namespace drw
