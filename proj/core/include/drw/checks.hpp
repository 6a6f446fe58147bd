#pragma once

// Randomized trial runs over the pseudovaluation axioms and the product
// table, shared by the CLI check commands and the acceptance suite.

#include <array>
#include <cstdint>
#include <vector>

#include "drw/pseudoval.hpp"
#include "drw/sampling.hpp"

namespace drw {

struct AxiomRun {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  /// Pairs whose product margin could in principle be hidden by truncation.
  std::size_t inconclusive = 0;
  /// Smallest product margin seen over pairs with both values finite.
  ExtendedRational min_product_margin = ExtendedRational::pos_inf();
};

AxiomRun run_axiom_trials(const Context& ctx, const Rational& eps, std::size_t trials, std::uint64_t seed,
                          const SampleBounds& bounds = {});

struct TableRun {
  Summand row_x, row_y;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  /// Per column: the smallest margin over finite cells.
  std::array<ExtendedRational, 3> min_margin{ExtendedRational::pos_inf(), ExtendedRational::pos_inf(),
                                             ExtendedRational::pos_inf()};
  /// Per column: how many exact-zero projections were verified.
  std::array<std::size_t, 3> zero_checks{};
};

/// The six rows of the product table, in table order.
std::vector<std::pair<Summand, Summand>> table_rows();

std::vector<TableRun> run_table_trials(const Context& ctx, const Rational& eps, std::size_t trials_per_row,
                                       std::uint64_t seed, const SampleBounds& bounds = {});

}  // namespace drw
