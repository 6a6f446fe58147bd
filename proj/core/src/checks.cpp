#include "drw/checks.hpp"

namespace drw {

AxiomRun run_axiom_trials(const Context& ctx, const Rational& eps, std::size_t trials, std::uint64_t seed,
                          const SampleBounds& bounds) {
  AxiomRun run;
  for (std::size_t t = 0; t < trials; ++t) {
    Sampler sampler(ctx, trial_seed(seed, t), bounds);
    DRWElement x = sampler.element();
    DRWElement y = sampler.element();
    AxiomReport report = check_axioms(x, y, eps);
    ++run.pairs;
    if (!report.all_hold()) ++run.failures;
    if (!report.conclusive) ++run.inconclusive;
    const auto& product = report.checks.back();
    if (product.margin < run.min_product_margin) run.min_product_margin = product.margin;
  }
  return run;
}

std::vector<std::pair<Summand, Summand>> table_rows() {
  using S = Summand;
  return {{S::Integral, S::Integral},
          {S::PureFractional, S::Integral},
          {S::ExactFractional, S::Integral},
          {S::PureFractional, S::PureFractional},
          {S::ExactFractional, S::PureFractional},
          {S::ExactFractional, S::ExactFractional}};
}

std::vector<TableRun> run_table_trials(const Context& ctx, const Rational& eps, std::size_t trials_per_row,
                                       std::uint64_t seed, const SampleBounds& bounds) {
  std::vector<TableRun> runs;
  std::uint64_t trial = 0;
  for (auto [sx, sy] : table_rows()) {
    TableRun run{sx, sy};
    for (std::size_t t = 0; t < trials_per_row; ++t, ++trial) {
      Sampler sampler(ctx, trial_seed(seed, trial), bounds);
      DRWElement x = sampler.element_in(sx);
      DRWElement y = sampler.element_in(sy);
      TableReport report = check_product_table(x, y, eps);
      ++run.pairs;
      if (!report.all_hold()) ++run.failures;
      for (std::size_t k = 0; k < 3; ++k) {
        const TableCell& cell = report.cells[k];
        if (!cell.constant) {
          if (cell.holds) ++run.zero_checks[k];
        } else if (cell.margin < run.min_margin[k]) {
          run.min_margin[k] = cell.margin;
        }
      }
    }
    runs.push_back(run);
  }
  return runs;
}

}  // namespace drw
