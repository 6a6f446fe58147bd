#pragma once

// Random weights and elements for property checks. Trials derive their own
// seed from a base seed so that runs are reproducible trial by trial.

#include <cstdint>
#include <optional>
#include <random>

#include "drw/element.hpp"

namespace drw {

struct SampleBounds {
  /// Upper bound on |a|.
  unsigned max_total = 8;
  /// Upper bound on u(a).
  unsigned max_u = 3;
  /// Number of terms per element is drawn from [1, max_terms].
  unsigned max_terms = 5;
  /// Partition sizes are capped here (and by #Supp(a)).
  std::optional<std::size_t> max_degree;
  /// Draws coefficients divisible by high powers of p with some probability.
  bool spread_valuations = true;
};

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

class Sampler {
 public:
  Sampler(Context ctx, std::uint64_t seed, SampleBounds bounds = {});

  const Context& context() const { return ctx_; }
  std::mt19937_64& engine() { return rng_; }

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  /// Nonzero weight with u(a) = u exactly.
  WeightFunction weight_with_u(unsigned u);
  WeightFunction weight();
  WittScalar nonzero_scalar();

  BasicElement basic();
  BasicElement basic_in(Summand s);
  /// A basic element of the given degree, when the weight allows it.
  BasicElement basic_of_degree(std::size_t degree);

  DRWElement element();
  DRWElement element_in(Summand s);
  DRWElement homogeneous(std::size_t degree);
  /// Sum of terms with I = ∅.
  DRWElement degree0();

 private:
  IndexSet random_subset(IndexSet pool, std::size_t max_size);
  Partition partition_for(const WeightFunction& a, std::optional<Summand> s);

  Context ctx_;
  SampleBounds bounds_;
  std::mt19937_64 rng_;
};

}  // namespace drw
