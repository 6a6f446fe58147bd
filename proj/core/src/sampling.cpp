#include "drw/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace drw {

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
  // splitmix64 of the pair
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

Sampler::Sampler(Context ctx, std::uint64_t seed, SampleBounds bounds)
    : ctx_(ctx), bounds_(bounds), rng_(seed) {
  ctx_.validate();
  if (ctx_.nvars == 0) throw std::invalid_argument("sampling needs at least one variable");
  if (bounds_.max_total == 0) throw std::invalid_argument("max_total must be positive");
}

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

IndexSet Sampler::random_subset(IndexSet pool, std::size_t max_size) {
  std::shuffle(pool.begin(), pool.end(), rng_);
  std::size_t k = uniform(0, std::min(max_size, pool.size()));
  pool.resize(k);
  return pool;
}

WeightFunction Sampler::weight_with_u(unsigned u) {
  std::uint64_t scale = 1;
  for (unsigned i = 0; i < u; ++i) scale *= ctx_.p;
  const std::uint64_t budget = bounds_.max_total * scale;

  IndexSet all(ctx_.nvars);
  for (Index i = 0; i < ctx_.nvars; ++i) all[i] = i;
  std::shuffle(all.begin(), all.end(), rng_);
  std::size_t size = uniform(1, std::min<std::uint64_t>(ctx_.nvars, budget));
  all.resize(size);

  std::vector<std::uint64_t> numerators(ctx_.nvars, 0);
  const std::uint64_t cap = budget / size;
  for (Index i : all) numerators[i] = uniform(1, cap);
  if (u > 0) {
    bool has_unit = std::any_of(all.begin(), all.end(), [&](Index i) { return numerators[i] % ctx_.p != 0; });
    if (!has_unit) numerators[all.front()] = numerators[all.front()] > 1 ? numerators[all.front()] - 1 : 1;
  }
  std::vector<PAdicRational> entries;
  entries.reserve(ctx_.nvars);
  for (auto k : numerators) entries.push_back(PAdicRational::make(ctx_.p, k, static_cast<std::int32_t>(u)));
  return WeightFunction(ctx_.p, std::move(entries));
}

WeightFunction Sampler::weight() { return weight_with_u(static_cast<unsigned>(uniform(0, bounds_.max_u))); }

WittScalar Sampler::nonzero_scalar() {
  const std::uint64_t modulus = ctx_.scalar(0).modulus();
  if (!bounds_.spread_valuations) return ctx_.scalar(uniform(1, modulus - 1));
  unsigned k = static_cast<unsigned>(uniform(0, ctx_.precision - 1));
  std::uint64_t unit = uniform(1, modulus - 1);
  while (unit % ctx_.p == 0) unit = uniform(1, modulus - 1);
  return ctx_.scalar(unit).times_p_power(k);
}

Partition Sampler::partition_for(const WeightFunction& a, std::optional<Summand> s) {
  const std::size_t cap = bounds_.max_degree.value_or(ctx_.nvars);
  IndexSet support = a.ordered_support();
  const Index first = support.front();
  if (!s || *s == Summand::Integral) return Partition::of(a, random_subset(support, cap));
  IndexSet rest(support.begin() + 1, support.end());
  if (*s == Summand::PureFractional) return Partition::of(a, random_subset(rest, cap));
  if (cap == 0) throw std::invalid_argument("d(frp) elements need degree at least 1");
  IndexSet idx = random_subset(rest, cap - 1);
  idx.push_back(first);
  return Partition::of(a, std::move(idx));
}

BasicElement Sampler::basic() {
  WeightFunction a = weight();
  Partition I = partition_for(a, std::nullopt);
  return {nonzero_scalar(), std::move(a), std::move(I)};
}

BasicElement Sampler::basic_in(Summand s) {
  if (s != Summand::Integral && bounds_.max_u == 0) throw std::invalid_argument("fractional terms need max_u >= 1");
  unsigned u = s == Summand::Integral ? 0 : static_cast<unsigned>(uniform(1, bounds_.max_u));
  WeightFunction a = weight_with_u(u);
  Partition I = partition_for(a, s);
  return {nonzero_scalar(), std::move(a), std::move(I)};
}

BasicElement Sampler::basic_of_degree(std::size_t degree) {
  if (degree > ctx_.nvars) throw std::invalid_argument("degree exceeds the number of variables");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    WeightFunction a = weight();
    IndexSet support = a.support();
    if (support.size() < degree) continue;
    std::shuffle(support.begin(), support.end(), rng_);
    support.resize(degree);
    Partition I = Partition::of(a, std::move(support));
    return {nonzero_scalar(), std::move(a), std::move(I)};
  }
  throw std::runtime_error("could not draw a weight with enough support");
}

DRWElement Sampler::element() {
  DRWElement x(ctx_);
  auto n = uniform(1, bounds_.max_terms);
  for (std::uint64_t k = 0; k < n; ++k) x.add_term(basic());
  return x;
}

DRWElement Sampler::element_in(Summand s) {
  DRWElement x(ctx_);
  auto n = uniform(1, bounds_.max_terms);
  for (std::uint64_t k = 0; k < n; ++k) x.add_term(basic_in(s));
  return x;
}

DRWElement Sampler::homogeneous(std::size_t degree) {
  DRWElement x(ctx_);
  auto n = uniform(1, bounds_.max_terms);
  for (std::uint64_t k = 0; k < n; ++k) x.add_term(basic_of_degree(degree));
  return x;
}

DRWElement Sampler::degree0() { return homogeneous(0); }

}  // namespace drw
