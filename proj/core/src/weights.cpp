#include "drw/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drw {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  u128 r = static_cast<u128>(a) * b;
  if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("weight entry overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r = checked_mul(r, p);
  return r;
}

}  // namespace

PAdicRational PAdicRational::make(unsigned p, std::uint64_t mantissa, std::int32_t vexp) {
  if (mantissa == 0) return {};
  while (mantissa % p == 0) {
    mantissa /= p;
    --vexp;
  }
  return {mantissa, vexp};
}

Rational PAdicRational::value(unsigned p) const {
  Rational r{BigInt(static_cast<unsigned long>(mantissa))};
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p, static_cast<unsigned long>(vexp < 0 ? -vexp : vexp));
  if (vexp >= 0) {
    r /= scale;
  } else {
    r *= scale;
  }
  r.canonicalize();
  return r;
}

std::strong_ordering compare_values(unsigned p, const PAdicRational& x, const PAdicRational& y) {
  if (x.vexp == y.vexp) return x.mantissa <=> y.mantissa;
  int c = cmp(x.value(p), y.value(p));
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

WeightFunction::WeightFunction(unsigned p, std::size_t nvars) : p_(p), entries_(nvars) {}

WeightFunction::WeightFunction(unsigned p, std::vector<PAdicRational> entries)
    : p_(p), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e != PAdicRational::make(p_, e.mantissa, e.vexp)) {
      throw std::invalid_argument("weight entry is not normalized");
    }
  }
}

WeightFunction WeightFunction::from_rationals(unsigned p, std::span<const Rational> values) {
  std::vector<PAdicRational> entries;
  entries.reserve(values.size());
  for (const auto& raw : values) {
    Rational q(raw);
    q.canonicalize();
    if (sgn(q) < 0) throw std::invalid_argument("weights must be non-negative, got " + to_string(q));
    if (sgn(q) == 0) {
      entries.push_back({});
      continue;
    }
    BigInt den = q.get_den();
    std::int32_t vexp = 0;
    while (den % p == 0) {
      den /= p;
      ++vexp;
    }
    if (den != 1) throw std::invalid_argument("weight " + to_string(q) + " is not in N[1/p]");
    BigInt num = q.get_num();
    if (!num.fits_ulong_p()) throw std::overflow_error("weight numerator too large");
    entries.push_back(PAdicRational::make(p, num.get_ui(), vexp));
  }
  return WeightFunction(p, std::move(entries));
}

WeightFunction WeightFunction::unit(unsigned p, std::size_t nvars, Index i, std::uint64_t value) {
  std::vector<PAdicRational> entries(nvars);
  entries.at(i) = PAdicRational::make(p, value, 0);
  return WeightFunction(p, std::move(entries));
}

bool WeightFunction::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

bool WeightFunction::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_integral(); });
}

IndexSet WeightFunction::support() const {
  IndexSet s;
  for (Index i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) s.push_back(i);
  }
  return s;
}

IndexSet WeightFunction::ordered_support() const {
  IndexSet s = support();
  std::sort(s.begin(), s.end(), [this](Index i, Index j) { return strictly_precedes(i, j); });
  return s;
}

int WeightFunction::valp() const {
  int v = kInfiniteValuation;
  for (const auto& e : entries_) v = std::min(v, e.valp());
  return v;
}

unsigned WeightFunction::u() const {
  int v = valp();
  return v < 0 ? static_cast<unsigned>(-v) : 0U;
}

Rational WeightFunction::total() const {
  Rational sum(0);
  for (const auto& e : entries_) {
    if (!e.is_zero()) sum += e.value(p_);
  }
  sum.canonicalize();
  return sum;
}

WeightFunction WeightFunction::restricted_to(std::span<const Index> indices) const {
  std::vector<PAdicRational> out(entries_.size());
  for (Index i : indices) out.at(i) = entries_.at(i);
  return WeightFunction(p_, std::move(out));
}

bool WeightFunction::precedes(Index i, Index j) const {
  if (i >= entries_.size() || j >= entries_.size() || entries_[i].is_zero() || entries_[j].is_zero()) {
    throw std::out_of_range("order is only defined on the support");
  }
  int vi = entries_[i].valp();
  int vj = entries_[j].valp();
  return vi < vj || (vi == vj && i <= j);
}

Index WeightFunction::min_index() const {
  IndexSet s = support();
  if (s.empty()) throw std::domain_error("min of the zero weight function");
  return *std::min_element(s.begin(), s.end(), [this](Index i, Index j) { return strictly_precedes(i, j); });
}

WeightFunction WeightFunction::scaled(int k) const {
  std::vector<PAdicRational> out(entries_);
  for (auto& e : out) {
    if (!e.is_zero()) e.vexp -= k;
  }
  return WeightFunction(p_, std::move(out));
}

std::uint64_t WeightFunction::integer_entry(Index i) const {
  const auto& e = entries_.at(i);
  if (!e.is_integral()) throw std::domain_error("weight entry is not an integer");
  return checked_mul(e.mantissa, checked_pow(p_, static_cast<unsigned>(-e.vexp)));
}

WeightFunction WeightFunction::operator+(const WeightFunction& other) const {
  if (p_ != other.p_ || entries_.size() != other.entries_.size()) {
    throw std::invalid_argument("adding weight functions of different shape");
  }
  std::vector<PAdicRational> out(entries_.size());
  for (Index i = 0; i < entries_.size(); ++i) {
    const auto& x = entries_[i];
    const auto& y = other.entries_[i];
    if (x.is_zero()) {
      out[i] = y;
    } else if (y.is_zero()) {
      out[i] = x;
    } else {
      std::int32_t e = std::max(x.vexp, y.vexp);
      std::uint64_t mx = checked_mul(x.mantissa, checked_pow(p_, static_cast<unsigned>(e - x.vexp)));
      std::uint64_t my = checked_mul(y.mantissa, checked_pow(p_, static_cast<unsigned>(e - y.vexp)));
      if (mx > std::numeric_limits<std::uint64_t>::max() - my) throw std::overflow_error("weight sum overflows");
      out[i] = PAdicRational::make(p_, mx + my, e);
    }
  }
  return WeightFunction(p_, std::move(out));
}

Partition Partition::of(const WeightFunction& a, IndexSet indices) {
  for (Index i : indices) {
    if (i >= a.nvars() || a[i].is_zero()) {
      throw std::invalid_argument("partition index X" + std::to_string(i + 1) + " is outside the support");
    }
  }
  std::sort(indices.begin(), indices.end(), [&a](Index i, Index j) { return a.strictly_precedes(i, j); });
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
    throw std::invalid_argument("partition has a repeated index");
  }
  return Partition(std::move(indices));
}

bool Partition::contains(Index i) const { return std::find(indices_.begin(), indices_.end(), i) != indices_.end(); }

std::vector<IndexSet> intervals(const WeightFunction& a, const Partition& partition) {
  std::vector<IndexSet> out(partition.size() + 1);
  std::size_t current = 0;
  for (Index i : a.ordered_support()) {
    while (current < partition.size() && a.precedes(partition[current], i)) ++current;
    out[current].push_back(i);
  }
  return out;
}

IndexSet lower_interval(const WeightFunction& a, const Partition& partition) {
  IndexSet out;
  for (Index i : a.ordered_support()) {
    if (!partition.empty() && a.precedes(partition[0], i)) break;
    out.push_back(i);
  }
  return out;
}

bool lower_interval_empty(const WeightFunction& a, const Partition& partition) {
  if (a.is_zero()) return true;
  return !partition.empty() && partition[0] == a.min_index();
}

std::pair<int, IndexSet> sort_by_order(const WeightFunction& a, IndexSet indices) {
  int sign = 1;
  // insertion sort keeps the transposition count explicit
  for (std::size_t k = 1; k < indices.size(); ++k) {
    for (std::size_t j = k; j > 0 && a.strictly_precedes(indices[j], indices[j - 1]); --j) {
      std::swap(indices[j], indices[j - 1]);
      sign = -sign;
    }
  }
  return {sign, std::move(indices)};
}

}  // namespace drw
