#pragma once

// Weight functions [1, n] -> N[1/p], the order on their supports, partitions
// and the interval decomposition I_0, ..., I_m a partition induces.
//
// Indices are 0-based in this API; the textual syntax (X1..Xn) is 1-based.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "drw/rational.hpp"

namespace drw {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Valuation of the zero weight (min over an empty set).
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/// mantissa * p^(-vexp), normalized so that p does not divide a nonzero
/// mantissa. Zero is stored as (0, 0). The prime lives in the owning
/// WeightFunction.
struct PAdicRational {
  std::uint64_t mantissa = 0;
  std::int32_t vexp = 0;

  static PAdicRational make(unsigned p, std::uint64_t mantissa, std::int32_t vexp);

  bool is_zero() const { return mantissa == 0; }
  /// val_p of the value; kInfiniteValuation for zero.
  int valp() const { return is_zero() ? kInfiniteValuation : -vexp; }
  bool is_integral() const { return vexp <= 0; }
  Rational value(unsigned p) const;

  friend bool operator==(const PAdicRational&, const PAdicRational&) = default;
  friend auto operator<=>(const PAdicRational&, const PAdicRational&) = default;
};

class WeightFunction {
 public:
  WeightFunction() = default;
  /// The zero weight on n variables.
  WeightFunction(unsigned p, std::size_t nvars);
  /// Entries must already be normalized.
  WeightFunction(unsigned p, std::vector<PAdicRational> entries);

  /// Throws std::invalid_argument unless every value is a non-negative
  /// element of N[1/p].
  static WeightFunction from_rationals(unsigned p, std::span<const Rational> values);
  /// The weight with a single nonzero entry a_i = value.
  static WeightFunction unit(unsigned p, std::size_t nvars, Index i, std::uint64_t value);

  unsigned prime() const { return p_; }
  std::size_t nvars() const { return entries_.size(); }
  const PAdicRational& operator[](Index i) const { return entries_.at(i); }
  std::span<const PAdicRational> entries() const { return entries_; }

  bool is_zero() const;
  bool is_integral() const;
  /// Supp(a) in increasing index order.
  IndexSet support() const;
  /// Supp(a) sorted by the order ⪯.
  IndexSet ordered_support() const;
  /// min over all entries of val_p; kInfiniteValuation for the zero function.
  int valp() const;
  /// max{0, -valp(a)}.
  unsigned u() const;
  Rational total() const;

  WeightFunction restricted_to(std::span<const Index> indices) const;
  /// i ⪯ j. Throws std::out_of_range if either index is outside Supp(a).
  bool precedes(Index i, Index j) const;
  /// Strict i ≺ j; precondition as for precedes.
  bool strictly_precedes(Index i, Index j) const { return i != j && precedes(i, j); }
  /// The ⪯-least support index; throws std::domain_error on the zero function.
  Index min_index() const;

  /// Multiplies every entry by p^k (k may be negative).
  WeightFunction scaled(int k) const;
  /// Integer value of entry i; throws if it is not integral or overflows.
  std::uint64_t integer_entry(Index i) const;

  WeightFunction operator+(const WeightFunction& other) const;

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  unsigned p_ = 2;
  std::vector<PAdicRational> entries_;
};

/// Canonical order on values: compares the rationals themselves.
std::strong_ordering compare_values(unsigned p, const PAdicRational& x, const PAdicRational& y);

/// A subset of Supp(a), stored sorted by the ⪯ order of the weight it was
/// built for. Only meaningful together with that weight.
class Partition {
 public:
  Partition() = default;

  /// Validates indices ⊆ Supp(a) (no duplicates) and sorts them by ⪯.
  static Partition of(const WeightFunction& a, IndexSet indices);

  std::span<const Index> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(Index i) const;
  Index operator[](std::size_t k) const { return indices_.at(k); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  explicit Partition(IndexSet sorted) : indices_(std::move(sorted)) {}

  IndexSet indices_;
};

/// I_0, ..., I_m for a partition of size m. Each interval is listed in ⪯ order.
std::vector<IndexSet> intervals(const WeightFunction& a, const Partition& partition);

/// I_0 as a set (⪯ order): the support elements strictly before the first
/// partition index, or all of Supp(a) when the partition is empty.
IndexSet lower_interval(const WeightFunction& a, const Partition& partition);

/// I_0 = ∅.
bool lower_interval_empty(const WeightFunction& a, const Partition& partition);

/// Sign of the permutation that sorts `indices` by ⪯ of `a`, and the sorted
/// result. Indices must be distinct elements of Supp(a).
std::pair<int, IndexSet> sort_by_order(const WeightFunction& a, IndexSet indices);

}  // namespace drw
