#pragma once

// Finitely supported de Rham-Witt forms over F_p[X_1..X_n], written uniquely
// as sums of basic elements e(eta, a, I) with coefficients in W(F_p) / p^M.
//
// e(eta, a, I) is the product of its factors in interval order:
//   V^u(eta [X^{p^u a|I_0}]) * g(a|I_1) * ... * g(a|I_m)      if I_0 != ∅ or u = 0
//   d V^u(eta [X^{p^u a|I_1}]) * g(a|I_2) * ... * g(a|I_m)    if I_0 = ∅ and u != 0
// with g(b) = F^{u(b)+val_p(b)} d V^{u(b)} [X^{p^{-val_p(b)} b}].

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>

#include "drw/weights.hpp"
#include "drw/witt_scalar.hpp"

namespace drw {

/// Session parameters: the prime, the number of variables and the precision M.
struct Context {
  unsigned p = 2;
  std::size_t nvars = 2;
  unsigned precision = 6;

  /// Throws std::invalid_argument if p is not prime or p^M is too large.
  void validate() const;

  WittScalar scalar(std::uint64_t value) const { return WittScalar(p, precision, value); }
  WeightFunction zero_weight() const { return WeightFunction(p, nvars); }

  friend bool operator==(const Context&, const Context&) = default;
};

/// The key (a, I) of a basic element.
class TermKey {
 public:
  TermKey(WeightFunction weight, Partition partition);

  const WeightFunction& weight() const { return weight_; }
  const Partition& partition() const { return partition_; }
  const Rational& total_weight() const { return total_; }
  std::size_t degree() const { return partition_.size(); }
  unsigned u() const { return weight_.u(); }
  bool lower_interval_empty() const { return lower_empty_; }

  /// Degree, then |a|, then entries, then the partition.
  friend bool operator<(const TermKey& x, const TermKey& y);
  friend bool operator==(const TermKey& x, const TermKey& y) {
    return x.weight_ == y.weight_ && x.partition_ == y.partition_;
  }

 private:
  WeightFunction weight_;
  Partition partition_;
  Rational total_;
  bool lower_empty_;
};

struct BasicElement {
  WittScalar eta;
  WeightFunction a;
  Partition I;

  std::size_t degree() const { return I.size(); }
  bool lower_interval_empty() const { return drw::lower_interval_empty(a, I); }
  TermKey key() const { return TermKey(a, I); }
};

/// The three summands of WΩ = int ⊕ frp ⊕ d(frp).
enum class Summand { Integral, PureFractional, ExactFractional };

const char* to_string(Summand s);

Summand classify(const TermKey& key);

class DRWElement {
 public:
  using TermMap = std::map<TermKey, WittScalar>;

  explicit DRWElement(Context ctx);

  static DRWElement zero(const Context& ctx) { return DRWElement(ctx); }
  static DRWElement one(const Context& ctx);
  static DRWElement scalar(const Context& ctx, const WittScalar& eta);
  static DRWElement basic(const Context& ctx, const BasicElement& e);
  /// [c X^a] for an integral weight a and c ∈ [0, p).
  static DRWElement teichmuller_monomial(const Context& ctx, const WeightFunction& a, std::uint64_t c = 1);

  const Context& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds eta * e(1, a, I) in place, dropping the key if the sum vanishes.
  void add_term(const TermKey& key, const WittScalar& eta);
  void add_term(const BasicElement& e) { add_term(e.key(), e.eta); }

  /// The degree of every term, or nullopt for mixed (or zero) elements.
  std::optional<std::size_t> degree() const;
  DRWElement homogeneous_part(std::size_t degree) const;

  DRWElement& operator+=(const DRWElement& other);
  DRWElement& operator-=(const DRWElement& other);
  friend DRWElement operator+(DRWElement x, const DRWElement& y) { return x += y; }
  friend DRWElement operator-(DRWElement x, const DRWElement& y) { return x -= y; }
  DRWElement operator-() const;

  friend bool operator==(const DRWElement& x, const DRWElement& y) {
    return x.ctx_ == y.ctx_ && x.terms_ == y.terms_;
  }

 private:
  void require_compatible(const DRWElement& other) const;

  Context ctx_;
  TermMap terms_;
};

/// Human-readable "e(eta; a1, ..., an; {i, ...}) + ..." (1-based indices).
std::ostream& operator<<(std::ostream& os, const DRWElement& x);

DRWElement scalar_mul(const WittScalar& c, const DRWElement& x);

DRWElement differential(const Context& ctx, const BasicElement& e);
DRWElement differential(const DRWElement& x);
DRWElement frobenius(const Context& ctx, const BasicElement& e);
DRWElement frobenius(const DRWElement& x);
DRWElement verschiebung(const Context& ctx, const BasicElement& e);
DRWElement verschiebung(const DRWElement& x);

/// k-fold iterates.
DRWElement frobenius_power(DRWElement x, unsigned k);
DRWElement verschiebung_power(DRWElement x, unsigned k);

DRWElement project_int(const DRWElement& x);
DRWElement project_frp(const DRWElement& x);
DRWElement project_dfrp(const DRWElement& x);
DRWElement project_frac(const DRWElement& x);
DRWElement project(const DRWElement& x, Summand s);

/// A pure fractional y' with d(y') = y. Throws std::invalid_argument if y
/// has a term outside d(frp).
DRWElement dfrp_preimage(const DRWElement& y);

/// The single summand containing x, or nullopt if x mixes summands. The zero
/// element is reported as integral.
std::optional<Summand> summand_of(const DRWElement& x);

}  // namespace drw
