#pragma once

// The graded product of de Rham-Witt forms, computed through the rewriting
// chain
//
//   e(eta, a, I)  --expand_g-->  sums of h(a, {j_1, ..., j_m})
//   h * h         --mul_h---->   Z_(p)-multiple of a single h
//   h             --expand_h-->  sums of e(s, a, J)
//
// for integral weights, and Verschiebung conjugation plus the Leibniz rule to
// reduce fractional weights to the integral case.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "drw/element.hpp"

namespace drw {

/// An exact rational whose denominator is prime to p.
class ZpCoefficient {
 public:
  ZpCoefficient(unsigned p, Rational value);
  static ZpCoefficient one(unsigned p) { return ZpCoefficient(p, Rational(1)); }

  const Rational& value() const { return value_; }
  WittScalar to_scalar(unsigned precision) const;

  ZpCoefficient operator*(const ZpCoefficient& other) const;
  ZpCoefficient operator-() const { return ZpCoefficient(p_, Rational(-value_)); }

  friend bool operator==(const ZpCoefficient& x, const ZpCoefficient& y) { return x.p_ == y.p_ && x.value_ == y.value_; }

 private:
  unsigned p_;
  Rational value_;
};

/// [x]^m d([x]^m') = coeff * F^frobenius_power(d([x]^base)).
struct TeichmullerProduct {
  ZpCoefficient coeff;
  unsigned frobenius_power;
  std::uint64_t base;
};

/// Throws std::invalid_argument when m = m' = 0.
TeichmullerProduct teichmuller_product_coeff(unsigned p, std::uint64_t m, std::uint64_t m_prime);

/// h(a, I) = prod_{i in Supp(a) \ I} [X_i]^{a_i} * prod_{j in I} g(a|{j}),
/// with the g factors multiplied in ⪯ order of a. Weights are integral.
class HElement {
 public:
  /// Validates integrality and I ⊆ Supp(a), then sorts I by ⪯. The returned
  /// sign relates the product in the given order to the canonical one.
  static std::pair<int, HElement> make(WeightFunction a, IndexSet factors);

  const WeightFunction& weight() const { return a_; }
  std::span<const Index> factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }

  friend bool operator==(const HElement&, const HElement&) = default;

 private:
  HElement(WeightFunction a, IndexSet factors) : a_(std::move(a)), factors_(std::move(factors)) {}

  WeightFunction a_;
  IndexSet factors_;
};

struct HTerm {
  ZpCoefficient coeff;
  HElement h;
};

/// h(a, I) h(b, J) = coeff * h(a + b, I ∪ J), or nullopt (zero) when I ∩ J ≠ ∅.
std::optional<HTerm> mul_h(const HElement& x, const HElement& y);

struct GExpansionTerm {
  unsigned p_exponent;
  HElement h;
};

/// g(a) = sum_{j in Supp(a)} p^{val_p(a_j) - val_p(a)} h(a, {j}) for integral a ≠ 0.
std::vector<GExpansionTerm> expand_g(const WeightFunction& a);

/// h(a, I) as a sum of basic elements e(s, a, J) with #J = #I.
DRWElement expand_h(const Context& ctx, const HElement& h);

/// Product of two basic elements with integral weights.
DRWElement mul_e_integral(const Context& ctx, const BasicElement& x, const BasicElement& y);

/// Product of two arbitrary basic elements.
DRWElement mul_e(const Context& ctx, const BasicElement& x, const BasicElement& y);

DRWElement mul(const DRWElement& x, const DRWElement& y);

inline DRWElement operator*(const DRWElement& x, const DRWElement& y) { return mul(x, y); }

}  // namespace drw
