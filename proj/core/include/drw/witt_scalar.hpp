#pragma once

// W(F_p) truncated at length M, realized as Z/p^M. On this ring F is the
// identity and V is multiplication by p.

#include <cstdint>
#include <ostream>

#include "drw/rational.hpp"

namespace drw {

/// p^M must stay below 2^62 so products fit in 128-bit intermediates.
void validate_precision(unsigned p, unsigned precision);

class WittScalar {
 public:
  WittScalar() = default;
  WittScalar(unsigned p, unsigned precision, std::uint64_t value = 0);
  /// Reduces an arbitrary (possibly negative) integer mod p^M.
  static WittScalar from_integer(unsigned p, unsigned precision, const BigInt& value);

  unsigned prime() const { return p_; }
  unsigned precision() const { return precision_; }
  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  WittScalar operator+(const WittScalar& other) const;
  WittScalar operator-(const WittScalar& other) const;
  WittScalar operator*(const WittScalar& other) const;
  WittScalar operator-() const;
  WittScalar& operator+=(const WittScalar& other) { return *this = *this + other; }
  WittScalar& operator*=(const WittScalar& other) { return *this = *this * other; }

  /// Multiplication by p^k.
  WittScalar times_p_power(unsigned k) const;

  friend bool operator==(const WittScalar&, const WittScalar&) = default;
  friend std::ostream& operator<<(std::ostream& os, const WittScalar& x) { return os << x.residue_; }

 private:
  void require_compatible(const WittScalar& other) const;

  unsigned p_ = 2;
  unsigned precision_ = 1;
  std::uint64_t modulus_ = 2;
  std::uint64_t residue_ = 0;
};

/// c * x for c ∈ Z_(p); throws std::domain_error when p divides the denominator.
WittScalar mul_zp_rational(const Rational& c, const WittScalar& x);

/// The Teichmüller representative of c ∈ F_p: the unique t ≡ c (mod p) with t^p = t.
WittScalar teichmuller(unsigned p, unsigned precision, std::uint64_t c);

WittScalar frobenius(const WittScalar& x);
WittScalar verschiebung(const WittScalar& x);

/// V-adic valuation. When the residue is zero only `value >= precision` is
/// known and `saturated` is set.
struct VAdicValuation {
  unsigned value = 0;
  bool saturated = false;
};

VAdicValuation valuation_v(const WittScalar& x);

}  // namespace drw
