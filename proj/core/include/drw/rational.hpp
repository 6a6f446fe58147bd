#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace drw {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "n", "n/d" or "-n/d" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "13/8", "-1/2", "3".
std::string to_string(const Rational& q);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const BigInt& value, unsigned p);

/// An element of Q ∪ {+∞, −∞} with the usual total order.
class ExtendedRational {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtendedRational() : ExtendedRational(Rational(0)) {}
  ExtendedRational(Rational value) : kind_(Kind::Finite), value_(std::move(value)) { value_.canonicalize(); }
  ExtendedRational(long value) : ExtendedRational(Rational(value)) {}

  static ExtendedRational pos_inf() { return ExtendedRational(Kind::PosInf); }
  static ExtendedRational neg_inf() { return ExtendedRational(Kind::NegInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Precondition: is_finite().
  const Rational& value() const;

  std::string str() const;

  /// +∞ + −∞ is undefined and throws std::domain_error.
  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator-(const ExtendedRational& a);

  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedRational& q) { return os << q.str(); }

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b);

}  // namespace drw
