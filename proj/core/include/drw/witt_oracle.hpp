#pragma once

// Independent degree-0 oracle: length-M Witt vectors over Z[X_1..X_n],
// computed through ghost components, reduced mod p only for comparisons.

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "drw/element.hpp"

namespace drw {

using Monomial = std::vector<std::uint32_t>;

class IntPoly {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  IntPoly() = default;
  explicit IntPoly(std::size_t nvars) : nvars_(nvars) {}

  static IntPoly constant(std::size_t nvars, const BigInt& c);
  static IntPoly monomial(Monomial exponents, const BigInt& c = 1);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const BigInt& c);

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
  friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  friend IntPoly operator*(const BigInt& c, const IntPoly& x);

  IntPoly pow(std::uint64_t k) const;

  /// Divides every coefficient by d; throws std::logic_error if one is not divisible.
  IntPoly exact_div(const BigInt& d) const;
  /// Coefficients reduced into [0, m).
  IntPoly reduced_mod(const BigInt& m) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntPoly& f);

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

struct IntPolyWitt {
  unsigned p = 2;
  std::vector<IntPoly> coords;

  std::size_t length() const { return coords.size(); }
  std::size_t nvars() const { return coords.empty() ? 0 : coords.front().nvars(); }

  static IntPolyWitt zero(unsigned p, std::size_t length, std::size_t nvars);
  /// (f, 0, ..., 0).
  static IntPolyWitt teich(unsigned p, std::size_t length, const IntPoly& f);

  friend bool operator==(const IntPolyWitt&, const IntPolyWitt&) = default;
};

std::vector<IntPoly> ghost(const IntPolyWitt& w);
/// Inverts ghost by exact division; throws std::logic_error when the input
/// is not a ghost vector.
IntPolyWitt unghost(unsigned p, const std::vector<IntPoly>& g);

IntPolyWitt witt_add(const IntPolyWitt& x, const IntPolyWitt& y);
IntPolyWitt witt_mul(const IntPolyWitt& x, const IntPolyWitt& y);
/// Coordinate shift, keeping the length.
IntPolyWitt verschiebung_w(const IntPolyWitt& w);
/// Ghost shift; the result is one coordinate shorter.
IntPolyWitt frobenius_w(const IntPolyWitt& w);

/// Every coordinate reduced mod p.
IntPolyWitt reduce_mod_p(const IntPolyWitt& w);

/// Teichmüller digits (c_0, ..., c_{M-1}) of eta, as constant polynomials.
IntPolyWitt scalar_to_coords(const WittScalar& eta, std::size_t nvars);

/// The image of a degree-0 element in W_M(F_p[X]), coordinates reduced mod p.
/// Throws std::invalid_argument on terms of positive degree.
IntPolyWitt eval_degree0(const DRWElement& x);

bool oracle_equal(const DRWElement& x, const DRWElement& y);

}  // namespace drw
