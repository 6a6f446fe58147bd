#include "drw/witt_scalar.hpp"

#include <stdexcept>
#include <string>

namespace drw {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t power_modulus(unsigned p, unsigned precision) {
  u128 m = 1;
  for (unsigned i = 0; i < precision; ++i) {
    m *= p;
    if (m >= (static_cast<u128>(1) << 62)) {
      throw std::invalid_argument("p^M too large for 64-bit residues");
    }
  }
  return static_cast<std::uint64_t>(m);
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace

void validate_precision(unsigned p, unsigned precision) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (precision == 0) throw std::invalid_argument("precision must be at least 1");
  power_modulus(p, precision);
}

WittScalar::WittScalar(unsigned p, unsigned precision, std::uint64_t value)
    : p_(p), precision_(precision), modulus_(power_modulus(p, precision)), residue_(value % modulus_) {}

WittScalar WittScalar::from_integer(unsigned p, unsigned precision, const BigInt& value) {
  WittScalar out(p, precision);
  BigInt r = value % BigInt(static_cast<unsigned long>(out.modulus_));
  if (r < 0) r += static_cast<unsigned long>(out.modulus_);
  out.residue_ = r.get_ui();
  return out;
}

void WittScalar::require_compatible(const WittScalar& other) const {
  if (p_ != other.p_ || precision_ != other.precision_) {
    throw std::invalid_argument("Witt scalars with different p or precision");
  }
}

WittScalar WittScalar::operator+(const WittScalar& other) const {
  require_compatible(other);
  WittScalar out(*this);
  out.residue_ = (residue_ + other.residue_) % modulus_;
  return out;
}

WittScalar WittScalar::operator-(const WittScalar& other) const { return *this + (-other); }

WittScalar WittScalar::operator*(const WittScalar& other) const {
  require_compatible(other);
  WittScalar out(*this);
  out.residue_ = mulmod(residue_, other.residue_, modulus_);
  return out;
}

WittScalar WittScalar::operator-() const {
  WittScalar out(*this);
  out.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  return out;
}

WittScalar WittScalar::times_p_power(unsigned k) const {
  WittScalar out(*this);
  for (unsigned i = 0; i < k && out.residue_ != 0; ++i) out.residue_ = mulmod(out.residue_, p_, modulus_);
  return out;
}

WittScalar mul_zp_rational(const Rational& c, const WittScalar& x) {
  Rational q(c);
  q.canonicalize();
  BigInt m(static_cast<unsigned long>(x.modulus()));
  BigInt den = q.get_den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), x.prime()) != 0) {
    throw std::domain_error("coefficient " + to_string(q) + " is not in Z_(p)");
  }
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  BigInt num = q.get_num();
  return WittScalar::from_integer(x.prime(), x.precision(), num * inv) * x;
}

WittScalar teichmuller(unsigned p, unsigned precision, std::uint64_t c) {
  if (c >= p) throw std::invalid_argument("teichmuller digit must lie in [0, p)");
  WittScalar t(p, precision, c);
  // x -> x^p gains one p-adic digit per step; M steps reach the fixed point.
  for (unsigned step = 0; step < precision; ++step) {
    WittScalar power(p, precision, 1);
    for (unsigned k = 0; k < p; ++k) power *= t;
    if (power == t) break;
    t = power;
  }
  return t;
}

WittScalar frobenius(const WittScalar& x) { return x; }

WittScalar verschiebung(const WittScalar& x) { return x.times_p_power(1); }

VAdicValuation valuation_v(const WittScalar& x) {
  if (x.is_zero()) return {x.precision(), true};
  unsigned v = 0;
  std::uint64_t r = x.residue();
  while (r % x.prime() == 0) {
    r /= x.prime();
    ++v;
  }
  return {v, false};
}

}  // namespace drw
