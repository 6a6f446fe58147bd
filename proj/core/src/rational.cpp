#include "drw/rational.hpp"

#include <stdexcept>

namespace drw {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  return BigInt(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

unsigned valuation(const BigInt& value, unsigned p) {
  if (value == 0) throw std::domain_error("valuation of zero");
  BigInt v = abs(value);
  unsigned k = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++k;
  }
  return k;
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) throw std::domain_error("value() of an infinite extended rational");
  return value_;
}

std::string ExtendedRational::str() const {
  switch (kind_) {
    case Kind::PosInf: return "inf";
    case Kind::NegInf: return "-inf";
    case Kind::Finite: break;
  }
  return to_string(value_);
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if ((a.kind_ == K::PosInf && b.kind_ == K::NegInf) || (a.kind_ == K::NegInf && b.kind_ == K::PosInf)) {
    throw std::domain_error("+inf + -inf is undefined");
  }
  if (a.kind_ != K::Finite) return a;
  if (b.kind_ != K::Finite) return b;
  return ExtendedRational(Rational(a.value_ + b.value_));
}

ExtendedRational operator-(const ExtendedRational& a) {
  using K = ExtendedRational::Kind;
  switch (a.kind_) {
    case K::PosInf: return ExtendedRational::neg_inf();
    case K::NegInf: return ExtendedRational::pos_inf();
    case K::Finite: break;
  }
  return ExtendedRational(Rational(-a.value_));
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if (a.kind_ != b.kind_ || a.kind_ != K::Finite) {
    auto rank = [](K k) { return k == K::NegInf ? 0 : (k == K::Finite ? 1 : 2); };
    return rank(a.kind_) <=> rank(b.kind_);
  }
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

ExtendedRational min(const ExtendedRational& a, const ExtendedRational& b) { return b < a ? b : a; }

}  // namespace drw
