#include "drw/witt_oracle.hpp"

#include <stdexcept>

namespace drw {

IntPoly IntPoly::constant(std::size_t nvars, const BigInt& c) {
  IntPoly f(nvars);
  f.add_term(Monomial(nvars, 0), c);
  return f;
}

IntPoly IntPoly::monomial(Monomial exponents, const BigInt& c) {
  IntPoly f(exponents.size());
  f.add_term(exponents, c);
  return f;
}

void IntPoly::add_term(const Monomial& m, const BigInt& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  IntPoly out(x.nvars_);
  Monomial m(x.nvars_);
  BigInt c;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mx[i] + my[i];
      c = cx * cy;
      out.add_term(m, c);
    }
  }
  return out;
}

IntPoly operator*(const BigInt& c, const IntPoly& x) {
  IntPoly out(x.nvars_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : x.terms_) out.terms_.emplace(m, c * coeff);
  return out;
}

IntPoly IntPoly::pow(std::uint64_t k) const {
  if (terms_.size() == 1) {
    // Monomials are common enough in the oracle to deserve the shortcut.
    const auto& [m, c] = *terms_.begin();
    Monomial e(m);
    for (auto& x : e) x = static_cast<std::uint32_t>(x * k);
    BigInt ck;
    mpz_pow_ui(ck.get_mpz_t(), c.get_mpz_t(), k);
    return monomial(std::move(e), ck);
  }
  IntPoly result = constant(nvars_, 1);
  IntPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

IntPoly IntPoly::exact_div(const BigInt& d) const {
  IntPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()) == 0) {
      throw std::logic_error("unghost: coefficient " + c.get_str() + " not divisible by " + d.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.terms_.emplace(m, q);
  }
  return out;
}

IntPoly IntPoly::reduced_mod(const BigInt& m) const {
  IntPoly out(nvars_);
  for (const auto& [mono, c] : terms_) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    out.add_term(mono, r);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : f.terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << "*X" << i + 1;
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os;
}

IntPolyWitt IntPolyWitt::zero(unsigned p, std::size_t length, std::size_t nvars) {
  return {p, std::vector<IntPoly>(length, IntPoly(nvars))};
}

IntPolyWitt IntPolyWitt::teich(unsigned p, std::size_t length, const IntPoly& f) {
  IntPolyWitt w = zero(p, length, f.nvars());
  if (length > 0) w.coords[0] = f;
  return w;
}

namespace {

BigInt power(unsigned p, std::size_t k) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, k);
  return out;
}

std::uint64_t power_u64(unsigned p, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= p;
  return out;
}

void require_same_shape(const IntPolyWitt& x, const IntPolyWitt& y) {
  if (x.p != y.p || x.length() != y.length() || x.nvars() != y.nvars()) {
    throw std::invalid_argument("Witt vectors of different shapes");
  }
}

using GhostOp = IntPoly (*)(const IntPoly&, const IntPoly&);

IntPolyWitt ghostwise(const IntPolyWitt& x, const IntPolyWitt& y, GhostOp op) {
  require_same_shape(x, y);
  auto gx = ghost(x);
  auto gy = ghost(y);
  for (std::size_t n = 0; n < gx.size(); ++n) gx[n] = op(gx[n], gy[n]);
  return unghost(x.p, gx);
}

}  // namespace

std::vector<IntPoly> ghost(const IntPolyWitt& w) {
  std::vector<IntPoly> g;
  g.reserve(w.length());
  for (std::size_t n = 0; n < w.length(); ++n) {
    IntPoly wn(w.nvars());
    for (std::size_t i = 0; i <= n; ++i) {
      if (w.coords[i].is_zero()) continue;
      wn += power(w.p, i) * w.coords[i].pow(power_u64(w.p, n - i));
    }
    g.push_back(std::move(wn));
  }
  return g;
}

IntPolyWitt unghost(unsigned p, const std::vector<IntPoly>& g) {
  const std::size_t nvars = g.empty() ? 0 : g.front().nvars();
  IntPolyWitt w = IntPolyWitt::zero(p, g.size(), nvars);
  // Powers x_i^{p^k} are reused across the later ghost components.
  std::vector<IntPoly> frob_powers(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) {
    IntPoly rest = g[n];
    for (std::size_t i = 0; i < n; ++i) {
      frob_powers[i] = frob_powers[i].pow(p);
      rest -= power(p, i) * frob_powers[i];
    }
    w.coords[n] = rest.exact_div(power(p, n));
    frob_powers[n] = w.coords[n];
  }
  return w;
}

IntPolyWitt witt_add(const IntPolyWitt& x, const IntPolyWitt& y) {
  return ghostwise(x, y, [](const IntPoly& a, const IntPoly& b) { return a + b; });
}

IntPolyWitt witt_mul(const IntPolyWitt& x, const IntPolyWitt& y) {
  return ghostwise(x, y, [](const IntPoly& a, const IntPoly& b) { return a * b; });
}

IntPolyWitt verschiebung_w(const IntPolyWitt& w) {
  IntPolyWitt out = IntPolyWitt::zero(w.p, w.length(), w.nvars());
  for (std::size_t i = 1; i < w.length(); ++i) out.coords[i] = w.coords[i - 1];
  return out;
}

IntPolyWitt frobenius_w(const IntPolyWitt& w) {
  if (w.length() < 2) throw std::invalid_argument("frobenius_w needs length at least 2");
  auto g = ghost(w);
  g.erase(g.begin());
  return unghost(w.p, g);
}

IntPolyWitt reduce_mod_p(const IntPolyWitt& w) {
  IntPolyWitt out = w;
  for (auto& c : out.coords) c = c.reduced_mod(BigInt(w.p));
  return out;
}

IntPolyWitt scalar_to_coords(const WittScalar& eta, std::size_t nvars) {
  const unsigned p = eta.prime();
  const unsigned precision = eta.precision();
  IntPolyWitt w = IntPolyWitt::zero(p, precision, nvars);
  std::uint64_t r = eta.residue();
  for (unsigned i = 0; i < precision; ++i) {
    std::uint64_t c = r % p;
    w.coords[i] = IntPoly::constant(nvars, BigInt(static_cast<unsigned long>(c)));
    if (i + 1 == precision) break;
    // r - [c] is divisible by p; continue at precision M - i - 1.
    WittScalar rest = WittScalar(p, precision - i, r) - teichmuller(p, precision - i, c);
    r = rest.residue() / p;
  }
  return w;
}

IntPolyWitt eval_degree0(const DRWElement& x) {
  const Context& ctx = x.context();
  std::vector<IntPoly> total(ctx.precision, IntPoly(ctx.nvars));
  for (const auto& [key, eta] : x.terms()) {
    if (key.degree() != 0) throw std::invalid_argument("eval_degree0: term of positive degree");
    const unsigned u = key.u();
    const WeightFunction lifted = key.weight().scaled(static_cast<int>(u));
    Monomial exponents(ctx.nvars);
    for (Index i = 0; i < ctx.nvars; ++i) exponents[i] = static_cast<std::uint32_t>(lifted.integer_entry(i));
    IntPolyWitt term = witt_mul(scalar_to_coords(eta, ctx.nvars),
                                IntPolyWitt::teich(ctx.p, ctx.precision, IntPoly::monomial(exponents)));
    for (unsigned k = 0; k < u; ++k) term = verschiebung_w(term);
    auto g = ghost(term);
    for (std::size_t n = 0; n < g.size(); ++n) total[n] += g[n];
  }
  return reduce_mod_p(unghost(ctx.p, total));
}

bool oracle_equal(const DRWElement& x, const DRWElement& y) { return eval_degree0(x) == eval_degree0(y); }

}  // namespace drw
