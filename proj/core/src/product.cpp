#include "drw/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace drw {

ZpCoefficient::ZpCoefficient(unsigned p, Rational value) : p_(p), value_(std::move(value)) {
  value_.canonicalize();
  if (mpz_divisible_ui_p(value_.get_den_mpz_t(), p_) != 0) {
    throw std::domain_error("coefficient " + to_string(value_) + " has p in its denominator");
  }
}

WittScalar ZpCoefficient::to_scalar(unsigned precision) const {
  return mul_zp_rational(value_, WittScalar(p_, precision, 1));
}

ZpCoefficient ZpCoefficient::operator*(const ZpCoefficient& other) const {
  return ZpCoefficient(p_, Rational(value_ * other.value_));
}

TeichmullerProduct teichmuller_product_coeff(unsigned p, std::uint64_t m, std::uint64_t m_prime) {
  if (m == 0 && m_prime == 0) throw std::invalid_argument("teichmuller_product_coeff needs m + m' != 0");
  std::uint64_t sum = m + m_prime;
  unsigned a = 0;
  std::uint64_t b = sum;
  while (b % p == 0) {
    b /= p;
    ++a;
  }
  Rational coeff(BigInt(static_cast<unsigned long>(m_prime)), BigInt(static_cast<unsigned long>(b)));
  return {ZpCoefficient(p, coeff), a, b};
}

std::pair<int, HElement> HElement::make(WeightFunction a, IndexSet factors) {
  if (!a.is_integral()) throw std::invalid_argument("h(a, I) needs an integral weight");
  for (Index j : factors) {
    if (j >= a.nvars() || a[j].is_zero()) throw std::invalid_argument("h(a, I): I is not inside Supp(a)");
  }
  auto sorted = factors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("h(a, I): repeated index");
  }
  auto [sign, ordered] = sort_by_order(a, std::move(factors));
  return {sign, HElement(std::move(a), std::move(ordered))};
}

std::optional<HTerm> mul_h(const HElement& x, const HElement& y) {
  for (Index i : x.factors()) {
    if (std::find(y.factors().begin(), y.factors().end(), i) != y.factors().end()) return std::nullopt;
  }
  const unsigned p = x.weight().prime();
  WeightFunction sum = x.weight() + y.weight();
  // [X_i]^{b_i} g(a|{i}) = unit(a_i) / unit(a_i + b_i) * g((a + b)|{i}); units are the mantissas.
  Rational coeff(1);
  for (Index i : x.factors()) {
    coeff *= Rational(BigInt(static_cast<unsigned long>(x.weight()[i].mantissa)),
                      BigInt(static_cast<unsigned long>(sum[i].mantissa)));
  }
  for (Index j : y.factors()) {
    coeff *= Rational(BigInt(static_cast<unsigned long>(y.weight()[j].mantissa)),
                      BigInt(static_cast<unsigned long>(sum[j].mantissa)));
  }
  IndexSet joined(x.factors().begin(), x.factors().end());
  joined.insert(joined.end(), y.factors().begin(), y.factors().end());
  auto [sign, h] = HElement::make(std::move(sum), std::move(joined));
  if (sign < 0) coeff = -coeff;
  return HTerm{ZpCoefficient(p, coeff), std::move(h)};
}

std::vector<GExpansionTerm> expand_g(const WeightFunction& a) {
  if (a.is_zero() || !a.is_integral()) throw std::invalid_argument("expand_g needs a nonzero integral weight");
  const int v = a.valp();
  std::vector<GExpansionTerm> out;
  for (Index j : a.ordered_support()) {
    auto [sign, h] = HElement::make(a, {j});
    out.push_back({static_cast<unsigned>(a[j].valp() - v), std::move(h)});
  }
  return out;
}

namespace {

// Appends `last` to every partition of `part` (whose weights live on a
// sub-support of `a`), re-keying the terms on the full weight `a`.
void append_factor(DRWElement& out, const DRWElement& part, const WeightFunction& a, Index last,
                   const WittScalar& scale) {
  for (const auto& [key, eta] : part.terms()) {
    IndexSet idx(key.partition().indices().begin(), key.partition().indices().end());
    idx.push_back(last);
    out.add_term(TermKey(a, Partition::of(a, std::move(idx))), eta * scale);
  }
}

IndexSet without(std::span<const Index> set, Index drop) {
  IndexSet out;
  for (Index i : set) {
    if (i != drop) out.push_back(i);
  }
  return out;
}

}  // namespace

DRWElement expand_h(const Context& ctx, const HElement& h) {
  const WeightFunction& a = h.weight();
  DRWElement out(ctx);
  if (h.degree() == 0) {
    out.add_term(TermKey(a, Partition()), ctx.scalar(1));
    return out;
  }
  // Peel the ⪯-largest factor i_m:
  //   h(a, I) = h(a|S\I_m, I\{i_m}) g(a|I_m)
  //           - p^{val(a|I_m\{i_m}) - v_{i_m}} h(a|{i_m} ∪ S\I_m, I\{i_m}) g(a|I_m\{i_m}).
  auto factors = h.factors();
  const Index last = factors.back();
  IndexSet rest(factors.begin(), factors.end() - 1);
  IndexSet below;  // S \ I_m
  IndexSet top;    // I_m
  for (Index i : a.ordered_support()) {
    (a.strictly_precedes(i, last) ? below : top).push_back(i);
  }

  auto [s1, head] = HElement::make(a.restricted_to(below), rest);
  append_factor(out, expand_h(ctx, head), a, last, ctx.scalar(1));

  IndexSet top_rest = without(top, last);
  if (!top_rest.empty()) {
    WeightFunction upper = a.restricted_to(top_rest);
    int shift = upper.valp() - a[last].valp();
    IndexSet lower_support = below;
    lower_support.push_back(last);
    auto [s2, correction] = HElement::make(a.restricted_to(lower_support), rest);
    WittScalar scale = -ctx.scalar(1).times_p_power(static_cast<unsigned>(shift));
    append_factor(out, expand_h(ctx, correction), a, upper.min_index(), scale);
  }
  return out;
}

namespace {

// e(1, a, I) for integral a as a sum of p^k h(a, {j_1, ..., j_m}) with j_l ∈ I_l.
std::vector<GExpansionTerm> expand_integral_basic(const WeightFunction& a, const Partition& I) {
  auto parts = intervals(a, I);
  std::vector<std::pair<unsigned, IndexSet>> choices{{0U, {}}};
  for (std::size_t l = 1; l < parts.size(); ++l) {
    WeightFunction block = a.restricted_to(parts[l]);
    const int v = block.valp();
    std::vector<std::pair<unsigned, IndexSet>> next;
    for (const auto& [k, picked] : choices) {
      for (Index j : parts[l]) {
        IndexSet extended = picked;
        extended.push_back(j);
        next.emplace_back(k + static_cast<unsigned>(a[j].valp() - v), std::move(extended));
      }
    }
    choices = std::move(next);
  }
  std::vector<GExpansionTerm> out;
  out.reserve(choices.size());
  for (auto& [k, picked] : choices) {
    auto [sign, h] = HElement::make(a, std::move(picked));
    if (sign != 1) throw std::logic_error("interval representatives are not in order");
    out.push_back({k, std::move(h)});
  }
  return out;
}

DRWElement single(const Context& ctx, const BasicElement& e) { return DRWElement::basic(ctx, e); }

}  // namespace

DRWElement mul_e_integral(const Context& ctx, const BasicElement& x, const BasicElement& y) {
  if (!x.a.is_integral() || !y.a.is_integral()) throw std::invalid_argument("mul_e_integral needs integral weights");
  if (x.a.is_zero()) return scalar_mul(x.eta, single(ctx, y));
  if (y.a.is_zero()) return scalar_mul(y.eta, single(ctx, x));

  const WittScalar eta = x.eta * y.eta;
  DRWElement out(ctx);
  if (eta.is_zero()) return out;
  const auto lhs = expand_integral_basic(x.a, x.I);
  const auto rhs = expand_integral_basic(y.a, y.I);
  for (const auto& l : lhs) {
    for (const auto& r : rhs) {
      auto product = mul_h(l.h, r.h);
      if (!product) continue;
      WittScalar scale = (product->coeff.to_scalar(ctx.precision) * eta).times_p_power(l.p_exponent + r.p_exponent);
      if (scale.is_zero()) continue;
      out += scalar_mul(scale, expand_h(ctx, product->h));
    }
  }
  return out;
}

DRWElement mul_e(const Context& ctx, const BasicElement& x, const BasicElement& y) {
  if (x.a.is_zero()) return scalar_mul(x.eta, single(ctx, y));
  if (y.a.is_zero()) return scalar_mul(y.eta, single(ctx, x));

  const unsigned ua = x.a.u();
  const unsigned ub = y.a.u();
  if (ua < ub) {
    DRWElement swapped = mul_e(ctx, y, x);
    return (x.degree() * y.degree()) % 2 == 0 ? swapped : -swapped;
  }
  if (ua == 0) return mul_e_integral(ctx, x, y);

  if (!x.lower_interval_empty()) {
    // e(eta, a, I) e(eta', b, J) = V^{u(a)}( e(eta, p^u a, I) e(p^v eta', p^u b, J) ),
    // v = u(b) if J_0 ≠ ∅ else 0; F acts trivially on W(F_p).
    const unsigned v = y.lower_interval_empty() ? 0 : ub;
    WeightFunction a = x.a.scaled(static_cast<int>(ua));
    WeightFunction b = y.a.scaled(static_cast<int>(ua));
    auto idx = [](const Partition& I) { return IndexSet(I.indices().begin(), I.indices().end()); };
    BasicElement lifted_x{x.eta, a, Partition::of(a, idx(x.I))};
    BasicElement lifted_y{y.eta.times_p_power(v), b, Partition::of(b, idx(y.I))};
    return verschiebung_power(mul_e_integral(ctx, lifted_x, lifted_y), ua);
  }

  // x = d(x') with x' = e(eta, a, I \ {min a}); then
  // x y = d(x' y) - (-1)^{deg x'} x' d(y).
  auto idx = x.I.indices();
  BasicElement primitive{x.eta, x.a, Partition::of(x.a, IndexSet(idx.begin() + 1, idx.end()))};
  DRWElement result = differential(mul_e(ctx, primitive, y));
  DRWElement correction(ctx);
  const DRWElement dy = differential(ctx, y);
  for (const auto& [key, eta] : dy.terms()) {
    correction += mul_e(ctx, primitive, BasicElement{eta, key.weight(), key.partition()});
  }
  if (primitive.degree() % 2 == 0) {
    result -= correction;
  } else {
    result += correction;
  }
  return result;
}

DRWElement mul(const DRWElement& x, const DRWElement& y) {
  if (!(x.context() == y.context())) throw std::invalid_argument("multiplying elements over different rings");
  const Context& ctx = x.context();
  DRWElement out(ctx);
  for (const auto& [kx, ex] : x.terms()) {
    for (const auto& [ky, ey] : y.terms()) {
      out += mul_e(ctx, BasicElement{ex, kx.weight(), kx.partition()}, BasicElement{ey, ky.weight(), ky.partition()});
    }
  }
  return out;
}

}  // namespace drw
