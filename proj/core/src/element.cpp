#include "drw/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace drw {

void Context::validate() const {
  validate_precision(p, precision);
  if (nvars > 64) throw std::invalid_argument("at most 64 variables are supported");
}

TermKey::TermKey(WeightFunction weight, Partition partition)
    : weight_(std::move(weight)),
      partition_(std::move(partition)),
      total_(weight_.total()),
      lower_empty_(drw::lower_interval_empty(weight_, partition_)) {}

bool operator<(const TermKey& x, const TermKey& y) {
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  if (int c = cmp(x.total_, y.total_); c != 0) return c < 0;
  const unsigned p = x.weight_.prime();
  auto xe = x.weight_.entries();
  auto ye = y.weight_.entries();
  if (xe.size() != ye.size()) return xe.size() < ye.size();
  for (std::size_t i = 0; i < xe.size(); ++i) {
    auto c = compare_values(p, xe[i], ye[i]);
    if (c != 0) return c < 0;
  }
  return x.partition_ < y.partition_;
}

const char* to_string(Summand s) {
  switch (s) {
    case Summand::Integral: return "int";
    case Summand::PureFractional: return "frp";
    case Summand::ExactFractional: return "d(frp)";
  }
  return "?";
}

Summand classify(const TermKey& key) {
  if (key.u() == 0) return Summand::Integral;
  return key.lower_interval_empty() ? Summand::ExactFractional : Summand::PureFractional;
}

DRWElement::DRWElement(Context ctx) : ctx_(ctx) {}

DRWElement DRWElement::one(const Context& ctx) { return scalar(ctx, ctx.scalar(1)); }

DRWElement DRWElement::scalar(const Context& ctx, const WittScalar& eta) {
  DRWElement out(ctx);
  out.add_term(TermKey(ctx.zero_weight(), Partition()), eta);
  return out;
}

DRWElement DRWElement::basic(const Context& ctx, const BasicElement& e) {
  DRWElement out(ctx);
  out.add_term(e);
  return out;
}

DRWElement DRWElement::teichmuller_monomial(const Context& ctx, const WeightFunction& a, std::uint64_t c) {
  if (!a.is_integral()) throw std::invalid_argument("Teichmuller monomials need integral exponents");
  return basic(ctx, {teichmuller(ctx.p, ctx.precision, c), a, Partition()});
}

void DRWElement::add_term(const TermKey& key, const WittScalar& eta) {
  if (eta.prime() != ctx_.p || eta.precision() != ctx_.precision) {
    throw std::invalid_argument("coefficient does not match the element's p and precision");
  }
  if (key.weight().nvars() != ctx_.nvars || key.weight().prime() != ctx_.p) {
    throw std::invalid_argument("weight does not match the element's variables");
  }
  if (eta.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, eta);
  if (!inserted) {
    it->second += eta;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::size_t> DRWElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t d = terms_.begin()->first.degree();
  for (const auto& [key, eta] : terms_) {
    if (key.degree() != d) return std::nullopt;
  }
  return d;
}

DRWElement DRWElement::homogeneous_part(std::size_t degree) const {
  DRWElement out(ctx_);
  for (const auto& [key, eta] : terms_) {
    if (key.degree() == degree) out.terms_.emplace(key, eta);
  }
  return out;
}

void DRWElement::require_compatible(const DRWElement& other) const {
  if (!(ctx_ == other.ctx_)) throw std::invalid_argument("elements over different rings or precisions");
}

DRWElement& DRWElement::operator+=(const DRWElement& other) {
  require_compatible(other);
  for (const auto& [key, eta] : other.terms_) add_term(key, eta);
  return *this;
}

DRWElement& DRWElement::operator-=(const DRWElement& other) {
  require_compatible(other);
  for (const auto& [key, eta] : other.terms_) add_term(key, -eta);
  return *this;
}

DRWElement DRWElement::operator-() const {
  DRWElement out(ctx_);
  for (const auto& [key, eta] : terms_) out.terms_.emplace(key, -eta);
  return out;
}

std::ostream& operator<<(std::ostream& os, const DRWElement& x) {
  if (x.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [key, eta] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "e(" << eta.residue() << ";";
    const auto& a = key.weight();
    for (Index i = 0; i < a.nvars(); ++i) {
      os << (i == 0 ? " " : ", ") << to_string(a[i].value(a.prime()));
    }
    IndexSet idx(key.partition().indices().begin(), key.partition().indices().end());
    std::sort(idx.begin(), idx.end());
    os << "; {";
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k == 0 ? "" : ",") << idx[k] + 1;
    os << "})";
  }
  return os;
}

DRWElement scalar_mul(const WittScalar& c, const DRWElement& x) {
  DRWElement out(x.context());
  for (const auto& [key, eta] : x.terms()) out.add_term(key, c * eta);
  return out;
}

namespace {

IndexSet indices_of(const Partition& I) { return IndexSet(I.indices().begin(), I.indices().end()); }

template <typename TermAction>
DRWElement termwise(const DRWElement& x, TermAction action) {
  DRWElement out(x.context());
  for (const auto& [key, eta] : x.terms()) {
    out += action(x.context(), BasicElement{eta, key.weight(), key.partition()});
  }
  return out;
}

}  // namespace

DRWElement differential(const Context& ctx, const BasicElement& e) {
  DRWElement out(ctx);
  if (e.a.is_zero() || e.lower_interval_empty()) return out;
  IndexSet idx = indices_of(e.I);
  idx.push_back(e.a.min_index());
  int v = e.a.valp();
  WittScalar eta = v > 0 ? e.eta.times_p_power(static_cast<unsigned>(v)) : e.eta;
  out.add_term(TermKey(e.a, Partition::of(e.a, std::move(idx))), eta);
  return out;
}

DRWElement differential(const DRWElement& x) {
  return termwise(x, [](const Context& ctx, const BasicElement& e) { return differential(ctx, e); });
}

DRWElement frobenius(const Context& ctx, const BasicElement& e) {
  WeightFunction pa = e.a.scaled(1);
  WittScalar eta = e.eta;
  if (e.a.valp() < 0) {
    if (!e.lower_interval_empty()) eta = eta.times_p_power(1);
  } else {
    eta = drw::frobenius(eta);
  }
  DRWElement out(ctx);
  out.add_term(TermKey(pa, Partition::of(pa, indices_of(e.I))), eta);
  return out;
}

DRWElement frobenius(const DRWElement& x) {
  return termwise(x, [](const Context& ctx, const BasicElement& e) { return frobenius(ctx, e); });
}

DRWElement verschiebung(const Context& ctx, const BasicElement& e) {
  WeightFunction a_over_p = e.a.scaled(-1);
  WittScalar eta = e.eta;
  if (e.a.valp() > 0) {
    eta = drw::verschiebung(eta);
  } else if (e.lower_interval_empty()) {
    eta = eta.times_p_power(1);
  }
  DRWElement out(ctx);
  out.add_term(TermKey(a_over_p, Partition::of(a_over_p, indices_of(e.I))), eta);
  return out;
}

DRWElement verschiebung(const DRWElement& x) {
  return termwise(x, [](const Context& ctx, const BasicElement& e) { return verschiebung(ctx, e); });
}

DRWElement frobenius_power(DRWElement x, unsigned k) {
  for (unsigned i = 0; i < k; ++i) x = frobenius(x);
  return x;
}

DRWElement verschiebung_power(DRWElement x, unsigned k) {
  for (unsigned i = 0; i < k; ++i) x = verschiebung(x);
  return x;
}

DRWElement project(const DRWElement& x, Summand s) {
  DRWElement out(x.context());
  for (const auto& [key, eta] : x.terms()) {
    if (classify(key) == s) out.add_term(key, eta);
  }
  return out;
}

DRWElement project_int(const DRWElement& x) { return project(x, Summand::Integral); }
DRWElement project_frp(const DRWElement& x) { return project(x, Summand::PureFractional); }
DRWElement project_dfrp(const DRWElement& x) { return project(x, Summand::ExactFractional); }

DRWElement project_frac(const DRWElement& x) {
  DRWElement out(x.context());
  for (const auto& [key, eta] : x.terms()) {
    if (key.u() != 0) out.add_term(key, eta);
  }
  return out;
}

DRWElement dfrp_preimage(const DRWElement& y) {
  DRWElement out(y.context());
  for (const auto& [key, eta] : y.terms()) {
    if (classify(key) != Summand::ExactFractional) {
      throw std::invalid_argument("dfrp_preimage: term is not in d(frp)");
    }
    // val_p(a) < 0 here, so d(e(eta, a, I \ {min a})) = e(eta, a, I) with coefficient 1.
    auto idx = key.partition().indices();
    IndexSet rest(idx.begin() + 1, idx.end());
    out.add_term(TermKey(key.weight(), Partition::of(key.weight(), std::move(rest))), eta);
  }
  return out;
}

std::optional<Summand> summand_of(const DRWElement& x) {
  if (x.is_zero()) return Summand::Integral;
  Summand s = classify(x.terms().begin()->first);
  for (const auto& [key, eta] : x.terms()) {
    if (classify(key) != s) return std::nullopt;
  }
  return s;
}

}  // namespace drw
