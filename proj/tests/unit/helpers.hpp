#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "drw/element.hpp"

namespace drw::test {

inline WeightFunction W(unsigned p, std::initializer_list<const char*> values) {
  std::vector<Rational> q;
  for (const char* v : values) q.push_back(parse_rational(v));
  return WeightFunction::from_rationals(p, q);
}

/// e(eta, a, I) with 1-based partition indices.
inline DRWElement E(const Context& ctx, std::uint64_t eta, std::initializer_list<const char*> a,
                    std::initializer_list<Index> I = {}) {
  WeightFunction w = W(ctx.p, a);
  IndexSet idx;
  for (Index i : I) idx.push_back(i - 1);
  Partition part = Partition::of(w, idx);
  return DRWElement::basic(ctx, {ctx.scalar(eta), w, part});
}

inline DRWElement teich_X(const Context& ctx, Index var, std::uint64_t power = 1) {
  return DRWElement::teichmuller_monomial(ctx, WeightFunction::unit(ctx.p, ctx.nvars, var - 1, power));
}

inline std::string str(const DRWElement& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace drw::test
