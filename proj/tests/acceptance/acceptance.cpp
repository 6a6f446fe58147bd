// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "drw/checks.hpp"
#include "drw/product.hpp"
#include "drw/pseudoval.hpp"
#include "drw/sampling.hpp"
#include "drw/witt_oracle.hpp"

using namespace drw;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int number, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool in_time = secs < limit_seconds;
  bool pass = o.ok && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3fs, limit %.0fs", secs, limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << "  " << title << "  [" << o.detail << "; "
            << timing << (in_time ? "" : ", too slow") << "]" << std::endl;
  return pass;
}

DRWElement teich(const Context& ctx, const WeightFunction& a, std::uint64_t c = 1) {
  return DRWElement::teichmuller_monomial(ctx, a, c);
}

WeightFunction x_power(unsigned p, std::size_t n, Index i, std::uint64_t k) { return WeightFunction::unit(p, n, i, k); }

WeightFunction times(const WeightFunction& a, std::uint64_t k) {
  std::vector<Rational> q;
  for (const auto& e : a.entries()) q.push_back(e.value(a.prime()) * Rational(static_cast<unsigned long>(k)));
  return WeightFunction::from_rationals(a.prime(), q);
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Outcome criterion1() {
  std::size_t cases = 0;
  for (unsigned p : {2u, 3u}) {
    Context ctx{p, 1, 6};
    for (unsigned m = 1; m <= 3; ++m) {
      std::uint64_t pm = ipow(p, m);
      DRWElement x = verschiebung_power(teich(ctx, x_power(p, 1, 0, pm - 1)), m);
      DRWElement y = differential(verschiebung_power(teich(ctx, x_power(p, 1, 0, 1)), m));
      DRWElement expected = scalar_mul(ctx.scalar(pm), differential(teich(ctx, x_power(p, 1, 0, 1))));
      if (x * y != expected) {
        std::ostringstream os;
        os << "p=" << p << " m=" << m << ": got " << x * y;
        return {false, os.str()};
      }
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " cases exact"};
}

Outcome criterion2() {
  const Rational eps(1, 2);
  std::size_t cases = 0;
  for (unsigned p : {2u, 3u}) {
    Context ctx{p, 2, 6};
    for (int which : {1, 2}) {
      for (unsigned m = 1; m <= 3; ++m) {
        CounterexampleReport r = gamma_counterexample(ctx, which, m, eps);
        Rational pm(static_cast<unsigned long>(ipow(p, m)));
        Rational gx = Rational(m) - eps * (pm - 1) / pm;
        Rational gy = Rational(m) - eps / pm;
        Rational gxy = Rational(m) - eps;
        bool ok = r.gamma_x.value == ExtendedRational(gx) && r.gamma_y.value == ExtendedRational(gy) &&
                  r.gamma_product.value == ExtendedRational(gxy) && r.matches_closed_forms && r.violated;
        if (!ok) {
          std::ostringstream os;
          os << "p=" << p << " which=" << which << " m=" << m << ": gamma(x)=" << r.gamma_x.value
             << " gamma(y)=" << r.gamma_y.value << " gamma(xy)=" << r.gamma_product.value;
          return {false, os.str()};
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " cases, strict violation in each"};
}

Outcome criterion3() {
  std::size_t pairs = 0, failures = 0, inconclusive = 0;
  ExtendedRational min_margin = ExtendedRational::pos_inf();
  std::uint64_t seed = 3000;
  for (unsigned p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const Rational& eps : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
        AxiomRun run = run_axiom_trials(Context{p, n, 6}, eps, 60, ++seed, SampleBounds{8, 3, 5});
        pairs += run.pairs;
        failures += run.failures;
        inconclusive += run.inconclusive;
        if (run.min_product_margin < min_margin) min_margin = run.min_product_margin;
      }
    }
  }
  std::ostringstream os;
  os << pairs << " pairs, " << failures << " failures, " << inconclusive
     << " below truncation floor, min product margin " << min_margin;
  return {pairs >= 1000 && failures == 0, os.str()};
}

Outcome criterion4() {
  std::vector<TableRun> total;
  std::uint64_t seed = 4000;
  for (unsigned p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const Rational& eps : {Rational(1, 3), Rational(1)}) {
        auto runs = run_table_trials(Context{p, n, 6}, eps, 30, ++seed, SampleBounds{8, 3, 4});
        if (total.empty()) {
          total = runs;
          continue;
        }
        for (std::size_t r = 0; r < runs.size(); ++r) {
          total[r].pairs += runs[r].pairs;
          total[r].failures += runs[r].failures;
          for (std::size_t k = 0; k < 3; ++k) {
            total[r].zero_checks[k] += runs[r].zero_checks[k];
            if (runs[r].min_margin[k] < total[r].min_margin[k]) total[r].min_margin[k] = runs[r].min_margin[k];
          }
        }
      }
    }
  }
  bool ok = true;
  std::size_t min_pairs = SIZE_MAX, failures = 0, zero_cells = 0, zero_checks = 0;
  for (const auto& run : total) {
    min_pairs = std::min(min_pairs, run.pairs);
    failures += run.failures;
    for (std::size_t k = 0; k < 3; ++k) {
      auto c = table_constant(run.row_x, run.row_y, static_cast<Summand>(k));
      if (c && !*c) {
        ++zero_cells;
        zero_checks += run.zero_checks[k];
        if (run.zero_checks[k] != run.pairs) ok = false;
      }
    }
  }
  std::ostringstream os;
  os << total.size() << " rows, >= " << min_pairs << " pairs per row, " << failures << " failures, " << zero_cells
     << " +inf cells checked as exact zero (" << zero_checks << " projections)";
  return {ok && failures == 0 && min_pairs >= 300, os.str()};
}

Outcome criterion5() {
  std::size_t pairs = 0, mismatches = 0;
  std::uint64_t trial = 0;
  for (unsigned p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 2; ++n) {
      Context ctx{p, n, 3};
      for (int t = 0; t < 130; ++t, ++trial) {
        Sampler s(ctx, trial_seed(5000, trial), SampleBounds{4, 2, 4});
        DRWElement x = s.degree0();
        DRWElement y = s.degree0();
        IntPolyWitt lhs = eval_degree0(x * y);
        IntPolyWitt rhs = reduce_mod_p(witt_mul(eval_degree0(x), eval_degree0(y)));
        ++pairs;
        if (lhs != rhs) ++mismatches;
      }
    }
  }
  std::ostringstream os;
  os << pairs << " pairs, " << mismatches << " mismatches";
  return {pairs >= 500 && mismatches == 0, os.str()};
}

Outcome criterion6() {
  std::vector<std::pair<std::string, std::size_t>> counts = {{"dd=0", 0},      {"Leibniz", 0},    {"dF^m=p^mF^md", 0},
                                                             {"V(xFy)=V(x)y", 0}, {"F[r]=[r^p]", 0}, {"F^md[P]", 0}};
  std::size_t failures = 0;
  std::string first_failure;
  auto record = [&](std::size_t k, bool holds) {
    ++counts[k].second;
    if (!holds) {
      ++failures;
      if (first_failure.empty()) first_failure = counts[k].first;
    }
  };
  std::uint64_t trial = 0;
  for (unsigned p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      Context ctx{p, n, 6};
      for (int t = 0; t < 40; ++t, ++trial) {
        Sampler s(ctx, trial_seed(6000, trial), SampleBounds{6, 2, 3});
        DRWElement x = s.element();
        record(0, differential(differential(x)).is_zero());

        std::size_t i = s.uniform(0, n), j = s.uniform(0, n);
        DRWElement a = s.homogeneous(i), b = s.homogeneous(j);
        DRWElement sign_ad_b = i % 2 == 0 ? a * differential(b) : -(a * differential(b));
        record(1, differential(a * b) == differential(a) * b + sign_ad_b);

        unsigned m = static_cast<unsigned>(s.uniform(1, 3));
        record(2, differential(frobenius_power(x, m)) ==
                      scalar_mul(ctx.scalar(ipow(p, m)), frobenius_power(differential(x), m)));

        DRWElement y = s.element();
        record(3, verschiebung(x * frobenius(y)) == verschiebung(x) * y);

        WeightFunction r(p, n);
        for (std::size_t v = 0; v < n; ++v) r = r + x_power(p, n, v, s.uniform(0, 3));
        std::uint64_t c = s.uniform(1, p - 1);
        record(4, frobenius(teich(ctx, r, c)) == teich(ctx, times(r, p), ipow(c, p) % p));

        if (r.support().empty()) r = x_power(p, n, 0, 1);
        DRWElement P = teich(ctx, r, c);
        std::uint64_t e = ipow(p, m) - 1;
        record(5, frobenius_power(differential(P), m) == teich(ctx, times(r, e), ipow(c, static_cast<unsigned>(e)) % p) *
                                                             differential(P));
      }
    }
  }
  std::ostringstream os;
  std::size_t min_count = SIZE_MAX;
  for (const auto& [name, k] : counts) min_count = std::min(min_count, k);
  os << counts.size() << " identities, >= " << min_count << " instances each, " << failures << " failures";
  if (!first_failure.empty()) os << " (first: " << first_failure << ")";
  return {failures == 0 && min_count >= 200, os.str()};
}

Outcome criterion7() {
  std::size_t elements = 0, failures = 0;
  std::uint64_t trial = 0;
  for (unsigned p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const Rational& eps : {Rational(1, 3), Rational(1, 2), Rational(1)}) {
        Context ctx{p, n, 6};
        for (int t = 0; t < 30; ++t, ++trial) {
          Sampler s(ctx, trial_seed(7000, trial));
          ++elements;
          if (!compare_gamma_zeta(s.element(), eps).holds) ++failures;
        }
      }
    }
  }
  std::ostringstream os;
  os << elements << " elements, " << failures << " failures";
  return {elements >= 500 && failures == 0, os.str()};
}

Outcome criterion8() {
  std::size_t cases = 0;
  for (unsigned p : {2u, 3u}) {
    Context ctx{p, 1, 6};
    for (std::uint64_t m = 1; m <= 6; ++m) {
      for (std::uint64_t mp = 1; mp <= 6; ++mp) {
        TeichmullerProduct t = teichmuller_product_coeff(p, m, mp);
        DRWElement lhs = teich(ctx, x_power(p, 1, 0, m)) * differential(teich(ctx, x_power(p, 1, 0, mp)));
        DRWElement rhs = scalar_mul(t.coeff.to_scalar(ctx.precision),
                                    frobenius_power(differential(teich(ctx, x_power(p, 1, 0, t.base))),
                                                    t.frobenius_power));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "p=" << p << " m=" << m << " m'=" << mp << ": " << lhs << " vs " << rhs;
          return {false, os.str()};
        }
        ++cases;
      }
    }
  }
  return {true, std::to_string(cases) + " cases exact"};
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "counterexample identity V^m[X^(p^m-1)] dV^m[X] = p^m d[X]", 1, criterion1);
  all &= run_criterion(2, "gamma product rule fails with the closed-form values", 10, criterion2);
  all &= run_criterion(3, "zeta pseudovaluation axioms on random pairs", 120, criterion3);
  all &= run_criterion(4, "zeta product table", 120, criterion4);
  all &= run_criterion(5, "degree-0 products against the ghost-component oracle", 120, criterion5);
  all &= run_criterion(6, "algebraic identities", 60, criterion6);
  all &= run_criterion(7, "sandwich 2n gamma_(eps/2n) >= zeta_eps >= gamma_eps", 60, criterion7);
  all &= run_criterion(8, "Teichmuller lemma for m, m' <= 6", 10, criterion8);
  return all ? 0 : 1;
}
