#include "drw/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "drw/checks.hpp"
#include "drw/cli/expression.hpp"
#include "drw/cli/json_io.hpp"
#include "drw/product.hpp"

namespace drw::cli {

namespace {

using nlohmann::json;

struct Options {
  unsigned p = 2;
  std::size_t nvars = 2;
  unsigned precision = 6;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string out_file;

  std::string eps_text = "1/2";
  std::string x_text, y_text;
  std::vector<std::string> exprs;
  unsigned times = 1;
  std::size_t trials = 200;
  int which = 1;
  unsigned m = 1;

  bool json() const { return format == "json"; }
  Context context() const {
    Context ctx{p, nvars, precision};
    ctx.validate();
    return ctx;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational eps_of(const Options& o) {
  Rational eps;
  try {
    eps = parse_rational(o.eps_text);
  } catch (const std::exception& e) {
    throw UsageError("--eps: " + std::string(e.what()));
  }
  if (sgn(eps) <= 0) throw UsageError("--eps must be positive");
  return eps;
}

DRWElement eval_arg(const Options& o, const std::string& text, std::ostream& err) {
  std::vector<std::string> warnings;
  DRWElement x = evaluate(text, o.context(), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return x;
}

void print_element(const Options& o, std::ostream& out, const DRWElement& x) {
  if (o.json()) {
    out << to_json(x).dump() << "\n";
  } else {
    out << render(x) << "\n";
  }
}

std::string value_text(const Evaluation& v) {
  return v.value.str() + (v.lower_bound_only ? " (lower bound)" : "");
}

json value_json(const Evaluation& v) { return {{"value", v.value.str()}, {"lower_bound_only", v.lower_bound_only}}; }

int cmd_unary(const Options& o, std::ostream& out, std::ostream& err,
              const std::function<DRWElement(const DRWElement&)>& f) {
  print_element(o, out, f(eval_arg(o, o.exprs.at(0), err)));
  return kOk;
}

int cmd_mul(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.exprs.size() != 2) throw UsageError("mul takes exactly two expressions");
  print_element(o, out, mul(eval_arg(o, o.exprs[0], err), eval_arg(o, o.exprs[1], err)));
  return kOk;
}

int cmd_growth(const Options& o, std::ostream& out, std::ostream& err, bool use_zeta) {
  Rational eps = eps_of(o);
  DRWElement x = eval_arg(o, o.exprs.at(0), err);
  Evaluation v = use_zeta ? zeta(x, eps) : gamma(x, eps);
  if (o.json()) {
    out << value_json(v).dump() << "\n";
  } else {
    out << value_text(v) << "\n";
  }
  return kOk;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  Rational eps = eps_of(o);
  const CounterexampleReport r = [&] {
    try {
      return gamma_counterexample(o.context(), o.which, o.m, eps);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const ExtendedRational sum = r.gamma_x.value + r.gamma_y.value;
  if (o.json()) {
    out << json{{"which", o.which},
                {"m", o.m},
                {"eps", to_string(eps)},
                {"x", to_json(r.x)},
                {"y", to_json(r.y)},
                {"xy", to_json(r.product)},
                {"gamma_x", r.gamma_x.value.str()},
                {"gamma_y", r.gamma_y.value.str()},
                {"gamma_xy", r.gamma_product.value.str()},
                {"matches_closed_forms", r.matches_closed_forms},
                {"product_rule_violated", r.violated}}
               .dump()
        << "\n";
  } else {
    out << "x = " << render(r.x) << "\n"
        << "y = " << render(r.y) << "\n"
        << "xy = " << render(r.product) << "\n"
        << "gamma(x) = " << value_text(r.gamma_x) << "  (expected " << to_string(r.expected_x) << ")\n"
        << "gamma(y) = " << value_text(r.gamma_y) << "  (expected " << to_string(r.expected_y) << ")\n"
        << "gamma(xy) = " << value_text(r.gamma_product) << "  (expected " << to_string(r.expected_product) << ")\n"
        << "gamma(x) + gamma(y) = " << sum << "\n"
        << (r.violated ? "PRODUCT RULE VIOLATED" : "product rule holds") << "\n";
    if (!r.matches_closed_forms) out << "closed forms NOT reproduced\n";
  }
  return r.matches_closed_forms && r.violated ? kOk : kCheckFailed;
}

std::string row_name(Summand x, Summand y) { return std::string(to_string(x)) + " x " + to_string(y); }

int cmd_table_check(const Options& o, std::ostream& out) {
  Rational eps = eps_of(o);
  auto runs = run_table_trials(o.context(), eps, o.trials, o.seed);
  std::size_t failures = 0;
  json rows = json::array();
  if (!o.json()) {
    out << "p=" << o.p << " n=" << o.nvars << " M=" << o.precision << " eps=" << to_string(eps)
        << " pairs per row=" << o.trials << " seed=" << o.seed << "\n";
  }
  const char* columns[] = {"int", "frp", "d(frp)"};
  for (const auto& run : runs) {
    failures += run.failures;
    json cells = json::object();
    std::ostringstream line;
    line << row_name(run.row_x, run.row_y) << ": pairs=" << run.pairs << " failures=" << run.failures;
    for (std::size_t k = 0; k < 3; ++k) {
      auto c = *table_constant(run.row_x, run.row_y, static_cast<Summand>(k));
      if (c) {
        line << "  " << columns[k] << ": >= +" << *c << " min margin " << run.min_margin[k];
        cells[columns[k]] = {{"constant", *c}, {"min_margin", run.min_margin[k].str()}};
      } else {
        line << "  " << columns[k] << ": zero " << run.zero_checks[k] << "/" << run.pairs;
        cells[columns[k]] = {{"constant", "inf"}, {"zero_verified", run.zero_checks[k]}};
      }
    }
    if (o.json()) {
      rows.push_back({{"row", row_name(run.row_x, run.row_y)}, {"pairs", run.pairs}, {"failures", run.failures},
                      {"cells", cells}});
    } else {
      out << line.str() << "\n";
    }
  }
  if (o.json()) {
    out << json{{"eps", to_string(eps)}, {"seed", o.seed}, {"rows", rows}, {"all_hold", failures == 0}}.dump()
        << "\n";
  } else {
    out << (failures == 0 ? "all margins nonnegative" : "TABLE VIOLATED in " + std::to_string(failures) + " pairs")
        << "\n";
  }
  return failures == 0 ? kOk : kCheckFailed;
}

int cmd_axioms(const Options& o, std::ostream& out, std::ostream& err) {
  Rational eps = eps_of(o);
  if (o.exprs.size() == 2) {
    AxiomReport r = check_axioms(eval_arg(o, o.exprs[0], err), eval_arg(o, o.exprs[1], err), eps);
    if (o.json()) {
      json checks = json::array();
      for (const auto& c : r.checks) checks.push_back({{"axiom", c.name}, {"margin", c.margin.str()}, {"holds", c.holds}});
      out << json{{"checks", checks},
                  {"zeta_x", value_json(r.zeta_x)},
                  {"zeta_y", value_json(r.zeta_y)},
                  {"zeta_xy", value_json(r.zeta_product)},
                  {"truncation_floor", r.truncation_floor.str()},
                  {"conclusive", r.conclusive},
                  {"all_hold", r.all_hold()}}
                 .dump()
          << "\n";
    } else {
      out << "zeta(x) = " << value_text(r.zeta_x) << ", zeta(y) = " << value_text(r.zeta_y)
          << ", zeta(xy) = " << value_text(r.zeta_product) << "\n";
      for (const auto& c : r.checks) {
        out << c.name << ": margin " << c.margin << (c.holds ? " ok" : " FAILED") << "\n";
      }
      if (!r.conclusive) {
        out << "note: terms below p^M could reach zeta " << r.truncation_floor << "; raise --prec to rule them out\n";
      }
      out << (r.all_hold() ? "all axioms hold" : "AXIOM VIOLATED") << "\n";
    }
    return r.all_hold() ? kOk : kCheckFailed;
  }
  if (!o.exprs.empty()) throw UsageError("axioms takes two expressions, or none for random trials");
  AxiomRun run = run_axiom_trials(o.context(), eps, o.trials, o.seed);
  if (o.json()) {
    out << json{{"pairs", run.pairs},
                {"failures", run.failures},
                {"inconclusive", run.inconclusive},
                {"min_product_margin", run.min_product_margin.str()},
                {"all_hold", run.failures == 0}}
               .dump()
        << "\n";
  } else {
    out << "pairs=" << run.pairs << " failures=" << run.failures << " min product margin=" << run.min_product_margin
        << " truncation-sensitive pairs=" << run.inconclusive << "\n"
        << (run.failures == 0 ? "all axioms hold" : "AXIOM VIOLATED") << "\n";
  }
  return run.failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact arithmetic in the truncated de Rham-Witt complex of F_p[X1..Xn]", "drw"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--p", o.p, "the prime p")->capture_default_str();
  app.add_option("--nvars", o.nvars, "number of variables n")->capture_default_str();
  app.add_option("--prec", o.precision, "Witt vector length M (coefficients mod p^M)")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", o.out_file, "write output to FILE");

  std::function<int(std::ostream&)> action;
  std::vector<CLI::Option*> expr_options;
  auto expression_args = [&](CLI::App* sub, std::size_t count) {
    // One string per option: vector options would read "[X1]" as a list literal.
    expr_options.push_back(sub->add_option("x", o.x_text, "expression")->required());
    if (count == 2) expr_options.push_back(sub->add_option("y", o.y_text, "second expression")->required());
  };
  auto eps_option = [&](CLI::App* sub) {
    sub->add_option("--eps", o.eps_text, "positive rational epsilon")->capture_default_str();
  };

  auto* canon = app.add_subcommand("canon", "print the canonical form");
  expression_args(canon, 1);
  canon->callback([&] { action = [&](std::ostream& s) { return cmd_unary(o, s, err, [](const DRWElement& x) { return x; }); }; });

  auto* mul_cmd = app.add_subcommand("mul", "multiply two expressions");
  expression_args(mul_cmd, 2);
  mul_cmd->callback([&] { action = [&](std::ostream& s) { return cmd_mul(o, s, err); }; });

  auto* diff = app.add_subcommand("diff", "apply d");
  expression_args(diff, 1);
  diff->callback([&] {
    action = [&](std::ostream& s) { return cmd_unary(o, s, err, [](const DRWElement& x) { return differential(x); }); };
  });

  auto* frob = app.add_subcommand("frob", "apply F");
  expression_args(frob, 1);
  frob->add_option("-k,--times", o.times, "number of applications")->capture_default_str();
  frob->callback([&] {
    action = [&](std::ostream& s) {
      return cmd_unary(o, s, err, [&](const DRWElement& x) { return frobenius_power(x, o.times); });
    };
  });

  auto* versch = app.add_subcommand("versch", "apply V");
  expression_args(versch, 1);
  versch->add_option("-k,--times", o.times, "number of applications")->capture_default_str();
  versch->callback([&] {
    action = [&](std::ostream& s) {
      return cmd_unary(o, s, err, [&](const DRWElement& x) { return verschiebung_power(x, o.times); });
    };
  });

  auto* gamma_cmd = app.add_subcommand("gamma", "evaluate gamma_eps");
  eps_option(gamma_cmd);
  expression_args(gamma_cmd, 1);
  gamma_cmd->callback([&] { action = [&](std::ostream& s) { return cmd_growth(o, s, err, false); }; });

  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate zeta_eps");
  eps_option(zeta_cmd);
  expression_args(zeta_cmd, 1);
  zeta_cmd->callback([&] { action = [&](std::ostream& s) { return cmd_growth(o, s, err, true); }; });

  auto* table = app.add_subcommand("table-check", "random check of the zeta product table");
  eps_option(table);
  table->add_option("--trials", o.trials, "pairs per table row")->capture_default_str();
  table->callback([&] { action = [&](std::ostream& s) { return cmd_table_check(o, s); }; });

  auto* counter = app.add_subcommand("counterexample", "gamma_eps product-rule counterexamples");
  eps_option(counter);
  counter->add_option("--which", o.which, "1 or 2")->check(CLI::IsMember({1, 2}))->capture_default_str();
  counter->add_option("--m", o.m, "the exponent m")->capture_default_str();
  counter->callback([&] { action = [&](std::ostream& s) { return cmd_counterexample(o, s); }; });

  auto* axioms = app.add_subcommand("axioms", "check the pseudovaluation axioms for zeta_eps");
  eps_option(axioms);
  expr_options.push_back(axioms->add_option("x", o.x_text, "first expression (random pairs when omitted)"));
  expr_options.push_back(axioms->add_option("y", o.y_text, "second expression"));
  axioms->add_option("--trials", o.trials, "random pairs")->capture_default_str();
  axioms->callback([&] { action = [&](std::ostream& s) { return cmd_axioms(o, s, err); }; });

  try {
    app.parse(argc, argv);
    for (CLI::Option* opt : expr_options) {
      if (opt->count() > 0) o.exprs.push_back(opt->as<std::string>());
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    code = action(buffer);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out_file.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_file);
    if (!file) {
      err << "error: cannot write " << o.out_file << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace drw::cli
