#include "thinbase/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "thinbase/bounds.hpp"
#include "thinbase/constructions.hpp"
#include "thinbase/errors.hpp"
#include "thinbase/extremal.hpp"
#include "thinbase/ff.hpp"
#include "thinbase/io.hpp"
#include "thinbase/magic.hpp"

namespace thinbase::cli {

namespace {

// Usage errors raised after parsing; the message names the flag.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 's' ||
           c == 'p';
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  double term() {
    double v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        v /= unary();
      } else if (starts_factor()) {
        v *= unary();
      } else {
        return v;
      }
    }
  }
  double unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return factor();
  }
  double factor() {
    skip();
    if (eat('(')) {
      const double v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (eat_word("sqrt")) {
      const double arg = eat('(') ? paren_rest() : number();
      if (arg < 0) fail("sqrt of a negative number");
      return std::sqrt(arg);
    }
    if (eat_word("pi")) return std::numbers::pi;
    return number();
  }
  double paren_rest() {
    const double v = expr();
    if (!eat(')')) fail("missing ')'");
    return v;
  }
  double number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
            s_[pos_] == 'e' || s_[pos_] == 'E' ||
            ((s_[pos_] == '-' || s_[pos_] == '+') && pos_ > start &&
             (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    const std::string text(s_.substr(start, pos_ - start));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      fail("bad number '" + text + "'");
    }
    if (used != text.size()) fail("bad number '" + text + "'");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double real_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void print_json(std::ostream& os, const io::json& j) { os << j.dump(2) << '\n'; }

void print_set(std::ostream& os, const IntSet& s) {
  bool first = true;
  for (auto v : s) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  os << '\n';
}

io::json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return io::json::parse(in);
    std::ifstream file(path);
    if (!file) throw UsageError("--file: cannot open '" + path + "'");
    return io::json::parse(file);
  } catch (const io::json::parse_error& e) {
    throw UsageError("--file: invalid JSON (" + std::string(e.what()) + ")");
  }
}

int report_checks(const std::vector<Check>& checks, const std::string& what, std::ostream& err) {
  if (const Check* bad = first_failure(checks)) {
    err << what << ": check '" << bad->property << "' failed";
    if (!bad->witness.empty()) err << ": " << bad->witness;
    err << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

struct Options {
  std::int64_t t = 0, r = 0, p = 0, n = 0, trials = 20, k = 0, m = 0, grid = 10, max_n = 0,
               terms = 0, m_hint = 0;
  std::uint64_t seed = 1;
  std::string c, beta, delta = "0.3", x, which, file, min, max, step;
  bool json = false;
  unsigned threads = 1;
};

using Handler = std::function<int(std::ostream&, std::ostream&)>;

}  // namespace

double parse_real(std::string_view text) {
  const double v = ExprParser(text).parse();
  if (!std::isfinite(v)) throw std::invalid_argument("'" + std::string(text) + "' is not finite");
  return v;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sidon sets, additive bases, edge-magic labellings and sum/difference bounds",
               "thinbase"};
  app.require_subcommand(1);
  Options o;
  Handler handler;
  auto on = [&](CLI::App* sub, Handler h) { sub->callback([&handler, h] { handler = h; }); };

  // construct
  auto* construct = app.add_subcommand("construct", "Build and verify an explicit set");
  construct->require_subcommand(1);
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Full JSON report"); };
  auto emit_report = [&](const ConstructionReport& rep, std::ostream& os, std::ostream& es) {
    if (o.json) {
      print_json(os, io::to_json(rep));
    } else {
      print_set(os, rep.set);
    }
    return report_checks(rep.checks, rep.name, es);
  };
  {
    auto* s = construct->add_subcommand("mrose", "Five-progression additive basis");
    s->add_option("--t", o.t, "Parameter t >= 1")->required()->check(CLI::Range(1, 100000));
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) { return emit_report(describe_mrose(o.t), os, es); });
  }
  {
    auto* s = construct->add_subcommand("rohrbach", "Basis of [0, 4r^2] with at most 4r elements");
    s->add_option("--r", o.r, "Parameter r >= 2")->required()->check(CLI::Range(2, 1000000));
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) { return emit_report(describe_rohrbach(o.r), os, es); });
  }
  {
    auto* s = construct->add_subcommand("bose-chowla", "Sidon set of size p in [1, p^2-1]");
    s->add_option("--p", o.p, "Odd prime")->required();
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) {
      require(o.p >= 3 && ff::is_prime(static_cast<std::uint64_t>(o.p)),
              "--p: must be an odd prime");
      require(o.p <= static_cast<std::int64_t>(ff::Fp2Context::kMaxPrime),
              "--p: must be at most " + std::to_string(ff::Fp2Context::kMaxPrime));
      return emit_report(describe_bose_chowla(static_cast<std::uint64_t>(o.p)), os, es);
    });
  }
  auto add_nc = [&](CLI::App* s) {
    s->add_option("--n", o.n, "Ambient interval [1, n]")->required()->check(CLI::Range(std::int64_t{4}, std::int64_t{1} << 40));
    s->add_option("--c", o.c, "Scale c, e.g. 1.5, 2/sqrt3, 2*sqrt2")->required();
  };
  auto add_random = [&](CLI::App* s) {
    s->add_option("--trials", o.trials, "Random shift trials")->check(CLI::Range(1, 1000000));
    s->add_option("--seed", o.seed, "RNG seed");
  };
  {
    auto* s = construct->add_subcommand("quasi-sidon-reflect", "Sidon set plus a reflected copy");
    add_nc(s);
    add_random(s);
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) {
      const double c = real_flag("--c", o.c);
      require(c > 0 && c <= 2.0 + 1e-12, "--c: must lie in (0, 2]");
      return emit_report(quasi_sidon_reflect(o.n, c, o.trials, o.seed), os, es);
    });
  }
  {
    auto* s = construct->add_subcommand("quasi-sidon-aps", "End blocks plus two progressions");
    add_nc(s);
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) {
      const double c = real_flag("--c", o.c);
      require(c > 0 && c <= 2.0 * std::numbers::sqrt2 + 1e-12, "--c: must lie in (0, 2 sqrt2]");
      return emit_report(quasi_sidon_aps(o.n, c), os, es);
    });
  }
  {
    auto* s = construct->add_subcommand("diff-reflect", "Sidon set plus a shifted copy");
    add_nc(s);
    add_random(s);
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) {
      const double c = real_flag("--c", o.c);
      require(c >= 1.0 - 1e-12 && c <= std::numbers::sqrt2 + 1e-12, "--c: must lie in [1, sqrt2]");
      return emit_report(diff_reflect(o.n, c, o.trials, o.seed), os, es);
    });
  }
  {
    auto* s = construct->add_subcommand("diff-aps", "Initial block plus two progressions");
    add_nc(s);
    s->add_option("--beta", o.beta, "Block parameter (default depends on c)");
    add_json(s);
    on(s, [&](std::ostream& os, std::ostream& es) {
      const double c = real_flag("--c", o.c);
      require(c >= std::numbers::sqrt2 - 1e-12, "--c: must be at least sqrt2");
      std::optional<double> beta;
      if (!o.beta.empty()) {
        beta = real_flag("--beta", o.beta);
        require(*beta > 0 && *beta <= c + 1e-12, "--beta: must lie in (0, c]");
      }
      return emit_report(diff_aps(o.n, c, beta), os, es);
    });
  }

  // magic
  auto* magic_cmd = app.add_subcommand("magic", "Edge-magic labellings");
  magic_cmd->require_subcommand(1);
  {
    auto* s = magic_cmd->add_subcommand("build-mrose", "Dense edge-magic graph on 7t+4 vertices");
    s->add_option("--t", o.t, "Parameter t >= 1")->required()->check(CLI::Range(1, 10000));
    on(s, [&](std::ostream& os, std::ostream& es) {
      const auto l = magic::mrose_magic(o.t);
      print_json(os, io::to_json(l));
      return report_checks(magic::verify(l), "build-mrose", es);
    });
  }
  {
    auto* s = magic_cmd->add_subcommand("verify", "Check a labelling JSON document");
    s->add_option("--file", o.file, "Path, or - for standard input")->required();
    on(s, [&](std::ostream& os, std::ostream& es) {
      magic::MagicLabelling l;
      try {
        l = io::labelling_from_json(read_json(o.file, in));
      } catch (const UsageError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--file: ") + e.what());
      }
      const auto checks = magic::verify(l);
      print_json(os, {{"valid", all_pass(checks)}, {"checks", io::to_json(checks)}});
      return report_checks(checks, "verify", es);
    });
  }
  {
    auto* s = magic_cmd->add_subcommand("pad", "Add an isolated vertex to a bijective labelling");
    s->add_option("--file", o.file, "Path, or - for standard input")->required();
    on(s, [&](std::ostream& os, std::ostream& es) {
      magic::MagicLabelling l;
      try {
        l = io::labelling_from_json(read_json(o.file, in));
      } catch (const UsageError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--file: ") + e.what());
      }
      if (l.mode != magic::Mode::Bijective || !magic::is_valid(l)) {
        const auto checks = magic::verify(l);
        if (l.mode != magic::Mode::Bijective) {
          es << "pad: labelling is not bijective\n";
          return static_cast<int>(kVerifyFailed);
        }
        return report_checks(checks, "pad", es);
      }
      print_json(os, io::to_json(magic::pad_isolated(l)));
      return static_cast<int>(kOk);
    });
  }
  {
    auto* s = magic_cmd->add_subcommand("injection", "Edge-magic injection of K_n");
    s->add_option("--n", o.n, "Order n >= 4")->required()->check(CLI::Range(4, 100000));
    s->add_option("--delta", o.delta, "Slack delta > 0");
    on(s, [&](std::ostream& os, std::ostream& es) {
      const double delta = real_flag("--delta", o.delta);
      require(delta > 0, "--delta: must be positive");
      const auto res = magic::injection_kn(o.n, delta);
      print_json(os, io::to_json(res));
      return report_checks(magic::verify(res.labelling), "injection", es);
    });
  }
  {
    auto* s = magic_cmd->add_subcommand("search", "Exact maximum edge count M(n)");
    s->add_option("--n", o.n, "Order n")->required()->check(CLI::Range(std::int64_t{1}, magic::kSearchMaxN));
    s->add_option("--m-hint", o.m_hint, "Largest m to try (0: n(n-1)/2)")->check(CLI::NonNegativeNumber);
    s->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    on(s, [&](std::ostream& os, std::ostream& es) {
      const auto res = magic::search_max_magic(o.n, o.m_hint, o.threads);
      print_json(os, io::to_json(res));
      return report_checks(magic::verify(res.witness), "search", es);
    });
  }

  // extremal
  auto* ext = app.add_subcommand("extremal", "Exact s(k,n), d(k,n) and distribution statistics");
  ext->require_subcommand(1);
  auto add_kn = [&](CLI::App* s) {
    s->add_option("--k", o.k, "Set size")->required()->check(CLI::Range(std::int64_t{1}, extremal::kMaxN));
    s->add_option("--n", o.n, "Interval [1, n]")->required()->check(CLI::Range(std::int64_t{1}, extremal::kMaxN));
    s->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto emit_cell = [&](bool sums, std::ostream& os) {
    require(o.k <= o.n, "--k: must not exceed --n");
    const auto res = sums ? extremal::s_exact(o.k, o.n, o.threads) : extremal::d_exact(o.k, o.n, o.threads);
    io::write_cells_csv(os, {{o.k, o.n, res}});
    return static_cast<int>(kOk);
  };
  {
    auto* s = ext->add_subcommand("s", "max |A+A| over k-subsets of [n]");
    add_kn(s);
    on(s, [&](std::ostream& os, std::ostream&) { return emit_cell(true, os); });
  }
  {
    auto* s = ext->add_subcommand("d", "max |A-A| over k-subsets of [n]");
    add_kn(s);
    on(s, [&](std::ostream& os, std::ostream&) { return emit_cell(false, os); });
  }
  {
    auto* s = ext->add_subcommand("table", "All cells 1 <= k <= n <= max-n as CSV");
    o.which = "both";
    s->add_option("--max-n", o.max_n, "Largest n")->required()->check(CLI::Range(std::int64_t{1}, extremal::kMaxN));
    s->add_option("--which", o.which, "s, d or both")->check(CLI::IsMember({"s", "d", "both"}));
    s->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    on(s, [&](std::ostream& os, std::ostream&) {
      bool header = true;
      if (o.which != "d") {
        io::write_cells_csv(os, extremal::exact_table(extremal::Quantity::Sum, o.max_n, o.threads), "s", header);
        header = false;
      }
      if (o.which != "s") {
        io::write_cells_csv(os, extremal::exact_table(extremal::Quantity::Difference, o.max_n, o.threads), "d", header);
      }
      return static_cast<int>(kOk);
    });
  }
  {
    auto* s = ext->add_subcommand("discrepancy", "Interval/residue statistic of a Bose-Chowla set");
    s->add_option("--p", o.p, "Odd prime")->required();
    s->add_option("--m", o.m, "Modulus")->required()->check(CLI::Range(1, 1000000));
    s->add_option("--grid", o.grid, "Grid points per axis")->check(CLI::Range(1, 100000));
    on(s, [&](std::ostream& os, std::ostream&) {
      require(o.p >= 3 && ff::is_prime(static_cast<std::uint64_t>(o.p)), "--p: must be an odd prime");
      require(o.p <= static_cast<std::int64_t>(ff::Fp2Context::kMaxPrime),
              "--p: must be at most " + std::to_string(ff::Fp2Context::kMaxPrime));
      const IntSet a = bose_chowla(static_cast<std::uint64_t>(o.p));
      print_json(os, io::to_json(extremal::distribution_discrepancy(a, o.p * o.p - 1, o.m, o.grid)));
      return static_cast<int>(kOk);
    });
  }

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Closed-form bounds, curves and constants");
  bnd->require_subcommand(1);
  {
    auto* s = bnd->add_subcommand("constants", "Numeric constants as JSON");
    on(s, [&](std::ostream& os, std::ostream&) {
      print_json(os, io::to_json(bounds::constants()));
      return static_cast<int>(kOk);
    });
  }
  {
    auto* s = bnd->add_subcommand("curve", "Sample a bound curve as CSV");
    s->add_option("--which", o.which, "s-upper, s-lower, d-upper or d-lower")
        ->required()
        ->check(CLI::IsMember({"s-upper", "s-lower", "d-upper", "d-lower"}));
    s->add_option("--min", o.min, "Smallest c > 0")->required();
    s->add_option("--max", o.max, "Largest c")->required();
    s->add_option("--step", o.step, "Step > 0")->required();
    on(s, [&](std::ostream& os, std::ostream&) {
      const double lo = real_flag("--min", o.min);
      const double hi = real_flag("--max", o.max);
      const double step = real_flag("--step", o.step);
      require(lo > 0, "--min: must be positive");
      require(hi > lo, "--max: must exceed --min");
      require(step > 0, "--step: must be positive");
      require((hi - lo) / step <= 1e7, "--step: too many samples");
      io::write_curve_csv(os, bounds::curve_samples(bounds::parse_curve(o.which), lo, hi, step));
      return static_cast<int>(kOk);
    });
  }
  {
    auto* s = bnd->add_subcommand("fourier", "Partial Fourier sum against its target");
    s->add_option("--x", o.x, "Point x, e.g. pi/2")->required();
    s->add_option("--terms", o.terms, "Highest frequency (>= 2)")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    on(s, [&](std::ostream& os, std::ostream&) {
      const double x = real_flag("--x", o.x);
      const double partial = bounds::fourier_partial(x, o.terms);
      const double target = bounds::r_target(std::fmod(std::fmod(x, 2 * std::numbers::pi) + 2 * std::numbers::pi,
                                                       2 * std::numbers::pi));
      print_json(os, {{"x", x},
                      {"terms", o.terms},
                      {"partial", partial},
                      {"target", target},
                      {"error", std::abs(partial - target)},
                      {"tail_bound", bounds::fourier_tail(o.terms)}});
      return static_cast<int>(kOk);
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, diag;
    const int code = app.exit(e, help_out, diag);
    if (code == 0) {
      out << help_out.str();
      return kOk;
    }
    err << diag.str();
    return kUsage;
  }
  if (!handler) {
    err << app.help();
    return kUsage;
  }

  std::ostringstream payload;
  std::ostringstream diag;
  int code = kOk;
  try {
    code = handler(payload, diag);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << payload.str();
  err << diag.str();
  return code;
}

}  // namespace thinbase::cli
