#include "flowvol/cli.hpp"

#include "flowvol/closed_forms.hpp"
#include "flowvol/ct_engine.hpp"
#include "flowvol/cyclic.hpp"
#include "flowvol/dyck.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace flowvol {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string &text, std::string_view what) {
  std::vector<int> values;
  if (text.empty()) {
    return values;
  }
  for (const std::string &piece : split(text, ',')) {
    values.push_back(parse_int(piece, what));
  }
  return values;
}

struct GraphArgs {
  std::string graph;
  std::string flow;
};

struct EhrhartArgs {
  std::string graph;
  std::string family;
  int n = 0;
  int k = 0;
  std::string method = "kpf";
};

struct EnumerateArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  std::optional<int> i;
  std::optional<int> zeros;
  std::string comp;
  bool list = false;
  bool count = false;
};

struct VerifyArgs {
  std::string suite;
  std::optional<int> max_n;
  std::optional<int> max_k;
  std::string format = "text";
  std::string out_path;
};

struct CtArgs {
  std::string expr;
  std::string method = "constraint";
  std::optional<int> cap;
};

struct FitArgs {
  std::string graph;
  int k_max = 0;
};

int cmd_ehrhart(const EhrhartArgs &a, std::ostream &out) {
  if (a.k < 1) {
    throw UsageError("--k must be at least 1");
  }
  if (!a.graph.empty()) {
    if (!a.family.empty()) {
      throw UsageError("give either --graph or --family, not both");
    }
    if (a.method != "kpf") {
      throw UsageError("--graph supports only --method kpf");
    }
    out << ehrhart_like(parse_graph_spec(a.graph), a.k) << '\n';
    return exit_ok;
  }
  if (a.family != "ps" && a.family != "car") {
    throw UsageError("--family must be ps or car (or pass --graph)");
  }
  const bool ps = a.family == "ps";
  if (a.n < (ps ? 2 : 3)) {
    throw UsageError(ps ? "--n must be at least 2 for ps" : "--n must be at least 3 for car");
  }
  const int n = a.n;
  const int k = a.k;
  const std::vector<std::pair<std::string, std::function<Integer()>>> paths{
      {"kpf", [&] { return ehrhart_like(ps ? build_ps(n) : build_car(n), k); }},
      {"ct", [&] { return evaluate(ps ? ps_ct_expression(n, k) : car_ct_expression(n - 1, k)); }},
      {"enum", [&] { return ps ? count_ld(n - 1, k, LabelFilter::zeros(0)) : count_dld(n - 2, k); }},
      {"closed", [&] { return ps ? ehrhart_ps_closed(n, k) : ehrhart_car_closed(n, k); }}};
  if (a.method == "all") {
    std::optional<Integer> first;
    bool agree = true;
    for (const auto &[name, run] : paths) {
      const Integer value = run();
      out << name << '=' << value << '\n';
      if (first && *first != value) {
        agree = false;
      }
      first = first.value_or(value);
    }
    out << (agree ? "AGREE" : "DISAGREE") << '\n';
    return agree ? exit_ok : exit_fail;
  }
  for (const auto &[name, run] : paths) {
    if (name == a.method) {
      out << run() << '\n';
      return exit_ok;
    }
  }
  throw UsageError("--method must be kpf, ct, enum, closed or all");
}

template <typename Word>
void emit(const std::vector<Word> &words, const EnumerateArgs &a, std::ostream &out) {
  if (a.list) {
    for (const Word &w : words) {
      out << w.to_string() << '\n';
    }
  } else {
    out << words.size() << '\n';
  }
}

int cmd_enumerate(const EnumerateArgs &a, std::ostream &out) {
  if (a.list && a.count) {
    throw UsageError("give at most one of --list and --count");
  }
  if (a.n < 0 || a.k < 1) {
    throw UsageError("enumerate needs --n >= 0 and --k >= 1");
  }
  const std::vector<int> comp = parse_int_list(a.comp, "composition entry");
  if (a.kind == "ld") {
    if (a.zeros && !comp.empty()) {
      throw UsageError("give at most one of --zeros and --comp");
    }
    LabelFilter filter = LabelFilter::none();
    if (a.zeros) {
      filter = LabelFilter::zeros(*a.zeros);
    } else if (!comp.empty()) {
      filter = LabelFilter::composition(comp);
    }
    if (a.list) {
      emit(enumerate_ld(a.n, a.k, filter), a, out);
    } else {
      out << count_ld(a.n, a.k, filter) << '\n';
    }
    return exit_ok;
  }
  if (a.kind == "dld") {
    if (a.list) {
      emit(enumerate_dld(a.n, a.k), a, out);
    } else {
      out << count_dld(a.n, a.k) << '\n';
    }
    return exit_ok;
  }
  if (a.kind == "prefix") {
    if (!a.i) {
      throw UsageError("enumerate prefix needs --i");
    }
    std::vector<std::vector<int>> comps;
    if (comp.empty()) {
      if (*a.i < 0 || *a.i > a.n) {
        throw UsageError("--i must lie in 0..n");
      }
      comps = weak_compositions(a.n - *a.i, a.k + 1);
    } else {
      comps.push_back(comp);
    }
    std::vector<DyckPrefixWord> words;
    for (const auto &c : comps) {
      for (DyckPrefixWord &w : enumerate_prefixes(a.n, *a.i, a.k, c)) {
        words.push_back(std::move(w));
      }
    }
    if (comps.size() > 1) {
      std::sort(words.begin(), words.end(), [](const auto &x, const auto &y) {
        return x.steps() < y.steps();
      });
    }
    emit(words, a, out);
    return exit_ok;
  }
  if (a.kind == "ew") {
    std::vector<std::string> words;
    auto collect = [&](const Steps &s) { words.push_back(format_steps(s)); };
    if (a.i) {
      for_each_prefix_extended_word(a.n, *a.i, a.k, collect);
    } else {
      for_each_extended_word(a.n, a.k, collect);
    }
    if (a.list) {
      for (const std::string &w : words) {
        out << w << '\n';
      }
    } else {
      out << words.size() << '\n';
    }
    return exit_ok;
  }
  throw UsageError("enumerate kind must be ld, dld, prefix or ew");
}

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  if (a.format != "text" && a.format != "json" && a.format != "csv") {
    throw UsageError("--format must be text, json or csv");
  }
  VerifyOptions options;
  options.max_n = a.max_n;
  options.max_k = a.max_k;
  options.workers = workers_from_environment();
  const VerificationReport report = run_verification(a.suite, options);
  const std::string rendered = a.format == "json"  ? render_json(report)
                               : a.format == "csv" ? render_csv(report)
                                                   : render_text(report);
  if (a.out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      throw UsageError("cannot open --out path: " + a.out_path);
    }
    file << rendered;
  }
  return report.ok() ? exit_ok : exit_fail;
}

int cmd_ct(const CtArgs &a, std::ostream &out) {
  const CTExpression e = CTExpression::parse(a.expr);
  if (a.method == "constraint") {
    out << evaluate(e) << '\n';
    return exit_ok;
  }
  if (a.method == "series") {
    out << (a.cap ? evaluate_series_oracle(e, *a.cap) : evaluate_series_auto(e)) << '\n';
    return exit_ok;
  }
  if (a.method == "both") {
    const Integer x = evaluate(e);
    const Integer y = a.cap ? evaluate_series_oracle(e, *a.cap) : evaluate_series_auto(e);
    out << "constraint=" << x << '\n' << "series=" << y << '\n'
        << (x == y ? "AGREE" : "DISAGREE") << '\n';
    return x == y ? exit_ok : exit_fail;
  }
  throw UsageError("--method must be constraint, series or both");
}

int cmd_fit(const FitArgs &a, std::ostream &out) {
  const RationalPolynomial poly = ehrhart_fit(parse_graph_spec(a.graph), a.k_max);
  // Ascending powers up to the degree; the zero polynomial prints as 0.
  const int top = std::max(poly.degree(), 0);
  for (int i = 0; i <= top; ++i) {
    out << (i ? " " : "") << poly.coefficients[static_cast<std::size_t>(i)].get_str();
  }
  out << '\n';
  return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Flow polytope volumes, Ehrhart-like polynomials and labeled Dyck paths"};
  app.name("flowvol");
  app.require_subcommand(1);

  GraphArgs kpf_args;
  auto *kpf_cmd = app.add_subcommand("kpf", "Kostant partition function K_G(a)");
  kpf_cmd->add_option("--graph", kpf_args.graph, "graph spec")->required();
  kpf_cmd->add_option("--flow", kpf_args.flow, "net flow, sink entry optional")->required();

  GraphArgs vol_args;
  auto *vol_cmd = app.add_subcommand("volume", "normalized volume of F_G(a)");
  vol_cmd->add_option("--graph", vol_args.graph, "graph spec")->required();
  vol_cmd->add_option("--flow", vol_args.flow, "net flow, sink entry optional")->required();

  EhrhartArgs eh_args;
  auto *eh_cmd = app.add_subcommand("ehrhart", "Ehrhart-like value E_G(k)");
  eh_cmd->add_option("--graph", eh_args.graph, "graph spec");
  eh_cmd->add_option("--family", eh_args.family, "ps or car");
  eh_cmd->add_option("--n", eh_args.n, "family index: PS_{n+1} or Car_{n+1}");
  eh_cmd->add_option("--k", eh_args.k, "multiplicity k")->required();
  eh_cmd->add_option("--method", eh_args.method, "kpf, ct, enum, closed or all");

  EnumerateArgs en_args;
  auto *en_cmd = app.add_subcommand("enumerate", "enumerate labeled words");
  en_cmd->add_option("kind", en_args.kind, "ld, dld, prefix or ew")->required();
  en_cmd->add_option("--n", en_args.n, "semilength")->required();
  en_cmd->add_option("--k", en_args.k, "label bound")->required();
  en_cmd->add_option("--i", en_args.i, "final height (prefix, ew)");
  en_cmd->add_option("--zeros", en_args.zeros, "number of D0 steps (ld)");
  en_cmd->add_option("--comp", en_args.comp, "label counts a_0,...,a_k");
  en_cmd->add_flag("--list", en_args.list, "print the words");
  en_cmd->add_flag("--count", en_args.count, "print the count (default)");

  VerifyArgs ver_args;
  auto *ver_cmd = app.add_subcommand("verify", "run an identity suite");
  ver_cmd->add_option("--suite", ver_args.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver_cmd->add_option("--max-n", ver_args.max_n, "largest n");
  ver_cmd->add_option("--max-k", ver_args.max_k, "largest k");
  ver_cmd->add_option("--format", ver_args.format, "text, json or csv");
  ver_cmd->add_option("--out", ver_args.out_path, "write the report to a file");

  CtArgs ct_args;
  auto *ct_cmd = app.add_subcommand("ct", "iterated constant term of an expression");
  ct_cmd->add_option("--expr", ct_args.expr, "m:e1,...; p:i^k,...; d:i-j,...")->required();
  ct_cmd->add_option("--method", ct_args.method, "constraint, series or both");
  ct_cmd->add_option("--cap", ct_args.cap, "degree cap for the series evaluator");

  FitArgs fit_args;
  auto *fit_cmd = app.add_subcommand("fit", "interpolate E_G(k) as a polynomial in k");
  fit_cmd->add_option("--graph", fit_args.graph, "graph spec")->required();
  fit_cmd->add_option("--k-max", fit_args.k_max, "number of sample points")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*kpf_cmd) {
      const DirectedStepGraph g = parse_graph_spec(kpf_args.graph);
      out << kpf(g, parse_flow(kpf_args.flow, g)) << '\n';
      return exit_ok;
    }
    if (*vol_cmd) {
      const DirectedStepGraph g = parse_graph_spec(vol_args.graph);
      out << volume(g, parse_flow(vol_args.flow, g)) << '\n';
      return exit_ok;
    }
    if (*eh_cmd) return cmd_ehrhart(eh_args, out);
    if (*en_cmd) return cmd_enumerate(en_args, out);
    if (*ver_cmd) return cmd_verify(ver_args, out);
    if (*ct_cmd) return cmd_ct(ct_args, out);
    if (*fit_cmd) return cmd_fit(fit_args, out);
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_fail;
  }
  err << "error: no subcommand\n";
  return exit_usage;
}

} // namespace flowvol
