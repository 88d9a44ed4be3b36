#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "yotl/jtrace.hpp"
#include "yotl/reports.hpp"
#include "yotl/util.hpp"
#include "yotl/wordexpr.hpp"
#include "yotl/ytl.hpp"

namespace {

using namespace yotl;

TraceParams build_params(int d, const std::string& u, const std::vector<std::string>& xs) {
  TraceParams p = default_params(d);
  if (!u.empty()) p.u = parse_rational(u);
  for (const auto& spec : xs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected s=value in --x, got '" + spec + "'");
    int s = 0;
    try {
      s = std::stoi(spec.substr(0, eq));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad x subscript in '" + spec + "'");
    }
    if (s < 1 || s > d - 1)
      throw std::invalid_argument("x subscript " + std::to_string(s) + " outside 1.." +
                                  std::to_string(d - 1));
    p.x[static_cast<std::size_t>(s - 1)] = parse_rational(spec.substr(eq + 1));
  }
  return p;
}

void read_env_caps() {
  if (const char* v = std::getenv("YOTL_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) limits().max_dim = parsed;
  }
  if (const char* v = std::getenv("YOTL_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) limits().max_steps = parsed;
  }
}

struct Args {
  std::string format = "text";
  int d = 1;
  int n = 2;
  std::string method = "both";
  std::string lhs, rhs, word;
  std::string u;
  std::vector<std::string> xs;
  std::string roots = "both";
  std::string suite;
  std::size_t triples = 500;
  std::size_t pairs = 200;
  std::uint64_t seed = 0;
};

int do_dim(const Args& a, bool json) {
  if (a.method == "formula") {
    std::uint64_t dim = ytl_dimension(a.d, a.n, DimMethod::formula);
    if (json) {
      std::cout << "{\n  \"d\": " << a.d << ",\n  \"n\": " << a.n
                << ",\n  \"dim_formula\": " << dim << "\n}\n";
    } else {
      std::cout << "quotient dimension for d = " << a.d << ", n = " << a.n << ": " << dim
                << "\n";
    }
    return 0;
  }
  DimensionReport r = dimension_report(a.d, a.n);
  std::cout << render_dim(r, json);
  return r.agree ? 0 : 1;
}

int do_mul(const Args& a, bool json) {
  AlgebraElement lhs = eval_word(parse_word(a.lhs, a.d, a.n));
  AlgebraElement rhs = eval_word(parse_word(a.rhs, a.d, a.n));
  MulReport report{a.d, a.n, a.lhs, a.rhs, mul(lhs, rhs)};
  std::cout << render_mul(report, json);
  return 0;
}

int do_trace(const Args& a, bool json, bool with_params) {
  AlgebraElement w = eval_word(parse_word(a.word, a.d, a.n));
  TraceReport report{a.d, a.n, a.word, trace(w), false, TraceParams{}, {}};
  if (with_params) {
    report.has_params = true;
    report.params = build_params(a.d, a.u, a.xs);
    report.substituted = substitute_u_x(report.value, report.params.u, report.params.x);
  }
  std::cout << render_trace(report, json);
  return 0;
}

int do_reduce(const Args& a, bool json) {
  AlgebraElement input = eval_word(parse_word(a.word, a.d, a.n));
  ReduceReport report{a.d, a.n, a.word, input, reduce_to_sigma(input).element()};
  std::cout << render_reduce(report, json);
  return 0;
}

int do_zroots(const Args& a, bool json) {
  ZRootsResult r = z_roots(build_params(a.d, a.u, a.xs));
  std::cout << render_zroots(r, json);
  return 0;
}

int do_scan(const Args& a, bool json) {
  RootChoice choice = a.roots == "one" ? RootChoice::one : RootChoice::both;
  ObstructionReport r = factoring_scan(a.d, a.n, build_params(a.d, a.u, a.xs), choice);
  std::cout << render_scan(r, json);
  return 0;
}

int do_verify(const Args& a, bool json) {
  if (a.suite == "presentation") {
    PresentationReport r = a.seed ? verify_presentation(a.d, a.n, a.triples, a.seed)
                                  : verify_presentation(a.d, a.n, a.triples);
    std::cout << render_presentation(r, json);
    return r.all_hold ? 0 : 1;
  }
  if (a.suite == "l-relations") {
    LPresentationReport r = verify_l_presentation(a.d, a.n);
    std::cout << render_lrelations(r, json);
    return r.all_hold ? 0 : 1;
  }
  if (a.suite == "tr9tr10") {
    Tr9Tr10Report r = identity_tr9_tr10(a.d);
    std::cout << render_tr9tr10(r, json);
    return r.all_match ? 0 : 1;
  }
  TraceRulesReport r = a.seed ? verify_trace_rules(a.d, a.n, a.pairs, a.seed)
                              : verify_trace_rules(a.d, a.n, a.pairs);
  std::cout << render_trace_rules(r, json);
  return r.all_hold ? 0 : 1;
}

int run(int argc, char** argv) {
  read_env_caps();

  CLI::App app{"Exact arithmetic in the Yokonuma-Hecke algebra, its Temperley-Lieb "
               "quotient, and the Juyumaya trace"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Args args;
  bool help_schemas = false;
  std::size_t max_dim = limits().max_dim;
  std::size_t max_steps = limits().max_steps;
  app.add_option("--format", args.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--max-dim", max_dim, "Cap on enumerated basis size d^n * n!")
      ->capture_default_str();
  app.add_option("--max-steps", max_steps, "Cap on rewriting steps per reduction")
      ->capture_default_str();
  app.add_flag("--help-schemas", help_schemas, "Print the JSON report schemas and exit");

  auto* dim = app.add_subcommand("dim", "Quotient dimension by formula and by ideal rank");
  dim->add_option("--d", args.d, "Framing modulus")->required()->check(CLI::PositiveNumber);
  dim->add_option("--n", args.n, "Strand count")->required()->check(CLI::PositiveNumber);
  dim->add_option("--method", args.method, "formula, rank or both")
      ->check(CLI::IsMember({"formula", "rank", "both"}))
      ->capture_default_str();

  auto* mulc = app.add_subcommand("mul", "Product of two words in normal form");
  mulc->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
  mulc->add_option("--n", args.n)->required()->check(CLI::PositiveNumber);
  mulc->add_option("--lhs", args.lhs, "Left word, e.g. 't1^2 g1'")->required();
  mulc->add_option("--rhs", args.rhs, "Right word")->required();

  auto* tracec = app.add_subcommand("trace", "Markov trace of a word");
  tracec->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
  tracec->add_option("--n", args.n)->required()->check(CLI::PositiveNumber);
  tracec->add_option("--word", args.word, "Word, e.g. 't1 g1 g2'")->required();
  auto* trace_u = tracec->add_option("--u", args.u, "Rational value for u");
  auto* trace_x = tracec->add_option("--x", args.xs, "Assignment s=p/q for x_s (repeatable)");

  auto* reducec = app.add_subcommand("ytl-reduce", "Image of a word over the sigma basis");
  reducec->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
  reducec->add_option("--n", args.n)->required()->check(CLI::PositiveNumber);
  reducec->add_option("--word", args.word)->required();

  auto* zrootsc = app.add_subcommand("zroots", "Roots of the trace-factoring quadratic");
  zrootsc->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
  zrootsc->add_option("--u", args.u, "Rational value for u")->required();
  zrootsc->add_option("--x", args.xs, "Assignment s=p/q for x_s (repeatable)");

  auto* scanc = app.add_subcommand("scan", "Obstruction scan over every basis word");
  scanc->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
  scanc->add_option("--n", args.n)->required()->check(CLI::PositiveNumber);
  scanc->add_option("--u", args.u, "Rational value for u (default 2)");
  scanc->add_option("--x", args.xs, "Assignment s=p/q for x_s (default x_s = 1/(s+1))");
  scanc->add_option("--roots", args.roots, "one or both")
      ->check(CLI::IsMember({"one", "both"}))
      ->capture_default_str();

  auto* verifyc = app.add_subcommand("verify", "Run a verification suite");
  verifyc->add_option("--suite", args.suite, "presentation, l-relations, tr9tr10 or markov")
      ->required()
      ->check(CLI::IsMember({"presentation", "l-relations", "tr9tr10", "markov"}));
  verifyc->add_option("--d", args.d)->required()->check(CLI::PositiveNumber);
  verifyc->add_option("--n", args.n, "Strand count (unused by tr9tr10)")
      ->check(CLI::PositiveNumber);
  verifyc->add_option("--triples", args.triples, "Random triples for associativity")
      ->capture_default_str();
  verifyc->add_option("--pairs", args.pairs, "Random pairs for trace commutativity")
      ->capture_default_str();
  verifyc->add_option("--seed", args.seed, "Seed for randomized checks (0 keeps the default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  limits().max_dim = max_dim;
  limits().max_steps = max_steps;
  if (help_schemas) {
    std::cout << schemas_text();
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cout << app.help();
    return 2;
  }

  bool json = args.format == "json";
  try {
    if (app.got_subcommand(dim)) return do_dim(args, json);
    if (app.got_subcommand(mulc)) return do_mul(args, json);
    if (app.got_subcommand(tracec))
      return do_trace(args, json, trace_u->count() > 0 || trace_x->count() > 0);
    if (app.got_subcommand(reducec)) return do_reduce(args, json);
    if (app.got_subcommand(zrootsc)) return do_zroots(args, json);
    if (app.got_subcommand(scanc)) return do_scan(args, json);
    if (app.got_subcommand(verifyc)) return do_verify(args, json);
  } catch (const WordParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
