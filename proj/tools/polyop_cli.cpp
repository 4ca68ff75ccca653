// polyop command-line front end.
//
// Exit codes: 0 success, 1 computed failure (violation, failed scenario,
// exhausted sequence), 2 usage or malformed input.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polyop/polyop.hpp"
#include "polyop/scenarios.hpp"

namespace {

using namespace polyop;
using io::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse(ss.str());
}

OperatorSpec read_operator(const std::string& path) { return io::operator_from_json(read_json_file(path)); }

// Malformed or invalid input maps to the usage code; anything else the
// library reports is a computed failure.
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::bad_parameter:
      return kUsage;
    default:
      return kFailure;
  }
}

int cmd_rep(const std::string& op_file, std::size_t order, bool as_json) {
  const auto rep = rep_prefix(read_operator(op_file), order);
  if (as_json) {
    std::cout << io::to_json(rep).dump(2) << '\n';
    return kOk;
  }
  std::printf("%-4s %-5s %s\n", "k", "deg", "Q_k(x)");
  for (std::size_t k = 0; k < rep.q.size(); ++k)
    std::printf("%-4zu %-5s %s\n", k, to_string(rep.q[k].degree()).c_str(), to_string(rep.q[k]).c_str());
  std::size_t nonzero = 0;
  for (const auto& q : rep.q) nonzero += q.is_zero() ? 0 : 1;
  std::printf("nonzero coefficients through N=%zu: %zu of %zu\n", order, nonzero, rep.q.size());
  return kOk;
}

int cmd_monotone(const std::string& op_file, std::size_t order, bool as_json) {
  const auto op = read_operator(op_file);
  const auto verdict = classify_operator(op, order);
  const auto infinite = infinite_order_certificate(op);
  if (as_json) {
    json j = io::to_json(verdict);
    if (infinite) j["infinite_order"] = *infinite;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << to_string(verdict) << '\n';
  if (infinite) std::cout << "infinite order: " << *infinite << '\n';
  return kOk;
}

int cmd_symbol(const std::string& op_file, std::size_t order, bool negate_w, bool as_json,
               const std::string& probe_w) {
  auto s = symbol(read_operator(op_file), order);
  if (negate_w) s = substitute_neg_w(std::move(s));
  if (as_json) {
    std::cout << io::to_json(s).dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < s.w_coeffs.size(); ++k)
      std::printf("w^%-3zu %s\n", k, to_string(s.w_coeffs[k], 'z').c_str());
  }
  if (!probe_w.empty()) {
    // Specializing a stable symbol at real w leaves a real-rooted polynomial
    // in z; this can only refute, and only for symbols polynomial in w.
    const Rational w0 = parse_rational(probe_w);
    const Poly z_poly = specialize_w(s, w0);
    const auto h = is_hyperbolic(z_poly);
    std::cout << "probe w=" << to_string(w0) << ": "
              << (h == Hyperbolicity::not_hyperbolic ? "not real-rooted in z (not stable, if the symbol has w-degree <= N)"
                                                     : "no evidence against")
              << '\n';
  }
  return kOk;
}

int cmd_hyperbolic(const std::string& poly) {
  std::cout << to_string(is_hyperbolic(io::parse_poly_literal(poly))) << '\n';
  return kOk;
}

int cmd_interlace(const std::string& p, const std::string& q) {
  const Poly pp = io::parse_poly_literal(p);
  const Poly qq = io::parse_poly_literal(q);
  try {
    std::cout << (interlaces(pp, qq) ? "True" : "False") << '\n';
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    std::cout << name(e.code()) << '\n';
  }
  return kOk;
}

int cmd_preserve(const std::string& op_file, const std::string& corpus_file, const CorpusGenerator& gen, bool as_json,
                 bool quiet) {
  const auto op = read_operator(op_file);
  const auto corpus = corpus_file.empty() ? generate_corpus(gen) : io::corpus_from_json(read_json_file(corpus_file));
  const auto report = preserve_test(op, corpus);
  if (as_json) {
    json j = io::to_json(report);
    j["summary"] = report.summary();
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < report.items.size(); ++i) {
      const auto& item = report.items[i];
      if (quiet && item.verdict != ImageVerdict::violation) continue;
      std::printf("[%zu] %s -> %s : %s\n", i, to_string(item.input).c_str(), to_string(item.image).c_str(),
                  to_string(item.verdict));
    }
    std::cout << report.summary() << '\n';
  }
  return report.clean() ? kOk : kFailure;
}

int cmd_corpus(const CorpusGenerator& gen) {
  std::cout << io::to_json(generate_corpus(gen)).dump() << '\n';
  return kOk;
}

int cmd_verify(const std::string& scenario, bool all) {
  const auto& reg = scenarios::registry();
  if (!all && scenario.empty()) {
    std::cerr << "verify: pass --scenario NAME or --all\n";
    return kUsage;
  }
  bool any_failed = false;
  bool matched = false;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& e : reg) {
    if (!all && e.name != scenario) continue;
    matched = true;
    const auto r = scenarios::run(e);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
    if (!r.passed) {
      any_failed = true;
      std::cout << r.diff.dump(2) << '\n';
    }
  }
  if (!matched) {
    std::cerr << "verify: unknown scenario '" << scenario << "'\n";
    return kUsage;
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (all) std::printf("elapsed: %.2f s\n", secs);
  return any_failed ? kFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential-operator representations of linear operators on R[x]"};
  app.require_subcommand(1);

  std::string op_file;
  std::size_t order = 10;
  bool as_json = false;

  auto* rep = app.add_subcommand("rep", "Coefficient polynomials Q_0..Q_N of T = sum Q_k D^k");
  rep->add_option("operator", op_file, "Operator JSON file")->required();
  rep->add_option("--order,-N", order, "Highest k")->capture_default_str();
  rep->add_flag("--json", as_json, "JSON output");

  auto* mono = app.add_subcommand("monotone", "Monotonicity verdict");
  mono->add_option("operator", op_file, "Operator JSON file")->required();
  mono->add_option("--order,-N", order, "Highest k scanned")->capture_default_str();
  mono->add_flag("--json", as_json, "JSON output");

  bool negate_w = false;
  std::string probe_w;
  auto* sym = app.add_subcommand("symbol", "Truncated symbol G_T(z,w)");
  sym->add_option("operator", op_file, "Operator JSON file")->required();
  sym->add_option("--order,-N", order, "Truncation order in w")->capture_default_str();
  sym->add_flag("--negate-w", negate_w, "Print G_T(z,-w)");
  sym->add_flag("--json", as_json, "JSON output");
  sym->add_option("--probe-w", probe_w, "Specialize w to this rational and test real-rootedness in z");

  std::string poly;
  auto* hyp = app.add_subcommand("hyperbolic", "Are all zeros real?");
  hyp->add_option("--poly", poly, "Ascending coefficients, e.g. 1,0,1")->required();

  std::string p_text;
  std::string q_text;
  auto* inter = app.add_subcommand("interlace", "Do the zeros of p and q interlace?");
  inter->add_option("--p", p_text, "Ascending coefficients")->required();
  inter->add_option("--q", q_text, "Ascending coefficients")->required();

  std::string corpus_file;
  CorpusGenerator gen;
  bool quiet = false;
  auto* pres = app.add_subcommand("preserve", "Push a hyperbolic corpus through the operator");
  pres->add_option("operator", op_file, "Operator JSON file")->required();
  pres->add_option("corpus", corpus_file, "Corpus JSON file (omit to generate one)");
  pres->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  pres->add_option("--count", gen.count, "Generated corpus size")->capture_default_str();
  pres->add_option("--max-degree", gen.max_degree, "Generated maximum degree")->capture_default_str();
  pres->add_option("--root-pool", gen.root_pool, "Generated root bound")->capture_default_str();
  pres->add_flag("--json", as_json, "JSON output");
  pres->add_flag("--quiet,-q", quiet, "Only print violations and the summary");

  auto* corp = app.add_subcommand("corpus", "Emit a seeded hyperbolic corpus as JSON");
  corp->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  corp->add_option("--count", gen.count, "Corpus size")->capture_default_str();
  corp->add_option("--max-degree", gen.max_degree, "Maximum degree")->capture_default_str();
  corp->add_option("--root-pool", gen.root_pool, "Root bound")->capture_default_str();

  std::string scenario;
  bool all = false;
  auto* ver = app.add_subcommand("verify", "Run the built-in reproduction scenarios");
  ver->add_option("--scenario", scenario, "Scenario name");
  ver->add_flag("--all", all, "Run every scenario");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*rep) return cmd_rep(op_file, order, as_json);
    if (*mono) return cmd_monotone(op_file, order, as_json);
    if (*sym) return cmd_symbol(op_file, order, negate_w, as_json, probe_w);
    if (*hyp) return cmd_hyperbolic(poly);
    if (*inter) return cmd_interlace(p_text, q_text);
    if (*pres) return cmd_preserve(op_file, corpus_file, gen, as_json, quiet);
    if (*corp) return cmd_corpus(gen);
    if (*ver) return cmd_verify(scenario, all);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const io::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
