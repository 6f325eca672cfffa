#include <unistd.h>

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyclif/hyclif.hpp"

namespace {

using namespace hyclif;

constexpr int exit_ok = 0;
constexpr int exit_eval = 1;
constexpr int exit_suite = 2;
constexpr int exit_usage = 3;

// Parse errors already carry "line L, col C" in their message.
void report(const std::exception& e) { std::cerr << "error: " << e.what() << '\n'; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int run_eval(int n, const std::string& src, bool json) {
  try {
    const ContextPtr ctx = AlgebraContext::make(n);
    const Multivecfor v = evaluate(src, ctx);
    if (json)
      std::cout << to_json(v).dump() << '\n';
    else
      std::cout << to_string(v) << '\n';
    return exit_ok;
  } catch (const std::exception& e) {
    report(e);
    return exit_eval;
  }
}

int run_repl(int n) {
  const bool interactive = isatty(STDIN_FILENO) != 0;
  ContextPtr ctx = AlgebraContext::make(n);
  Environment env;
  std::string line;
  for (;;) {
    if (interactive) std::cout << "hyclif[" << ctx->dim() << "]> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    try {
      if (line == ":quit" || line == ":q") break;
      if (line == ":help") {
        std::cout << ":dim            show the dimension\n"
                     ":dim N          switch to dimension N (clears bindings)\n"
                     ":let NAME = EXPR\n"
                     ":quit\n";
        continue;
      }
      if (line == ":dim") {
        std::cout << ctx->dim() << '\n';
        continue;
      }
      if (line.rfind(":dim ", 0) == 0) {
        const std::string arg = trim(line.substr(5));
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 3)
          throw Error(Errc::invalid_argument, "usage: :dim N");
        const int m = std::stoi(arg);
        if (m < 1 || m > max_dimension) throw Error(Errc::out_of_range, "dimension must be in 1.." + std::to_string(max_dimension));
        ctx = AlgebraContext::make(m);
        env.clear();
        continue;
      }
      if (line.rfind(":let ", 0) == 0) {
        const std::string rest = line.substr(5);
        const auto eq = rest.find('=');
        if (eq == std::string::npos) throw Error(Errc::invalid_argument, "usage: :let NAME = EXPR");
        const std::string name = trim(rest.substr(0, eq));
        if (!is_identifier(name)) throw Error(Errc::invalid_argument, "invalid name '" + name + "'");
        if (is_reserved_name(name)) throw Error(Errc::invalid_argument, "'" + name + "' is reserved");
        env[name] = evaluate(rest.substr(eq + 1), ctx, env);
        std::cout << name << " = " << to_string(env[name]) << '\n';
        continue;
      }
      if (line[0] == ':') throw Error(Errc::invalid_argument, "unknown command " + line.substr(0, line.find(' ')));
      std::cout << to_string(evaluate(line, ctx, env)) << '\n';
    } catch (const std::exception& e) {
      report(e);
    }
  }
  return exit_ok;
}

int run_check(int n, const std::string& suite, int trials, std::uint64_t seed) {
  SuiteReport r;
  try {
    r = run_suite(suite, n, trials, seed);
  } catch (const Error& e) {
    report(e);
    return exit_usage;
  }
  std::cout << r.text();
  return r.all_passed() ? exit_ok : exit_suite;
}

int run_table(int n, const std::string& product, const std::string& format) {
  try {
    std::cout << emit_table(parse_table_product(product), n, parse_table_format(format));
    return exit_ok;
  } catch (const Error& e) {
    report(e);
    return exit_usage;
  }
}

int run_rep(int n, const std::string& src, const std::string& format) {
  try {
    const ContextPtr ctx = AlgebraContext::make(n);
    const FockMatrix m = rep(evaluate(src, ctx));
    if (format == "json") {
      Json j;
      j["basis"] = fock_labels(ctx);
      j["matrix"] = to_json(m.matrix());
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << to_csv(m.matrix(), fock_labels(ctx));
    }
    return exit_ok;
  } catch (const std::exception& e) {
    report(e);
    return exit_eval;
  }
}

int run_spinor(int n, const std::string& src) {
  try {
    const ContextPtr ctx = AlgebraContext::make(n);
    std::cout << to_json(spinor_decompose(evaluate(src, ctx))).dump() << '\n';
    return exit_ok;
  } catch (const std::exception& e) {
    report(e);
    return exit_eval;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for the Clifford algebra of H_V = V + V*"};
  app.require_subcommand(1);
  int n = 2;
  app.add_option("--dim", n, "dimension n of V")->check(CLI::Range(1, max_dimension));

  std::string expr;
  bool json = false;
  auto* eval = app.add_subcommand("eval", "evaluate one expression");
  eval->add_option("expr", expr, "expression")->required();
  eval->add_flag("--json", json, "print the value as JSON");

  auto* repl = app.add_subcommand("repl", "read-eval-print loop on stdin");

  std::string suite = "all";
  int trials = 200;
  std::uint64_t seed = 42;
  auto* check = app.add_subcommand("check", "run an identity suite");
  check->add_option("--suite", suite, "contractions, products, hodge, witt, endo, ideals or all");
  check->add_option("--trials", trials, "random trials per identity")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "RNG seed");

  std::string product = "geometric", format = "text";
  auto* table = app.add_subcommand("table", "print a Cayley table of basis blades");
  table->add_option("--product", product, "geometric, wedge or lcontract");
  table->add_option("--format", format, "text, csv or json");

  std::string rep_format = "csv";
  auto* repc = app.add_subcommand("rep", "matrix of an element acting on the exterior algebra of V");
  repc->add_option("expr", expr, "expression")->required();
  repc->add_option("--format", rep_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* spinor = app.add_subcommand("spinor", "spinor components of an element of the exterior algebra of V*");
  spinor->add_option("expr", expr, "expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (*eval) return run_eval(n, expr, json);
  if (*repl) return run_repl(n);
  if (*check) return run_check(n, suite, trials, seed);
  if (*table) return run_table(n, product, format);
  if (*repc) return run_rep(n, expr, rep_format);
  if (*spinor) return run_spinor(n, expr);
  return exit_usage;
}
