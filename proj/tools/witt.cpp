// Command-line front end: evaluate expressions, apply the orbit maps and run
// the verification suites.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "witt/differentiators.hpp"
#include "witt/errors.hpp"
#include "witt/expr_io.hpp"
#include "witt/morphisms.hpp"
#include "witt/parallel.hpp"
#include "witt/verify.hpp"

using namespace witt;

namespace {

constexpr int kUsageError = 2;

void emit(const AnyElement& x, bool json) {
  std::cout << (json ? export_json(x) : print_canonical(x)) << "\n";
}

// "psi:3" -> Psi_3, "psi:inf" -> Psi_inf; likewise for phi.
MorphismContext parse_map(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad map '" + spec + "'");
  std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
  bool inf = tail == "inf";
  int n = 0;
  if (!inf) {
    std::size_t used = 0;
    n = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("bad map '" + spec + "'");
  }
  if (head == "psi") return inf ? MorphismContext::psi_infinity() : MorphismContext::psi(n);
  if (head == "phi") return inf ? MorphismContext::phi_infinity() : MorphismContext::phi(n);
  throw std::invalid_argument("unknown map '" + spec + "'");
}

AnyElement apply_map(const std::string& map, const std::string& variant,
                     const std::string& expr) {
  if (map == "S") return step_S(parse_witt(expr));
  if (map == "psiS") {
    StepVariant v = variant == "e0" ? StepVariant::e0 : StepVariant::e2;
    return step_PsiS(parse_target(expr, TargetRing::infinite()), v);
  }
  MorphismContext ctx = parse_map(map);
  if (ctx.is_psi()) return psi(ctx, parse_witt(expr));
  return phi(ctx, parse_commutative(expr, Alphabet::symmetric()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in U(W_{>=-1}) and its orbit maps"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string ring_tag = "uw", expr;
  auto* eval = app.add_subcommand("eval", "Normal-order an expression in a ring");
  eval->add_option("--ring", ring_tag, "uw, t:N, t:inf, s, grt:N or grt:inf");
  eval->add_option("--expr", expr, "Expression")->required();

  std::string map, variant = "e2";
  auto* apply = app.add_subcommand("apply", "Apply a map to an expression");
  apply->add_option("--map", map, "psi:N, psi:inf, phi:N, phi:inf, S or psiS")->required();
  apply->add_option("--psiS-variant", variant, "Middle term of psiS")
      ->check(CLI::IsMember({"e0", "e2"}));
  apply->add_option("--expr", expr, "Expression")->required();

  int m = 0, k = 0, s = 0;
  std::string omega_map;
  auto* om = app.add_subcommand("omega", "Print the differentiator Omega^m_{k,s}");
  om->add_option("--m", m)->required();
  om->add_option("--k", k)->required();
  om->add_option("--s", s)->required();
  om->add_option("--map", omega_map, "Optionally apply psi:N or psi:inf");

  std::string suite;
  VerifyOptions opt;
  opt.jobs = default_jobs();
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--n", opt.n, "Restrict to one n");
  verify->add_option("--m-max", opt.m_max, "Largest m");
  verify->add_option("--k-max", opt.k_max, "Largest k");
  verify->add_option("--order-bound", opt.order_bound, "Order bound");
  verify->add_option("--index-bound", opt.index_bound, "Index bound");
  verify->add_option("--seed", opt.seed, "Random seed");
  verify->add_option("--jobs", opt.jobs, "Worker threads (default: WITT_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
  for (auto* sub : {eval, apply, om, verify}) sub->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*eval) {
      emit(parse(expr, RingSpec::parse(ring_tag)), json);
    } else if (*apply) {
      emit(apply_map(map, variant, expr), json);
    } else if (*om) {
      WittElement w = omega(m, k, s);
      if (omega_map.empty())
        emit(w, json);
      else
        emit(psi(parse_map(omega_map), w), json);
    } else if (*verify) {
      std::vector<std::string> names =
          suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      std::string joined;
      for (const auto& name : names) {
        VerificationReport r = run_suite(name, opt);
        ok = ok && r.ok();
        if (json)
          joined += (joined.empty() ? "" : ",") + r.to_json();
        else
          std::cout << r.to_text() << std::flush;
      }
      if (json) {
        if (names.size() == 1)
          std::cout << joined << "\n";
        else
          std::cout << "{\"ok\":" << (ok ? "true" : "false") << ",\"suites\":[" << joined
                    << "]}\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
