// thetaring: verification driver for the theta^p example ring.
//
// Exit codes: 0 all non-skipped checks pass, 1 a verification failed,
// 2 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "thetaring/driver.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void add_run_options(CLI::App* cmd, thetaring::RunConfig& config) {
  cmd->add_option("--p", config.primes, "Prime (repeatable)");
  cmd->add_option("--e", config.exponents, "Torsion exponent e (repeatable)");
  cmd->add_option("--extra-precision", config.extra_precision, "Extra modulus exponent beyond e+1 for nilpotence");
  cmd->add_option("--trials", config.trials, "Random samples per prime");
  cmd->add_option("--seed", config.seed, "Seed for every random choice");
  cmd->add_option("--span-limit", config.span_limit, "Skip cells whose span p^(2e) exceeds this");
  cmd->add_option("--degree-cap", config.degree_cap, "Check F_n lemmas for p^n up to this");
  cmd->add_option("--out-report", config.out_report, "Write the machine-readable report here");
  cmd->add_option("--out-certs", config.out_certs, "Write nilpotence certificates into this directory");
  cmd->add_option("--format", config.format, "Standard output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, thetaring::OutputFormat>{{"table", thetaring::OutputFormat::table},
                                                         {"machine", thetaring::OutputFormat::machine}},
          CLI::ignore_case))
      ->option_text("table|machine");
}

int emit(const thetaring::Report& report, const thetaring::RunConfig& config) {
  std::cout << (config.format == thetaring::OutputFormat::machine ? report.to_machine() : report.to_table());
  thetaring::write_report(report, config);
  return report.passed() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of nilpotence bounds in the theta^p example ring"};
  app.require_subcommand(1);

  thetaring::RunConfig config;
  auto* axioms = app.add_subcommand("axioms", "Check the theta^p-ring identities on random samples");
  auto* verify = app.add_subcommand("verify", "Nilpotence, sharpness, stability and torsion checks over a (p, e) grid");
  auto* fn_check = app.add_subcommand("fn-check", "Check the F_n substitution, congruence and diagonal identities");
  auto* bound = app.add_subcommand("bound", "Print the nilpotence bound E for n-torsion");
  for (auto* cmd : {axioms, verify, fn_check}) add_run_options(cmd, config);
  std::string bound_arg;
  bound->add_option("n", bound_arg, "Nonzero integer n with n*a = 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*axioms) return emit(thetaring::cmd_axioms(config), config);
    if (*verify) return emit(thetaring::cmd_verify(config), config);
    if (*fn_check) return emit(thetaring::cmd_fn_check(config), config);
    if (*bound) {
      thetaring::Integer n;
      if (n.set_str(bound_arg, 10) != 0) throw thetaring::UsageError("'" + bound_arg + "' is not an integer");
      std::cout << thetaring::cmd_bound(n).get_str() << "\n";
      return 0;
    }
  } catch (const thetaring::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
