#include <chrono>
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

void add_common(CLI::App* sub, gwt::cli::Options& o, std::string& format) {
  sub->add_option("--seed", o.seed, "Global 64-bit seed")->envname("GWTOWER_SEED");
  sub->add_option("--budget-members", o.budgets.membership_tests,
                  "Maximum generation/membership tests")
      ->envname("GWTOWER_BUDGET_MEMBERS");
  sub->add_option("--budget-degree", o.budgets.degree, "Maximum explicit permutation degree")
      ->envname("GWTOWER_BUDGET_DEGREE");
  sub->add_option("--budget-elements", o.budgets.elements,
                  "Maximum group order for exhaustive enumeration")
      ->envname("GWTOWER_BUDGET_ELEMENTS");
  sub->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  sub->add_option("--threads", o.workers, "Worker threads (0: automatic)");
}

}  // namespace

int main(int argc, char** argv) {
  gwt::cli::Options o;
  std::string format = "structured";
  CLI::App app{"gwtower: certificates for iterated wreath products of simple groups"};
  app.set_version_flag("--version", gwt::cli::kToolVersion);
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a tower level and certify its order");
  build->add_option("--spec", o.spec_path, "Tower spec file")->required();
  build->add_option("--level", o.level, "Level to build (default: horizon)");
  build->add_option("--horizon", o.horizon, "Override the spec horizon");

  auto* lemma = app.add_subcommand(
      "verify-lemma", "Minimal normal subgroups of A wr B against the base group");
  lemma->add_option("--a", o.a, "Base factor, e.g. alt:5")->required();
  lemma->add_option("--b", o.b, "Top group, e.g. cyclic:2")->required();
  lemma->add_option("--action", o.action, "product or imprimitive");

  auto* kernel = app.add_subcommand("verify-kernel", "Kernel of the level projection");
  kernel->add_option("--spec", o.spec_path, "Tower spec file")->required();
  kernel->add_option("--level", o.level, "k for the projection from level k+1 to k");

  auto* eulerian = app.add_subcommand("eulerian", "Count or estimate generating d-tuples");
  eulerian->add_option("--group", o.group, "Group, e.g. alt:5 or psl2:19")->required();
  eulerian->add_option("--d", o.d, "Tuple length");
  eulerian->add_option("--trials", o.trials, "Monte Carlo trials (0: exact count)");

  auto* lower = app.add_subcommand("certify-lower-rank",
                                   "Per-level Hall inequality for an exponentiation");
  lower->add_option("--spec", o.spec_path, "Tower spec file")->required();
  lower->add_option("--r", o.r, "Target rank");
  lower->add_option("--horizon", o.horizon, "Number of levels");
  lower->add_option("--phi", o.phi_values, "Supplied value family:parameter:d=value");
  lower->add_option("--phi-citation", o.phi_citation, "Source of the supplied values");

  auto* notfp = app.add_subcommand("certify-not-fp", "Schur multiplier growth certificate");
  notfp->add_option("--spec", o.spec_path, "Tower spec file")->required();
  notfp->add_option("--horizon", o.horizon, "Number of levels");

  auto* growth = app.add_subcommand("growth-check", "Prime growth inequality for PSL2 towers");
  growth->add_option("--primes", o.primes, "Comma-separated primes")->delimiter(',');
  growth->add_option("--spec", o.spec_path, "PSL2 tower spec file");

  for (auto* sub : {build, lemma, kernel, eulerian, lower, notfp, growth}) add_common(sub, o, format);

  CLI11_PARSE(app, argc, argv);

  o.command = app.get_subcommands().front()->get_name();
  for (int i = 1; i < argc; ++i) o.argv.emplace_back(argv[i]);

  const auto start = std::chrono::steady_clock::now();
  gwt::cli::Report report = gwt::cli::run_command(o);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << (format == "text" ? gwt::cli::render_text(report)
                                 : gwt::cli::render_structured(report));
  std::cout.flush();
  if (!report.error.is_null()) {
    std::cerr << "gwtower: " << report.error.value("kind", "") << ": "
              << report.error.value("message", "") << "\n";
  }
  std::fprintf(stderr, "gwtower: %s finished in %.3f s\n", o.command.c_str(), seconds);
  return gwt::cli::exit_code(report);
}
