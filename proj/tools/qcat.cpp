#include <iostream>

#include "CLI11.hpp"
#include "qcat/cli.hpp"
#include "qcat/verify.hpp"

int main(int argc, char** argv) {
  using qcat::cli::RunConfig;
  CLI::App app{"q-Catalan series toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json, latex or plain")
        ->check(CLI::IsMember({"json", "latex", "plain"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
  };

  CLI::App* dual = app.add_subcommand("dual-coeffs", "dual coefficients by both solvers");
  dual->add_option("--ptilde", cfg.ptilde, "Ptilde(z, t)")->required();
  dual->add_option("--r1", cfg.r1, "largest z-index");
  dual->add_option("--r2", cfg.r2, "largest t-index (default: the row bound)");
  dual->add_option("--trunc", cfg.trunc, "z-order to which Ptilde is known (default exact)");

  CLI::App* carlitz = app.add_subcommand("carlitz", "Carlitz q-Catalan numbers");
  carlitz->add_option("--n", cfg.n, "last index");

  CLI::App* qfuss = app.add_subcommand("qfuss", "q-Fuss-Catalan numbers");
  qfuss->add_option("--n", cfg.n, "last index");
  qfuss->add_option("--p", cfg.p, "arity");

  CLI::App* tgen = app.add_subcommand("tgen", "generating series T by four constructions");
  CLI::App* diamond = app.add_subcommand("diamond", "the diamond transform of phi");
  for (CLI::App* sub : {tgen, diamond}) {
    sub->add_option("--phi", cfg.phi, "phi(z)");
    sub->add_option("--p", cfg.p, "arity");
    sub->add_option("--order", cfg.order, "z-order");
    sub->add_option("--trunc", cfg.trunc, "z-order to which phi is known (default exact)");
  }

  CLI::App* verify = app.add_subcommand("verify", "run identity suites");
  std::string suites = "all";
  for (const auto& s : qcat::suite_names()) suites += ", " + s;
  verify->add_option("--suite", cfg.suite, suites);
  verify->add_option("--p", cfg.p, "arity");
  verify->add_option("--order", cfg.order, "order (default 8)");

  CLI::App* basis = app.add_subcommand("basis", "normalized basis e_k");
  basis->add_option("--ptilde", cfg.ptilde, "Ptilde(z, t)")->required();
  basis->add_option("--n", cfg.n, "last k");
  basis->add_option("--trunc", cfg.trunc, "z-truncation");

  for (CLI::App* sub : {dual, carlitz, qfuss, tgen, diamond, verify, basis}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qcat::cli::kOther;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = qcat::cli::parse_format(format);
  return qcat::cli::run(cfg, std::cout, std::cerr);
}
