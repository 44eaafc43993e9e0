#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "slodowy/errors.hpp"

int main(int argc, char** argv) {
  using namespace slodowy::cli;
  CLI::App app{"Slodowy slices, nilpotent orbits and universal Poisson deformations"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--emit", g.emit, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for random samples");
  app.add_option("--degree-bound", g.degree_bound, "cofactor weight bound for membership certificates")
      ->check(CLI::NonNegativeNumber);

  std::string algebra, orbit, action;
  int rank = 0, n = 0, i = 0;
  bool enumerate = false;

  auto* slice = app.add_subcommand("slice", "Slodowy slice, invariants and hypersurface");
  slice->add_option("--algebra", algebra, "sl, so or sp")->required();
  slice->add_option("--rank", rank, "rank")->required();
  slice->add_option("--orbit", orbit, "partition, e.g. 6,1,1")->required();

  auto* cls = app.add_subcommand("classify", "second Betti number of the Springer fibre and condition (*)");
  cls->add_option("--algebra", algebra, "A, B, C, D, G2, F4, E6, E7, E8")->required();
  cls->add_option("--rank", rank, "rank");
  cls->add_option("--orbit", orbit, "partition, dim:<k> or regular|subregular|other");
  cls->add_flag("--enumerate", enumerate, "tabulate all non-regular orbits");

  auto* g2 = app.add_subcommand("g2", "the g2 slice and its identities");
  g2->add_option("action", action, "verify or slice")->required()->check(CLI::IsMember({"verify", "slice"}));

  auto* f4 = app.add_subcommand("f4", "the subsubregular orbit of f4");
  f4->add_option("action", action, "grading, betti or hyperplanes")
      ->required()
      ->check(CLI::IsMember({"grading", "betti", "hyperplanes"}));

  auto* dp = app.add_subcommand("dualpair", "Kraft-Procesi maps between so(V) and sp(U)");
  dp->add_option("--n", n, "dim V = 2n")->required();
  dp->add_option("--i", i, "orbit parameter")->required();

  auto* check = app.add_subcommand("check", "run identity suites");
  check->add_option("what", action, "all")->required()->check(CLI::IsMember({"all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  RunReport report;
  try {
    if (*slice) report = cmd_slice(g, algebra, rank, orbit);
    else if (*cls) report = cmd_classify(g, algebra, rank, orbit, enumerate);
    else if (*g2) report = cmd_g2(g, action);
    else if (*f4) report = cmd_f4(g, action);
    else if (*dp) report = cmd_dualpair(g, n, i);
    else report = cmd_check_all(g);
  } catch (const slodowy::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const slodowy::IdentityError& e) {
    std::cerr << "identity violation: " << e.what() << "\n" << e.difference() << "\n";
    return kIdentityViolation;
  } catch (const slodowy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIdentityViolation;
  }
  if (g.emit == "json") std::cout << report.to_json().dump(2) << "\n";
  else std::cout << report.to_text();
  int code = report.exit_code();
  if (code != kPass)
    for (const auto& c : report.checks)
      if (!c.pass) {
        std::cerr << "first failing check: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        break;
      }
  return code;
}
