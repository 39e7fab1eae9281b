#include "schwarz/errors.hpp"
#include "schwarz_tools/commands.hpp"
#include "schwarz_tools/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

using namespace schwarz;
using namespace schwarz::tools;

namespace {

struct Options {
  int n;
  double alpha;
  std::string p;
  double r_max;
  int steps;
  std::string out;
  std::string format = "csv";
  std::optional<std::uint64_t> seed;
  std::vector<std::string> checks;
};

struct Defaults {
  int n = 3;
  double alpha = 0.0;
  std::string p = "2";
  double r_max = 0.99;
  int steps = 200;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Options& o, const Defaults& d) {
  auto* sub = app.add_subcommand(name, help);
  o.n = d.n;
  o.alpha = d.alpha;
  o.p = d.p;
  o.r_max = d.r_max;
  o.steps = d.steps;
  sub->add_option("--n", o.n, "dimension n >= 3")->capture_default_str();
  sub->add_option("--alpha", o.alpha, "kernel parameter alpha > -1/2")->capture_default_str();
  sub->add_option("--p", o.p, "exponent p in [1, inf]; 'inf' for infinity")->capture_default_str();
  sub->add_option("--r-max", o.r_max, "largest radius, < 1")->capture_default_str();
  sub->add_option("--steps", o.steps, "number of grid points, >= 2")->capture_default_str();
  sub->add_option("--out", o.out, "output file (default: stdout)");
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--seed", o.seed, "seed for randomly generated data");
  return sub;
}

RunConfig to_config(Command command, const Options& o) {
  RunConfig c;
  c.command = command;
  c.n = o.n;
  c.alpha = o.alpha;
  c.p = Exponent::parse(o.p);
  c.r_max = o.r_max;
  c.steps = o.steps;
  c.output_path = o.out;
  c.format = o.format == "json" ? Format::json : Format::csv;
  c.seed = o.seed;
  c.checks = o.checks;
  return c;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp Schwarz-type bounds for solutions of the invariant Laplacian"};
  app.require_subcommand(1);

  std::map<Command, Options> options;
  std::map<Command, CLI::App*> subs;
  subs[Command::gp_curve] = add_command(app, "gp-curve", "tabulate r, G_p(r), a*(r)",
                                        options[Command::gp_curve], {});
  subs[Command::figure1] = add_command(app, "figure1", "G_inf curve for (n=6, alpha=1) with a monotonicity verdict",
                                       options[Command::figure1], {6, 1.0, "inf", 0.999, 400});
  subs[Command::verify] = add_command(app, "verify", "run the acceptance checks",
                                      options[Command::verify], {});
  subs[Command::kernel] = add_command(app, "kernel", "tabulate the zonal kernel at radius --r-max",
                                      options[Command::kernel], {3, 0.0, "2", 0.5, 21});
  subs[Command::schwarz] = add_command(app, "schwarz", "check |u(r e_n)| <= G_p(r) ||f||_p on a datum",
                                       options[Command::schwarz], {3, 0.0, "inf", 0.99, 20});
  subs[Command::verify]
      ->add_option("--check", options[Command::verify].checks, "check id (repeatable)")
      ->check(CLI::IsMember(check_ids()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadParameters;
  }

  for (const auto& [command, sub] : subs) {
    if (!sub->parsed()) continue;
    RunConfig config;
    try {
      config = to_config(command, options[command]);
    } catch (const InvalidParameter& e) {
      std::cerr << "invalid parameter: " << e.what() << "\n";
      return kBadParameters;
    }
    if (command == Command::verify) {
      config.restrict_params = sub->count("--n") + sub->count("--alpha") > 0;
    }
    return run_command(config, std::cout, std::cerr);
  }
  return kBadParameters;
}
