#include <chrono>
#include <iostream>

#include "CLI11.hpp"

#include "dtseries/commands.hpp"

using namespace dtseries;

int main(int argc, char** argv) {
  CLI::App app{"Generating series of DT invariants of 2-dimensional sheaves on threefolds"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "pretty";
  std::string k_text;

  const std::vector<std::pair<Command, std::string>> commands = {
      {Command::check, "Check the positivity and stability-gap assumptions"},
      {Command::classes, "Enumerate surface classes beta and colengths n for a Chern character"},
      {Command::series, "Assemble the generating series over a window of beta"},
      {Command::oracle, "Integrate the Carlsson-Okounkov class on S^[n] by localization"},
      {Command::verify, "Compare the localization integrals with prod(1-q^k)^(+-delta)"}};

  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(cmd), help);
    sub->add_option("--fixture", cfg.fixture, "Builtin fixture name or JSON file")->required();
    sub->add_option("--gamma", cfg.gamma, "gamma as H^4 coordinates \"a,b\" or named \"r=1,s=0\"");
    sub->add_option("--order", cfg.order, "Truncation order N")->check(CLI::PositiveNumber);
    sub->add_option("--window", cfg.window, "Kernel window K")->check(CLI::NonNegativeNumber);
    sub->add_option("--nmax", cfg.nmax, "Oracle depth (at most 6)");
    sub->add_option("--seed", cfg.seed, "Seed for evaluation points");
    sub->add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_flag("--override-checks", cfg.override_checks, "Compute series even if assumptions fail");
    sub->add_option("--k", k_text, "Polarization parameter of the fixture family");
    sub->add_flag("--trivial-bundle", cfg.trivial_bundle, "Oracle with L trivial (Euler characteristics of S^[n])");
    sub->add_flag("--trace", cfg.trace, "Include per-fixed-point contributions at n = nmax");
    sub->callback([&cfg, c = cmd] { cfg.command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::bad_input;
  }

  CommandOutput out;
  const auto start = std::chrono::steady_clock::now();
  try {
    cfg.format = format_from_string(format);
    if (!k_text.empty()) {
      const Rational k = parse_rational(k_text);
      if (!is_integer(k)) throw InputError("--k must be an integer");
      cfg.k = k.get_num();
    }
    out = run_command(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::bad_input;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::cout << render(out, cfg.format);
  std::cerr << "[" << to_string(cfg.command) << "] " << ms << " ms\n";
  return out.exit_code;
}
