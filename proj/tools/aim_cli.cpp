#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "runner/commands.hpp"
#include "runner/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Asymptotic iteration solver for two-level spin-boson Hamiltonians"};

  std::optional<std::string> config_path;
  // Flag name -> config key. Values stay text so rationals are parsed exactly.
  const std::vector<std::pair<std::string, std::string>> flags{
      {"--model", "model"},   {"--kappa", "kappa"}, {"--kappa-sq", "kappa_sq"},
      {"--k", "k"},           {"--omega", "omega"}, {"--omega0", "omega0"},
      {"--n-max", "n_max"},   {"--tol", "tol"},     {"--z0", "z0"},
      {"--levels", "levels"}, {"--which", "which"}, {"--sweep", "sweep"},
      {"--out", "out"},       {"--verify", "verify"},
  };
  std::vector<std::optional<std::string>> values(flags.size());
  std::vector<std::string> extra;

  app.add_option("--config", config_path, "key = value config file; flags override it");
  for (std::size_t i = 0; i < flags.size(); ++i)
    app.add_option(flags[i].first, values[i], flags[i].second);
  app.add_option("--param", extra, "other model parameter as name=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return runner::kBadInput;
  }

  runner::RunConfig cfg;
  try {
    if (config_path) cfg = runner::load_config(*config_path);
    for (const auto& kv : extra) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw runner::ConfigError("--param expects name=value");
      runner::set_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    for (std::size_t i = 0; i < flags.size(); ++i)
      if (values[i]) runner::set_value(cfg, flags[i].second, *values[i]);
  } catch (const runner::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return runner::kBadInput;
  }
  return runner::run(cfg, std::cout, std::cerr);
}
