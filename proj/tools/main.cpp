#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"

using namespace stepwave::cli;

int main(int argc, char** argv) {
  CLI::App app{"Point-source transients at a potential step"};
  app.require_subcommand(1);

  struct Sub {
    CLI::App* app;
    std::string config;
    std::map<std::string, std::string> flags;
  };
  std::map<std::string, Sub> subs;
  const std::map<std::string, std::string> descriptions = {
      {"field", "sample |psi|^2 along a space or time cut"},
      {"forerunner", "transient pulse report (below-step scenarios)"},
      {"oracle", "compare the analytic field with Crank-Nicolson and Talbot inversion"},
      {"reproduce", "write the data behind a figure (--figure 1..7)"},
  };
  for (const auto& [name, desc] : descriptions) {
    Sub& s = subs[name];
    s.app = app.add_subcommand(name, desc);
    s.app->add_option("--config", s.config, "flat key = value file; flags override it");
    for (const KeySpec& k : keys_for(name)) s.app->add_option("--" + k.name, s.flags[k.name], k.help);
  }

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

  for (auto& [name, s] : subs) {
    if (!s.app->parsed()) continue;
    std::map<std::string, std::string> values;
    try {
      if (!s.config.empty()) values = read_config_file(s.config, name);
      for (const auto& [key, value] : s.flags)
        if (s.app->count("--" + key) > 0) values[key] = value;
      const CommandResult r = run_command(RunConfig(name, values));
      for (const auto& f : r.files) std::cout << f.string() << "\n";
      return r.exit_code;
    } catch (const UsageError& e) {
      std::cerr << "stepwave " << name << ": " << e.what() << "\n";
      return exit_usage;
    } catch (const IoError& e) {
      std::cerr << "stepwave " << name << ": " << e.what() << "\n";
      return exit_io;
    }
  }
  return exit_usage;
}
