#include <chrono>
#include <iostream>

#include "commands.hpp"
#include "hbu/error.hpp"

int main(int argc, char** argv) {
  using namespace hbu::cli;
  CLI::App app{"Boundary uniqueness and spectral-subspace experiments"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "INI config with one [section] per subcommand");
  app.require_subcommand(1);
  Runner selected;
  std::string out;
  register_commands(app, selected, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kUsageExit;
  } catch (const hbu::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report r = selected();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print_summary(r.csv_to_stdout && out.empty() ? std::cerr : std::cout, r);
    if (!out.empty())
      write_outputs(r, out);
    else if (r.csv_to_stdout)
      write_csv(std::cout, r);
    return exit_code(r.status);
  } catch (const hbu::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const hbu::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const hbu::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
