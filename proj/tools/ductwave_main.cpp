#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ductwave/config.hpp"
#include "ductwave/errors.hpp"
#include "ductwave/scenario.hpp"

namespace {

int dispatch(const std::string& config_path, const std::string& out_dir,
             std::optional<ductwave::Scenario> forced_scenario) {
    try {
        ductwave::RunConfig config;
        if (!config_path.empty()) {
            config = ductwave::parse_config_file(config_path);
        } else if (forced_scenario) {
            config.scenario = *forced_scenario;
        } else {
            std::cerr << "error: no subcommand and no --config given\n";
            return ductwave::exit_validation;
        }
        if (forced_scenario) {
            config.scenario = *forced_scenario;
            config.solver.mode = *forced_scenario == ductwave::Scenario::evolve_pair
                                     ? ductwave::SolverMode::pair
                                     : ductwave::SolverMode::single;
        }
        if (!out_dir.empty()) config.output_dir = out_dir;
        return ductwave::run_scenario(config);
    } catch (const ductwave::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return ductwave::exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ductwave::exit_validation;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ductwave: traveling waves and shock-capturing evolution of the nonlocal "
                 "acoustic model for a van der Waals gas in a closed duct"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string out_dir;
    bool seed_check = false;
    app.add_option("--config", config_path, "config file (key = value format, see README)");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_flag("--seed-check", seed_check, "run the deterministic fixture checks and exit");

    std::optional<ductwave::Scenario> forced;
    for (ductwave::Scenario s :
         {ductwave::Scenario::coeffs, ductwave::Scenario::dispersion, ductwave::Scenario::travwave,
          ductwave::Scenario::evolve, ductwave::Scenario::evolve_pair,
          ductwave::Scenario::attractor, ductwave::Scenario::sweep}) {
        auto* sub = app.add_subcommand(ductwave::scenario_name(s),
                                       "run the " + ductwave::scenario_name(s) + " scenario");
        sub->fallthrough();
        sub->callback([&forced, s]() { forced = s; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ductwave::exit_validation;
    }

    if (seed_check) return ductwave::run_seed_check(std::cout);
    return dispatch(config_path, out_dir, forced);
}
