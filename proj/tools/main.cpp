#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "microgrid/errors.hpp"
#include "microgrid/workflows.hpp"

namespace {

using namespace microgrid;

struct CliOverrides {
    std::optional<std::string> config_path;
    std::optional<std::string> scenario;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<int> pv;
    std::optional<double> electrolyzer_kw;
    std::optional<double> tank_kg;
    std::optional<double> fc_kw;
    std::optional<double> conv_kw;
    std::optional<int> evse;
};

RunConfig resolve_config(const CliOverrides& o) {
    RunConfig config;
    if (o.config_path)
        config = load_run_config(*o.config_path);
    else
        apply_master_seed(config, 1);
    if (o.seed) apply_master_seed(config, *o.seed);
    if (o.scenario) config.scenario = scenario_from_name(*o.scenario);
    if (o.out_dir) config.output_dir = *o.out_dir;
    if (o.pv) config.sizing.pv_count = *o.pv;
    if (o.electrolyzer_kw) config.sizing.electrolyzer_kw = *o.electrolyzer_kw;
    if (o.tank_kg) config.sizing.tank_kg = *o.tank_kg;
    if (o.fc_kw) config.sizing.fuel_cell_kw = *o.fc_kw;
    if (o.conv_kw) config.sizing.converter_kw = *o.conv_kw;
    if (o.evse) config.sizing.evse_count = *o.evse;
    return config;
}

void add_common_flags(CLI::App* cmd, CliOverrides& o, bool with_sizing) {
    cmd->add_option("--config", o.config_path, "Run configuration file");
    cmd->add_option("--scenario", o.scenario, "fixed | deferrable")
        ->check(CLI::IsMember({"fixed", "deferrable"}));
    cmd->add_option("--seed", o.seed, "Master seed for profiles and the swarm");
    cmd->add_option("--out", o.out_dir, "Output directory");
    if (with_sizing) {
        cmd->add_option("--pv", o.pv, "PV array count");
        cmd->add_option("--electrolyzer-kw", o.electrolyzer_kw, "Electrolyzer rating");
        cmd->add_option("--tank-kg", o.tank_kg, "Hydrogen tank mass");
        cmd->add_option("--fc-kw", o.fc_kw, "Fuel cell rating");
        cmd->add_option("--conv-kw", o.conv_kw, "DC/AC converter rating");
        cmd->add_option("--evse", o.evse, "Charging plug count");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Islanded office-microgrid sizing engine"};
    app.require_subcommand(1);

    CliOverrides overrides;
    std::string init_path = "microgrid.ini";

    CLI::App* simulate = app.add_subcommand("simulate", "Run one year with a fixed sizing");
    add_common_flags(simulate, overrides, true);
    CLI::App* optimize = app.add_subcommand("optimize", "Search for the minimum-cost sizing");
    add_common_flags(optimize, overrides, false);
    CLI::App* compare =
        app.add_subcommand("compare", "Optimize both charging scenarios side by side");
    add_common_flags(compare, overrides, false);
    CLI::App* init = app.add_subcommand("init-config", "Write the documented default config");
    init->add_option("path", init_path, "Where to write the config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // bad command line is bad input
    }

    try {
        if (simulate->parsed()) return microgrid::cmd_simulate(resolve_config(overrides));
        if (optimize->parsed()) return microgrid::cmd_optimize(resolve_config(overrides));
        if (compare->parsed()) return microgrid::cmd_compare(resolve_config(overrides));
        if (init->parsed()) {
            microgrid::write_default_config(init_path);
            std::cout << "wrote " << init_path << '\n';
            return 0;
        }
    } catch (const microgrid::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const microgrid::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const microgrid::LengthError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const microgrid::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
