// hzsim command-line interface: single runs and multi-run protocol
// comparisons over the same config file.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hzsim/driver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"hzsim - round-based simulator for hemisphere-zoned WSN routing"};
    app.require_subcommand(1);

    hzsim::RunOptions run_opt;
    std::string run_config;
    CLI::App* run = app.add_subcommand("run", "Simulate one protocol with one seed");
    run->add_option("--config", run_config, "Config file (key = value); defaults when omitted");
    run->add_option("--protocol", run_opt.protocol, "Protocol: mbehzad, leach, or direct")
        ->default_val("mbehzad");
    std::uint64_t seed_arg = 0;
    auto* seed_opt = run->add_option("--seed", seed_arg, "Override the config's RNG seed");
    long long rounds_arg = 0;
    auto* rounds_opt = run->add_option("--rounds", rounds_arg, "Override the round cap");
    std::string run_out = ".";
    run->add_option("--out", run_out, "Output directory")->default_val(".");
    run->add_flag("--plots", run_opt.plots, "Also write SVG charts");

    hzsim::CompareOptions cmp_opt;
    std::string cmp_config;
    CLI::App* cmp = app.add_subcommand("compare", "Average several seeded runs per protocol");
    cmp->add_option("--config", cmp_config, "Config file (key = value); defaults when omitted");
    std::string protocols_arg = "mbehzad,leach,direct";
    cmp->add_option("--protocols", protocols_arg, "Comma-separated protocol list")
        ->default_val("mbehzad,leach,direct");
    int runs_arg = 0;
    auto* runs_opt = cmp->add_option("--runs", runs_arg, "Override the config's run count");
    std::string cmp_out = ".";
    cmp->add_option("--out", cmp_out, "Output directory")->default_val(".");
    cmp->add_flag("--plots", cmp_opt.plots, "Also write SVG charts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            run_opt.config_path = run_config;
            if (*seed_opt) run_opt.seed = seed_arg;
            if (*rounds_opt) run_opt.rounds = rounds_arg;
            run_opt.out_dir = run_out;
            return hzsim::run_command(run_opt, std::cout);
        }
        cmp_opt.config_path = cmp_config;
        cmp_opt.protocols.clear();
        std::string token;
        for (char c : protocols_arg + ",") {
            if (c == ',') {
                if (!token.empty()) cmp_opt.protocols.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
        if (*runs_opt) cmp_opt.runs = runs_arg;
        cmp_opt.out_dir = cmp_out;
        return hzsim::compare_command(cmp_opt, std::cout);
    } catch (const hzsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const hzsim::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const hzsim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
