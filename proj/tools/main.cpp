#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "casigrav/commands.hpp"

namespace {

struct OutputOptions {
    bool as_json = false;
    bool as_csv = false;
    std::string out_path;
};

void add_common_options(CLI::App* cmd, std::string& config_path, OutputOptions& out) {
    cmd->add_option("--config", config_path, "run configuration (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    auto* json_flag = cmd->add_flag("--json", out.as_json, "emit the report as JSON");
    cmd->add_flag("--csv", out.as_csv, "emit the report as CSV")->excludes(json_flag);
    cmd->add_option("--out", out.out_path, "write the report to a file instead of stdout");
}

int emit(const casigrav::Report& report, const OutputOptions& opts) {
    std::string text;
    if (opts.as_json)
        text = report.to_json().dump(2) + "\n";
    else if (opts.as_csv)
        text = report.to_csv();
    else
        text = report.to_table();

    if (opts.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opts.out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << opts.out_path << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vacuum-fluctuation force on a rigid cavity in a weak gravitational field"};
    app.require_subcommand(1);

    std::string config_path;
    OutputOptions out;

    auto* force = app.add_subcommand("force", "cavity force, isolated and non-isolated");
    add_common_options(force, config_path, out);

    auto* modesum = app.add_subcommand(
        "modesum", "mode-sum energy, regularization trace, red-shifted gradient force");
    add_common_options(modesum, config_path, out);

    auto* experiment =
        app.add_subcommand("experiment", "multi-layer stack feasibility against a detector");
    add_common_options(experiment, config_path, out);

    auto* sweep = app.add_subcommand("sweep", "experiment rows over one swept parameter");
    add_common_options(sweep, config_path, out);
    std::string axis;
    std::vector<double> values;
    sweep->add_option("--axis", axis,
                      "separation | refractive_index | layers | eta_superconducting | g")
        ->required();
    sweep->add_option("--values", values, "comma-separated axis values")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        const casigrav::RunConfig cfg = casigrav::RunConfig::from_file(config_path);
        casigrav::Report report;
        if (force->parsed())
            report = casigrav::cmd_force(cfg);
        else if (modesum->parsed())
            report = casigrav::cmd_modesum(cfg);
        else if (experiment->parsed())
            report = casigrav::cmd_experiment(cfg);
        else
            report = casigrav::cmd_sweep(cfg, axis, values);
        return emit(report, out);
    } catch (const casigrav::NonConvergent& e) {
        std::cerr << "numerical non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const casigrav::Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
