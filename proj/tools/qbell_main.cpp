// qbell: joint spin-measurement probability tables, CHSH/Bell inequality
// checks, hidden-variable simulations, and positivity audits.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <vector>

#include "qbell/cli.hpp"

namespace {

using qbell::cli::RunConfig;

void add_axis_options(CLI::App* sub, RunConfig& cfg, std::vector<std::string>& axis_literals) {
    sub->add_option("--coplanar-theta", cfg.coplanar_theta_deg,
                    "Coplanar configuration angle theta in degrees");
    sub->add_option("--axes", axis_literals, "Four axes as x,y,z literals")->expected(4);
}

void add_output_options(CLI::App* sub, std::string& out_path, std::string& format) {
    sub->add_option("--out", out_path, "Output file (default: stdout)");
    sub->add_option("--format", format, "Output format: csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint spin-measurement probabilities and Bell/CHSH inequality tools"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_path;
    std::string format = "csv";
    std::string symmetry = "symmetric";
    std::string backend = "auto";
    std::vector<std::string> axis_literals;
    std::vector<std::string> bell_axis_literals;
    std::vector<double> bell_angles;

    CLI::App* table = app.add_subcommand("table", "Sixteen-entry joint probability table");
    add_axis_options(table, cfg, axis_literals);

    CLI::App* sweep = app.add_subcommand("sweep", "Coplanar theta sweep of tables and CHSH sums");
    sweep->add_option("--theta-min", cfg.theta_min_deg, "Sweep start in degrees");
    sweep->add_option("--theta-max", cfg.theta_max_deg, "Sweep end in degrees");
    sweep->add_option("--steps", cfg.steps, "Number of grid points (>= 2)");

    CLI::App* chsh = app.add_subcommand("chsh", "CHSH correlation sum of one configuration");
    add_axis_options(chsh, cfg, axis_literals);

    CLI::App* lhv = app.add_subcommand("lhv", "Monte-Carlo local hidden-variable run");
    lhv->add_option("--trials", cfg.trials, "Number of simulated events");
    lhv->add_option("--seed", cfg.seed, "RNG seed");
    lhv->add_option("--strategy", cfg.strategy,
                    "uniform | point:<4 signs> | 16 weights | @file");
    lhv->add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");

    CLI::App* audit = app.add_subcommand("audit", "Positivity audit of a published proof");
    audit->add_option("name", cfg.audit_name, "bell64|stapp71|stapp85|bell71|chsh-signed")
        ->required();

    CLI::App* bell = app.add_subcommand("bell", "Three-axis pairwise inequality check");
    bell->add_option("--angles", bell_angles, "Planar angles of a,b,c in degrees, e.g. 0,120,60")
        ->delimiter(',')
        ->expected(3);
    bell->add_option("--axes", bell_axis_literals, "Three axes as x,y,z literals")->expected(3);

    for (CLI::App* sub : {table, sweep, chsh, lhv, audit, bell}) {
        sub->add_option("--symmetry", symmetry, "symmetric | antisymmetric")
            ->check(CLI::IsMember({"symmetric", "antisymmetric"}));
        sub->add_flag("--photon", cfg.photon, "Treat input angles as polarizer angles (doubled)");
        sub->add_option("--backend", backend, "Kernel backend: auto | scalar | avx2")
            ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
        add_output_options(sub, out_path, format);
    }

    CLI11_PARSE(app, argc, argv);

    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.symmetry =
        symmetry == "antisymmetric" ? qbell::Symmetry::antisymmetric : qbell::Symmetry::symmetric;
    cfg.delimiter = format == "tsv" ? '\t' : ',';
    if (backend == "scalar") {
        cfg.backend = qbell::kernels::Backend::scalar;
    } else if (backend == "avx2") {
        cfg.backend = qbell::kernels::Backend::avx2;
    }

    try {
        if (!axis_literals.empty()) {
            std::array<qbell::Axis, 4> axes = {
                qbell::cli::parse_axis(axis_literals[0]), qbell::cli::parse_axis(axis_literals[1]),
                qbell::cli::parse_axis(axis_literals[2]), qbell::cli::parse_axis(axis_literals[3])};
            cfg.axes = axes;
        }
        if (!bell_axis_literals.empty()) {
            std::array<qbell::Axis, 3> axes = {qbell::cli::parse_axis(bell_axis_literals[0]),
                                               qbell::cli::parse_axis(bell_axis_literals[1]),
                                               qbell::cli::parse_axis(bell_axis_literals[2])};
            cfg.bell_axes = axes;
        }
        if (bell_angles.size() == 3) {
            cfg.bell_angles_deg = {bell_angles[0], bell_angles[1], bell_angles[2]};
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qbell::cli::kValidationError;
    }

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file: " << out_path << "\n";
            return qbell::cli::kValidationError;
        }
        return qbell::cli::run(cfg, file, std::cerr);
    }
    return qbell::cli::run(cfg, std::cout, std::cerr);
}
