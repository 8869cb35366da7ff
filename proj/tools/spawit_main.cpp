#include <CLI11.hpp>

#include "spawit/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"spawit: two-qutrit entanglement-witness family, SPA construction, "
                 "realignment scan, optimality spans and the exact gamma=3/4 certificate"};
    app.require_subcommand(1);

    double gamma = 0.75;
    std::string out_path;

    CLI::App* report = app.add_subcommand("report", "JSON report (SPA + realignment) for one gamma");
    report->add_option("--gamma", gamma, "family parameter in (0,1)")->required();
    report->add_option("--out", out_path, "output path (default: stdout)");

    spawit::cli::ScanConfig scan_cfg;
    CLI::App* scan = app.add_subcommand("scan", "CSV scan of the entanglement margin over gamma");
    scan->add_option("--from", scan_cfg.gamma_from, "first gamma (default 0.01)");
    scan->add_option("--to", scan_cfg.gamma_to, "last gamma (default 0.99)");
    scan->add_option("--steps", scan_cfg.steps, "number of grid points (default 99)");
    scan->add_option("--out", scan_cfg.out_path, "output path (default: stdout)");
    scan->add_option("--seed", scan_cfg.seed, "seed for randomized subroutines (default 1)");

    int samples = 24;
    unsigned seed = 7u;
    CLI::App* optimality =
        app.add_subcommand("optimality", "span ranks of the zero-set product vectors + CES see-saw");
    optimality->add_option("--gamma", gamma, "family parameter in (0,1)")->required();
    optimality->add_option("--samples", samples, "number of constraint parameters t (default 24)");
    optimality->add_option("--seed", seed, "sampler/see-saw seed (default 7)")->required();
    optimality->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* certify = app.add_subcommand("certify", "exact-arithmetic certificate at gamma = 3/4");
    certify->add_option("--out", out_path, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return spawit::cli::kInvalidArguments;
    }

    if (report->parsed()) return spawit::cli::run_report(gamma, out_path);
    if (scan->parsed()) return spawit::cli::run_scan(scan_cfg);
    if (optimality->parsed()) return spawit::cli::run_optimality(gamma, samples, seed, out_path);
    if (certify->parsed()) return spawit::cli::run_certify(out_path);
    return spawit::cli::kInvalidArguments;
}
