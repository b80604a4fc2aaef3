#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirosc/cli.hpp"

namespace {

void add_common(CLI::App* sub, dirosc::cli::RunConfig& cfg, std::string& format) {
    sub->add_option("--m", cfg.params.m, "oscillator mass");
    sub->add_option("--omega", cfg.params.omega, "oscillator frequency");
    sub->add_option("--alpha", cfg.params.alpha, "deformation parameter");
    sub->add_option("--gamma", cfg.params.gamma, "interpolation parameter in [0,1]");
    sub->add_option("--p-bound", cfg.params.p_bound, "boundary momentum (default 1/alpha)");
    sub->add_option("--format", format, "output format: csv|json");
    sub->add_option("--output", cfg.output_path, "output file (default stdout)");
}

} // namespace

int main(int argc, char** argv) {
    using dirosc::cli::RunConfig;
    using dirosc::cli::Subcommand;

    CLI::App app{"Deformed-algebra Dirac oscillator: spectra, wavefunctions, thermodynamics"};
    app.require_subcommand(0, 1);

    RunConfig cfg;
    std::string format = "csv";
    std::string branch = "zero";
    std::string config_path;
    app.add_option("--config", config_path, "JSON file mirroring the run configuration");

    auto* sp = app.add_subcommand("spectrum", "tabulate energy levels");
    add_common(sp, cfg, format);
    sp->add_option("--branch", branch, "spectrum branch: zero|nonzero");
    sp->add_option("--n-max", cfg.n_max, "highest quantum number (overrides --e-cut)");
    sp->add_option("--e-cut", cfg.e_cut, "energy cutoff (default sqrt(m^2+P_b^2))");

    auto* pa = app.add_subcommand("partition", "partition function over a temperature grid");
    add_common(pa, cfg, format);
    pa->add_option("--branch", branch, "spectrum branch: zero|nonzero");
    pa->add_option("--method", cfg.method, "direct|em|em-numeric");
    pa->add_option("--convention", cfg.convention, "closed-form constant: consistent|paper");
    pa->add_option("--n-max", cfg.n_max, "level count for the direct method");
    pa->add_option("--e-cut", cfg.e_cut, "energy cutoff for the direct method");
    pa->add_option("--em-n-max", cfg.em_n_max, "integral upper limit, em-numeric method");
    pa->add_option("--t-min", cfg.t_min, "lowest temperature");
    pa->add_option("--t-max", cfg.t_max, "highest temperature");
    pa->add_option("--t-steps", cfg.t_steps, "number of grid points");

    auto* th = app.add_subcommand("thermo", "F, U, S, C_V over a temperature grid");
    add_common(th, cfg, format);
    th->add_option("--branch", branch, "spectrum branch: zero|nonzero");
    th->add_option("--method", cfg.method, "direct|em|em-numeric");
    th->add_option("--convention", cfg.convention, "closed-form constant: consistent|paper");
    th->add_option("--n-max", cfg.n_max, "level count for the direct method");
    th->add_option("--e-cut", cfg.e_cut, "energy cutoff for the direct method");
    th->add_option("--em-n-max", cfg.em_n_max, "integral upper limit, em-numeric method");
    th->add_option("--t-min", cfg.t_min, "lowest temperature");
    th->add_option("--t-max", cfg.t_max, "highest temperature");
    th->add_option("--t-steps", cfg.t_steps, "number of grid points");

    auto* orc = app.add_subcommand("oracle", "discretized-operator spectrum cross-check");
    add_common(orc, cfg, format);
    orc->add_option("--grid-points", cfg.grid_points, "grid size (odd, >= 51)");
    orc->add_option("--levels", cfg.levels, "number of eigenvalues to compare");

    auto* wf = app.add_subcommand("wavefunction", "normalized ground-state samples");
    add_common(wf, cfg, format);
    wf->add_option("--branch", branch, "spectrum branch: zero|nonzero");
    wf->add_option("--grid-points", cfg.grid_points, "grid size (odd)");

    auto* fg = app.add_subcommand("fig1", "thermodynamic-curve bundle (CSV, optional SVG)");
    add_common(fg, cfg, format);
    fg->add_option("--method", cfg.method, "direct|em|em-numeric");
    fg->add_option("--convention", cfg.convention, "closed-form constant: consistent|paper");
    fg->add_option("--alphas", cfg.alphas, "deformation values, one curve each");
    fg->add_option("--t-min", cfg.t_min, "lowest temperature");
    fg->add_option("--t-max", cfg.t_max, "highest temperature");
    fg->add_option("--t-steps", cfg.t_steps, "number of grid points");
    fg->add_option("--out-dir", cfg.out_dir, "directory for the emitted files");
    fg->add_flag("--svg", cfg.svg, "also write one SVG per quantity");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config file: " + config_path);
            cfg = nlohmann::json::parse(in).get<RunConfig>();
        } else {
            if (sp->parsed()) cfg.subcommand = Subcommand::Spectrum;
            else if (pa->parsed()) cfg.subcommand = Subcommand::Partition;
            else if (th->parsed()) cfg.subcommand = Subcommand::Thermo;
            else if (orc->parsed()) cfg.subcommand = Subcommand::Oracle;
            else if (wf->parsed()) cfg.subcommand = Subcommand::Wavefunction;
            else if (fg->parsed()) cfg.subcommand = Subcommand::Fig1;
            else {
                std::cerr << app.help() << std::endl;
                return 2;
            }
            cfg.format = format == "json" ? dirosc::cli::OutputFormat::Json
                                          : dirosc::cli::OutputFormat::Csv;
            cfg.branch = branch == "nonzero" ? dirosc::spectrum::Branch::NonzeroGroundState
                                             : dirosc::spectrum::Branch::ZeroGroundState;
        }
        return dirosc::cli::run(cfg, std::cout);
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump() << std::endl;
        return 1;
    }
}
