#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dirosc/params.hpp"
#include "dirosc/spectrum.hpp"

namespace dirosc::cli {

enum class Subcommand { Spectrum, Partition, Thermo, Oracle, Wavefunction, Fig1 };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    Subcommand subcommand = Subcommand::Spectrum;
    OscillatorParams params;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path; // empty -> stdout

    spectrum::Branch branch = spectrum::Branch::ZeroGroundState;
    int n_max = -1;    // explicit level count; -1 -> scan up to e_cut
    double e_cut = 0.0; // 0 -> default sqrt(m^2 + P_b^2)

    std::string method = "direct";          // direct | em | em-numeric
    std::string convention = "consistent";  // consistent | paper
    double t_min = 0.1;
    double t_max = 2.0;
    int t_steps = 39;

    int grid_points = 2001; // oracle / wavefunction grids
    int levels = 4;         // oracle eigenvalue count
    int em_n_max = 400;     // upper limit of the numeric EM integral

    std::string out_dir = "fig1_out";
    bool svg = false;
    std::vector<double> alphas{0.05, 0.1, 0.2, 0.3};
};

void to_json(nlohmann::json& j, const RunConfig& cfg);
void from_json(const nlohmann::json& j, RunConfig& cfg);

// Shortest round-trip decimal representation, locale-independent.
std::string format_double(double x);

// Executes the configured subcommand, writing the table to the config's
// output path (or the given stream when the path is empty).  Returns the
// process exit status.  Errors propagate as exceptions.
int run(const RunConfig& cfg, std::ostream& out);

// Fig. 1 reproduction bundle: one CSV per (quantity, alpha) pair over the
// T/m grid, plus one SVG per quantity overlaying the alpha curves when
// cfg.svg is set.  Returns the list of files written.
std::vector<std::string> emit_fig1_bundle(const RunConfig& cfg);

} // namespace dirosc::cli
