#include "dirosc/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dirosc/algebra.hpp"
#include "dirosc/oracle.hpp"
#include "dirosc/statmech.hpp"
#include "dirosc/wavefunction.hpp"

namespace dirosc::cli {

namespace {

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::Spectrum: return "spectrum";
        case Subcommand::Partition: return "partition";
        case Subcommand::Thermo: return "thermo";
        case Subcommand::Oracle: return "oracle";
        case Subcommand::Wavefunction: return "wavefunction";
        case Subcommand::Fig1: return "fig1";
    }
    return "spectrum";
}

Subcommand subcommand_from(const std::string& s) {
    if (s == "spectrum") return Subcommand::Spectrum;
    if (s == "partition") return Subcommand::Partition;
    if (s == "thermo") return Subcommand::Thermo;
    if (s == "oracle") return Subcommand::Oracle;
    if (s == "wavefunction") return Subcommand::Wavefunction;
    if (s == "fig1") return Subcommand::Fig1;
    throw std::invalid_argument("unknown subcommand: " + s);
}

const char* branch_name(spectrum::Branch b) {
    return b == spectrum::Branch::ZeroGroundState ? "zero" : "nonzero";
}

spectrum::Branch branch_from(const std::string& s) {
    if (s == "zero") return spectrum::Branch::ZeroGroundState;
    if (s == "nonzero") return spectrum::Branch::NonzeroGroundState;
    throw std::invalid_argument("unknown branch: " + s + " (expected zero|nonzero)");
}

double resolve_e_cut(const RunConfig& cfg) {
    if (cfg.e_cut > 0.0) return cfg.e_cut;
    return spectrum::default_e_cut(cfg.params);
}

spectrum::EnergySpectrum make_spectrum(const RunConfig& cfg) {
    if (cfg.n_max >= 0) {
        spectrum::EnergySpectrum spec;
        spec.branch = cfg.branch;
        for (int n = 0; n <= cfg.n_max; ++n) {
            double e2 = cfg.branch == spectrum::Branch::ZeroGroundState
                            ? spectrum::energy_sq_branch1(n, cfg.params)
                            : spectrum::energy_sq_branch2(n, cfg.params);
            spec.levels.push_back(std::sqrt(e2));
        }
        spec.n_max = cfg.n_max;
        spec.e_cut = spec.levels.back();
        return spec;
    }
    return spectrum::build_spectrum(cfg.branch, cfg.params, resolve_e_cut(cfg));
}

statmech::ConstantConvention convention_from(const std::string& s) {
    if (s == "consistent") return statmech::ConstantConvention::Consistent;
    if (s == "paper") return statmech::ConstantConvention::PaperLiteral;
    throw std::invalid_argument("unknown convention: " + s + " (expected consistent|paper)");
}

// Partition function as a function of temperature for the configured method.
std::pair<std::function<double(double)>, statmech::Method> partition_of_t(const RunConfig& cfg) {
    using statmech::Method;
    if (cfg.method == "direct") {
        auto spec = std::make_shared<spectrum::EnergySpectrum>(make_spectrum(cfg));
        return {[spec](double t) { return statmech::direct_partition(*spec, t).z; },
                Method::DirectSum};
    }
    auto coeffs = statmech::SimplifiedSpectrumCoeffs::from_params(
        cfg.params, statmech::SpectrumVariant::MaxMomentum);
    double m = cfg.params.m;
    if (cfg.method == "em") {
        auto conv = convention_from(cfg.convention);
        return {[coeffs, m, conv](double t) {
                    return statmech::euler_maclaurin_z(coeffs, m / t, conv).z;
                },
                Method::EulerMaclaurinClosedForm};
    }
    if (cfg.method == "em-numeric") {
        int n_max = cfg.em_n_max;
        return {[coeffs, m, n_max](double t) {
                    return statmech::em_numeric_integral_z(coeffs, m / t, n_max).z;
                },
                Method::EulerMaclaurinNumericIntegral};
    }
    throw std::invalid_argument("unknown method: " + cfg.method +
                                " (expected direct|em|em-numeric)");
}

const char* method_name(statmech::Method m) {
    switch (m) {
        case statmech::Method::DirectSum: return "direct";
        case statmech::Method::EulerMaclaurinClosedForm: return "em";
        case statmech::Method::EulerMaclaurinNumericIntegral: return "em-numeric";
    }
    return "direct";
}

std::vector<double> temperature_grid(const RunConfig& cfg) {
    if (!(cfg.t_min > 0.0 && cfg.t_max >= cfg.t_min && cfg.t_steps >= 1))
        throw std::invalid_argument("temperature grid: require 0 < t_min <= t_max, t_steps >= 1");
    std::vector<double> ts(cfg.t_steps);
    if (cfg.t_steps == 1) {
        ts[0] = cfg.t_min;
        return ts;
    }
    double step = (cfg.t_max - cfg.t_min) / static_cast<double>(cfg.t_steps - 1);
    for (int i = 0; i < cfg.t_steps; ++i) ts[i] = cfg.t_min + step * i;
    return ts;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const Table& table, std::ostream& os) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        os << table.header[i] << (i + 1 < table.header.size() ? "," : "");
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "");
        os << '\n';
    }
}

nlohmann::json table_json(const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = row[i];
        rows.push_back(obj);
    }
    return rows;
}

void emit(const RunConfig& cfg, const Table& table, const nlohmann::json& diagnostics,
          std::ostream& fallback) {
    std::ofstream file;
    std::ostream* os = &fallback;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output path: " + cfg.output_path);
        os = &file;
    }
    if (cfg.format == OutputFormat::Csv) {
        write_csv(table, *os);
    } else {
        nlohmann::json doc;
        doc["config"] = cfg;
        doc["results"] = table_json(table);
        doc["diagnostics"] = diagnostics;
        *os << doc.dump(2) << '\n';
    }
}

Table spectrum_table(const RunConfig& cfg) {
    auto spec = make_spectrum(cfg);
    Table t;
    t.header = {"n", "E_n"};
    for (std::size_t n = 0; n < spec.levels.size(); ++n)
        t.rows.push_back({std::to_string(n), format_double(spec.levels[n])});
    return t;
}

Table partition_table(const RunConfig& cfg) {
    auto [z_of_t, method] = partition_of_t(cfg);
    Table t;
    t.header = {"T", "beta", "Z", "method"};
    for (double temp : temperature_grid(cfg))
        t.rows.push_back({format_double(temp), format_double(cfg.params.m / temp),
                          format_double(z_of_t(temp)), method_name(method)});
    return t;
}

Table thermo_table(const RunConfig& cfg) {
    auto [z_of_t, method] = partition_of_t(cfg);
    Table t;
    t.header = {"T", "F", "U", "S", "C_V"};
    for (double temp : temperature_grid(cfg)) {
        try {
            auto pt = statmech::thermo_from_z(z_of_t, method, temp);
            t.rows.push_back({format_double(temp), format_double(pt.f), format_double(pt.u),
                              format_double(pt.s), format_double(pt.c_v)});
        } catch (const std::domain_error&) {
            // approximation breakdown: explicit gap, not a silent zero
            t.rows.push_back({format_double(temp), "nan", "nan", "nan", "nan"});
        }
    }
    return t;
}

Table wavefunction_table(const RunConfig& cfg) {
    double pb = cfg.params.p_bound > 0.0 ? cfg.params.p_bound
                                         : algebra::resolve_p_bound(cfg.params);
    auto grid = algebra::WeightedGrid::make(cfg.params, pb,
                                            static_cast<std::size_t>(cfg.grid_points));
    auto psi = wavefunction::sample_ground_state(cfg.branch, cfg.params, grid);
    double c = wavefunction::normalization_constant(cfg.branch, cfg.params, grid);
    Table t;
    t.header = {"p", "psi"};
    for (std::size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({format_double(grid.points[i]), format_double(c * psi[i])});
    return t;
}

Table oracle_table(const RunConfig& cfg, nlohmann::json& diagnostics) {
    double pb = cfg.params.p_bound > 0.0 ? cfg.params.p_bound
                                         : algebra::resolve_p_bound(cfg.params);
    auto op = oracle::assemble(cfg.params, cfg.grid_points, pb);
    auto sol = oracle::lowest_eigenvalues(op, cfg.levels);
    OscillatorParams phys = cfg.params;
    phys.gamma = 1.0; // physical algebra
    Table t;
    t.header = {"n", "analytic_E2_minus_m2", "numeric_E2_minus_m2", "rel_err"};
    double max_rel = 0.0;
    for (int n = 0; n < cfg.levels; ++n) {
        double analytic = spectrum::energy_sq_branch1(n, phys) - phys.m * phys.m;
        double numeric = sol.values[static_cast<std::size_t>(n)];
        double scale = std::max(std::abs(analytic), 2.0 * phys.m * phys.omega);
        double rel = std::abs(numeric - analytic) / scale;
        max_rel = std::max(max_rel, rel);
        t.rows.push_back({std::to_string(n), format_double(analytic), format_double(numeric),
                          format_double(rel)});
    }
    diagnostics["max_rel_err"] = max_rel;
    diagnostics["grid_points"] = cfg.grid_points;
    diagnostics["p_cut"] = pb;
    return t;
}

// ---- SVG emission -------------------------------------------------------

struct Series {
    std::string label;
    std::string dash; // SVG stroke-dasharray, empty = solid
    std::vector<double> xs, ys;
};

void write_svg(const std::string& path, const std::string& title,
               const std::vector<Series>& series) {
    const double width = 640, height = 480, margin = 60;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (std::isnan(s.ys[i])) continue;
            xmin = std::min(xmin, s.xs[i]);
            xmax = std::max(xmax, s.xs[i]);
            ymin = std::min(ymin, s.ys[i]);
            ymax = std::max(ymax, s.ys[i]);
        }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    auto sx = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto sy = [&](double y) {
        return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };

    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open SVG path: " + path);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\">" << title
       << "</text>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    for (double frac : {0.0, 0.5, 1.0}) {
        os << "<text x=\"" << sx(xmin + frac * (xmax - xmin)) << "\" y=\"" << height - margin + 20
           << "\" text-anchor=\"middle\" font-size=\"11\">"
           << format_double(xmin + frac * (xmax - xmin)) << "</text>\n";
        os << "<text x=\"" << margin - 8 << "\" y=\"" << sy(ymin + frac * (ymax - ymin))
           << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(ymin + frac * (ymax - ymin))
           << "</text>\n";
    }
    int legend_y = 40;
    for (const auto& s : series) {
        // NaN samples split the curve into segments (approximation gaps)
        std::ostringstream d;
        bool pen_down = false;
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (std::isnan(s.ys[i])) {
                pen_down = false;
                continue;
            }
            d << (pen_down ? " L " : " M ") << sx(s.xs[i]) << ' ' << sy(s.ys[i]);
            pen_down = true;
        }
        os << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\"black\"";
        if (!s.dash.empty()) os << " stroke-dasharray=\"" << s.dash << "\"";
        os << "/>\n";
        os << "<text x=\"" << width - margin - 4 << "\" y=\"" << legend_y
           << "\" text-anchor=\"end\" font-size=\"11\">" << s.label << "</text>\n";
        legend_y += 16;
    }
    os << "</svg>\n";
}

} // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void to_json(nlohmann::json& j, const RunConfig& cfg) {
    j = nlohmann::json{
        {"subcommand", subcommand_name(cfg.subcommand)},
        {"m", cfg.params.m},
        {"omega", cfg.params.omega},
        {"alpha", cfg.params.alpha},
        {"gamma", cfg.params.gamma},
        {"p_bound", cfg.params.p_bound},
        {"format", cfg.format == OutputFormat::Csv ? "csv" : "json"},
        {"output", cfg.output_path},
        {"branch", branch_name(cfg.branch)},
        {"n_max", cfg.n_max},
        {"e_cut", cfg.e_cut},
        {"method", cfg.method},
        {"convention", cfg.convention},
        {"t_min", cfg.t_min},
        {"t_max", cfg.t_max},
        {"t_steps", cfg.t_steps},
        {"grid_points", cfg.grid_points},
        {"levels", cfg.levels},
        {"em_n_max", cfg.em_n_max},
        {"out_dir", cfg.out_dir},
        {"svg", cfg.svg},
        {"alphas", cfg.alphas},
    };
}

void from_json(const nlohmann::json& j, RunConfig& cfg) {
    RunConfig defaults;
    cfg.subcommand = subcommand_from(j.value("subcommand", "spectrum"));
    cfg.params.m = j.value("m", defaults.params.m);
    cfg.params.omega = j.value("omega", defaults.params.omega);
    cfg.params.alpha = j.value("alpha", defaults.params.alpha);
    cfg.params.gamma = j.value("gamma", defaults.params.gamma);
    cfg.params.p_bound = j.value("p_bound", defaults.params.p_bound);
    cfg.format = j.value("format", "csv") == std::string("json") ? OutputFormat::Json
                                                                 : OutputFormat::Csv;
    cfg.output_path = j.value("output", defaults.output_path);
    cfg.branch = branch_from(j.value("branch", "zero"));
    cfg.n_max = j.value("n_max", defaults.n_max);
    cfg.e_cut = j.value("e_cut", defaults.e_cut);
    cfg.method = j.value("method", defaults.method);
    cfg.convention = j.value("convention", defaults.convention);
    cfg.t_min = j.value("t_min", defaults.t_min);
    cfg.t_max = j.value("t_max", defaults.t_max);
    cfg.t_steps = j.value("t_steps", defaults.t_steps);
    cfg.grid_points = j.value("grid_points", defaults.grid_points);
    cfg.levels = j.value("levels", defaults.levels);
    cfg.em_n_max = j.value("em_n_max", defaults.em_n_max);
    cfg.out_dir = j.value("out_dir", defaults.out_dir);
    cfg.svg = j.value("svg", defaults.svg);
    cfg.alphas = j.value("alphas", defaults.alphas);
}

std::vector<std::string> emit_fig1_bundle(const RunConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    std::vector<std::string> written;

    const std::vector<std::pair<std::string, int>> quantities = {
        {"F", 0}, {"U", 1}, {"S", 2}, {"C_V", 3}};
    const std::vector<std::string> dashes = {"", "8 3 2 3", "8 4", "2 3"};

    // per-alpha thermo curves; column selected per quantity below
    std::vector<std::vector<statmech::ThermoPoint>> curves;
    std::vector<std::vector<bool>> valid;
    auto ts = temperature_grid(cfg);
    for (double alpha : cfg.alphas) {
        RunConfig sub = cfg;
        sub.params.alpha = alpha;
        auto [z_of_t, method] = partition_of_t(sub);
        std::vector<statmech::ThermoPoint> curve;
        std::vector<bool> ok;
        for (double temp : ts) {
            try {
                curve.push_back(statmech::thermo_from_z(z_of_t, method, temp));
                ok.push_back(true);
            } catch (const std::domain_error&) {
                curve.push_back({temp, 0, 0, 0, 0, method});
                ok.push_back(false);
            }
        }
        curves.push_back(std::move(curve));
        valid.push_back(std::move(ok));
    }

    double m = cfg.params.m;
    auto pick = [&](const statmech::ThermoPoint& pt, int q) {
        switch (q) {
            case 0: return pt.f / m;
            case 1: return pt.u / m;
            case 2: return pt.s;
            default: return pt.c_v;
        }
    };

    for (const auto& [qname, qidx] : quantities) {
        std::vector<Series> series;
        for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
            std::string fname = cfg.out_dir + "/fig1_" + qname + "_alpha" +
                                format_double(cfg.alphas[ai]) + ".csv";
            std::ofstream os(fname, std::ios::binary);
            if (!os) throw std::runtime_error("cannot open " + fname);
            bool dimensionless = qidx >= 2;
            os << "T_over_m," << qname << (dimensionless ? "" : "_over_m") << '\n';
            Series s;
            s.label = "alpha=" + format_double(cfg.alphas[ai]);
            s.dash = dashes[ai % dashes.size()];
            for (std::size_t ti = 0; ti < ts.size(); ++ti) {
                double y = valid[ai][ti] ? pick(curves[ai][ti], qidx)
                                         : std::numeric_limits<double>::quiet_NaN();
                os << format_double(ts[ti] / m) << ','
                   << (valid[ai][ti] ? format_double(y) : "nan") << '\n';
                s.xs.push_back(ts[ti] / m);
                s.ys.push_back(y);
            }
            written.push_back(fname);
            series.push_back(std::move(s));
        }
        if (cfg.svg) {
            std::string fname = cfg.out_dir + "/fig1_" + qname + ".svg";
            write_svg(fname, qname + " vs T/m (m=" + format_double(m) +
                                 ", omega=" + format_double(cfg.params.omega) + ")",
                      series);
            written.push_back(fname);
        }
    }
    return written;
}

int run(const RunConfig& cfg, std::ostream& out) {
    cfg.params.validate();
    nlohmann::json diagnostics = nlohmann::json::object();
    switch (cfg.subcommand) {
        case Subcommand::Spectrum:
            emit(cfg, spectrum_table(cfg), diagnostics, out);
            return 0;
        case Subcommand::Partition:
            emit(cfg, partition_table(cfg), diagnostics, out);
            return 0;
        case Subcommand::Thermo:
            emit(cfg, thermo_table(cfg), diagnostics, out);
            return 0;
        case Subcommand::Wavefunction:
            emit(cfg, wavefunction_table(cfg), diagnostics, out);
            return 0;
        case Subcommand::Oracle: {
            auto table = oracle_table(cfg, diagnostics);
            emit(cfg, table, diagnostics, out);
            return 0;
        }
        case Subcommand::Fig1: {
            auto files = emit_fig1_bundle(cfg);
            Table t;
            t.header = {"file"};
            for (const auto& f : files) t.rows.push_back({f});
            emit(cfg, t, diagnostics, out);
            return 0;
        }
    }
    return 1;
}

} // namespace dirosc::cli
