#include "dirosc/spectrum.hpp"

#include "dirosc/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace dirosc::spectrum {

namespace {

void require_branch2_domain(const OscillatorParams& params) {
    if (!(2.0 * params.deformation_scale() > 1.0))
        throw std::domain_error("branch 2 requires 2*m*omega*alpha^2 > 1");
}

// One shape-invariance step: advance (xi, k) and return the gap.
LadderCoefficients advance(const LadderCoefficients& prev, const OscillatorParams& params) {
    double mw = params.m * params.omega;
    double a2 = params.alpha * params.alpha;
    double shift = mw * params.alpha * params.gamma;
    LadderCoefficients next;
    next.index = prev.index + 1;
    next.xi = prev.xi + 2.0 * mw * a2;
    next.k = (2.0 * prev.k * prev.xi - shift * (prev.xi + next.xi)) / (2.0 * next.xi);
    next.eps = prev.k * prev.k - next.k * next.k + mw * (prev.xi + next.xi);
    return next;
}

} // namespace

double energy_sq_branch1(int n, const OscillatorParams& params) {
    if (n < 0) throw std::invalid_argument("energy_sq_branch1: n must be >= 0");
    double mw = params.m * params.omega;
    double A = params.deformation_scale();
    double nn = static_cast<double>(n);
    double shape = (1.0 + A * nn) / (1.0 + 2.0 * A * nn);
    double g = params.gamma;
    return params.m * params.m + 2.0 * mw * nn * (1.0 + A * nn) -
           mw * mw * params.alpha * params.alpha * g * g * nn * nn * shape * shape;
}

double energy_sq_branch2(int n, const OscillatorParams& params) {
    if (n < 0) throw std::invalid_argument("energy_sq_branch2: n must be >= 0");
    require_branch2_domain(params);
    double mw = params.m * params.omega;
    double A = params.deformation_scale();
    double q = static_cast<double>(n + 1);
    double shape = (1.0 - A * q) / (2.0 * A * q - 1.0);
    double g = params.gamma;
    return params.m * params.m + 2.0 * mw * q * (A * q - 1.0) -
           mw * mw * params.alpha * params.alpha * g * g * q * q * shape * shape;
}

std::vector<LadderCoefficients> susy_recurrence_branch1(int n_target,
                                                        const OscillatorParams& params) {
    if (n_target < 0) throw std::invalid_argument("susy_recurrence_branch1: n_target >= 0");
    std::vector<LadderCoefficients> out;
    out.reserve(static_cast<std::size_t>(n_target) + 1);
    out.push_back({0, 1.0, 0.0, std::nullopt});
    for (int i = 0; i < n_target; ++i) out.push_back(advance(out.back(), params));
    return out;
}

std::vector<LadderCoefficients> susy_recurrence_branch2(int n_target,
                                                        const OscillatorParams& params) {
    if (n_target < 0) throw std::invalid_argument("susy_recurrence_branch2: n_target >= 0");
    require_branch2_domain(params);
    double mw = params.m * params.omega;
    double A = params.deformation_scale();
    LadderCoefficients seed;
    seed.index = 0;
    seed.xi = 2.0 * A - 1.0;
    seed.k = mw * params.alpha * params.gamma * (1.0 - A) / (2.0 * A - 1.0);
    // ground-state gap from k'^2 - m w xi' + eps = -m w
    seed.eps = mw * seed.xi - seed.k * seed.k - mw;
    std::vector<LadderCoefficients> out;
    out.reserve(static_cast<std::size_t>(n_target) + 1);
    out.push_back(seed);
    for (int i = 0; i < n_target; ++i) out.push_back(advance(out.back(), params));
    return out;
}

double default_e_cut(const OscillatorParams& params) {
    double pb = algebra::resolve_p_bound(params);
    return std::sqrt(params.m * params.m + pb * pb);
}

EnergySpectrum build_spectrum(Branch branch, const OscillatorParams& params, double e_cut) {
    params.validate();
    if (branch == Branch::NonzeroGroundState) require_branch2_domain(params);
    EnergySpectrum spec;
    spec.branch = branch;
    spec.e_cut = e_cut;
    for (int n = 0;; ++n) {
        double e2 = branch == Branch::ZeroGroundState ? energy_sq_branch1(n, params)
                                                      : energy_sq_branch2(n, params);
        double e = std::sqrt(e2);
        if (e > e_cut) break;
        spec.levels.push_back(e);
    }
    if (spec.levels.empty())
        throw std::domain_error("build_spectrum: energy cutoff lies below the lowest level");
    spec.n_max = static_cast<int>(spec.levels.size()) - 1;
    return spec;
}

} // namespace dirosc::spectrum
