#include "dirosc/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

namespace dirosc::wavefunction {

namespace {

const double kSqrt7 = std::sqrt(7.0);

double arctan_term(double p, double alpha) {
    return std::atan((4.0 * alpha * p - 1.0) / kSqrt7);
}

} // namespace

double ground_state_branch1(double p, const OscillatorParams& params) {
    if (!(params.alpha > 0.0))
        throw std::domain_error("ground_state_branch1: closed form requires alpha > 0");
    double A = params.deformation_scale();
    double f = algebra::weight_function(p, params);
    return std::pow(f, -1.0 / (4.0 * A)) *
           std::exp(-arctan_term(p, params.alpha) / (2.0 * kSqrt7 * A));
}

double ground_state_branch2(double p, const OscillatorParams& params) {
    double A = params.deformation_scale();
    if (!(2.0 * A > 1.0))
        throw std::domain_error("ground_state_branch2: requires 2*m*omega*alpha^2 > 1");
    double f = algebra::weight_function(p, params);
    return std::pow(f, -(2.0 * A - 1.0) / (4.0 * A)) *
           std::exp(-arctan_term(p, params.alpha) / (2.0 * kSqrt7 * A * (2.0 * A - 1.0)));
}

std::vector<double> sample_ground_state(spectrum::Branch branch, const OscillatorParams& params,
                                        const algebra::WeightedGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = branch == spectrum::Branch::ZeroGroundState
                     ? ground_state_branch1(grid.points[i], params)
                     : ground_state_branch2(grid.points[i], params);
    return out;
}

double normalization_constant(spectrum::Branch branch, const OscillatorParams& params,
                              const algebra::WeightedGrid& grid) {
    auto psi = sample_ground_state(branch, params, grid);
    double norm = algebra::weighted_norm(psi, grid);
    if (!(norm > 0.0)) throw std::runtime_error("normalization_constant: zero norm");
    return 1.0 / norm;
}

} // namespace dirosc::wavefunction
