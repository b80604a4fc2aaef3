#pragma once

#include <optional>
#include <vector>

#include "dirosc/params.hpp"

namespace dirosc::spectrum {

enum class Branch { ZeroGroundState, NonzeroGroundState };

// One rung of the shape-invariance hierarchy: dressed lowering operator
// b^-(xi, k) = xi p + k + m w (1 - a g p + 2 a^2 p^2) d/dp.  eps is the
// gap contributed by the step into this rung; absent for the branch-1
// seed (the undressed operator carries no gap).
struct LadderCoefficients {
    int index = 0;
    double xi = 1.0;
    double k = 0.0;
    std::optional<double> eps;
};

struct EnergySpectrum {
    Branch branch = Branch::ZeroGroundState;
    std::vector<double> levels; // E_n, strictly increasing
    int n_max = -1;             // levels.size() - 1
    double e_cut = 0.0;
};

// Closed-form E_n^2 for the branch whose ground state sits at E_0 = m.
double energy_sq_branch1(int n, const OscillatorParams& params);

// Closed-form E_n^2 for the nonzero-ground-state branch.  Requires
// 2 m omega alpha^2 > 1; throws std::domain_error otherwise.
double energy_sq_branch2(int n, const OscillatorParams& params);

// Iterates the three shape-invariance conditions from the seed
// (xi_0, k_0) = (1, 0), taking the root xi_{i+1} = xi_i + 2 m w a^2.
// Returns coefficients for indices 0..n_target.
std::vector<LadderCoefficients> susy_recurrence_branch1(int n_target,
                                                        const OscillatorParams& params);

// Same iteration from the nontrivial seed xi = 2 m w a^2 - 1; element 0
// carries the ground-state gap as eps.
std::vector<LadderCoefficients> susy_recurrence_branch2(int n_target,
                                                        const OscillatorParams& params);

// Default energy cutoff: sqrt(m^2 + P_b^2) with P_b from the boundary
// momentum policy.
double default_e_cut(const OscillatorParams& params);

// All levels E_n <= e_cut in increasing n.  Monotonicity of E_n stops
// the scan at the first exceedance.  Throws std::domain_error when the
// lowest level already exceeds e_cut.
EnergySpectrum build_spectrum(Branch branch, const OscillatorParams& params, double e_cut);

} // namespace dirosc::spectrum
