#pragma once

#include <vector>

#include "dirosc/algebra.hpp"
#include "dirosc/params.hpp"
#include "dirosc/spectrum.hpp"

namespace dirosc::wavefunction {

// Upper component of the branch-1 ground state, unnormalized (C = 1):
//   f(p)^{-1/(4 m w a^2)} exp[-arctan((4 a p - 1)/sqrt7) / (2 sqrt7 m w a^2)]
// Requires alpha > 0 (the closed form has no nondeformed limit here).
double ground_state_branch1(double p, const OscillatorParams& params);

// Branch-2 analogue with exponent -(2 m w a^2 - 1)/(4 m w a^2) and the
// arctan term scaled by 1/(2 m w a^2 - 1).  Requires 2 m w a^2 > 1.
double ground_state_branch2(double p, const OscillatorParams& params);

// Ground state sampled on the grid, unnormalized.
std::vector<double> sample_ground_state(spectrum::Branch branch, const OscillatorParams& params,
                                        const algebra::WeightedGrid& grid);

// C such that C * psi has unit weighted norm on the grid's interval.
double normalization_constant(spectrum::Branch branch, const OscillatorParams& params,
                              const algebra::WeightedGrid& grid);

} // namespace dirosc::wavefunction
