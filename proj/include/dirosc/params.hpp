#pragma once

#include <stdexcept>

namespace dirosc {

// Physical parameters of the deformed Dirac oscillator, natural units
// (c = hbar = 1).  p_bound <= 0 selects the default boundary-momentum
// policy (1/alpha); an explicit positive value overrides it.
struct OscillatorParams {
    double m = 1.0;       // mass, > 0
    double omega = 2.0;   // oscillator frequency, > 0
    double alpha = 0.0;   // deformation parameter, >= 0
    double gamma = 1.0;   // interpolation parameter in [0, 1]
    double p_bound = 0.0; // boundary momentum P_b; <= 0 means "default"

    // m*omega*alpha^2, the dimensionless deformation scale that drives
    // the ladder recurrences.
    double deformation_scale() const { return m * omega * alpha * alpha; }

    void validate() const {
        if (!(m > 0.0)) throw std::invalid_argument("OscillatorParams: m must be > 0");
        if (!(omega > 0.0)) throw std::invalid_argument("OscillatorParams: omega must be > 0");
        if (!(alpha >= 0.0)) throw std::invalid_argument("OscillatorParams: alpha must be >= 0");
        if (!(gamma >= 0.0 && gamma <= 1.0))
            throw std::invalid_argument("OscillatorParams: gamma must be in [0, 1]");
    }
};

} // namespace dirosc
