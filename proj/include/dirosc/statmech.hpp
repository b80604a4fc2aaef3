#pragma once

#include <functional>

#include "dirosc/params.hpp"
#include "dirosc/spectrum.hpp"

namespace dirosc::statmech {

enum class SpectrumVariant {
    MaxMomentum,   // a = 7 w^2 a^2 / 4 (minimal length + maximal momentum)
    MinLengthOnly, // a = 2 w^2 a^2   (exact for the gamma = 0 spectrum)
};

// E_n ~ m sqrt(a n^2 + b n + 1) with b = 2 w / m.
struct SimplifiedSpectrumCoeffs {
    double a = 0.0;
    double b = 0.0;
    SpectrumVariant variant = SpectrumVariant::MaxMomentum;

    static SimplifiedSpectrumCoeffs from_params(const OscillatorParams& params,
                                                SpectrumVariant variant);
};

enum class Method { DirectSum, EulerMaclaurinClosedForm, EulerMaclaurinNumericIntegral };

// Convention for the constant term of the closed-form partition function:
// the published expression carries a bare 1/2, while the Euler-Maclaurin
// endpoint term (1/2) f(0) actually evaluates to e^{-beta}/2.
enum class ConstantConvention { PaperLiteral, Consistent };

struct PartitionEvaluation {
    double temperature = 0.0;
    double beta = 0.0; // m / T
    double z = 0.0;
    Method method = Method::DirectSum;
    ConstantConvention convention = ConstantConvention::Consistent;
};

struct ThermoPoint {
    double t = 0.0;
    double f = 0.0;
    double u = 0.0;
    double s = 0.0;
    double c_v = 0.0;
    Method method = Method::DirectSum;
};

// Z = sum_n exp(-E_n / T) over the finite level list.
PartitionEvaluation direct_partition(const spectrum::EnergySpectrum& spec, double t);

double simplified_energy(int n, const SimplifiedSpectrumCoeffs& coeffs, double m);

// Truncated Euler-Maclaurin closed form (B_2 and B_4 terms retained,
// upper-bound contributions dropped, small-a integral expansion).
PartitionEvaluation euler_maclaurin_z(const SimplifiedSpectrumCoeffs& coeffs, double beta,
                                      ConstantConvention convention);

// Same decomposition but with the integral term evaluated by adaptive
// quadrature on [0, n_max] and the derivative corrections by central
// finite differences; upper-bound contributions are kept.
PartitionEvaluation em_numeric_integral_z(const SimplifiedSpectrumCoeffs& coeffs, double beta,
                                          int n_max);

// F = -T ln Z; S by central difference of F; U = F + T S; C_V by central
// difference of S.  Throws std::domain_error if Z is nonpositive anywhere
// on the five-point stencil (approximation breakdown).
ThermoPoint thermo_from_z(const std::function<double(double)>& z_of_t, Method tag, double t,
                          double dt);

// Convenience overload with the default step dt = 1e-3 * t.
ThermoPoint thermo_from_z(const std::function<double(double)>& z_of_t, Method tag, double t);

} // namespace dirosc::statmech
