#include "dirosc/statmech.hpp"

#include <cmath>
#include <stdexcept>

#include "dirosc/quadrature.hpp"

namespace dirosc::statmech {

SimplifiedSpectrumCoeffs SimplifiedSpectrumCoeffs::from_params(const OscillatorParams& params,
                                                               SpectrumVariant variant) {
    params.validate();
    SimplifiedSpectrumCoeffs c;
    c.variant = variant;
    double wa = params.omega * params.alpha;
    c.a = variant == SpectrumVariant::MaxMomentum ? 7.0 * wa * wa / 4.0 : 2.0 * wa * wa;
    c.b = 2.0 * params.omega / params.m;
    return c;
}

PartitionEvaluation direct_partition(const spectrum::EnergySpectrum& spec, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("direct_partition: temperature must be > 0");
    if (spec.levels.empty()) throw std::invalid_argument("direct_partition: empty spectrum");
    double z = 0.0;
    // sum smallest Boltzmann factors first (levels ascend)
    for (auto it = spec.levels.rbegin(); it != spec.levels.rend(); ++it)
        z += std::exp(-*it / t);
    PartitionEvaluation out;
    out.temperature = t;
    out.beta = spec.levels.front() > 0.0 ? spec.levels.front() / t : 0.0;
    out.z = z;
    out.method = Method::DirectSum;
    return out;
}

double simplified_energy(int n, const SimplifiedSpectrumCoeffs& coeffs, double m) {
    if (n < 0) throw std::invalid_argument("simplified_energy: n must be >= 0");
    double x = static_cast<double>(n);
    return m * std::sqrt(coeffs.a * x * x + coeffs.b * x + 1.0);
}

PartitionEvaluation euler_maclaurin_z(const SimplifiedSpectrumCoeffs& coeffs, double beta,
                                      ConstantConvention convention) {
    if (!(beta > 0.0)) throw std::invalid_argument("euler_maclaurin_z: beta must be > 0");
    double a = coeffs.a;
    double b = coeffs.b;
    double eb = std::exp(-beta);
    double constant = convention == ConstantConvention::PaperLiteral ? 0.5 : 0.5 * eb;
    double integral = (2.0 / (beta * b)) *
                      (1.0 + 1.0 / beta -
                       (4.0 * a / (beta * b * b)) * (1.0 + 3.0 / beta + 3.0 / (beta * beta))) *
                      eb;
    double b2_term = beta * b / 24.0 * eb;
    double b4_term = beta * b / 1440.0 * eb *
                     (3.0 * (1.0 + beta) * (a - b * b / 4.0) - beta * beta * b * b / 4.0);
    PartitionEvaluation out;
    out.beta = beta;
    out.z = constant + integral + b2_term + b4_term;
    out.method = Method::EulerMaclaurinClosedForm;
    out.convention = convention;
    return out;
}

PartitionEvaluation em_numeric_integral_z(const SimplifiedSpectrumCoeffs& coeffs, double beta,
                                          int n_max) {
    if (!(beta > 0.0)) throw std::invalid_argument("em_numeric_integral_z: beta must be > 0");
    if (n_max < 1) throw std::invalid_argument("em_numeric_integral_z: n_max must be >= 1");
    double a = coeffs.a;
    double b = coeffs.b;
    auto f = [a, b, beta](double x) {
        return std::exp(-beta * std::sqrt(a * x * x + b * x + 1.0));
    };
    double upper = static_cast<double>(n_max);
    double integral = adaptive_simpson(f, 0.0, upper, 1e-12);

    // central differences; the integrand extends smoothly to small x < 0
    double h = 1e-2 / std::max(1.0, beta);
    auto d1 = [&](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };
    auto d3 = [&](double x) {
        return (-f(x - 2.0 * h) + 2.0 * f(x - h) - 2.0 * f(x + h) + f(x + 2.0 * h)) /
               (2.0 * h * h * h);
    };

    const double bern2 = 1.0 / 6.0;
    const double bern4 = -1.0 / 30.0;
    double z = integral + 0.5 * (f(0.0) + f(upper));
    z += bern2 / 2.0 * (d1(upper) - d1(0.0));
    z += bern4 / 24.0 * (d3(upper) - d3(0.0));

    PartitionEvaluation out;
    out.beta = beta;
    out.z = z;
    out.method = Method::EulerMaclaurinNumericIntegral;
    return out;
}

ThermoPoint thermo_from_z(const std::function<double(double)>& z_of_t, Method tag, double t,
                          double dt) {
    if (!(t > dt && dt > 0.0))
        throw std::invalid_argument("thermo_from_z: require t > dt > 0");
    auto free_energy = [&](double temp) {
        double z = z_of_t(temp);
        if (!(z > 0.0))
            throw std::domain_error("thermo_from_z: nonpositive partition function in stencil "
                                    "(approximation breakdown)");
        return -temp * std::log(z);
    };
    double fm2 = free_energy(t - 2.0 * dt);
    double fm1 = free_energy(t - dt);
    double f0 = free_energy(t);
    double fp1 = free_energy(t + dt);
    double fp2 = free_energy(t + 2.0 * dt);

    double s = -(fp1 - fm1) / (2.0 * dt);
    double s_minus = -(f0 - fm2) / (2.0 * dt);
    double s_plus = -(fp2 - f0) / (2.0 * dt);

    ThermoPoint out;
    out.t = t;
    out.f = f0;
    out.s = s;
    out.u = f0 + t * s;
    out.c_v = t * (s_plus - s_minus) / (2.0 * dt);
    out.method = tag;
    return out;
}

ThermoPoint thermo_from_z(const std::function<double(double)>& z_of_t, Method tag, double t) {
    return thermo_from_z(z_of_t, tag, t, 1e-3 * t);
}

} // namespace dirosc::statmech
