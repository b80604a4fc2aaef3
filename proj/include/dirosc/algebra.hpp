#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "dirosc/params.hpp"

namespace dirosc::algebra {

// f(p) = 1 - alpha p + 2 alpha^2 p^2, the right-hand side of the deformed
// commutator.  Strictly positive (minimum 7/8 at p = 1/(4 alpha)).
double weight_function(double p, const OscillatorParams& params);

// Boundary momentum policy: P_b = 1/alpha in natural units.
// Throws std::domain_error when alpha = 0 (no finite bound exists; the
// caller must supply an explicit cutoff).
double default_p_bound(const OscillatorParams& params);

// Explicit params.p_bound when positive, otherwise default_p_bound.
double resolve_p_bound(const OscillatorParams& params);

// Uniform momentum grid on [-p_bound, +p_bound] with composite-Simpson
// quadrature weights that absorb the measure 1/f(p).
struct WeightedGrid {
    std::vector<double> points;
    std::vector<double> weights;
    double spacing = 0.0;

    // n_points must be odd and >= 3 (Simpson pairs).
    static WeightedGrid make(const OscillatorParams& params, double p_bound,
                             std::size_t n_points = 2001);
    std::size_t size() const { return points.size(); }
};

// <psi|phi> = sum_i w_i conj(psi_i) phi_i, approximating
// int_{-P_b}^{P_b} dp/f(p) psi*(p) phi(p).
std::complex<double> weighted_inner_product(std::span<const std::complex<double>> psi,
                                            std::span<const std::complex<double>> phi,
                                            const WeightedGrid& grid);
double weighted_inner_product(std::span<const double> psi, std::span<const double> phi,
                              const WeightedGrid& grid);

double weighted_norm(std::span<const double> psi, const WeightedGrid& grid);

} // namespace dirosc::algebra
