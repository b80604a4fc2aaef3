#include "dirosc/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace dirosc::algebra {

double weight_function(double p, const OscillatorParams& params) {
    double ap = params.alpha * p;
    return 1.0 - ap + 2.0 * ap * ap;
}

double default_p_bound(const OscillatorParams& params) {
    if (params.alpha <= 0.0)
        throw std::domain_error("default_p_bound: no finite bound for alpha = 0; "
                                "supply an explicit momentum cutoff");
    return 1.0 / params.alpha;
}

double resolve_p_bound(const OscillatorParams& params) {
    if (params.p_bound > 0.0) return params.p_bound;
    return default_p_bound(params);
}

WeightedGrid WeightedGrid::make(const OscillatorParams& params, double p_bound,
                                std::size_t n_points) {
    if (!(p_bound > 0.0)) throw std::invalid_argument("WeightedGrid: p_bound must be > 0");
    if (n_points < 3 || n_points % 2 == 0)
        throw std::invalid_argument("WeightedGrid: point count must be odd and >= 3");

    WeightedGrid grid;
    grid.points.resize(n_points);
    grid.weights.resize(n_points);
    std::size_t last = n_points - 1;
    grid.spacing = 2.0 * p_bound / static_cast<double>(last);
    for (std::size_t i = 0; i <= last; ++i) {
        // symmetric fill keeps the midpoint exactly at 0 for odd counts
        double p = -p_bound + grid.spacing * static_cast<double>(i);
        if (2 * i == last) p = 0.0;
        grid.points[i] = p;
        double simpson = (i == 0 || i == last) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        grid.weights[i] = simpson * grid.spacing / 3.0 / weight_function(p, params);
    }
    return grid;
}

namespace {
void check_sizes(std::size_t a, std::size_t b, std::size_t g) {
    if (a != g || b != g)
        throw std::invalid_argument("weighted_inner_product: sample length does not match grid");
}
} // namespace

std::complex<double> weighted_inner_product(std::span<const std::complex<double>> psi,
                                            std::span<const std::complex<double>> phi,
                                            const WeightedGrid& grid) {
    check_sizes(psi.size(), phi.size(), grid.size());
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < grid.size(); ++i)
        acc += grid.weights[i] * std::conj(psi[i]) * phi[i];
    return acc;
}

double weighted_inner_product(std::span<const double> psi, std::span<const double> phi,
                              const WeightedGrid& grid) {
    check_sizes(psi.size(), phi.size(), grid.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        acc += grid.weights[i] * psi[i] * phi[i];
    return acc;
}

double weighted_norm(std::span<const double> psi, const WeightedGrid& grid) {
    return std::sqrt(weighted_inner_product(psi, psi, grid));
}

} // namespace dirosc::algebra
