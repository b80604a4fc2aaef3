#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "dirosc/algebra.hpp"
#include "dirosc/quadrature.hpp"

using namespace dirosc;
using algebra::WeightedGrid;

namespace {
OscillatorParams make(double alpha, double pb = 0.0) {
    OscillatorParams p;
    p.m = 1.0;
    p.omega = 2.0;
    p.alpha = alpha;
    p.p_bound = pb;
    return p;
}
} // namespace

TEST_CASE("weight function closed-form values") {
    CHECK(algebra::weight_function(0.0, make(0.7)) == 1.0);
    CHECK(algebra::weight_function(123.4, make(0.0)) == 1.0);
    // analytic minimum 7/8 at p = 1/(4 alpha)
    CHECK(algebra::weight_function(2.5, make(0.1)) == doctest::Approx(0.875).epsilon(1e-15));
}

TEST_CASE("weight function lower bound 7/8 over a parameter sweep") {
    for (double alpha : {0.01, 0.05, 0.1, 0.3, 0.5, 1.0}) {
        auto params = make(alpha);
        double pb = algebra::default_p_bound(params);
        for (int i = 0; i <= 400; ++i) {
            double p = -pb + 2.0 * pb * i / 400.0;
            CHECK(algebra::weight_function(p, params) >= 7.0 / 8.0 - 1e-15);
        }
    }
}

TEST_CASE("default boundary momentum policy") {
    CHECK(algebra::default_p_bound(make(0.1)) == doctest::Approx(10.0));
    CHECK(algebra::default_p_bound(make(0.5)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(algebra::default_p_bound(make(0.0)), std::domain_error);
    CHECK(algebra::resolve_p_bound(make(0.1, 3.0)) == 3.0);
}

TEST_CASE("grid construction invariants") {
    auto params = make(0.1);
    auto grid = WeightedGrid::make(params, 10.0, 201);
    REQUIRE(grid.size() == 201);
    CHECK(grid.points[100] == 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(grid.weights[i] > 0.0);
        if (i > 0) CHECK(grid.points[i] > grid.points[i - 1]);
        CHECK(grid.points[i] == doctest::Approx(-grid.points[grid.size() - 1 - i]).epsilon(1e-14));
    }
    CHECK_THROWS(WeightedGrid::make(params, 10.0, 200)); // even count
    CHECK_THROWS(WeightedGrid::make(params, -1.0, 201));
}

TEST_CASE("inner product: nondeformed constant on [-1,1] integrates to 2") {
    auto params = make(0.0);
    auto grid = WeightedGrid::make(params, 1.0, 101);
    std::vector<double> ones(grid.size(), 1.0);
    CHECK(algebra::weighted_inner_product(ones, ones, grid) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("inner product of constants matches the adaptive-quadrature oracle") {
    // independent oracle: int_{-10}^{10} dp / (1 - 0.1 p + 0.02 p^2),
    // frozen from high-precision quadrature
    const double oracle = 14.6057828082424382;
    auto params = make(0.1);
    auto grid = WeightedGrid::make(params, 10.0, 2001);
    std::vector<double> ones(grid.size(), 1.0);
    CHECK(algebra::weighted_inner_product(ones, ones, grid) ==
          doctest::Approx(oracle).epsilon(1e-10));
    // and the in-process adaptive rule agrees with the frozen value
    double adaptive = adaptive_simpson(
        [&](double p) { return 1.0 / algebra::weight_function(p, params); }, -10.0, 10.0, 1e-12);
    CHECK(adaptive == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("parity: odd against even vanishes on a symmetric grid") {
    auto params = make(0.0);
    auto grid = WeightedGrid::make(params, 5.0, 401);
    std::vector<double> odd(grid.size()), even(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        odd[i] = grid.points[i];
        even[i] = std::cos(grid.points[i]);
    }
    CHECK(std::abs(algebra::weighted_inner_product(odd, even, grid)) < 1e-13);
}

TEST_CASE("conjugate symmetry of the complex inner product") {
    auto params = make(0.2);
    auto grid = WeightedGrid::make(params, 5.0, 201);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<std::complex<double>> psi(grid.size()), phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        psi[i] = {dist(rng), dist(rng)};
        phi[i] = {dist(rng), dist(rng)};
    }
    auto ab = algebra::weighted_inner_product(std::span<const std::complex<double>>(psi),
                                              std::span<const std::complex<double>>(phi), grid);
    auto ba = algebra::weighted_inner_product(std::span<const std::complex<double>>(phi),
                                              std::span<const std::complex<double>>(psi), grid);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-13);
}

TEST_CASE("positive definiteness on the grid") {
    auto params = make(0.1);
    auto grid = WeightedGrid::make(params, 10.0, 201);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> psi(grid.size());
    for (auto& x : psi) x = dist(rng);
    CHECK(algebra::weighted_inner_product(psi, psi, grid) > 0.0);
    std::vector<double> zero(grid.size(), 0.0);
    CHECK(algebra::weighted_inner_product(zero, zero, grid) == 0.0);
}

TEST_CASE("mismatched sample lengths are rejected") {
    auto params = make(0.1);
    auto grid = WeightedGrid::make(params, 10.0, 101);
    std::vector<double> a(101, 1.0), b(99, 1.0);
    CHECK_THROWS_AS(algebra::weighted_inner_product(std::span<const double>(a),
                                                    std::span<const double>(b), grid),
                    std::invalid_argument);
}

TEST_CASE("quadrature converges under grid refinement") {
    auto params = make(0.1);
    auto integrand = [&](double p) {
        return std::cos(p) * std::cos(p) / algebra::weight_function(p, params);
    };
    double oracle = adaptive_simpson([&](double p) { return integrand(p); }, -10.0, 10.0, 1e-13);
    double prev_err = -1.0;
    for (std::size_t n : {101u, 201u, 401u}) {
        auto grid = WeightedGrid::make(params, 10.0, n);
        std::vector<double> c(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) c[i] = std::cos(grid.points[i]);
        double err = std::abs(algebra::weighted_inner_product(c, c, grid) - oracle);
        if (prev_err >= 0.0) CHECK(err <= prev_err / 3.0);
        prev_err = err;
    }
}
