#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dirosc/spectrum.hpp"

using namespace dirosc;
using namespace dirosc::spectrum;

namespace {
OscillatorParams make(double m, double w, double alpha, double gamma) {
    OscillatorParams p;
    p.m = m;
    p.omega = w;
    p.alpha = alpha;
    p.gamma = gamma;
    return p;
}
} // namespace

TEST_CASE("branch 1 closed form: anchor values") {
    auto p = make(1, 2, 0.1, 1);
    CHECK(energy_sq_branch1(0, p) == doctest::Approx(1.0).epsilon(1e-15));
    // nondeformed limit: E^2 = m^2 + 2 m w n
    CHECK(energy_sq_branch1(3, make(1, 2, 0, 1)) == doctest::Approx(13.0).epsilon(1e-15));
    // frozen from the telescoped recurrence summed to n = 1
    CHECK(energy_sq_branch1(1, p) == doctest::Approx(5.04152366863905325).epsilon(1e-14));
    CHECK(std::sqrt(energy_sq_branch1(1, p)) ==
          doctest::Approx(2.24533375439800781).epsilon(1e-14));
}

TEST_CASE("branch 2 closed form: anchors and domain") {
    // ground level equals the independently evaluated gap formula
    CHECK(energy_sq_branch2(0, make(1, 2, 1, 1)) ==
          doctest::Approx(1.0 + 4.0 - 4.0 / 9.0).epsilon(1e-14));
    CHECK(std::sqrt(energy_sq_branch2(0, make(1, 2, 1, 1))) ==
          doctest::Approx(2.13437474581094956).epsilon(1e-14));
    // gamma = 0 kills the shape term
    CHECK(energy_sq_branch2(1, make(1, 2, 1, 0)) == doctest::Approx(25.0).epsilon(1e-14));
    // precondition 2 m w alpha^2 > 1
    CHECK_THROWS_AS(energy_sq_branch2(0, make(1, 2, 0.1, 1)), std::domain_error);
}

TEST_CASE("branch 1 recurrence seed and first dressed rung") {
    auto p = make(1, 2, 0.1, 1);
    auto coeffs = susy_recurrence_branch1(1, p);
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0].xi == 1.0);
    CHECK(coeffs[0].k == 0.0);
    CHECK_FALSE(coeffs[0].eps.has_value());
    CHECK(coeffs[1].xi == doctest::Approx(1.04).epsilon(1e-15));
    CHECK(coeffs[1].k == doctest::Approx(-0.19615384615384615).epsilon(1e-14));
}

TEST_CASE("branch 2 recurrence seed") {
    auto p = make(1, 2, 1, 1);
    auto coeffs = susy_recurrence_branch2(0, p);
    REQUIRE(coeffs.size() == 1);
    CHECK(coeffs[0].xi == doctest::Approx(3.0));
    CHECK(coeffs[0].k == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    CHECK(coeffs[0].eps.value() == doctest::Approx(3.5555555555555554).epsilon(1e-14));
    CHECK_THROWS_AS(susy_recurrence_branch2(3, make(1, 2, 0.1, 1)), std::domain_error);
}

TEST_CASE("trivial root of the seed quadratic reproduces branch 1") {
    // xi' = 1 forces k' = 0 in xi'(2k' + m w a) = m w a, i.e. the
    // undressed chain; the branch-1 recurrence carries exactly that seed.
    auto p = make(1, 2, 1, 1);
    double mwa = p.m * p.omega * p.alpha;
    double k_trivial = (mwa / 1.0 - mwa) / 2.0;
    CHECK(k_trivial == 0.0);
    auto b1 = susy_recurrence_branch1(0, p);
    CHECK(b1[0].xi == 1.0);
    CHECK(b1[0].k == 0.0);
}

TEST_CASE("recurrence matches the closed forms across the sweep") {
    for (double m : {0.5, 1.0, 2.0})
        for (double w : {0.5, 1.0, 2.0})
            for (double alpha : {0.0, 0.05, 0.1, 0.3})
                for (double gamma : {0.0, 0.5, 1.0}) {
                    auto p = make(m, w, alpha, gamma);
                    double A = p.deformation_scale();
                    auto coeffs = susy_recurrence_branch1(200, p);
                    for (int i = 0; i <= 200; ++i) {
                        double xi_closed = 1.0 + 2.0 * i * A;
                        double k_closed =
                            -i * m * w * alpha * gamma * (1.0 + i * A) / (1.0 + 2.0 * i * A);
                        CHECK(std::abs(coeffs[i].xi - xi_closed) <= 1e-10 * std::abs(xi_closed));
                        CHECK(std::abs(coeffs[i].k - k_closed) <=
                              1e-10 * std::max(std::abs(k_closed), 1.0));
                    }
                }
}

TEST_CASE("branch 2 recurrence matches its closed forms") {
    for (double m : {1.0, 2.0})
        for (double w : {1.0, 2.0})
            for (double alpha : {1.0, 1.5})
                for (double gamma : {0.0, 0.5, 1.0}) {
                    auto p = make(m, w, alpha, gamma);
                    if (!(2.0 * p.deformation_scale() > 1.0)) continue;
                    double A = p.deformation_scale();
                    auto coeffs = susy_recurrence_branch2(100, p);
                    for (int i = 0; i <= 100; ++i) {
                        double q = i + 1.0;
                        double xi_closed = 2.0 * q * A - 1.0;
                        double k_closed =
                            q * m * w * alpha * gamma * (1.0 - q * A) / (2.0 * q * A - 1.0);
                        CHECK(std::abs(coeffs[i].xi - xi_closed) <= 1e-10 * std::abs(xi_closed));
                        CHECK(std::abs(coeffs[i].k - k_closed) <=
                              1e-10 * std::max(std::abs(k_closed), 1.0));
                    }
                }
}

TEST_CASE("telescoping: partial gap sums reproduce the closed-form spectra") {
    for (double alpha : {0.05, 0.1, 0.3}) {
        auto p = make(1, 2, alpha, 0.7);
        auto coeffs = susy_recurrence_branch1(50, p);
        double sum = 0.0;
        for (int n = 1; n <= 50; ++n) {
            sum += coeffs[n].eps.value();
            double closed = energy_sq_branch1(n, p);
            CHECK(std::abs(p.m * p.m + sum - closed) <= 1e-12 * std::abs(closed));
        }
    }
    auto p2 = make(1, 2, 1.2, 0.5);
    auto coeffs = susy_recurrence_branch2(50, p2);
    double sum = 0.0;
    for (int n = 0; n <= 50; ++n) {
        sum += coeffs[n].eps.value();
        double closed = energy_sq_branch2(n, p2);
        CHECK(std::abs(p2.m * p2.m + sum - closed) <= 1e-12 * std::abs(closed));
    }
}

TEST_CASE("nondeformed limit approached at second order in alpha") {
    // |E^2(alpha) - (m^2 + 2 m w n)| / alpha^2 stays bounded as alpha halves
    int n = 3;
    double first_ratio = 0.0;
    for (double alpha : {0.1, 0.05, 0.025, 0.0125}) {
        auto p = make(1, 2, alpha, 1);
        double dev = std::abs(energy_sq_branch1(n, p) - (1.0 + 2.0 * 1.0 * 2.0 * n));
        double ratio = dev / (alpha * alpha);
        if (first_ratio == 0.0) first_ratio = ratio;
        CHECK(ratio <= 2.0 * first_ratio);
        CHECK(ratio >= 0.25 * first_ratio);
    }
}

TEST_CASE("gamma = 0 collapses branch 1 to the minimal-length spectrum exactly") {
    for (double alpha : {0.05, 0.1, 0.3})
        for (int n : {0, 1, 5, 40}) {
            auto p = make(1.5, 2.0, alpha, 0.0);
            double mw = p.m * p.omega;
            double A = p.deformation_scale();
            double expected = p.m * p.m + 2.0 * mw * n * (1.0 + A * n);
            CHECK(energy_sq_branch1(n, p) == expected); // bitwise formula identity
        }
}

TEST_CASE("monotonicity of both branches across the sweep") {
    for (double alpha : {0.0, 0.05, 0.1, 0.3}) {
        auto p = make(1, 2, alpha, 1);
        double prev = energy_sq_branch1(0, p);
        for (int n = 1; n <= 200; ++n) {
            double cur = energy_sq_branch1(n, p);
            CHECK(cur > prev);
            prev = cur;
        }
    }
    auto p2 = make(1, 2, 1, 1);
    double prev = energy_sq_branch2(0, p2);
    for (int n = 1; n <= 200; ++n) {
        double cur = energy_sq_branch2(n, p2);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("spectrum construction at alpha = 0 with a unit-free cutoff") {
    auto spec = build_spectrum(Branch::ZeroGroundState, make(1, 2, 0, 1), 5.0);
    std::vector<double> expected = {1.0,
                                    std::sqrt(5.0),
                                    3.0,
                                    std::sqrt(13.0),
                                    std::sqrt(17.0),
                                    std::sqrt(21.0),
                                    5.0};
    REQUIRE(spec.levels.size() == expected.size());
    CHECK(spec.n_max == 6);
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(spec.levels[i] == doctest::Approx(expected[i]).epsilon(1e-15));
}

TEST_CASE("spectrum construction with the default cutoff policy") {
    auto p = make(1, 2, 0.1, 1);
    double e_cut = default_e_cut(p); // sqrt(1 + 100)
    CHECK(e_cut == doctest::Approx(std::sqrt(101.0)).epsilon(1e-15));
    auto spec = build_spectrum(Branch::ZeroGroundState, p, e_cut);
    CHECK(spec.n_max >= 1);
    // linear-scan contract: last level within cutoff, next one beyond
    CHECK(spec.levels.back() <= e_cut);
    CHECK(std::sqrt(energy_sq_branch1(spec.n_max + 1, p)) > e_cut);
}

TEST_CASE("cutoff below the lowest level is an error") {
    CHECK_THROWS_AS(build_spectrum(Branch::ZeroGroundState, make(1, 2, 0, 1), 0.5),
                    std::domain_error);
}
