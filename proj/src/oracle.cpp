#include "dirosc/oracle.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <lapacke.h>

#include "dirosc/algebra.hpp"

namespace dirosc::oracle {

namespace {

// Derivative factor of the ladder operator: 1 - alpha gamma p + 2 alpha^2 p^2.
double f_gamma(double p, const OscillatorParams& params) {
    double a = params.alpha;
    return 1.0 - a * params.gamma * p + 2.0 * a * a * p * p;
}

DiscretizedOperator assemble_impl(const OscillatorParams& params, int grid_points, double p_cut,
                                  double xi, double k) {
    params.validate();
    if (grid_points < 51 || grid_points % 2 == 0)
        throw std::invalid_argument("assemble: grid_points must be odd and >= 51");
    if (!(p_cut > 0.0)) throw std::invalid_argument("assemble: p_cut must be > 0");

    int n = grid_points - 2; // interior nodes; psi = 0 at the two boundaries
    DiscretizedOperator op;
    op.p_cut = p_cut;
    op.spacing = 2.0 * p_cut / static_cast<double>(grid_points - 1);
    op.points.resize(n);
    op.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double p = -p_cut + op.spacing * static_cast<double>(i + 1);
        op.points[i] = p;
        op.weights[i] = op.spacing / algebra::weight_function(p, params);
    }

    double mw = params.m * params.omega;
    double inv2h = 1.0 / (2.0 * op.spacing);
    op.lowering = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        double fg = mw * f_gamma(op.points[i], params);
        op.lowering(i, i) = xi * op.points[i] + k;
        if (i > 0) op.lowering(i, i - 1) = -fg * inv2h;
        if (i < n - 1) op.lowering(i, i + 1) = fg * inv2h;
    }

    // adjoint w.r.t. the weighted metric: R = W^-1 A^T W
    op.raising = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(n - 1, i + 1); ++j)
            op.raising(i, j) = op.lowering(j, i) * op.weights[j] / op.weights[i];

    // band product of two tridiagonal matrices -> pentadiagonal
    op.hamiltonian_sq = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j) {
            double acc = 0.0;
            for (int l = std::max({0, i - 1, j - 1}); l <= std::min({n - 1, i + 1, j + 1}); ++l)
                acc += op.raising(i, l) * op.lowering(l, j);
            op.hamiltonian_sq(i, j) = acc;
        }
    return op;
}

} // namespace

DiscretizedOperator assemble(const OscillatorParams& params, int grid_points, double p_cut) {
    return assemble_impl(params, grid_points, p_cut, 1.0, 0.0);
}

DiscretizedOperator assemble_dressed(const OscillatorParams& params, int grid_points,
                                     double p_cut, double xi, double k) {
    return assemble_impl(params, grid_points, p_cut, xi, k);
}

EigenSolution lowest_eigenvalues(const DiscretizedOperator& op, int want) {
    int n = static_cast<int>(op.points.size());
    if (want < 1 || want > n)
        throw std::invalid_argument("lowest_eigenvalues: k must be in [1, grid size]");

    // Similarity transform to the symmetric band form S = B^T B with
    // B = W^{1/2} A W^{-1/2}; S shares eigenvalues with hamiltonian_sq.
    Eigen::VectorXd sqw = op.weights.array().sqrt();
    const int kd = 2;
    std::vector<double> ab(static_cast<std::size_t>(kd + 1) * n, 0.0);
    auto b_entry = [&](int i, int j) -> double {
        if (std::abs(i - j) > 1) return 0.0;
        return sqw[i] * op.lowering(i, j) / sqw[j];
    };
    for (int j = 0; j < n; ++j)
        for (int i = j; i <= std::min(n - 1, j + kd); ++i) {
            double s = 0.0;
            for (int l = std::max({0, i - 1, j - 1}); l <= std::min({n - 1, i + 1, j + 1}); ++l)
                s += b_entry(l, i) * b_entry(l, j);
            ab[static_cast<std::size_t>(j) * (kd + 1) + (i - j)] = s; // lower, col-major
        }

    std::vector<double> w(n), z(static_cast<std::size_t>(n) * want), q(static_cast<std::size_t>(n) * n);
    std::vector<lapack_int> ifail(n);
    lapack_int found = 0;
    lapack_int info = LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, kd, ab.data(), kd + 1,
                                     q.data(), n, 0.0, 0.0, 1, want, 2.0 * LAPACKE_dlamch('S'),
                                     &found, w.data(), z.data(), n, ifail.data());
    if (info != 0 || found < want) {
        std::ostringstream msg;
        msg << "lowest_eigenvalues: band eigensolver failed (info=" << info
            << ", converged=" << found << " of " << want << ")";
        throw std::runtime_error(msg.str());
    }

    EigenSolution sol;
    sol.values.assign(w.begin(), w.begin() + want);
    sol.vectors.resize(n, want);
    for (int j = 0; j < want; ++j)
        for (int i = 0; i < n; ++i)
            sol.vectors(i, j) = z[static_cast<std::size_t>(j) * n + i] / sqw[i];
    return sol;
}

} // namespace dirosc::oracle
