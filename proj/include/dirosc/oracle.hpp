#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dirosc/params.hpp"

namespace dirosc::oracle {

// Finite-difference discretization of the factorized oscillator on the
// interior of a uniform momentum grid over [-p_cut, p_cut], with psi = 0
// at both ends.  The raising matrix is the adjoint of the lowering
// matrix with respect to the diagonal metric W (quadrature weights of
// the measure 1/f), so hamiltonian_sq = raising * lowering represents
// E^2 - m^2 and is positive semidefinite under that metric.
struct DiscretizedOperator {
    std::vector<double> points;   // interior nodes
    Eigen::VectorXd weights;      // diagonal of W: h / f(p_i)
    Eigen::MatrixXd lowering;     // b^- = xi p + k + m w f_gamma(p) d/dp
    Eigen::MatrixXd raising;      // W^-1 lowering^T W
    Eigen::MatrixXd hamiltonian_sq;
    double spacing = 0.0;
    double p_cut = 0.0;
};

// Undressed operator (xi = 1, k = 0), the branch-1 factorization.
// grid_points counts the full grid including the two boundary nodes and
// must be odd and >= 51.
DiscretizedOperator assemble(const OscillatorParams& params, int grid_points, double p_cut);

// Dressed operator b^-(xi, k) for arbitrary hierarchy coefficients
// (branch-2 seed ground-state checks).
DiscretizedOperator assemble_dressed(const OscillatorParams& params, int grid_points,
                                     double p_cut, double xi, double k);

struct EigenSolution {
    std::vector<double> values;   // ascending, energy-squared units
    Eigen::MatrixXd vectors;      // columns, in the original (unweighted) basis
};

// k smallest eigenpairs of hamiltonian_sq via the symmetric band form
// W^{1/2} H W^{-1/2}.  Throws std::runtime_error on solver failure.
EigenSolution lowest_eigenvalues(const DiscretizedOperator& op, int k);

} // namespace dirosc::oracle
