#pragma once

#include <Eigen/Dense>

namespace cayley {

// Uniform grid on [0,S] with n subintervals and homogeneous Dirichlet
// endpoints.  Unknowns live on the n-1 interior points s_i = i*ds.
struct GridSpec {
    double S = 1.0;
    int n = 2;

    double ds() const { return S / n; }
    int interior() const { return n - 1; }
    double point(int i) const { return i * ds(); }
};

// Position/momentum pair on the interior grid, one column per component.
struct PhaseState {
    Eigen::MatrixXd u;
    Eigen::MatrixXd p;
};

// Symmetric tridiagonal discrete Laplacian with Dirichlet boundary
// conditions: diagonal -2/ds^2, off-diagonal 1/ds^2.  Acts independently on
// each of the d columns of a state array.  All member functions are pure.
class LaplacianOperator {
public:
    LaplacianOperator(GridSpec grid, int d);

    const GridSpec& grid() const { return grid_; }
    int components() const { return d_; }
    int rows() const { return grid_.interior(); }

    double diag() const { return -2.0 / (grid_.ds() * grid_.ds()); }
    double offdiag() const { return 1.0 / (grid_.ds() * grid_.ds()); }

    // L x
    Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;

    // (I - alpha L)^{-1} b via the Thomas algorithm, alpha >= 0
    Eigen::MatrixXd solve_shifted(double alpha, const Eigen::MatrixXd& b) const;

    // sum over columns of x_j^T L x_j
    double quadratic_form(const Eigen::MatrixXd& x) const;

    // dense (n-1)x(n-1) single-component matrix, for small-instance checks
    Eigen::MatrixXd dense() const;

private:
    void check_shape(const Eigen::MatrixXd& x) const;

    GridSpec grid_;
    int d_;
};

LaplacianOperator build_dirichlet_laplacian(GridSpec grid, int d);

// Eigenpairs of the Dirichlet Laplacian: mu_k = -(4/ds^2) sin^2(k pi / 2n),
// omega_k = sqrt(-mu_k), and the orthonormal discrete sine vectors
// V(i,k) = sqrt(2/n) sin((i+1)(k+1) pi / n).  Transforms use the dense V
// product; no FFT at desk scale.
class SpectralBasis {
public:
    explicit SpectralBasis(GridSpec grid);

    const GridSpec& grid() const { return grid_; }
    int modes() const { return grid_.interior(); }

    // mode index k is 0-based here (mode k+1 in the usual 1-based counting)
    double eigenvalue(int k) const { return mu_(k); }
    double omega(int k) const { return omega_(k); }
    const Eigen::VectorXd& omegas() const { return omega_; }
    const Eigen::MatrixXd& mode_matrix() const { return V_; }

    Eigen::MatrixXd forward(const Eigen::MatrixXd& x) const;  // V^T x
    Eigen::MatrixXd inverse(const Eigen::MatrixXd& X) const;  // V X

private:
    GridSpec grid_;
    Eigen::VectorXd mu_;
    Eigen::VectorXd omega_;
    Eigen::MatrixXd V_;
};

enum class TransformDirection { forward, inverse };

Eigen::MatrixXd dst_transform(const Eigen::MatrixXd& vec, const SpectralBasis& basis,
                              TransformDirection direction);

// Image of the state under cay(dt A), A = [[0, I], [L, 0]], computed with two
// shifted tridiagonal solves at alpha = dt^2/4.  dt = 0 is the identity.
PhaseState cayley_block_apply(const LaplacianOperator& L, double dt, const PhaseState& state);

// (I - X/2)^{-1} (I + X/2) for a dense square matrix; small-instance oracle.
Eigen::MatrixXd dense_cayley(const Eigen::MatrixXd& X);

// Tail bound ||A||^{M+1} 2^{1-M} / (2 - ||A||) of the Cayley power series,
// valid for ||A|| < 2.
double cayley_series_remainder(double normA, int M);

} // namespace cayley
