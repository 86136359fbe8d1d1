#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cayley {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

// One-step map of a splitting applied to H(q,p) = p^2/2 + (1+omega^2) q^2/2,
// split into the fast oscillator part (frequency omega) and the unit kick.
enum class SplittingKind { cayley, exact };

struct OscillatorParams {
    double omega;
    double dt;
    double gamma = 0.0;
    double beta = 1.0;
};

// Rotation angle per step and ellipse aspect of the Cayley one-step map:
// theta = 2 arctan(dt sqrt(1+omega^2) / sqrt(4-dt^2)),
// chi   = 2 / (sqrt(4-dt^2) sqrt(1+omega^2)).
struct ThetaChi {
    double theta;
    double chi;
};

Mat2 splitting_matrix_1d(double omega, double dt, SplittingKind kind);

ThetaChi theta_chi(double omega, double dt);  // requires 0 < dt < 2

// (chi / (2 dt)) theta (p^2 + q^2 / chi^2); exactly conserved by the Cayley map.
double modified_hamiltonian_1d(double q, double p, double omega, double dt);

// Closed-form moments of the energy error Delta = H(q^m,p^m) - H(q,p) over
// initial conditions with density proportional to exp(-beta H).
struct EnergyErrorMoments {
    double mean;
    double variance;
    double fourth_central;
};

EnergyErrorMoments energy_error_moments(double omega, double dt, double beta, long m);

struct GaussianLaw2 {
    Vec2 mean;
    Mat2 cov;
};

// exp(t K) with K = [[0,1],[-omega^2-1,-gamma]], via the closed trig form
// with a series branch at critical damping.
Mat2 langevin_phi_matrix(double t, double omega, double gamma);

// 2 gamma / beta * int_0^T Phi(s) e2 e2^T Phi(s)^T ds by panel-doubling
// Gauss-Legendre quadrature; `panels` pins the panel count (0 = adaptive).
Mat2 langevin_cov_integral(double T, double omega, double gamma, double beta,
                           double rel_tol = 1e-10, int panels = 0);

// Law of the exact 1D Langevin solution at time T from (q,p).
GaussianLaw2 langevin_exact_law_1d(double q, double p, double T, double omega, double gamma,
                                   double beta);

// One-step drift matrix O C O of the Cayley splitting for the 1D Langevin
// equation, O = diag(1, exp(-gamma dt / 2)), and its one-step noise
// covariance Q.
Mat2 oco_matrix(double omega, double gamma, double dt);
Mat2 oco_noise_cov(double omega, double gamma, double beta, double dt);

// Law after m steps per the splitting recursion: mean = (OCO)^m (q,p),
// cov = sum_{k=0}^{m} (OCO)^k Q ((OCO)^T)^k.
GaussianLaw2 oco_law_1d(double q, double p, long m, double omega, double gamma, double beta,
                        double dt);

// 1 - cos^2(theta) cosh^2(gamma dt / 2); OCO is asymptotically stable iff > 0.
double g_stability(double dt, double omega, double gamma);

// Krein sufficient condition for a 2x2 symplectic matrix: simple spectrum on
// the unit circle, equivalently |trace| < 2.
struct StrongStabilityReport {
    bool strongly_stable;
    std::complex<double> eigenvalues[2];
};

StrongStabilityReport strong_stability_check(const Mat2& M);

} // namespace cayley
