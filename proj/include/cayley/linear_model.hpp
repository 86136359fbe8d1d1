#pragma once

#include <vector>

#include "cayley/grid.hpp"
#include "cayley/integrators.hpp"
#include "cayley/oscillator.hpp"
#include "cayley/rng.hpp"

namespace cayley {

// Linear testbed du = p, dp = L u - u (- gamma p + noise in the Langevin
// case, beta fixed to 1 there).  H(u,p) = ||p||^2/2 - u^T L u / 2 + ||u||^2/2
// decouples over spectral modes into oscillators with frequencies omega_k.
class LinearModel {
public:
    LinearModel(GridSpec grid, double gamma = 0.0);

    const GridSpec& grid() const { return grid_; }
    const LaplacianOperator& op() const { return op_; }
    const SpectralBasis& basis() const { return basis_; }
    double gamma() const { return gamma_; }

    ForceField force_field() const;  // F(u) = -u with potential ||u||^2/2

    double hamiltonian(const PhaseState& state) const;

    // exact mode-k variances of the invariant density exp(-ds H)
    double position_mode_variance(int k) const;
    double momentum_mode_variance() const;

    // exact variance of each position component u_i under exp(-ds H)
    Eigen::VectorXd position_component_variances() const;

private:
    GridSpec grid_;
    LaplacianOperator op_;
    SpectralBasis basis_;
    double gamma_;
};

struct EnergyReport {
    double H;
    Eigen::VectorXd mode_energies;  // (P_k^2 + (1+omega_k^2) U_k^2) / 2
};

struct ModeLaw {
    std::vector<GaussianLaw2> modes;
};

// Draw from the non-normalized density exp(-ds H): per mode
// U_k = eta_k / sqrt(ds (1+omega_k^2)), P_k = xi_k / sqrt(ds).  The eta
// vector is drawn first, then the xi vector.
PhaseState sample_equilibrium(const LinearModel& model, RngStream& rng);

EnergyReport energy_report(const LinearModel& model, const PhaseState& state);

// Law of the exact Langevin solution at time T, mode by mode, with per-mode
// noise temperature 1/ds.
ModeLaw exact_langevin_law(const LinearModel& model, const PhaseState& state0, double T);

// Law of m steps of the Cayley splitting with OU half-steps, mode by mode.
ModeLaw numerical_langevin_law(const LinearModel& model, const PhaseState& state0, long m,
                               double dt);

// E(Delta) = (1/(8 ds)) dt^4/(4-dt^2) sum_i sin^2(m theta_i) over equilibrium
// initial data.
double mean_dh_analytic(const LinearModel& model, double dt, long m);

// True iff g(dt, 2/ds, gamma) > 0; the frequency 2/ds dominates every mode.
bool langevin_stability_ok(double dt, double ds, double gamma);

} // namespace cayley
