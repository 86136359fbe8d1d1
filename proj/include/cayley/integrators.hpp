#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cayley/grid.hpp"
#include "cayley/oscillator.hpp"
#include "cayley/rng.hpp"

namespace cayley {

class RngStream;

enum class SchemeKind { CayleyHam, ExactHam, CayleyLangevin, ExactLangevin, Verlet };

struct SchemeConfig {
    SchemeKind kind = SchemeKind::CayleyHam;
    double dt = 0.1;
    double gamma = 0.0;  // used by Langevin kinds
    double beta = 1.0;   // used by Langevin kinds
};

// Nonlinear force F(u) with optional potential for energy reporting; the
// linear L u part is handled by the flow maps, not by F.
struct ForceField {
    LaplacianOperator op;
    std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)> force;  // null means F == 0
    std::function<double(const Eigen::MatrixXd&)> potential;       // optional

    Eigen::MatrixXd eval(const Eigen::MatrixXd& u) const {
        return force ? force(u) : Eigen::MatrixXd::Zero(u.rows(), u.cols());
    }
};

enum class FlowAMethod { exact, cayley };

// Flow of the linear part du = p, dp = L u over time t.  The exact method
// rotates each spectral mode with frequency omega_k; the Cayley method
// applies the rational block map.
PhaseState flow_A(const PhaseState& state, double t, const LaplacianOperator& L,
                  FlowAMethod method, const SpectralBasis* basis = nullptr);

// (u, p) -> (u, p + h F(u))
PhaseState kick_B(const PhaseState& state, double h, const ForceField& force);

// Ornstein-Uhlenbeck flow in momentum: p -> exp(-gamma h) p +
// sqrt(1/(beta ds)) sqrt(1 - exp(-2 gamma h)) xi.  gamma = 0 or h = 0 is the
// identity and consumes no variates.
PhaseState ou_flow(const PhaseState& state, double h, double gamma, double beta, double ds,
                   RngStream& rng);

// One step of the selected scheme.  Langevin kinds wrap the Hamiltonian step
// in OU half-steps (noise drawn as step-1 vector then step-3 vector); Verlet
// is kick-drift-kick with the full force L u + F(u).  Exact kinds need a
// spectral basis.
PhaseState step(const SchemeConfig& config, const ForceField& force, const PhaseState& state,
                RngStream& rng, const SpectralBasis* basis = nullptr);

// Energy-error scan for the split oscillator H = p^2/2 + q^2/2 + omega^2 q^2/2
// with the fast part integrated exactly or by the Cayley map and the slow
// q^2/2 part by kicks.  Reports the max relative energy error from (1,0) over
// the given number of oscillator periods.
struct RespaScanRow {
    double dt;
    double dt_omega;
    double rel_err_exact;
    double rel_err_cayley;
};

std::vector<RespaScanRow> respa_energy_scan(double omega, const std::vector<double>& dt_list,
                                            int periods);

} // namespace cayley
