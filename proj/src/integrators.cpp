#include "cayley/integrators.hpp"

#include <cmath>
#include <stdexcept>

namespace cayley {

PhaseState flow_A(const PhaseState& state, double t, const LaplacianOperator& L,
                  FlowAMethod method, const SpectralBasis* basis) {
    if (t == 0.0) return state;
    if (method == FlowAMethod::cayley) return cayley_block_apply(L, t, state);
    if (basis == nullptr) throw std::invalid_argument("flow_A: exact method needs a SpectralBasis");

    Eigen::MatrixXd U = basis->forward(state.u);
    Eigen::MatrixXd P = basis->forward(state.p);
    for (int k = 0; k < basis->modes(); ++k) {
        const double w = basis->omega(k);
        double c, sw;  // cos(w t), sin(w t)/w
        if (w < 1e-12) {
            c = 1.0;
            sw = t;
        } else {
            c = std::cos(w * t);
            sw = std::sin(w * t) / w;
        }
        const auto Uk = U.row(k).eval();
        const auto Pk = P.row(k).eval();
        U.row(k) = c * Uk + sw * Pk;
        P.row(k) = -w * w * sw * Uk + c * Pk;
    }
    return {basis->inverse(U), basis->inverse(P)};
}

PhaseState kick_B(const PhaseState& state, double h, const ForceField& force) {
    if (h == 0.0 || !force.force) return state;
    return {state.u, state.p + h * force.force(state.u)};
}

PhaseState ou_flow(const PhaseState& state, double h, double gamma, double beta, double ds,
                   RngStream& rng) {
    if (gamma < 0.0 || h < 0.0) throw std::invalid_argument("ou_flow: need gamma >= 0 and h >= 0");
    if (gamma == 0.0 || h == 0.0) return state;
    const double decay = std::exp(-gamma * h);
    const double scale = std::sqrt(1.0 / (beta * ds)) * std::sqrt(1.0 - decay * decay);
    PhaseState out;
    out.u = state.u;
    out.p = decay * state.p + scale * rng.normal_matrix(state.p.rows(), state.p.cols());
    return out;
}

namespace {

PhaseState hamiltonian_step(const SchemeConfig& config, const ForceField& force,
                            const PhaseState& state, FlowAMethod method,
                            const SpectralBasis* basis) {
    PhaseState s = kick_B(state, 0.5 * config.dt, force);
    s = flow_A(s, config.dt, force.op, method, basis);
    return kick_B(s, 0.5 * config.dt, force);
}

PhaseState verlet_step(const SchemeConfig& config, const ForceField& force,
                       const PhaseState& state) {
    const double h = config.dt;
    PhaseState s = state;
    s.p += 0.5 * h * (force.op.apply(s.u) + force.eval(s.u));
    s.u += h * s.p;
    s.p += 0.5 * h * (force.op.apply(s.u) + force.eval(s.u));
    return s;
}

} // namespace

PhaseState step(const SchemeConfig& config, const ForceField& force, const PhaseState& state,
                RngStream& rng, const SpectralBasis* basis) {
    if (!(config.dt > 0.0)) throw std::invalid_argument("step: need dt > 0");
    const double ds = force.op.grid().ds();
    switch (config.kind) {
        case SchemeKind::CayleyHam:
            return hamiltonian_step(config, force, state, FlowAMethod::cayley, basis);
        case SchemeKind::ExactHam:
            return hamiltonian_step(config, force, state, FlowAMethod::exact, basis);
        case SchemeKind::CayleyLangevin:
        case SchemeKind::ExactLangevin: {
            const FlowAMethod method = config.kind == SchemeKind::CayleyLangevin
                                           ? FlowAMethod::cayley
                                           : FlowAMethod::exact;
            PhaseState s = ou_flow(state, 0.5 * config.dt, config.gamma, config.beta, ds, rng);
            s = hamiltonian_step(config, force, s, method, basis);
            return ou_flow(s, 0.5 * config.dt, config.gamma, config.beta, ds, rng);
        }
        case SchemeKind::Verlet:
            return verlet_step(config, force, state);
    }
    throw std::logic_error("step: unknown scheme kind");
}

std::vector<RespaScanRow> respa_energy_scan(double omega, const std::vector<double>& dt_list,
                                            int periods) {
    if (!(omega > 0.0)) throw std::invalid_argument("respa_energy_scan: need omega > 0");
    const double duration = periods * 2.0 * M_PI / omega;
    std::vector<RespaScanRow> table;
    table.reserve(dt_list.size());
    for (double dt : dt_list) {
        const Mat2 E = splitting_matrix_1d(omega, dt, SplittingKind::exact);
        const Mat2 C = splitting_matrix_1d(omega, dt, SplittingKind::cayley);
        const long steps = std::max<long>(1, static_cast<long>(duration / dt));
        const double h0 = 0.5 * (1.0 + omega * omega);  // H at (q,p) = (1,0)
        Vec2 ze(1.0, 0.0), zc(1.0, 0.0);
        double worst_e = 0.0, worst_c = 0.0;
        for (long k = 0; k < steps; ++k) {
            ze = E * ze;
            zc = C * zc;
            const double he = 0.5 * (ze(1) * ze(1) + (1.0 + omega * omega) * ze(0) * ze(0));
            const double hc = 0.5 * (zc(1) * zc(1) + (1.0 + omega * omega) * zc(0) * zc(0));
            worst_e = std::max(worst_e, std::abs(he - h0) / h0);
            worst_c = std::max(worst_c, std::abs(hc - h0) / h0);
        }
        table.push_back({dt, dt * omega, worst_e, worst_c});
    }
    return table;
}

} // namespace cayley
