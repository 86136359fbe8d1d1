#include "cayley/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace cayley {

LaplacianOperator::LaplacianOperator(GridSpec grid, int d) : grid_(grid), d_(d) {
    if (grid.n < 2) throw std::invalid_argument("LaplacianOperator: need n >= 2 (no interior points)");
    if (d < 1) throw std::invalid_argument("LaplacianOperator: need d >= 1");
    if (!(grid.S > 0.0)) throw std::invalid_argument("LaplacianOperator: need S > 0");
}

void LaplacianOperator::check_shape(const Eigen::MatrixXd& x) const {
    if (x.rows() != rows() || x.cols() != d_)
        throw std::invalid_argument("LaplacianOperator: state shape mismatch");
}

Eigen::MatrixXd LaplacianOperator::apply(const Eigen::MatrixXd& x) const {
    check_shape(x);
    const Eigen::Index m = x.rows();
    const double a = diag();
    const double b = offdiag();
    Eigen::MatrixXd y = a * x;
    if (m > 1) {
        y.topRows(m - 1) += b * x.bottomRows(m - 1);
        y.bottomRows(m - 1) += b * x.topRows(m - 1);
    }
    return y;
}

Eigen::MatrixXd LaplacianOperator::solve_shifted(double alpha, const Eigen::MatrixXd& b) const {
    check_shape(b);
    if (alpha < 0.0) throw std::invalid_argument("solve_shifted: alpha must be >= 0");
    if (alpha == 0.0) return b;

    // I - alpha L is tridiagonal with constant diagonal dg and off-diagonal od;
    // dg > 2|od| >= 0, so the elimination below never pivots.
    const Eigen::Index m = b.rows();
    const double dg = 1.0 + 2.0 * alpha / (grid_.ds() * grid_.ds());
    const double od = -alpha / (grid_.ds() * grid_.ds());

    Eigen::VectorXd c(m);  // scaled superdiagonal after elimination
    Eigen::MatrixXd x = b;

    c(0) = od / dg;
    x.row(0) /= dg;
    for (Eigen::Index i = 1; i < m; ++i) {
        const double denom = dg - od * c(i - 1);
        c(i) = od / denom;
        x.row(i) = (x.row(i) - od * x.row(i - 1)) / denom;
    }
    for (Eigen::Index i = m - 2; i >= 0; --i) x.row(i) -= c(i) * x.row(i + 1);
    return x;
}

double LaplacianOperator::quadratic_form(const Eigen::MatrixXd& x) const {
    check_shape(x);
    const Eigen::Index m = x.rows();
    double s = diag() * x.squaredNorm();
    if (m > 1) s += 2.0 * offdiag() * (x.topRows(m - 1).array() * x.bottomRows(m - 1).array()).sum();
    return s;
}

Eigen::MatrixXd LaplacianOperator::dense() const {
    const int m = rows();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        M(i, i) = diag();
        if (i + 1 < m) {
            M(i, i + 1) = offdiag();
            M(i + 1, i) = offdiag();
        }
    }
    return M;
}

LaplacianOperator build_dirichlet_laplacian(GridSpec grid, int d) {
    return LaplacianOperator(grid, d);
}

SpectralBasis::SpectralBasis(GridSpec grid) : grid_(grid) {
    const int m = grid.interior();
    if (m < 1) throw std::invalid_argument("SpectralBasis: need n >= 2");
    const int n = grid.n;
    const double ds = grid.ds();
    mu_.resize(m);
    omega_.resize(m);
    V_.resize(m, m);
    const double scale = std::sqrt(2.0 / n);
    for (int k = 0; k < m; ++k) {
        const double s = std::sin((k + 1) * M_PI / (2.0 * n));
        mu_(k) = -4.0 / (ds * ds) * s * s;
        omega_(k) = std::sqrt(-mu_(k));
        for (int i = 0; i < m; ++i)
            V_(i, k) = scale * std::sin((i + 1.0) * (k + 1.0) * M_PI / n);
    }
}

Eigen::MatrixXd SpectralBasis::forward(const Eigen::MatrixXd& x) const {
    if (x.rows() != modes()) throw std::invalid_argument("SpectralBasis: shape mismatch");
    return V_.transpose() * x;
}

Eigen::MatrixXd SpectralBasis::inverse(const Eigen::MatrixXd& X) const {
    if (X.rows() != modes()) throw std::invalid_argument("SpectralBasis: shape mismatch");
    return V_ * X;
}

Eigen::MatrixXd dst_transform(const Eigen::MatrixXd& vec, const SpectralBasis& basis,
                              TransformDirection direction) {
    return direction == TransformDirection::forward ? basis.forward(vec) : basis.inverse(vec);
}

PhaseState cayley_block_apply(const LaplacianOperator& L, double dt, const PhaseState& state) {
    if (dt == 0.0) return state;
    const double a = dt * dt / 4.0;
    const Eigen::MatrixXd Lu = L.apply(state.u);
    const Eigen::MatrixXd Lp = L.apply(state.p);
    PhaseState out;
    out.u = L.solve_shifted(a, state.u + a * Lu + dt * state.p);
    out.p = L.solve_shifted(a, state.p + a * Lp + dt * Lu);
    return out;
}

Eigen::MatrixXd dense_cayley(const Eigen::MatrixXd& X) {
    if (X.rows() != X.cols()) throw std::invalid_argument("dense_cayley: matrix must be square");
    const Eigen::Index m = X.rows();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(I - 0.5 * X);
    if (!lu.isInvertible()) throw std::invalid_argument("dense_cayley: I - X/2 is singular");
    return lu.solve(I + 0.5 * X);
}

double cayley_series_remainder(double normA, int M) {
    if (normA < 0.0 || normA >= 2.0)
        throw std::invalid_argument("cayley_series_remainder: need 0 <= ||A|| < 2");
    if (M < 1) throw std::invalid_argument("cayley_series_remainder: need M >= 1");
    return std::pow(normA, M + 1) * std::exp2(1.0 - M) / (2.0 - normA);
}

} // namespace cayley
