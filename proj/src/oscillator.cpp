#include "cayley/oscillator.hpp"

#include <cmath>
#include <stdexcept>

namespace cayley {

namespace {

Mat2 half_kick(double dt) {
    Mat2 K;
    K << 1.0, 0.0, -0.5 * dt, 1.0;
    return K;
}

void require_dt_open(double dt) {
    if (!(dt > 0.0 && dt < 2.0)) throw std::invalid_argument("need 0 < dt < 2");
}

} // namespace

Mat2 splitting_matrix_1d(double omega, double dt, SplittingKind kind) {
    if (!(omega > 0.0)) throw std::invalid_argument("splitting_matrix_1d: need omega > 0");
    if (!(dt > 0.0)) throw std::invalid_argument("splitting_matrix_1d: need dt > 0");
    if (kind == SplittingKind::cayley) {
        const double denom = 4.0 + dt * dt * omega * omega;
        Mat2 C;
        C(0, 0) = -1.0 + (8.0 - 2.0 * dt * dt) / denom;
        C(0, 1) = 4.0 * dt / denom;
        C(1, 0) = dt * (dt * dt - 4.0) * (1.0 + omega * omega) / denom;
        C(1, 1) = C(0, 0);
        return C;
    }
    Mat2 R;
    const double c = std::cos(dt * omega);
    const double s = std::sin(dt * omega);
    R << c, s / omega, -omega * s, c;
    const Mat2 K = half_kick(dt);
    return K * R * K;
}

ThetaChi theta_chi(double omega, double dt) {
    require_dt_open(dt);
    const double root = std::sqrt(4.0 - dt * dt);
    const double freq = std::sqrt(1.0 + omega * omega);
    return {2.0 * std::atan(dt * freq / root), 2.0 / (root * freq)};
}

double modified_hamiltonian_1d(double q, double p, double omega, double dt) {
    const auto [theta, chi] = theta_chi(omega, dt);
    return chi / (2.0 * dt) * theta * (p * p + q * q / (chi * chi));
}

EnergyErrorMoments energy_error_moments(double omega, double dt, double beta, long m) {
    require_dt_open(dt);
    if (m < 0) throw std::invalid_argument("energy_error_moments: need m >= 0");
    const double theta = theta_chi(omega, dt).theta;
    const double s = std::sin(m * theta);
    const double s2 = s * s;
    const double dt2 = dt * dt;
    const double gap = 4.0 - dt2;
    const double c2m = std::cos(2.0 * m * theta);

    EnergyErrorMoments out;
    out.mean = s2 / (8.0 * beta) * dt2 * dt2 / gap;
    out.variance = s2 / (64.0 * beta * beta) * dt2 * dt2 / (gap * gap) *
                   ((8.0 - dt2) * (8.0 - dt2) - dt2 * dt2 * c2m);
    const double dt4 = dt2 * dt2;
    const double dt6 = dt4 * dt2;
    const double dt8 = dt4 * dt4;
    const double gap4 = gap * gap * gap * gap;
    const double poly = 24576.0 - 12288.0 * dt2 + 2816.0 * dt4 - 320.0 * dt6 + 15.0 * dt8 -
                        20.0 * (8.0 - dt2) * (8.0 - dt2) * dt4 * c2m +
                        5.0 * dt8 * std::cos(4.0 * m * theta);
    out.fourth_central = 3.0 * dt8 * s2 * s2 / (8192.0 * gap4 * std::pow(beta, 4)) * poly;
    return out;
}

Mat2 langevin_phi_matrix(double t, double omega, double gamma) {
    // K = [[0,1],[-w0^2,-gamma]], w0^2 = 1 + omega^2.  exp(tK) =
    // e^{-gamma t/2} [[cos(nu t) + (gamma/2) sinc, sinc],
    //                 [-w0^2 sinc, cos(nu t) - (gamma/2) sinc]]
    // with nu^2 = w0^2 - gamma^2/4 and sinc = sin(nu t)/nu (hyperbolic when
    // nu^2 < 0, polynomial branch near critical damping).
    const double w02 = 1.0 + omega * omega;
    const double disc = w02 - gamma * gamma / 4.0;
    double c, sc;  // cos(nu t), sin(nu t)/nu in the appropriate branch
    if (std::abs(disc) < 1e-10) {
        c = 1.0 - 0.5 * disc * t * t;  // second-order series keeps the branch smooth
        sc = t * (1.0 - disc * t * t / 6.0);
    } else if (disc > 0.0) {
        const double nu = std::sqrt(disc);
        c = std::cos(nu * t);
        sc = std::sin(nu * t) / nu;
    } else {
        const double nu = std::sqrt(-disc);
        c = std::cosh(nu * t);
        sc = std::sinh(nu * t) / nu;
    }
    Mat2 M;
    M(0, 0) = c + 0.5 * gamma * sc;
    M(0, 1) = sc;
    M(1, 0) = -w02 * sc;
    M(1, 1) = c - 0.5 * gamma * sc;
    return std::exp(-0.5 * gamma * t) * M;
}

namespace {

// 10-point Gauss-Legendre nodes/weights on [-1,1]
constexpr double kGLNode[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                               0.8650633666889845, 0.9739065285171717};
constexpr double kGLWeight[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                 0.1494513491505806, 0.0666713443086881};

Mat2 cov_integrand(double s, double omega, double gamma) {
    const Mat2 Phi = langevin_phi_matrix(s, omega, gamma);
    const Vec2 col = Phi.col(1);  // Phi e2
    return col * col.transpose();
}

Mat2 cov_panels(double T, double omega, double gamma, int panels) {
    Mat2 acc = Mat2::Zero();
    const double h = T / panels;
    for (int k = 0; k < panels; ++k) {
        const double mid = (k + 0.5) * h;
        for (int j = 0; j < 5; ++j) {
            acc += kGLWeight[j] * cov_integrand(mid + 0.5 * h * kGLNode[j], omega, gamma);
            acc += kGLWeight[j] * cov_integrand(mid - 0.5 * h * kGLNode[j], omega, gamma);
        }
    }
    return 0.5 * h * acc;
}

} // namespace

Mat2 langevin_cov_integral(double T, double omega, double gamma, double beta, double rel_tol,
                           int panels) {
    if (T < 0.0) throw std::invalid_argument("langevin_cov_integral: need T >= 0");
    const double scale = 2.0 * gamma / beta;
    if (T == 0.0 || gamma == 0.0) return Mat2::Zero();
    if (panels > 0) return scale * cov_panels(T, omega, gamma, panels);

    // resolve the oscillation; then double panels until the quadrature settles
    const double w0 = std::sqrt(1.0 + omega * omega);
    int np = std::max(4, static_cast<int>(std::ceil(T * w0 / 2.0)));
    Mat2 prev = cov_panels(T, omega, gamma, np);
    for (int iter = 0; iter < 24; ++iter) {
        np *= 2;
        const Mat2 next = cov_panels(T, omega, gamma, np);
        if ((next - prev).norm() <= rel_tol * next.norm() + 1e-300) return scale * next;
        prev = next;
    }
    return scale * prev;
}

GaussianLaw2 langevin_exact_law_1d(double q, double p, double T, double omega, double gamma,
                                   double beta) {
    if (T < 0.0) throw std::invalid_argument("langevin_exact_law_1d: need T >= 0");
    if (gamma < 0.0) throw std::invalid_argument("langevin_exact_law_1d: need gamma >= 0");
    GaussianLaw2 law;
    law.mean = langevin_phi_matrix(T, omega, gamma) * Vec2(q, p);
    law.cov = langevin_cov_integral(T, omega, gamma, beta);
    return law;
}

Mat2 oco_matrix(double omega, double gamma, double dt) {
    const Mat2 C = splitting_matrix_1d(omega, dt, SplittingKind::cayley);
    Mat2 O = Mat2::Identity();
    O(1, 1) = std::exp(-0.5 * gamma * dt);
    return O * C * O;
}

Mat2 oco_noise_cov(double omega, double gamma, double beta, double dt) {
    const Mat2 C = splitting_matrix_1d(omega, dt, SplittingKind::cayley);
    Mat2 O = Mat2::Identity();
    O(1, 1) = std::exp(-0.5 * gamma * dt);
    Mat2 E22 = Mat2::Zero();
    E22(1, 1) = 1.0;
    const double fade = 1.0 - std::exp(-gamma * dt);
    return fade / beta * (O * C * E22 * C.transpose() * O + E22);
}

GaussianLaw2 oco_law_1d(double q, double p, long m, double omega, double gamma, double beta,
                        double dt) {
    if (m < 0) throw std::invalid_argument("oco_law_1d: need m >= 0");
    const Mat2 M = oco_matrix(omega, gamma, dt);
    const Mat2 Q = oco_noise_cov(omega, gamma, beta, dt);
    GaussianLaw2 law;
    Vec2 mean(q, p);
    Mat2 cov = Q;
    for (long k = 0; k < m; ++k) {
        mean = M * mean;
        cov = M * cov * M.transpose() + Q;
    }
    law.mean = mean;
    law.cov = cov;
    return law;
}

double g_stability(double dt, double omega, double gamma) {
    const double theta = theta_chi(omega, dt).theta;
    const double c = std::cos(theta);
    const double ch = std::cosh(0.5 * gamma * dt);
    return 1.0 - c * c * ch * ch;
}

StrongStabilityReport strong_stability_check(const Mat2& M) {
    if (std::abs(M.determinant() - 1.0) >= 1e-8)
        throw std::invalid_argument("strong_stability_check: input is not symplectic (det != 1)");
    const double t = M.trace();
    StrongStabilityReport rep;
    rep.strongly_stable = std::abs(t) < 2.0;
    const double half = 0.5 * t;
    if (rep.strongly_stable) {
        const double im = std::sqrt(1.0 - half * half);
        rep.eigenvalues[0] = {half, im};
        rep.eigenvalues[1] = {half, -im};
    } else {
        const double rad = std::sqrt(std::max(0.0, half * half - 1.0));
        rep.eigenvalues[0] = {half + rad, 0.0};
        rep.eigenvalues[1] = {half - rad, 0.0};
    }
    return rep;
}

} // namespace cayley
