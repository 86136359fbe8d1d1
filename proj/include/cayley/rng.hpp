#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace cayley {

// Deterministic variate stream identified by (master seed, stream index).
// The engine seed is derived by splitmix64 mixing of the pair, so distinct
// indices give statistically independent streams and the mapping
// (seed, index) -> sequence is fixed across runs and worker counts.
// Uniform and normal variates are generated from the raw engine output
// (fixed two-uniform Box-Muller), not through std:: distributions, so the
// sequences do not depend on the standard library implementation.
class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::uint64_t stream_index = 0)
        : engine_(derive_seed(master_seed, stream_index)) {}

    // uniform on [0,1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // uniform on (0,1]
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // mean lambda
    double exponential(double lambda_mean) {
        return -lambda_mean * std::log(uniform_pos());
    }

    Eigen::VectorXd normal_vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
        return v;
    }

    // column-major fill order
    Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXd m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal();
        return m;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = seed;
        std::uint64_t a = splitmix64(x);
        x ^= index * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL;
        std::uint64_t b = splitmix64(x);
        return a ^ (b + 0x9e3779b97f4a7c15ULL);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace cayley
