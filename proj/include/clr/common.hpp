#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace clr {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Eigen::VectorXi;

using Rng = std::mt19937_64;

/// Thrown when a weighted design matrix loses rank; callers treat it as a
/// cluster collapse.
struct DegenerateCluster : std::runtime_error {
    explicit DegenerateCluster(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the split algorithms when no usable pair of regression vectors
/// can be produced from the given points.
struct ProposalFailed : std::runtime_error {
    explicit ProposalFailed(const std::string& what) : std::runtime_error(what) {}
};

/// Prepend the intercept column: [1, X].
inline MatrixXd augment(const MatrixXd& X) {
    MatrixXd Xt(X.rows(), X.cols() + 1);
    Xt.col(0).setOnes();
    Xt.rightCols(X.cols()) = X;
    return Xt;
}

/// Sample standard deviation (n-1 denominator; 0 for fewer than 2 values).
inline double sample_std(const VectorXd& v) {
    const auto n = v.size();
    if (n < 2) return 0.0;
    const double mu = v.mean();
    return std::sqrt((v.array() - mu).square().sum() / double(n - 1));
}

/// SplitMix64 step; used to derive independent per-problem seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Combine a base seed with stream indices into one well-mixed seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base ^ 0x510e527fade682d1ULL);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ (b + 0x9b05688c2b3e6c1fULL));
    s = splitmix64(s ^ (c + 0x1f83d9abfb41bd6bULL));
    return s;
}

/// Random unit vector of dimension d.
inline VectorXd random_unit_vector(int d, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd v(d);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < d; ++i) v[i] = gauss(rng);
        norm2 = v.squaredNorm();
    } while (norm2 < 1e-24);
    return v / std::sqrt(norm2);
}

/// Value of the q-th percentile (q in [0,100]) with linear interpolation.
double percentile(VectorXd values, double q);

}  // namespace clr
