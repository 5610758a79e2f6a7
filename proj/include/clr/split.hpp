#pragma once

#include <array>
#include <utility>
#include <vector>

#include "clr/common.hpp"

namespace clr {

/// Tuning of the two supercluster splitting algorithms.
struct SplitParams {
    std::pair<double, double> f_range{5.0, 15.0};  // percentile window for the edge shortlist
    int k_nn = 0;                                  // 0 = projected dimension + 3
    double xi = 3.0;                               // removal threshold in units of spread
    std::vector<std::pair<double, double>> theta_pairs{{45.0, 55.0}, {25.0, 75.0}, {5.0, 95.0}};
    int optimize_steps = 0;                        // optional refinement sweeps
    double theta_pca = 1e-8;
    double gamma_max_factor = 10.0;                // search range, times |alpha0|
    double gamma_tol = 1e-9;                       // relative golden-section tolerance

    void validate() const;
};

enum class SplitMethod { EdgePoint, CenterPoint, FallbackPerturb };

struct SplitProposal {
    VectorXd beta1;
    VectorXd beta2;
    SplitMethod method = SplitMethod::EdgePoint;
};

/// Split a supercluster by fitting k-flats seeded at points far from the
/// beta0 plane. Throws ProposalFailed when no candidate pair can be fit.
std::pair<VectorXd, VectorXd> edge_point_kflat(const MatrixXd& Xs, const VectorXd& ys,
                                               const VectorXd& beta0, const SplitParams& params,
                                               Rng& rng);

/// Split a supercluster by tilting the seed plane along the direction whose
/// spread grows fastest away from the plane intersection.
std::pair<VectorXd, VectorXd> center_point_split(const MatrixXd& Xs, const VectorXd& ys,
                                                 const VectorXd& beta0, const SplitParams& params);

/// Dispatch between the two algorithms with equal probability, falling back
/// to the other on failure and to a perturbed beta0 pair on double failure.
SplitProposal propose_split(const MatrixXd& Xs, const VectorXd& ys, const VectorXd& beta0,
                            const SplitParams& params, Rng& rng);

}  // namespace clr
