#pragma once

#include <vector>

#include "clr/types.hpp"

namespace clr {

enum class PredictionMode { Coerced, Weighted };

/// Per-cluster Gaussian fit of the predictors, weighted by the model's
/// membership weights. Drives X-only membership probabilities for new rows.
struct ClusterDensityModel {
    std::vector<VectorXd> mean;      // K vectors of length p
    std::vector<MatrixXd> cov;       // K p x p matrices (ridge-regularized)
    std::vector<MatrixXd> cov_llt;   // cached Cholesky factors (lower)
    std::vector<double> log_det;     // log|cov|
    VectorXd mix;                    // K
    std::vector<bool> dropped;       // true when the cluster had negligible weight

    int k() const { return static_cast<int>(mean.size()); }
    Eigen::Index p() const { return mean.empty() ? 0 : mean.front().size(); }
    /// log N(x; mean_k, cov_k); -inf for dropped clusters.
    double log_density(int k, const VectorXd& x) const;
};

struct Prediction {
    VectorXd per_cluster_yhat;  // K
    VectorXd probs;             // K, sums to 1
    double xp = 0.0;
    double coerced = 0.0;       // yhat of the most probable cluster
    double weighted = 0.0;      // probability-weighted average
    bool flagged = false;       // all densities underflowed; probs are uniform
};

ClusterDensityModel fit_density(const Dataset& ds, const CLRModel& model);

Prediction predict(const VectorXd& x, const CLRModel& model, const ClusterDensityModel& density);

}  // namespace clr
