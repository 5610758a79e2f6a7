#pragma once

#include <vector>

#include "clr/predict.hpp"
#include "clr/types.hpp"

namespace clr {

/// Empirical resolvability index, averaged over the observed rows and
/// clamped to [0,1]. 0 = indistinguishable clusters, 1 = fully separable.
double resolvability(const MatrixXd& X, const MatrixXd& beta, const VectorXd& sigma);

struct ResolvabilityReport {
    double R_global = 0.0;
    VectorXd R_pairwise;                           // C(K,2), sorted descending
    double Z_norm = 0.0;                           // normalization constant of the global model
    std::vector<std::pair<int, int>> per_pair_labels;  // cluster pairs, same order as R_pairwise
};

/// Resolvability of every cluster pair, sorted descending.
ResolvabilityReport pairwise_resolvability(const MatrixXd& X, const MatrixXd& beta,
                                           const VectorXd& sigma);

/// Normalized-entropy predictability of a membership probability vector:
/// 1 + sum p_k log p_k / log K. One-hot -> 1, uniform -> 0.
double xp_score(const VectorXd& p_vec);

enum class AccDenominator { PerCluster, Global };

/// Permutation-matched relative accuracy of recovered regression vectors,
/// (1/K) sum_k max(0, 1 - |bhat_k - b_k| / |b_k|).
double acc(const MatrixXd& beta_hat, const MatrixXd& beta_true,
           AccDenominator denom = AccDenominator::PerCluster);

/// RMSE of the density-based scalar prediction over the dataset rows.
double rmse(const Dataset& ds, const CLRModel& model, PredictionMode mode);
double rmse(const Dataset& ds, const CLRModel& model, const ClusterDensityModel& density,
            PredictionMode mode);

enum class AppendixCase { II, III, IV };

struct AppendixParams {
    // case IV: sigma ratio r = sigma_2/sigma_1 (beta_1 = beta_2, K = 2)
    double sigma_ratio = 1.0;
    // case III: equal sigma, distinct betas; Q averaged over the given rows
    double sigma = 1.0;
    MatrixXd beta;   // K x (p+1)
    MatrixXd X;      // sample of the predictor domain
};

/// Closed-form (case IV) or sample-averaged (case III) overlap Q used as an
/// independent reference for resolvability(). Case II returns 0.
double appendix_a_oracle(AppendixCase which, const AppendixParams& params);

}  // namespace clr
