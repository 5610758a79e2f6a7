#pragma once

#include "clr/types.hpp"

namespace clr {

/// Solve argmin_b sum_n w_n (y_n - Xtil_n b)^2 via a rank-revealing QR of the
/// sqrt(w)-scaled rows. Throws DegenerateCluster when the weighted design
/// loses rank or has fewer than p+1 active rows.
VectorXd weighted_least_squares(const MatrixXd& Xtil, const VectorXd& y, const VectorXd& w_col);

struct SigmaEstimate {
    double value = 0.0;
    bool floored = false;
};

/// Weighted RMS of residuals, floored at sigma_floor.
SigmaEstimate estimate_sigma(const VectorXd& residuals, const VectorXd& w_col, double sigma_floor);

/// w_{n,k} proportional to (1/sigma_k) exp(-z^2/2), row-normalized.
/// Rows whose densities all underflow become uniform 1/K.
MatrixXd reweight(const MatrixXd& residuals, const VectorXd& sigma);

/// Hard one-hot weights from k-means (k-means++ seeding, <= 50 Lloyd sweeps)
/// on the standardized joint (X, y) rows.
MatrixXd kmeans_init(const Dataset& ds, int K, std::uint64_t seed);

/// Hard one-hot weights from a uniform random assignment.
MatrixXd random_one_hot_init(Eigen::Index n, int K, std::uint64_t seed);

/// sum_n sum_k w_{n,k} (y_n - Xtil_n beta_k)^2.
double regression_error(const Dataset& ds, const CLRModel& model);
double regression_error(const MatrixXd& Xtil, const VectorXd& y, const MatrixXd& beta,
                        const MatrixXd& weights);

}  // namespace clr
