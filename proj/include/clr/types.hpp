#pragma once

#include <optional>
#include <vector>

#include "clr/common.hpp"

namespace clr {

/// One regression dataset: N rows of p predictors plus a response.
/// `labels` carries generator ground-truth cluster ids (-1 = corrupted row)
/// and is absent for real data.
struct Dataset {
    MatrixXd X;                         // N x p
    VectorXd y;                         // N
    std::optional<VectorXi> labels;     // N, generator-only

    Eigen::Index n() const { return X.rows(); }
    Eigen::Index p() const { return X.cols(); }
    void validate() const;
};

/// Parameters of one randomized CLR problem.
struct ProblemSpec {
    int K = 2;
    int p = 2;
    std::vector<int> cluster_sizes;     // K entries, N_k each
    double dp = 0.0;                    // pairwise dot product of unit directions
    double eta = 0.0;                   // noise scale relative to signal std
    double delta = 0.0;                 // centroid offset distance
    double corrupt_frac = 0.0;          // fraction of rows with randomized y
    std::uint64_t seed = 0;

    int total_n() const;
    void validate() const;
};

/// The generating model behind a synthetic dataset.
struct GroundTruth {
    MatrixXd beta;      // K x (p+1), row k = [beta_k0, beta_k...]
    VectorXd sigma;     // K, noise scale per cluster (0 when eta = 0)
    VectorXi labels;    // N, -1 marks corrupted rows
};

/// A fitted clusterwise linear regression model.
struct CLRModel {
    MatrixXd beta;      // K x (p+1)
    VectorXd sigma;     // K
    MatrixXd weights;   // N x K, row-stochastic
    VectorXd mix;       // K, column means of weights

    int k() const { return static_cast<int>(beta.rows()); }
    Eigen::Index p() const { return beta.cols() - 1; }
    void refresh_mix();
    void validate() const;
};

enum class InitMethod { KMeans, RandomOneHot };

/// Knobs shared by both EM engines.
struct EMConfig {
    int K = 2;
    double zeta = 0.0;              // momentum on the beta update
    int max_loop = 500;
    int conv_window = 7;            // n_c
    double conv_tol = 1e-2;         // T_c
    double collapse_frac = 0.10;    // membership fraction below which a cluster collapsed
    int perturb_count = 10;         // recombination budget of the seeded engine
    double sigma_floor_rel = 1e-6;  // floor on sigma, relative to std(y)
    std::uint64_t seed = 0;
    InitMethod init = InitMethod::KMeans;

    void validate() const;
};

enum class FitEventKind { Revival, Recombination, EarlyTerminate, DegenerateAll };

struct FitEvent {
    int iteration = 0;
    FitEventKind kind = FitEventKind::Revival;
    int cluster = -1;   // revived cluster index where applicable
};

/// Outcome of one engine run.
struct FitResult {
    CLRModel best_model;
    double best_error = 0.0;
    std::vector<double> error_trace;
    int iterations = 0;
    int restarts_used = 0;
    int revival_events = 0;
    double wall_time = 0.0;        // seconds
    bool failed = false;
    std::vector<FitEvent> events;
};

}  // namespace clr
