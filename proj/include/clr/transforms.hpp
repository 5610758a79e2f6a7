#pragma once

#include <utility>
#include <vector>

#include "clr/common.hpp"

namespace clr {

/// State of the whitening + principal-component projection, kept around to
/// map regression vectors back to the original coordinates.
struct TransformContext {
    VectorXd mu_Z;        // p+1 column means of Z = [X, y]
    VectorXd scale;       // p+1 column stds (zero-variance columns -> 1)
    MatrixXd V;           // (p+1) x (D-1) retained eigenvectors
    double theta_pca = 1e-8;
    int D = 0;            // retained dimension + 1
    bool constant_column = false;  // some scale entry was replaced by 1
};

struct ForwardTransform {
    MatrixXd P;        // M x (D-1) projected points
    VectorXd alpha0;   // D-vector [0, alpha0...]: the seed plane in projected space
    TransformContext ctx;
};

/// Center, whiten, and project the joint points Z = [Xs, ys] onto the
/// principal components with eigenvalue ratio >= theta_pca; maps the seed
/// regression vector beta0 into the projected space.
ForwardTransform forward_transform(const MatrixXd& Xs, const VectorXd& ys, const VectorXd& beta0,
                                   double theta_pca = 1e-8);

/// Map plane vectors alpha = [alpha_0, alpha...] in projected space back to
/// regression vectors beta = [beta_0, beta...]. Throws std::domain_error when
/// a plane's response coefficient vanishes (not expressible as y = Xtil beta).
std::vector<VectorXd> inverse_transform(const std::vector<VectorXd>& alphas,
                                        const TransformContext& ctx);

struct KFlatFit {
    VectorXd alpha;   // d+1: [offset, unit normal]
    double spread;    // std of signed distances
};

/// Fit the best hyperplane through m >= d+1 points: normal = least
/// eigenvector of the centered covariance, plane through the centroid.
KFlatFit kflat_fit(const MatrixXd& points);

/// Signed distances [1, P] * alpha for a plane in [offset, normal] form.
VectorXd plane_distances(const MatrixXd& P, const VectorXd& alpha);

}  // namespace clr
