#pragma once

#include <utility>

#include "clr/types.hpp"

namespace clr {

/// Draw one randomized CLR problem. Unit regression directions have pairwise
/// dot product exactly spec.dp; sigma_k = eta * std of the noiseless
/// cluster signal; columns of X are independent standard normal shifted by
/// the cluster centroid (delta away from the origin).
std::pair<Dataset, GroundTruth> generate_problem(const ProblemSpec& spec);

/// Replace floor(frac*N) uniformly chosen responses by draws from a normal
/// fit of the uncorrupted y marginal; corrupted rows get label -1.
std::pair<Dataset, GroundTruth> corrupt_rows(Dataset ds, GroundTruth gt, double frac,
                                             std::uint64_t seed);

}  // namespace clr
