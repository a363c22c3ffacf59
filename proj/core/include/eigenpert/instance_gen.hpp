#pragma once

#include "eigenpert/perturbation.hpp"
#include "eigenpert/rng.hpp"

namespace eigenpert {

// Random (Sigma, E, j) instances for verification sweeps: eigenvalues are
// sorted Exp(1) draws with a floor of min_gap enforced on the two gaps
// adjacent to the target index, the basis is Haar-ish orthogonal (QR of a
// Gaussian matrix with positive R diagonal), and E is a random symmetric
// matrix rescaled so that delta_j (or delta'_j) hits the requested target
// exactly (both are absolutely homogeneous in E).
struct RandomInstance {
    PerturbationInstance instance;
    Index j = 0;
};

enum class DeltaTargetKind { delta, delta_prime };

RandomInstance make_random_instance(SplitMix64& rng, Index d, double delta_target,
                                    double min_gap = 0.05,
                                    DeltaTargetKind kind = DeltaTargetKind::delta,
                                    Index forced_j = 0);

// Orthogonal matrix from the QR of a Gaussian matrix, R diagonal positive.
Matrix random_orthogonal(SplitMix64& rng, Index d);

// Dense symmetric matrix with iid N(0,1) off-diagonals (symmetrized).
Matrix random_symmetric(SplitMix64& rng, Index d);

} // namespace eigenpert
