#pragma once

#include "eigenpert/instance_gen.hpp"
#include "eigenpert/perturbation.hpp"

#include <cmath>

namespace testutil {

using namespace eigenpert;

// Sigma = diag(2,1), E = [[0, eps], [eps, 0]]: every closed-form quantity is
// known (lambda_hat_1 = (3 + sqrt(1 + 4 eps^2))/2, delta_1 = eps, ...).
inline PerturbationInstance offdiag_2x2(double eps = 0.1) {
    Matrix s(2, 2), e(2, 2);
    s << 2, 0, 0, 1;
    e << 0, eps, eps, 0;
    return PerturbationInstance(decompose_symmetric(SymmetricMatrix(s)), SymmetricMatrix(e));
}

inline double rel_err(const Matrix& a, const Matrix& b) {
    const double scale = std::max(a.norm(), b.norm());
    return scale > 0.0 ? (a - b).norm() / scale : 0.0;
}

// Random instance whose spectrum has all gaps >= min_gap (no ties anywhere),
// so eigenvalue indices and singleton group indices coincide.
inline RandomInstance well_spaced_instance(SplitMix64& rng, Index d, double target,
                                           double min_gap = 0.25,
                                           DeltaTargetKind kind = DeltaTargetKind::delta_prime,
                                           Index forced_j = 0) {
    Vector lam(d);
    double top = 0.0;
    for (Index k = d; k >= 1; --k) {
        top += min_gap + 0.5 * rng.next_unit();
        lam(k - 1) = top;
    }
    SpectralModel base;
    base.eigenvalues = lam;
    base.basis = random_orthogonal(rng, d);
    Matrix e = random_symmetric(rng, d);
    const Index j =
        forced_j >= 1 ? forced_j
                      : static_cast<Index>(rng.next_u64() % static_cast<std::uint64_t>(d)) + 1;
    PerturbationInstance probe(base, SymmetricMatrix(e));
    const DeltaReport rep = delta(probe, j);
    const double measured = kind == DeltaTargetKind::delta ? rep.delta : rep.delta_prime;
    e *= target / measured;
    return RandomInstance{PerturbationInstance(std::move(base), SymmetricMatrix(e)), j};
}

} // namespace testutil
