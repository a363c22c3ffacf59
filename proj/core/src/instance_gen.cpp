#include "eigenpert/instance_gen.hpp"

#include <algorithm>
#include <cmath>

namespace eigenpert {

Matrix random_orthogonal(SplitMix64& rng, Index d) {
    Matrix g(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index k = 0; k < d; ++k) g(i, k) = rng.next_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index k = 0; k < d; ++k)
        if (r(k, k) < 0.0) q.col(k) = -q.col(k);
    return q;
}

Matrix random_symmetric(SplitMix64& rng, Index d) {
    Matrix g(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index k = 0; k < d; ++k) g(i, k) = rng.next_normal();
    return 0.5 * (g + g.transpose());
}

RandomInstance make_random_instance(SplitMix64& rng, Index d, double delta_target, double min_gap,
                                    DeltaTargetKind kind, Index forced_j) {
    if (d < 2) throw InputError("make_random_instance: d must be >= 2");
    if (!(delta_target > 0.0)) throw InputError("make_random_instance: delta target must be > 0");

    const Index j = forced_j >= 1 ? forced_j
                                  : static_cast<Index>(rng.next_u64() % static_cast<std::uint64_t>(d)) + 1;
    if (j > d) throw InputError("make_random_instance: forced j out of range");

    // Sorted Exp(1) draws, then push values upward from the bottom so the two
    // gaps adjacent to j reach min_gap (preserves the ordering).
    std::vector<double> lam(static_cast<std::size_t>(d));
    for (auto& x : lam) x = -std::log(rng.next_unit());
    std::sort(lam.begin(), lam.end(), std::greater<>());
    for (Index k = d - 1; k >= 1; --k) {
        const bool adjacent = (k == j - 1) || (k == j);  // gap between lam_k and lam_{k+1}, 1-based
        const double need = adjacent ? min_gap : 0.0;
        lam[static_cast<std::size_t>(k - 1)] =
            std::max(lam[static_cast<std::size_t>(k - 1)], lam[static_cast<std::size_t>(k)] + need);
    }

    SpectralModel base;
    base.eigenvalues = Eigen::Map<Vector>(lam.data(), d);
    base.basis = random_orthogonal(rng, d);

    Matrix e = random_symmetric(rng, d);
    PerturbationInstance probe(base, SymmetricMatrix(e));
    const DeltaReport rep = delta(probe, j);
    const double measured = kind == DeltaTargetKind::delta ? rep.delta : rep.delta_prime;
    if (!(measured > 0.0))
        throw DivergenceError("make_random_instance: degenerate random perturbation");
    e *= delta_target / measured;  // delta and delta' are absolutely homogeneous in E

    return RandomInstance{PerturbationInstance(std::move(base), SymmetricMatrix(e)), j};
}

} // namespace eigenpert
