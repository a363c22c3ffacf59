#include "eigenpert/perturbation.hpp"

#include <cmath>

namespace eigenpert {

PerturbationInstance::PerturbationInstance(SpectralModel base_, SymmetricMatrix e)
    : base(std::move(base_)), perturbation(std::move(e)) {
    if (base.dim() != perturbation.dim())
        throw InputError("PerturbationInstance: dimension mismatch between base and E");
}

DeltaReport delta(const PerturbationInstance& inst, Index j) {
    const SpectralModel& model = inst.base;
    const double g = spectral_gap(model, j);
    if (!(g > 0.0))
        throw DegenerateGapError("delta: zero spectral gap at j = " + std::to_string(j));

    const Index d = model.dim();
    // Everything in the eigenbasis: Et = U^T E U, the weights are diagonal.
    const Matrix et = model.basis.transpose() * inst.e() * model.basis;
    Vector wr = Vector::Zero(d);  // |R|^{1/2} weights
    for (Index k = 0; k < d; ++k)
        if (k != j - 1)
            wr(k) = 1.0 / std::sqrt(std::abs(model.eigenvalues(k) - model.eigenvalues(j - 1)));
    Vector wfull = wr;
    wfull(j - 1) = 1.0 / std::sqrt(g);

    DeltaReport rep;
    rep.j = j;
    rep.gap = g;

    const Matrix weighted = wfull.asDiagonal() * et * wfull.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Matrix> es(weighted, Eigen::EigenvaluesOnly);
    rep.delta = es.eigenvalues().cwiseAbs().maxCoeff();

    const Matrix rr = wr.asDiagonal() * et * wr.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Matrix> es_rr(rr, Eigen::EigenvaluesOnly);
    rep.norm_rr = es_rr.eigenvalues().cwiseAbs().maxCoeff();

    // || |R|^{1/2} E P_j ||_2 = || |R|^{1/2} E u_j ||; column j-1 of Et scaled.
    rep.norm_rp = (wr.asDiagonal() * et.col(j - 1)).norm() / std::sqrt(g);
    rep.norm_pp = std::abs(et(j - 1, j - 1)) / g;
    rep.delta_prime = std::max({rep.norm_rr, rep.norm_rp, rep.norm_pp});
    return rep;
}

double group_delta(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                   const Matrix& e, Index r) {
    const Matrix w = group_weight_operator(model, groups, r);
    const Matrix weighted = w * e * w;
    Eigen::SelfAdjointEigenSolver<Matrix> es(weighted, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

} // namespace eigenpert
