#pragma once

#include "eigenpert/eigen_groups.hpp"
#include "eigenpert/spectral_model.hpp"
#include "eigenpert/symmetric_matrix.hpp"

namespace eigenpert {

// A (Sigma, E) pair: the base spectrum plus a symmetric perturbation of the
// same dimension. E = Sigma_hat - Sigma.
struct PerturbationInstance {
    SpectralModel base;
    SymmetricMatrix perturbation;

    PerturbationInstance(SpectralModel base_, SymmetricMatrix e);

    Index dim() const { return base.dim(); }
    const Matrix& e() const { return perturbation.matrix(); }
};

// delta_j = ||W_j E W_j||_inf together with its three component norms:
//   norm_rr = || |R|^{1/2} E |R|^{1/2} ||_inf
//   norm_rp = g^{-1/2} || |R|^{1/2} E P_j ||_2
//   norm_pp = g^{-1}   || P_j E P_j ||_2
// delta_prime = max of the three; delta_prime <= delta <= 2 delta_prime and
// delta <= ||E||_inf / g_j.
struct DeltaReport {
    Index j = 0;
    double gap = 0.0;
    double delta = 0.0;
    double delta_prime = 0.0;
    double norm_rr = 0.0;
    double norm_rp = 0.0;
    double norm_pp = 0.0;
};

DeltaReport delta(const PerturbationInstance& inst, Index j);

// Grouped analogue: delta_r = ||W_r E W_r||_inf.
double group_delta(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                   const Matrix& e, Index r);

} // namespace eigenpert
