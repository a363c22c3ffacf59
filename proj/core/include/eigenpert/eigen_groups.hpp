#pragma once

#include "eigenpert/spectral_model.hpp"

#include <vector>

namespace eigenpert {

// A maximal run of eigenvalues within the grouping tolerance of each other.
// Members are contiguous 1-based indices [first, last]; value is the mean of
// the grouped eigenvalues.
struct EigenGroup {
    Index index = 0;  // 1-based group index r
    Index first = 0;
    Index last = 0;
    double value = 0.0;

    Index rank() const { return last - first + 1; }
    bool contains(Index j) const { return first <= j && j <= last; }
};

// Partitions the spectrum into groups: consecutive eigenvalues closer than
// tol are merged; distinct groups are separated by more than tol. tol < 0
// picks the default 1e-9 * max|lambda|. tol = 0 groups exact ties only.
std::vector<EigenGroup> group_eigenvalues(const SpectralModel& model, double tol = -1.0);

// Group gap g_r over the distinct values mu_1 > mu_2 > ...; same boundary
// convention as spectral_gap.
double group_gap(const std::vector<EigenGroup>& groups, Index r);

// P_r = sum_{j in I_r} u_j u_j^T.
Matrix group_projector(const SpectralModel& model, const std::vector<EigenGroup>& groups, Index r);

// R_r = sum_{s != r} (mu_s - mu_r)^{-1} P_s.
Matrix group_reduced_resolvent(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                               Index r);

// |R_r|^{1/2} = sum_{s != r} |mu_s - mu_r|^{-1/2} P_s.
Matrix group_abs_resolvent_sqrt(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                                Index r);

// W_r = |R_r|^{1/2} + g_r^{-1/2} P_r.
Matrix group_weight_operator(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                             Index r);

} // namespace eigenpert
