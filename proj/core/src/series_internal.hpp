#pragma once

// Shared internals for the perturbation-series evaluators. Everything here
// works in the eigenbasis of the base spectrum, where every resolvent power
// is a diagonal scaling, and with the resolvent variable rescaled by the
// gap so truncated-polynomial coefficients stay O(1) in norm.

#include "eigenpert/eigen_groups.hpp"
#include "eigenpert/perturbation.hpp"

#include <vector>

namespace eigenpert::detail {

struct EigContext {
    const SpectralModel* model = nullptr;
    Matrix et;                 // U^T E U
    std::vector<char> member;  // 1 if eigenvector index (0-based) belongs to the target group
    Vector denom;              // d_k = value_k - value_target; 0 on members
    double gap = 0.0;          // min |d_k| over non-members
};

EigContext make_simple_context(const PerturbationInstance& inst, Index j);
EigContext make_group_context(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                              Index r, const Matrix& e);

// Diagonal of the rescaled resolvent power (gap/d_k)^m; m = 0 encodes -P
// (value -1 on members, 0 elsewhere).
Vector rescaled_resolvent_diag(const EigContext& ctx, int m);

// Coefficients [w^0 .. w^T] of S(w) (Et S(w))^{n_factors} where
// S(w) = -P + sum_{m>=1} w^m (gap R)^m, in the eigenbasis. No global sign,
// no gap unscaling.
std::vector<Matrix> poly_power_coeffs(const EigContext& ctx, int n_factors, int trunc);

// Eigenbasis coefficients P^(0..p-1) with the (-1)^{n+1} sign and the
// gap^{-n} unscaling applied (generating-function path).
std::vector<Matrix> projection_coeffs_eigenbasis(const EigContext& ctx, int p);

// Single eigenbasis coefficient by explicit composition enumeration.
Matrix coeff_enumerative_eigenbasis(const EigContext& ctx, int n);

// lambda coefficients 0..p-1 from eigenbasis projection coefficients:
// lambda^(n) = tr(P^(n-1) Et) + tr(P^(n) diag(d)).
std::vector<double> eigenvalue_coeffs_from(const EigContext& ctx, double lambda0,
                                           const std::vector<Matrix>& proj_eigenbasis);

} // namespace eigenpert::detail
