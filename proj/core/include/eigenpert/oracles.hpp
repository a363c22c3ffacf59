#pragma once

#include "eigenpert/perturbation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eigenpert {

// Full eigendecomposition of Sigma + E; perturbed index j pairs with
// unperturbed index j under the shared non-increasing ordering.
struct ExactPerturbed {
    SpectralModel model;
};

ExactPerturbed exact_perturbed(const PerturbationInstance& inst);

// One verified inequality: lhs <= rhs (pass when lhs <= rhs + 1e-10 unless a
// check states otherwise). slack = rhs - lhs.
struct CheckResult {
    std::string check;
    bool applicable = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = false;
};

CheckResult make_check(std::string name, bool applicable, double lhs, double rhs,
                       double slack_tol = 1e-10);

// Eigenvalue separation under delta_j < 1/2:
//   |lhat_j - l_j| <= delta_j g_j
//   lhat_{j+1} - l_{j+1} <= delta_j (l_j - l_{j+1})      (absent at j = d)
//   lhat_{j-1} - l_{j-1} >= -delta_j (l_{j-1} - l_j)     (absent at j = 1)
struct SeparationReport {
    bool applicable = false;
    CheckResult center;
    std::optional<CheckResult> upper_neighbor;
    std::optional<CheckResult> lower_neighbor;
    bool pass = false;
};

SeparationReport verify_separation(const PerturbationInstance& inst, Index j);

// Central-difference estimate of (1/n!) (d/dt)^n P_j(t) at t = 0 for
// P_j(t) the j-th spectral projector of Sigma + tE, n in {1,2,3}, with one
// Richardson extrapolation step. h <= 0 picks
// h = u^{1/(n+2)} g_j / ||E||_inf (u = unit roundoff). Refuses stencils on
// which the j-th eigenvalue stops being simple or delta_j(t) >= 1/2.
Matrix finite_difference_coefficient(const PerturbationInstance& inst, Index j, int n,
                                     double h = -1.0);

// Trapezoid discretization of a circle contour for the resolvent calculus.
struct ContourSpec {
    double center = 0.0;
    double radius = 0.0;
    int nodes = 256;
};

// gamma_j: circle about lambda_j of radius g_j/2.
ContourSpec default_contour(const SpectralModel& model, Index j, int nodes = 256);

struct ContourResult {
    Matrix matrix;
    double imag_residual = 0.0;
    int nodes = 0;
};

// -(1/2 pi i) contour integral of (A - zI)^{-1}: the spectral projector onto
// the eigenvalues enclosed by the circle. Rejects circles passing within
// relative tolerance 1e-10 of an eigenvalue of A.
ContourResult contour_projector(const SymmetricMatrix& a, const ContourSpec& spec);

// Doubles the node count from spec.nodes until two successive results differ
// by less than tol in operator norm.
ContourResult contour_projector_adaptive(const SymmetricMatrix& a, ContourSpec spec,
                                         double tol = 1e-10, int max_nodes = 1 << 15);

// ((-1)^{n-1}/2 pi i) contour integral of (Sigma - zI)^{-1} (E (Sigma - zI)^{-1})^n:
// the n-th projection coefficient, n >= 1.
ContourResult contour_series_coefficient(const PerturbationInstance& inst, Index j, int n,
                                         const ContourSpec& spec);

// Explicit remainder identity at order p: the left side P_hat_j - S_p is
// compared against the composition series over R^(k_1) E ... R^(k_p) E Rhat^(kappa)
// truncated at k_1+...+k_p <= K, with a geometric tail estimate folded into
// the pass criterion (discrepancy <= tail + 1e-10).
struct RemainderIdentityReport {
    bool applicable = false;
    double lhs_norm = 0.0;
    double discrepancy = 0.0;
    double tail_estimate = 0.0;
    int truncation = 0;
    bool pass = false;
};

RemainderIdentityReport verify_remainder_identity(const PerturbationInstance& inst, Index j,
                                                  int p, int truncation = 40);

// || |R_j|^{-1/2} P_hat_j ||_2 <= || |R_j|^{1/2} E P_j ||_2 / (1 - 2 delta_j)
// with |R_j|^{-1/2} = sum_{k != j} |l_k - l_j|^{1/2} P_k; needs delta_j < 1/2.
CheckResult verify_weighted_projection_bound(const PerturbationInstance& inst, Index j);

// max_{k != j} || (lhat_j - l_k) P_k P_hat_j - P_k E P_hat_j ||_2.
double basic_identity_residual(const PerturbationInstance& inst, Index j);

} // namespace eigenpert
