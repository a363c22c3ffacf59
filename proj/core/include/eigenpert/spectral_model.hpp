#pragma once

#include "eigenpert/symmetric_matrix.hpp"
#include "eigenpert/types.hpp"

namespace eigenpert {

// Eigendecomposition of a symmetric matrix: eigenvalues in non-increasing
// order with an orthonormal eigenvector basis (columns of U).
//
// All derived objects below live in the eigenbasis as diagonal weightings;
// indices j are 1-based throughout, matching the usual spectral convention.
struct SpectralModel {
    Vector eigenvalues;  // lambda_1 >= ... >= lambda_d
    Matrix basis;        // columns u_1..u_d

    Index dim() const { return eigenvalues.size(); }
    double eigenvalue(Index j) const { return eigenvalues(j - 1); }
    Vector eigenvector(Index j) const { return basis.col(j - 1); }

    // Builds a model from an already-diagonal spectrum (U = I). Values are
    // sorted non-increasing with a stable sort (ties keep original order).
    static SpectralModel diagonal(const Vector& values);
};

SpectralModel decompose_symmetric(const SymmetricMatrix& a);

// g_j = min(lambda_{j-1}-lambda_j, lambda_j-lambda_{j+1}); at the boundary
// only the one-sided difference exists (g_1 = lambda_1-lambda_2,
// g_d = lambda_{d-1}-lambda_d).
double spectral_gap(const SpectralModel& model, Index j);

bool is_simple(const SpectralModel& model, Index j);

// P_j = u_j u_j^T.
Matrix projector(const SpectralModel& model, Index j);

// R_j = sum_{k != j} (lambda_k - lambda_j)^{-1} P_k. Requires g_j > 0.
Matrix reduced_resolvent(const SpectralModel& model, Index j);

// |R_j|^{1/2} = sum_{k != j} |lambda_k - lambda_j|^{-1/2} P_k.
Matrix abs_resolvent_sqrt(const SpectralModel& model, Index j);

// Pseudo-inverse of |R_j|^{1/2}: sum_{k != j} |lambda_k - lambda_j|^{1/2} P_k.
Matrix abs_resolvent_inv_sqrt(const SpectralModel& model, Index j);

// W_j = |R_j|^{1/2} + g_j^{-1/2} P_j.
Matrix weight_operator(const SpectralModel& model, Index j);

// W_j^{-1} = sum_{k != j} |lambda_k - lambda_j|^{1/2} P_k + g_j^{1/2} P_j.
Matrix weight_operator_inverse(const SpectralModel& model, Index j);

// M = sum_{k != j} (lambda_k - lambda_j) P_k, satisfying
// M R_j = R_j M = I - P_j.
Matrix resolvent_pseudo_inverse(const SpectralModel& model, Index j);

// Reconstruction U diag(lambda) U^T.
Matrix reconstruct(const SpectralModel& model);

} // namespace eigenpert
