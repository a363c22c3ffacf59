#pragma once

#include "eigenpert/rng.hpp"
#include "eigenpert/spectral_model.hpp"
#include "eigenpert/symmetric_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eigenpert {

// Ground-truth covariance spectrum. exponential_alpha fixes
// lambda_j = exp(-j^alpha), alpha in (0, 1]; user_list takes the values as
// given (sorted non-increasing, all positive).
enum class DecayKind { exponential_alpha, user_list };

struct DecayModel {
    DecayKind kind = DecayKind::exponential_alpha;
    double alpha = 1.0;
    Vector eigenvalues;

    Index dim() const { return eigenvalues.size(); }

    // Companion spectral model with U = I.
    SpectralModel spectral() const;

    // Mass discarded by the d-dimensional truncation, relative to the full
    // trace sum_{k>=1} lambda_k (exponential models only; 0 for user lists).
    double truncation_tail_ratio() const;
};

DecayModel build_decay_model(double alpha, Index d);
DecayModel build_user_decay_model(const Vector& eigenvalues);

// The first three satisfy the independent/symmetric/sub-Gaussian sampling
// assumption. student_t (5 dof, scaled to unit variance) violates it and is
// gated behind SamplerSpec::out_of_assumption for exploratory runs only.
enum class Dist { gaussian, rademacher, uniform_scaled, student_t };

Dist parse_dist(const std::string& name);
std::string dist_name(Dist dist);

struct SamplerSpec {
    Dist dist = Dist::gaussian;
    Index n = 0;
    std::uint64_t seed = 0;
    bool out_of_assumption = false;  // must be set to sample student_t
};

// n x d data matrix; row i is X_i = sum_j sqrt(lambda_j) eta_j^(i) u_j with
// eta drawn i.i.d. per spec. Deterministic in (seed, n, d, dist).
Matrix sample_data(const SpectralModel& model, const SamplerSpec& spec);

// (1/n) data^T data.
SymmetricMatrix empirical_covariance(const Matrix& data);

// Eigenvalue expressions controlling the sample-size conditions:
//   ratio_lg    lambda_j / g_j
//   abs_sum     sum_{k != j} lambda_k / |lambda_k - lambda_j|
//   signed_sum  sum_{k != j} lambda_k / (lambda_k - lambda_j)
//   quad_sum    sum_{k != j} lambda_k^2 / (lambda_k - lambda_j)^2
//   proj_sum    sum_{k != j} lambda_j lambda_k / (lambda_k - lambda_j)^2
struct RelativeRankStats {
    Index j = 0;
    double ratio_lg = 0.0;
    double abs_sum = 0.0;
    double signed_sum = 0.0;
    double quad_sum = 0.0;
    double proj_sum = 0.0;

    // ratio_lg * (abs_sum + ratio_lg) <= c1 * n
    bool condition_rg(double c1, Index n) const;
    // abs_sum + ratio_lg <= sqrt(c1 * n)
    bool condition_relative_rank(double c1, Index n) const;
};

RelativeRankStats relative_rank_stats(const SpectralModel& model, Index j);

// Exact second moment of tr(P_j E P_j) - tr(P_j E R_j E P_j) when E is the
// centered empirical covariance of n i.i.d. Gaussian samples:
//   (lambda_j^2/n) (2 - (4/n) s + ((n+2)/n^2) s^2 + (2(n+2)/n^2) q)
// with s = signed_sum, q = quad_sum.
double gaussian_first_two_term_moment(const SpectralModel& model, Index j, Index n);

} // namespace eigenpert
