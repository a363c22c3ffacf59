#pragma once

#include "eigenpert/covariance.hpp"

#include <string>
#include <vector>

namespace eigenpert {

// Per-index Monte Carlo error moments across M replicates. l2_* fields are
// the root-mean-square E^{1/2}(.)^2 estimates; se_* are standard errors
// (sample std / sqrt(M)) of the underlying mean or second-moment estimate.
struct MonteCarloRow {
    Index j = 0;
    double mean_ev_err = 0.0;     // mean of lhat_j - l_j
    double l2_ev_err = 0.0;       // sqrt(mean of (lhat_j - l_j)^2)
    double mean_rel_err = 0.0;    // mean of lhat_j/l_j - 1
    double l2_rel_err = 0.0;      // sqrt(mean of (lhat_j/l_j - 1)^2)
    double mean_proj_err = 0.0;   // mean of ||Phat_j - P_j||_2
    double l2_proj_err = 0.0;     // sqrt(mean of ||Phat_j - P_j||_2^2)
    double p_delta_gt_quarter = 0.0;
    double se_mean_ev = 0.0;
    double se_sq_ev = 0.0;        // SE of the (lhat-l)^2 mean
    double se_sq_rel = 0.0;       // SE of the (lhat/l-1)^2 mean
    double se_sq_proj = 0.0;      // SE of the ||.||^2 mean
    double se_p_delta = 0.0;
};

struct MonteCarloSummary {
    Index replicates = 0;
    std::uint64_t base_seed = 0;
    std::vector<MonteCarloRow> rows;
};

// M replicates; replicate r draws with seed base_seed + r, forms the
// empirical covariance, re-diagonalizes exactly, and records per-j errors
// and delta_j. Replicates are embarrassingly parallel; the reduction runs in
// replicate order, so results are independent of the thread count.
MonteCarloSummary mc_eigen_error(const SpectralModel& model, const SamplerSpec& spec,
                                 const std::vector<Index>& j_list, Index replicates,
                                 int threads = 1);

// One row of the phase-transition table (exponential decay model).
// Reference curves: ref_ev = 1/sqrt(n) + j/n, ref_proj = j^{1-alpha}/sqrt(n).
struct PhaseRow {
    Index j = 0;
    double rel_ev_err = 0.0;
    double proj_err = 0.0;
    double ref_ev = 0.0;
    double ref_proj = 0.0;
    double ratio_ev = 0.0;
    double ratio_proj = 0.0;
    double p_delta_gt_quarter = 0.0;
    double se_rel_ev = 0.0;
    double se_proj = 0.0;
    double se_p_delta = 0.0;
};

struct PhaseTable {
    double alpha = 1.0;
    Index d = 0;
    Index n = 0;
    Index replicates = 0;
    Dist dist = Dist::gaussian;
    std::uint64_t seed = 0;
    std::vector<PhaseRow> rows;
};

// Monte Carlo sweep over j in [j_min, j_max]. Refuses exponential models
// whose truncation tail ratio exceeds 1e-12 unless allow_truncation_bias.
PhaseTable phase_transition_experiment(double alpha, Index d, Index n, Index j_min, Index j_max,
                                       Index replicates, Dist dist, std::uint64_t seed,
                                       int threads = 1, bool allow_truncation_bias = false,
                                       bool out_of_assumption = false);

// CSV with header
// j,rel_ev_err,proj_err,ref_ev,ref_proj,ratio_ev,ratio_proj,p_delta_gt_quarter,se_rel_ev,se_proj,se_p_delta
std::string phase_table_csv(const PhaseTable& table);

std::string mc_summary_csv(const MonteCarloSummary& summary);

} // namespace eigenpert
