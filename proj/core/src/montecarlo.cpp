#include "eigenpert/montecarlo.hpp"

#include "eigenpert/perturbation.hpp"

#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace eigenpert {

namespace {

struct ReplicateRecord {
    std::vector<double> ev_err;    // lhat_j - l_j per tracked j
    std::vector<double> rel_err;   // lhat_j / l_j - 1
    std::vector<double> proj_err;  // ||Phat_j - P_j||_2
    std::vector<char> delta_gt_quarter;
};

// One replicate: sample, form the empirical covariance, re-diagonalize, and
// measure per-j errors against the ground truth.
ReplicateRecord run_replicate(const SpectralModel& model, const SamplerSpec& base,
                              std::uint64_t seed, const std::vector<Index>& j_list) {
    SamplerSpec spec = base;
    spec.seed = seed;
    const Matrix data = sample_data(model, spec);
    const SymmetricMatrix cov = empirical_covariance(data);
    const SpectralModel hat = decompose_symmetric(cov);
    const Matrix e = cov.matrix() - reconstruct(model);
    const PerturbationInstance inst(model, SymmetricMatrix(0.5 * (e + e.transpose())));

    ReplicateRecord rec;
    rec.ev_err.reserve(j_list.size());
    for (Index j : j_list) {
        const double lj = model.eigenvalue(j);
        const double lhatj = hat.eigenvalue(j);
        rec.ev_err.push_back(lhatj - lj);
        rec.rel_err.push_back(lhatj / lj - 1.0);
        rec.proj_err.push_back(hs_norm(projector(hat, j) - projector(model, j)));
        rec.delta_gt_quarter.push_back(delta(inst, j).delta > 0.25 ? 1 : 0);
    }
    return rec;
}

void parallel_for(Index count, int threads, const std::function<void(Index)>& body) {
    if (threads <= 1 || count <= 1) {
        for (Index i = 0; i < count; ++i) body(i);
        return;
    }
    const int workers = static_cast<int>(std::min<Index>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (Index i = w; i < count; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

// Standard error of the sample mean: sample std / sqrt(M).
double se_of(const std::vector<double>& xs) {
    const double m = mean_of(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    const double var = s / static_cast<double>(xs.size() - 1);
    return std::sqrt(var / static_cast<double>(xs.size()));
}

} // namespace

MonteCarloSummary mc_eigen_error(const SpectralModel& model, const SamplerSpec& spec,
                                 const std::vector<Index>& j_list, Index replicates,
                                 int threads) {
    if (replicates < 2)
        throw InputError("mc_eigen_error: need at least 2 replicates");
    for (Index j : j_list)
        if (j < 1 || j > model.dim())
            throw InputError("mc_eigen_error: j out of range");

    std::vector<ReplicateRecord> records(static_cast<std::size_t>(replicates));
    parallel_for(replicates, threads, [&](Index r) {
        records[static_cast<std::size_t>(r)] =
            run_replicate(model, spec, spec.seed + static_cast<std::uint64_t>(r), j_list);
    });

    MonteCarloSummary out;
    out.replicates = replicates;
    out.base_seed = spec.seed;
    for (std::size_t jj = 0; jj < j_list.size(); ++jj) {
        std::vector<double> ev, rel, proj, ev2, rel2, proj2, dq;
        ev.reserve(records.size());
        for (const auto& rec : records) {
            ev.push_back(rec.ev_err[jj]);
            rel.push_back(rec.rel_err[jj]);
            proj.push_back(rec.proj_err[jj]);
            ev2.push_back(rec.ev_err[jj] * rec.ev_err[jj]);
            rel2.push_back(rec.rel_err[jj] * rec.rel_err[jj]);
            proj2.push_back(rec.proj_err[jj] * rec.proj_err[jj]);
            dq.push_back(rec.delta_gt_quarter[jj]);
        }
        MonteCarloRow row;
        row.j = j_list[jj];
        row.mean_ev_err = mean_of(ev);
        row.l2_ev_err = std::sqrt(mean_of(ev2));
        row.mean_rel_err = mean_of(rel);
        row.l2_rel_err = std::sqrt(mean_of(rel2));
        row.mean_proj_err = mean_of(proj);
        row.l2_proj_err = std::sqrt(mean_of(proj2));
        row.p_delta_gt_quarter = mean_of(dq);
        row.se_mean_ev = se_of(ev);
        row.se_sq_ev = se_of(ev2);
        row.se_sq_rel = se_of(rel2);
        row.se_sq_proj = se_of(proj2);
        row.se_p_delta = se_of(dq);
        out.rows.push_back(row);
    }
    return out;
}

PhaseTable phase_transition_experiment(double alpha, Index d, Index n, Index j_min, Index j_max,
                                       Index replicates, Dist dist, std::uint64_t seed,
                                       int threads, bool allow_truncation_bias,
                                       bool out_of_assumption) {
    if (j_min < 1 || j_max > d - 1 || j_min > j_max)
        throw InputError("phase_transition_experiment: j range must lie in [1, d-1]");
    const DecayModel decay = build_decay_model(alpha, d);
    const double tail = decay.truncation_tail_ratio();
    if (tail >= 1e-12 && !allow_truncation_bias)
        throw InputError(
            "phase_transition_experiment: truncation tail ratio " + std::to_string(tail) +
            " exceeds 1e-12; raise d or set allow_truncation_bias");

    std::vector<Index> j_list;
    for (Index j = j_min; j <= j_max; ++j) j_list.push_back(j);
    const SpectralModel model = decay.spectral();
    const MonteCarloSummary mc = mc_eigen_error(
        model, SamplerSpec{dist, n, seed, out_of_assumption}, j_list, replicates, threads);

    PhaseTable table;
    table.alpha = alpha;
    table.d = d;
    table.n = n;
    table.replicates = replicates;
    table.dist = dist;
    table.seed = seed;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    for (const MonteCarloRow& row : mc.rows) {
        PhaseRow pr;
        pr.j = row.j;
        pr.rel_ev_err = row.l2_rel_err;
        pr.proj_err = row.l2_proj_err;
        pr.ref_ev = 1.0 / sqrt_n + static_cast<double>(row.j) / static_cast<double>(n);
        pr.ref_proj = std::pow(static_cast<double>(row.j), 1.0 - alpha) / sqrt_n;
        pr.ratio_ev = pr.rel_ev_err / pr.ref_ev;
        pr.ratio_proj = pr.proj_err / pr.ref_proj;
        pr.p_delta_gt_quarter = row.p_delta_gt_quarter;
        // SE of the RMS estimate by the delta method: se(m2) / (2 sqrt(m2)).
        pr.se_rel_ev = row.l2_rel_err > 0.0 ? row.se_sq_rel / (2.0 * row.l2_rel_err) : 0.0;
        pr.se_proj = row.l2_proj_err > 0.0 ? row.se_sq_proj / (2.0 * row.l2_proj_err) : 0.0;
        pr.se_p_delta = row.se_p_delta;
        table.rows.push_back(pr);
    }
    return table;
}

std::string phase_table_csv(const PhaseTable& table) {
    std::ostringstream out;
    out << "j,rel_ev_err,proj_err,ref_ev,ref_proj,ratio_ev,ratio_proj,"
           "p_delta_gt_quarter,se_rel_ev,se_proj,se_p_delta\n";
    for (const PhaseRow& r : table.rows) {
        out << r.j << ',' << format_double(r.rel_ev_err) << ',' << format_double(r.proj_err)
            << ',' << format_double(r.ref_ev) << ',' << format_double(r.ref_proj) << ','
            << format_double(r.ratio_ev) << ',' << format_double(r.ratio_proj) << ','
            << format_double(r.p_delta_gt_quarter) << ',' << format_double(r.se_rel_ev) << ','
            << format_double(r.se_proj) << ',' << format_double(r.se_p_delta) << '\n';
    }
    return out.str();
}

std::string mc_summary_csv(const MonteCarloSummary& summary) {
    std::ostringstream out;
    out << "j,mean_ev_err,l2_ev_err,mean_rel_err,l2_rel_err,mean_proj_err,l2_proj_err,"
           "p_delta_gt_quarter,se_mean_ev,se_sq_ev,se_sq_rel,se_sq_proj,se_p_delta\n";
    for (const MonteCarloRow& r : summary.rows) {
        out << r.j << ',' << format_double(r.mean_ev_err) << ',' << format_double(r.l2_ev_err)
            << ',' << format_double(r.mean_rel_err) << ',' << format_double(r.l2_rel_err) << ','
            << format_double(r.mean_proj_err) << ',' << format_double(r.l2_proj_err) << ','
            << format_double(r.p_delta_gt_quarter) << ',' << format_double(r.se_mean_ev) << ','
            << format_double(r.se_sq_ev) << ',' << format_double(r.se_sq_rel) << ','
            << format_double(r.se_sq_proj) << ',' << format_double(r.se_p_delta) << '\n';
    }
    return out.str();
}

} // namespace eigenpert
