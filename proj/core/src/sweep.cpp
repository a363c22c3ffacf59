#include "eigenpert/sweep.hpp"

#include "eigenpert/bounds.hpp"
#include "eigenpert/series.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

namespace eigenpert {

namespace {

void append(std::vector<SweepRow>& rows, Index i, Index j, double target, CheckResult c) {
    rows.push_back(SweepRow{i, j, target, std::move(c)});
}

} // namespace

void sweep_instance_checks(const RandomInstance& ri, Index i, double target, int p_max,
                           bool corrupt_bound, std::vector<SweepRow>& rows) {
    const PerturbationInstance& inst = ri.instance;
    const Index j = ri.j;
    const DeltaReport rep = delta(inst, j);

    append(rows, i, j, target, make_check("delta_order_low", true, rep.delta_prime, rep.delta));
    append(rows, i, j, target,
           make_check("delta_order_high", true, rep.delta, 2.0 * rep.delta_prime));
    append(rows, i, j, target,
           make_check("delta_weyl", true, rep.delta, operator_norm(inst.e()) / rep.gap));

    const SeriesExpansion se = partial_sums(inst, j, p_max);
    const ExactPerturbed exact = exact_perturbed(inst);
    const Matrix phat = projector(exact.model, j);
    const double lhat = exact.model.eigenvalue(j);

    Matrix proj_sum = Matrix::Zero(inst.dim(), inst.dim());
    double eval_sum = 0.0;
    for (int p = 1; p <= p_max; ++p) {
        proj_sum += se.proj_coeffs[static_cast<std::size_t>(p - 1)];
        eval_sum += se.eval_coeffs[static_cast<std::size_t>(p - 1)];
        const auto bounds = remainder_bounds(rep, rep.norm_rp * std::sqrt(rep.gap), p);
        const double proj_err = hs_norm(phat - proj_sum);
        const double eval_err = std::abs(lhat - eval_sum);
        const double fudge = corrupt_bound ? 1e-6 : 1.0;
        const auto& thm1 = bounds.at("thm1");
        append(rows, i, j, target,
               make_check("thm1_p" + std::to_string(p), thm1.applicable, proj_err,
                          fudge * thm1.value));
        const auto& hfc = bounds.at("hfc_proj");
        append(rows, i, j, target,
               make_check("hfc_proj_p" + std::to_string(p), hfc.applicable, proj_err, hfc.value));
        if (p >= 2) {
            const auto& thm2 = bounds.at("thm2");
            append(rows, i, j, target,
                   make_check("thm2_p" + std::to_string(p), thm2.applicable, eval_err,
                              thm2.value));
        }
    }

    const SeparationReport sep = verify_separation(inst, j);
    append(rows, i, j, target, sep.center);
    if (sep.upper_neighbor) append(rows, i, j, target, *sep.upper_neighbor);
    if (sep.lower_neighbor) append(rows, i, j, target, *sep.lower_neighbor);

    append(rows, i, j, target, verify_weighted_projection_bound(inst, j));

    for (int n = 1; n <= 4; ++n) {
        double worst = 0.0;
        enumerate_composition_terms(inst, j, n, [&](const std::vector<int>&, const Matrix& term) {
            const double bound = std::pow(rep.delta_prime, n);  // g^{n-m} = 1 at m = n
            worst = std::max(worst, hs_norm(term) / bound);
        });
        append(rows, i, j, target,
               make_check("term_bound_n" + std::to_string(n), true, worst, 1.0));
    }

    append(rows, i, j, target,
           make_check("basic_identity", true, basic_identity_residual(inst, j), 1e-10, 0.0));
}

SweepResult run_invariant_sweep(const SweepOptions& opts) {
    if (opts.delta_targets.empty())
        throw InputError("run_invariant_sweep: need at least one delta target");
    if (opts.instances < 0 || opts.d < 2 || opts.p_max < 1)
        throw InputError("run_invariant_sweep: bad sweep options");
    std::vector<std::vector<SweepRow>> per_instance(static_cast<std::size_t>(opts.instances));
    auto body = [&](Index i) {
        SplitMix64 rng(opts.seed + static_cast<std::uint64_t>(i));
        const double target =
            opts.delta_targets[static_cast<std::size_t>(i) % opts.delta_targets.size()];
        const RandomInstance ri = make_random_instance(rng, opts.d, target, opts.min_gap);
        sweep_instance_checks(ri, i, target, opts.p_max, opts.corrupt_bound,
                              per_instance[static_cast<std::size_t>(i)]);
    };
    const int workers = std::max(1, opts.threads);
    if (workers <= 1 || opts.instances <= 1) {
        for (Index i = 0; i < opts.instances; ++i) body(i);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr first_error;
        std::mutex error_mutex;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                try {
                    for (Index i = w; i < opts.instances; i += workers) body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    SweepResult out;
    for (auto& rows : per_instance) {
        for (SweepRow& r : rows) {
            if (r.check.applicable) {
                ++out.applicable;
                if (!r.check.pass) ++out.failures;
            }
            out.rows.push_back(std::move(r));
        }
    }
    return out;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream csv;
    csv << "instance,j,delta_target,check,applicable,lhs,rhs,slack,pass\n";
    for (const SweepRow& r : result.rows) {
        csv << r.instance << ',' << r.j << ',' << format_double(r.delta_target) << ','
            << r.check.check << ',' << (r.check.applicable ? 1 : 0) << ','
            << format_double(r.check.lhs) << ',' << format_double(r.check.rhs) << ','
            << format_double(r.check.slack) << ',' << (r.check.pass ? 1 : 0) << '\n';
    }
    return csv.str();
}

} // namespace eigenpert
