#include "eigenpert/bounds.hpp"

#include "eigenpert/spectral_model.hpp"

#include <cmath>

namespace eigenpert {

namespace {

double pow_int(double base, int e) { return std::pow(base, e); }

} // namespace

std::map<std::string, BoundValue> remainder_bounds(const DeltaReport& rep, double norm_pe_rsqrt,
                                                   int p) {
    if (p < 1) throw InputError("remainder_bounds: p must be >= 1");
    const double d = rep.delta;
    const double dp = rep.delta_prime;
    const double g = rep.gap;
    const double a = norm_pe_rsqrt;  // ||P E |R|^{1/2}||_2

    std::map<std::string, BoundValue> out;
    const bool half_ok = d < 0.5;
    const bool quarter_ok = dp < 0.25;
    const std::string why_half = "requires delta < 1/2";
    const std::string why_quarter = "requires delta' < 1/4";

    {
        const double v = half_ok
                             ? 4.0 * a / std::sqrt(g) * pow_int(4.0 * dp, p - 1) /
                                   ((1.0 - 2.0 * d) * (1.0 - 2.0 * d))
                             : 0.0;
        out["thm1"] = half_ok ? BoundValue::ok(v) : BoundValue::na(0.0, why_half);
    }
    {
        const double v =
            quarter_ok ? 4.0 * a / std::sqrt(g) * pow_int(4.0 * dp, p - 1) / (1.0 - 4.0 * dp) : 0.0;
        out["cor2_proj"] = quarter_ok ? BoundValue::ok(v) : BoundValue::na(0.0, why_quarter);
    }
    {
        const double v = quarter_ok ? pow_int(4.0 * dp, p) / (1.0 - 4.0 * dp) : 0.0;
        out["cor2_proj_tail"] = quarter_ok ? BoundValue::ok(v) : BoundValue::na(0.0, why_quarter);
    }
    {
        const double v = half_ok ? 2.0 * pow_int(2.0 * d, p) / (1.0 - 2.0 * d) : 0.0;
        out["hfc_proj"] = half_ok ? BoundValue::ok(v) : BoundValue::na(0.0, why_half);
    }

    const bool p2 = p >= 2;
    const std::string why_p2 = "requires p >= 2";
    {
        const double v = (half_ok && p2) ? 12.0 * a * a * pow_int(4.0 * dp, p - 2) /
                                               pow_int(1.0 - 2.0 * d, 3)
                                         : 0.0;
        out["thm2"] = (half_ok && p2) ? BoundValue::ok(v)
                                      : BoundValue::na(0.0, half_ok ? why_p2 : why_half);
    }
    {
        const double v =
            (quarter_ok && p2) ? 8.0 * a * a * pow_int(4.0 * dp, p - 2) / (1.0 - 4.0 * dp) : 0.0;
        out["cor2_eval"] = (quarter_ok && p2) ? BoundValue::ok(v)
                                              : BoundValue::na(0.0, quarter_ok ? why_p2 : why_quarter);
    }
    {
        const double v = (quarter_ok && p2) ? g * pow_int(4.0 * dp, p) / (1.0 - 4.0 * dp) : 0.0;
        out["cor2_eval_tail"] = (quarter_ok && p2)
                                    ? BoundValue::ok(v)
                                    : BoundValue::na(0.0, quarter_ok ? why_p2 : why_quarter);
    }
    {
        // Constant 1 is proven only at p = 1; beyond that it depends on the
        // dimension, so the value (at constant 1) is reported but flagged.
        const double v = half_ok ? g * pow_int(2.0 * d, p) / (1.0 - 2.0 * d) : 0.0;
        if (!half_ok)
            out["hfc_eval"] = BoundValue::na(0.0, why_half);
        else if (p == 1)
            out["hfc_eval"] = BoundValue::ok(v);
        else
            out["hfc_eval"] = BoundValue::na(v, "constant unknown for p >= 2");
    }
    return out;
}

std::map<std::string, BoundValue> remainder_bounds(const PerturbationInstance& inst, Index j,
                                                   int p) {
    const DeltaReport rep = delta(inst, j);
    const double a = rep.norm_rp * std::sqrt(rep.gap);
    return remainder_bounds(rep, a, p);
}

double remainder_bound_projection(const PerturbationInstance& inst, Index j, int p) {
    auto bounds = remainder_bounds(inst, j, p);
    const BoundValue& b = bounds.at("thm1");
    if (!b.applicable)
        throw BoundInapplicableError("remainder_bound_projection: " + b.reason);
    return b.value;
}

double remainder_bound_eigenvalue(const PerturbationInstance& inst, Index j, int p) {
    auto bounds = remainder_bounds(inst, j, p);
    const BoundValue& b = bounds.at("thm2");
    if (!b.applicable)
        throw BoundInapplicableError("remainder_bound_eigenvalue: " + b.reason);
    return b.value;
}

TwoTermBound eigenvalue_two_term_bound(const PerturbationInstance& inst, Index j, double eps,
                                       double constant) {
    if (!(eps > 0.0 && eps < 0.5))
        throw InputError("eigenvalue_two_term_bound: eps must lie in (0, 1/2)");
    const DeltaReport rep = delta(inst, j);
    TwoTermBound out;
    out.linear = rep.norm_pp * rep.gap;  // ||P E P||_2
    const double a = rep.norm_rp * std::sqrt(rep.gap);
    out.quadratic = a * a;
    out.constant = constant > 0.0 ? constant : 12.0 / std::pow(2.0 * eps, 3);
    out.total = out.linear + out.constant * out.quadratic;
    out.applicable = rep.delta <= 0.5 - eps;
    return out;
}

ProjectionDistanceBounds projection_distance_bounds(const PerturbationInstance& inst, Index j,
                                                    int p) {
    if (p < 1) throw InputError("projection_distance_bounds: p must be >= 1");
    const SpectralModel& model = inst.base;
    const double g = spectral_gap(model, j);
    if (!(g > 0.0))
        throw DegenerateGapError("projection_distance_bounds: zero gap");
    const DeltaReport rep = delta(inst, j);

    // Work on vectors: (R E)^m P_j has rank one, so ||.||_2 = ||(R E)^m u_j||.
    const Matrix r = reduced_resolvent(model, j);
    const Vector u = model.eigenvector(j);
    const Matrix re = r * inst.e();

    ProjectionDistanceBounds out;
    out.delta_prime_pow = std::pow(rep.delta_prime, p);

    Vector v = re * u;         // m = 1
    Vector sum_vec = v;        // running sum of (R E)^m u_j
    double prev_norm = v.norm();
    out.sum_of_norms = 0.0;
    double sum_norms_all = prev_norm;
    if (p >= 2) out.sum_of_norms = prev_norm;

    constexpr int kMaxTerms = 60;
    constexpr double kTailTol = 1e-12;
    bool converged = false;
    int m = 1;
    double tail = 0.0;
    if (prev_norm == 0.0) {
        converged = true;
    }
    while (!converged && m < kMaxTerms) {
        Vector next = re * v;
        const double norm_next = next.norm();
        ++m;
        if (m <= p - 1) {
            out.sum_of_norms += norm_next;
            sum_vec += next;
        }
        sum_norms_all += norm_next;
        if (norm_next == 0.0) {
            converged = true;
            tail = 0.0;
        } else {
            const double ratio = norm_next / prev_norm;
            if (ratio < 1.0) {
                tail = norm_next * ratio / (1.0 - ratio);
                if (tail < kTailTol) converged = true;
            }
        }
        v = std::move(next);
        prev_norm = norm_next;
    }
    if (!converged)
        throw DivergenceError("projection_distance_bounds: (R E)^m P_j does not contract within " +
                              std::to_string(kMaxTerms) + " terms");

    // Continue the explicit partial sums up to p-1 if the adaptive loop
    // stopped earlier.
    while (m < p - 1) {
        Vector next = re * v;
        ++m;
        out.sum_of_norms += next.norm();
        sum_vec += next;
        v = std::move(next);
    }

    out.adaptive_sum = sum_norms_all;
    out.adaptive_terms = m;
    out.tail_estimate = tail;
    out.norm_of_sum = (p >= 2) ? sum_vec.norm() : 0.0;
    if (p < 2) out.sum_of_norms = 0.0;
    return out;
}

} // namespace eigenpert
