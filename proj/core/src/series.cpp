#include "eigenpert/series.hpp"

#include "series_internal.hpp"

#include <cmath>
#include <functional>

namespace eigenpert {

namespace detail {

EigContext make_simple_context(const PerturbationInstance& inst, Index j) {
    const SpectralModel& model = inst.base;
    const double g = spectral_gap(model, j);
    if (!(g > 0.0))
        throw DegenerateGapError("series: zero spectral gap at j = " + std::to_string(j));
    EigContext ctx;
    ctx.model = &model;
    ctx.et = model.basis.transpose() * inst.e() * model.basis;
    ctx.member.assign(static_cast<std::size_t>(model.dim()), 0);
    ctx.member[static_cast<std::size_t>(j - 1)] = 1;
    ctx.denom = Vector::Zero(model.dim());
    for (Index k = 0; k < model.dim(); ++k)
        if (k != j - 1)
            ctx.denom(k) = model.eigenvalues(k) - model.eigenvalues(j - 1);
    ctx.gap = g;
    return ctx;
}

EigContext make_group_context(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                              Index r, const Matrix& e) {
    if (r < 1 || r > static_cast<Index>(groups.size()))
        throw InputError("group series: group index out of range");
    const double g = group_gap(groups, r);
    if (!(g > 0.0))
        throw DegenerateGapError("group series: zero group gap at r = " + std::to_string(r));
    const EigenGroup& target = groups[static_cast<std::size_t>(r - 1)];
    EigContext ctx;
    ctx.model = &model;
    ctx.et = model.basis.transpose() * e * model.basis;
    ctx.member.assign(static_cast<std::size_t>(model.dim()), 0);
    ctx.denom = Vector::Zero(model.dim());
    for (const EigenGroup& grp : groups) {
        for (Index j = grp.first; j <= grp.last; ++j) {
            if (grp.index == r)
                ctx.member[static_cast<std::size_t>(j - 1)] = 1;
            else
                ctx.denom(j - 1) = grp.value - target.value;
        }
    }
    ctx.gap = g;
    return ctx;
}

Vector rescaled_resolvent_diag(const EigContext& ctx, int m) {
    const Index d = ctx.denom.size();
    Vector w = Vector::Zero(d);
    for (Index k = 0; k < d; ++k) {
        if (ctx.member[static_cast<std::size_t>(k)]) {
            if (m == 0) w(k) = -1.0;
        } else if (m > 0) {
            w(k) = std::pow(ctx.gap / ctx.denom(k), m);
        }
    }
    return w;
}

std::vector<Matrix> poly_power_coeffs(const EigContext& ctx, int n_factors, int trunc) {
    const Index d = ctx.denom.size();
    // A starts as S(w): diagonal coefficients.
    std::vector<Matrix> a(static_cast<std::size_t>(trunc) + 1);
    std::vector<Vector> s(static_cast<std::size_t>(trunc) + 1);
    for (int m = 0; m <= trunc; ++m) {
        s[static_cast<std::size_t>(m)] = rescaled_resolvent_diag(ctx, m);
        a[static_cast<std::size_t>(m)] = Matrix(s[static_cast<std::size_t>(m)].asDiagonal());
    }
    for (int step = 0; step < n_factors; ++step) {
        // One truncated multiply by (Et S(w)): precompute C_i = A_i * Et,
        // then A'_m = sum_{i+k=m} C_i * diag(s_k) (column scalings).
        std::vector<Matrix> c(static_cast<std::size_t>(trunc) + 1);
        for (int i = 0; i <= trunc; ++i)
            c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * ctx.et;
        for (int m = trunc; m >= 0; --m) {
            Matrix acc = Matrix::Zero(d, d);
            for (int i = 0; i <= m; ++i)
                acc.noalias() +=
                    c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i)].asDiagonal();
            a[static_cast<std::size_t>(m)] = std::move(acc);
        }
    }
    return a;
}

std::vector<Matrix> projection_coeffs_eigenbasis(const EigContext& ctx, int p) {
    const Index d = ctx.denom.size();
    const int trunc = p - 1;
    std::vector<Matrix> coeffs(static_cast<std::size_t>(p));
    Matrix proj = Matrix::Zero(d, d);
    for (Index k = 0; k < d; ++k)
        if (ctx.member[static_cast<std::size_t>(k)]) proj(k, k) = 1.0;
    coeffs[0] = proj;
    if (p == 1) return coeffs;

    std::vector<Vector> s(static_cast<std::size_t>(trunc) + 1);
    for (int m = 0; m <= trunc; ++m)
        s[static_cast<std::size_t>(m)] = rescaled_resolvent_diag(ctx, m);

    std::vector<Matrix> a(static_cast<std::size_t>(trunc) + 1);
    for (int m = 0; m <= trunc; ++m)
        a[static_cast<std::size_t>(m)] = Matrix(s[static_cast<std::size_t>(m)].asDiagonal());

    double sign = 1.0;  // (-1)^{n+1} for the current n
    double gap_pow = 1.0;
    for (int n = 1; n <= trunc; ++n) {
        std::vector<Matrix> c(static_cast<std::size_t>(trunc) + 1);
        for (int i = 0; i <= trunc; ++i)
            c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] * ctx.et;
        for (int m = trunc; m >= 0; --m) {
            Matrix acc = Matrix::Zero(d, d);
            for (int i = 0; i <= m; ++i)
                acc.noalias() +=
                    c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i)].asDiagonal();
            a[static_cast<std::size_t>(m)] = std::move(acc);
        }
        gap_pow /= ctx.gap;
        coeffs[static_cast<std::size_t>(n)] = sign * gap_pow * a[static_cast<std::size_t>(n)];
        sign = -sign;
    }
    return coeffs;
}

namespace {

// Depth-first sweep over compositions (k_1..k_{n+1}) of n. The prefix
// product R^(k_1) E ... R^(k_depth) is shared between siblings; applying a
// resolvent factor is a column scaling in the eigenbasis.
void enumerate_impl(const EigContext& ctx, int n, int depth, int used, const Matrix& prefix,
                    std::vector<int>& ks, Matrix& sum,
                    const std::function<void(const std::vector<int>&, const Matrix&)>* callback) {
    const int parts = n + 1;
    if (depth == parts) {
        sum += prefix;
        if (callback) (*callback)(ks, prefix);
        return;
    }
    const Matrix b = prefix * ctx.et;
    const int remaining_parts = parts - depth - 1;
    for (int k = 0; k + used <= n; ++k) {
        if (remaining_parts == 0 && used + k != n) continue;
        Matrix next = b * rescaled_resolvent_diag(ctx, k).asDiagonal();
        // Undo the gap rescaling of this factor so the prefix is in z-units.
        next *= std::pow(ctx.gap, -k);
        ks.push_back(k);
        enumerate_impl(ctx, n, depth + 1, used + k, next, ks, sum, callback);
        ks.pop_back();
    }
}

} // namespace

Matrix coeff_enumerative_eigenbasis(const EigContext& ctx, int n) {
    const Index d = ctx.denom.size();
    Matrix sum = Matrix::Zero(d, d);
    std::vector<int> ks;
    for (int k1 = 0; k1 <= n; ++k1) {
        if (n == 0 && k1 != 0) continue;
        Matrix first =
            Matrix(rescaled_resolvent_diag(ctx, k1).asDiagonal()) * std::pow(ctx.gap, -k1);
        ks.assign(1, k1);
        if (n == 0) {
            sum += first;
        } else {
            enumerate_impl(ctx, n, 1, k1, first, ks, sum, nullptr);
        }
    }
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
    return sign * sum;
}

std::vector<double> eigenvalue_coeffs_from(const EigContext& ctx, double lambda0,
                                           const std::vector<Matrix>& proj_eigenbasis) {
    std::vector<double> out(proj_eigenbasis.size());
    if (out.empty()) return out;
    out[0] = lambda0;
    for (std::size_t n = 1; n < proj_eigenbasis.size(); ++n) {
        const Matrix& prev = proj_eigenbasis[n - 1];
        const Matrix& cur = proj_eigenbasis[n];
        double t1 = (prev.transpose().cwiseProduct(ctx.et)).sum();  // tr(P^(n-1) Et)
        double t2 = 0.0;                                            // tr(P^(n) diag(d))
        for (Index k = 0; k < ctx.denom.size(); ++k) t2 += cur(k, k) * ctx.denom(k);
        out[n] = t1 + t2;
    }
    return out;
}

} // namespace detail

double composition_count(int n, int m) {
    // C(n+m, n), as a double to keep large counts usable in estimates.
    double r = 1.0;
    for (int i = 1; i <= n; ++i) r = r * (m + i) / i;
    return r;
}

Matrix series_coefficient_projection(const PerturbationInstance& inst, Index j, int n,
                                     SeriesPath path, int n_enum_max) {
    if (n < 0) throw InputError("series_coefficient_projection: n must be >= 0");
    detail::EigContext ctx = detail::make_simple_context(inst, j);
    const Matrix& u = inst.base.basis;
    if (path == SeriesPath::automatic)
        path = (n <= n_enum_max) ? SeriesPath::enumerative : SeriesPath::generating;
    if (path == SeriesPath::enumerative)
        return u * detail::coeff_enumerative_eigenbasis(ctx, n) * u.transpose();
    auto coeffs = detail::projection_coeffs_eigenbasis(ctx, n + 1);
    return u * coeffs.back() * u.transpose();
}

double series_coefficient_eigenvalue(const PerturbationInstance& inst, Index j, int n) {
    if (n < 0) throw InputError("series_coefficient_eigenvalue: n must be >= 0");
    if (n == 0) return inst.base.eigenvalue(j);
    detail::EigContext ctx = detail::make_simple_context(inst, j);
    auto coeffs = detail::projection_coeffs_eigenbasis(ctx, n + 1);
    auto evals = detail::eigenvalue_coeffs_from(ctx, inst.base.eigenvalue(j), coeffs);
    return evals.back();
}

void enumerate_composition_terms(
    const PerturbationInstance& inst, Index j, int n,
    const std::function<void(const std::vector<int>&, const Matrix&)>& callback) {
    if (n < 0) throw InputError("enumerate_composition_terms: n must be >= 0");
    detail::EigContext ctx = detail::make_simple_context(inst, j);
    const Matrix& u = inst.base.basis;
    const Index d = inst.dim();
    Matrix sink = Matrix::Zero(d, d);
    std::function<void(const std::vector<int>&, const Matrix&)> wrapped =
        [&](const std::vector<int>& ks, const Matrix& term) {
            callback(ks, u * term * u.transpose());
        };
    std::vector<int> ks;
    for (int k1 = 0; k1 <= n; ++k1) {
        Matrix first =
            Matrix(detail::rescaled_resolvent_diag(ctx, k1).asDiagonal()) * std::pow(ctx.gap, -k1);
        ks.assign(1, k1);
        if (n == 0) {
            if (k1 == 0) wrapped(ks, first);
        } else {
            detail::enumerate_impl(ctx, n, 1, k1, first, ks, sink, &wrapped);
        }
    }
}

SeriesExpansion partial_sums(const PerturbationInstance& inst, Index j, int p) {
    if (p < 1) throw InputError("partial_sums: p must be >= 1");
    detail::EigContext ctx = detail::make_simple_context(inst, j);
    const Matrix& u = inst.base.basis;

    SeriesExpansion se;
    se.j = j;
    se.order = p;
    se.delta_report = delta(inst, j);

    auto coeffs_eig = detail::projection_coeffs_eigenbasis(ctx, p);
    se.eval_coeffs = detail::eigenvalue_coeffs_from(ctx, inst.base.eigenvalue(j), coeffs_eig);

    Matrix sum_eig = Matrix::Zero(inst.dim(), inst.dim());
    se.proj_coeffs.reserve(coeffs_eig.size());
    se.eval_partial_sum = 0.0;
    for (std::size_t n = 0; n < coeffs_eig.size(); ++n) {
        sum_eig += coeffs_eig[n];
        se.eval_partial_sum += se.eval_coeffs[n];
        se.proj_coeffs.push_back(u * coeffs_eig[n] * u.transpose());
    }
    se.proj_partial_sum = u * sum_eig * u.transpose();

    const double norm_pe_rsqrt = se.delta_report.norm_rp * std::sqrt(se.delta_report.gap);
    se.bounds = remainder_bounds(se.delta_report, norm_pe_rsqrt, p);
    return se;
}

GroupSeries multiple_group_series(const SpectralModel& model,
                                  const std::vector<EigenGroup>& groups, Index r, const Matrix& e,
                                  int p, GroupSeriesSign sign) {
    if (p < 1) throw InputError("multiple_group_series: p must be >= 1");
    detail::EigContext ctx = detail::make_group_context(model, groups, r, e);
    const Matrix& u = model.basis;

    GroupSeries gs;
    gs.r = r;
    gs.order = p;
    gs.gap = ctx.gap;
    gs.delta_r = group_delta(model, groups, e, r);
    gs.bound_applicable = gs.delta_r < 0.25;
    gs.geometric_bound = std::pow(4.0 * gs.delta_r, p);

    auto coeffs_eig = detail::projection_coeffs_eigenbasis(ctx, p);
    const double flip = (sign == GroupSeriesSign::standard) ? 1.0 : -1.0;
    Matrix sum_eig = Matrix::Zero(model.dim(), model.dim());
    gs.coeffs.reserve(coeffs_eig.size());
    for (auto& c : coeffs_eig) {
        c *= flip;
        sum_eig += c;
        gs.coeffs.push_back(u * c * u.transpose());
    }
    gs.partial_sum = u * sum_eig * u.transpose();
    return gs;
}

} // namespace eigenpert
