#include "eigenpert/oracles.hpp"

#include "eigenpert/series.hpp"
#include "series_internal.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

namespace eigenpert {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;

constexpr double kPi = 3.14159265358979323846;

// Sigma + tE, presymmetrized so reconstruction roundoff cannot trip the
// symmetry gate.
Matrix perturbed_matrix(const PerturbationInstance& inst, double t) {
    Matrix m = reconstruct(inst.base) + t * inst.e();
    return 0.5 * (m + m.transpose());
}

} // namespace

ExactPerturbed exact_perturbed(const PerturbationInstance& inst) {
    return ExactPerturbed{decompose_symmetric(SymmetricMatrix(perturbed_matrix(inst, 1.0)))};
}

CheckResult make_check(std::string name, bool applicable, double lhs, double rhs,
                       double slack_tol) {
    CheckResult r;
    r.check = std::move(name);
    r.applicable = applicable;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.pass = !applicable || lhs <= rhs + slack_tol;
    return r;
}

SeparationReport verify_separation(const PerturbationInstance& inst, Index j) {
    const DeltaReport rep = delta(inst, j);
    SeparationReport out;
    out.applicable = rep.delta < 0.5;
    const SpectralModel perturbed = exact_perturbed(inst).model;
    const Vector& l = inst.base.eigenvalues;
    const Vector& lh = perturbed.eigenvalues;

    out.center = make_check("separation_center", out.applicable, std::abs(lh(j - 1) - l(j - 1)),
                            rep.delta * rep.gap);
    out.pass = out.center.pass;
    if (j < inst.dim()) {
        out.upper_neighbor = make_check("separation_upper", out.applicable, lh(j) - l(j),
                                        rep.delta * (l(j - 1) - l(j)));
        out.pass = out.pass && out.upper_neighbor->pass;
    }
    if (j > 1) {
        // lhat_{j-1} - l_{j-1} >= -delta (l_{j-1} - l_j), flipped to lhs <= rhs.
        out.lower_neighbor = make_check("separation_lower", out.applicable,
                                        -(lh(j - 2) - l(j - 2)), rep.delta * (l(j - 2) - l(j - 1)));
        out.pass = out.pass && out.lower_neighbor->pass;
    }
    return out;
}

namespace {

// j-th spectral projector of Sigma + tE; refuses non-simple stencil points.
Matrix projector_at(const PerturbationInstance& inst, Index j, double t) {
    if (t == 0.0) return projector(inst.base, j);
    SpectralModel m = decompose_symmetric(SymmetricMatrix(perturbed_matrix(inst, t)));
    if (!(spectral_gap(m, j) > 0.0))
        throw StencilError("finite difference: eigenvalue crossing on the stencil at t = " +
                           std::to_string(t));
    return projector(m, j);
}

Matrix central_difference(const PerturbationInstance& inst, Index j, int n, double h) {
    switch (n) {
        case 1:
            return (projector_at(inst, j, h) - projector_at(inst, j, -h)) / (2.0 * h);
        case 2:
            return (projector_at(inst, j, h) - 2.0 * projector_at(inst, j, 0.0) +
                    projector_at(inst, j, -h)) /
                   (h * h);
        case 3:
            return (projector_at(inst, j, 2.0 * h) - 2.0 * projector_at(inst, j, h) +
                    2.0 * projector_at(inst, j, -h) - projector_at(inst, j, -2.0 * h)) /
                   (2.0 * h * h * h);
        default:
            throw InputError("finite_difference_coefficient: n must be in {1,2,3}");
    }
}

} // namespace

Matrix finite_difference_coefficient(const PerturbationInstance& inst, Index j, int n, double h) {
    if (n < 1 || n > 3)
        throw InputError("finite_difference_coefficient: n must be in {1,2,3}");
    const double e_norm = operator_norm(inst.e());
    const Index d = inst.dim();
    if (e_norm == 0.0) return Matrix::Zero(d, d);
    const double g = spectral_gap(inst.base, j);
    if (!(g > 0.0))
        throw DegenerateGapError("finite_difference_coefficient: zero gap");
    if (h <= 0.0) {
        const double u = std::numeric_limits<double>::epsilon() / 2.0;
        h = std::pow(u, 1.0 / (n + 2)) * g / e_norm;
    }
    // The expansion stays valid while delta_j(tE) = |t| delta_j(E) < 1/2;
    // the widest stencil point sits at |t| = n h.
    const DeltaReport rep = delta(inst, j);
    if (n * h * rep.delta >= 0.5)
        throw StencilError("finite difference: step leaves the delta < 1/2 region");

    const Matrix coarse = central_difference(inst, j, n, h);
    const Matrix fine = central_difference(inst, j, n, h / 2.0);
    // One Richardson step for the O(h^2) central differences.
    Matrix deriv = (4.0 * fine - coarse) / 3.0;
    double factorial = 1.0;
    for (int i = 2; i <= n; ++i) factorial *= i;
    return deriv / factorial;
}

ContourSpec default_contour(const SpectralModel& model, Index j, int nodes) {
    const double g = spectral_gap(model, j);
    if (!(g > 0.0))
        throw DegenerateGapError("default_contour: zero gap");
    return ContourSpec{model.eigenvalue(j), g / 2.0, nodes};
}

namespace {

void validate_contour(const Vector& eigenvalues, const ContourSpec& spec) {
    if (spec.radius <= 0.0)
        throw InputError("contour: radius must be positive");
    if (spec.nodes < 16)
        throw InputError("contour: need at least 16 nodes");
    for (Index k = 0; k < eigenvalues.size(); ++k) {
        const double dist = std::abs(std::abs(eigenvalues(k) - spec.center) - spec.radius);
        if (dist <= 1e-10 * spec.radius)
            throw InputError("contour: eigenvalue " + std::to_string(eigenvalues(k)) +
                             " lies within relative tolerance 1e-10 of the circle");
    }
}

// Trapezoid rule on the circle: (1/2 pi i) contour integral of f(z) dz equals
// (rho/N) sum_m f(z_m) e^{i theta_m}, z_m = c + rho e^{i theta_m}.
ContourResult trapezoid_sum(const std::function<ComplexMatrix(std::complex<double>)>& f,
                            const ContourSpec& spec, double prefactor, Index d) {
    ComplexMatrix acc = ComplexMatrix::Zero(d, d);
    for (int m = 0; m < spec.nodes; ++m) {
        const double theta = 2.0 * kPi * m / spec.nodes;
        const std::complex<double> phase(std::cos(theta), std::sin(theta));
        const std::complex<double> z = spec.center + spec.radius * phase;
        acc += f(z) * phase;
    }
    acc *= prefactor * spec.radius / static_cast<double>(spec.nodes);
    ContourResult out;
    out.matrix = acc.real();
    out.imag_residual = acc.imag().cwiseAbs().maxCoeff();
    out.nodes = spec.nodes;
    return out;
}

} // namespace

ContourResult contour_projector(const SymmetricMatrix& a, const ContourSpec& spec) {
    const SpectralModel model = decompose_symmetric(a);
    validate_contour(model.eigenvalues, spec);
    const Index d = a.dim();
    const Matrix& m = a.matrix();
    auto resolvent_term = [&](std::complex<double> z) {
        ComplexMatrix shifted = m.cast<std::complex<double>>();
        shifted.diagonal().array() -= z;
        return ComplexMatrix(shifted.partialPivLu().solve(ComplexMatrix::Identity(d, d)));
    };
    ContourResult out = trapezoid_sum(resolvent_term, spec, -1.0, d);
    // Conjugate node pairs cancel the imaginary parts; anything beyond
    // roundoff signals a broken contour.
    if (out.imag_residual >= 1e-10)
        throw DivergenceError("contour_projector: imaginary residual " +
                              std::to_string(out.imag_residual) + " >= 1e-10");
    return out;
}

ContourResult contour_projector_adaptive(const SymmetricMatrix& a, ContourSpec spec, double tol,
                                         int max_nodes) {
    ContourResult prev = contour_projector(a, spec);
    while (spec.nodes * 2 <= max_nodes) {
        spec.nodes *= 2;
        ContourResult next = contour_projector(a, spec);
        if (operator_norm(next.matrix - prev.matrix) < tol) return next;
        prev = std::move(next);
    }
    throw DivergenceError("contour_projector_adaptive: no convergence below tolerance by " +
                          std::to_string(max_nodes) + " nodes");
}

ContourResult contour_series_coefficient(const PerturbationInstance& inst, Index j, int n,
                                         const ContourSpec& spec) {
    if (n < 1)
        throw InputError("contour_series_coefficient: n must be >= 1");
    validate_contour(inst.base.eigenvalues, spec);
    const Index d = inst.dim();
    const Matrix sigma = reconstruct(inst.base);
    const ComplexMatrix e = inst.e().cast<std::complex<double>>();
    auto integrand = [&](std::complex<double> z) {
        ComplexMatrix shifted = sigma.cast<std::complex<double>>();
        shifted.diagonal().array() -= z;
        Eigen::PartialPivLU<ComplexMatrix> lu(shifted);
        ComplexMatrix res = lu.solve(ComplexMatrix::Identity(d, d));
        ComplexMatrix acc = res;
        for (int i = 0; i < n; ++i) acc = acc * e * res;
        return acc;
    };
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^{n-1}
    return trapezoid_sum(integrand, spec, sign, d);
}

RemainderIdentityReport verify_remainder_identity(const PerturbationInstance& inst, Index j,
                                                  int p, int truncation) {
    if (p < 1) throw InputError("verify_remainder_identity: p must be >= 1");
    if (truncation < p)
        throw InputError("verify_remainder_identity: truncation must be >= p");
    const DeltaReport rep = delta(inst, j);
    RemainderIdentityReport out;
    out.truncation = truncation;
    out.applicable = rep.delta < 0.5;
    if (!out.applicable) return out;

    const SpectralModel& base = inst.base;
    const SpectralModel perturbed = exact_perturbed(inst).model;
    const Matrix& u = base.basis;
    const Index d = inst.dim();
    const double g = rep.gap;
    const double lam = base.eigenvalue(j);
    const double tau = perturbed.eigenvalue(j) - lam;

    // Left side: Phat_j - sum_{n<p} P^(n).
    const SeriesExpansion se = partial_sums(inst, j, p);
    const Matrix phat = projector(perturbed, j);
    const Matrix lhs = phat - se.proj_partial_sum;
    out.lhs_norm = hs_norm(lhs);

    // C_m = [z^m] S(z) (E S(z))^{p-1}, eigenbasis, in gap-rescaled units.
    detail::EigContext ctx = detail::make_simple_context(inst, j);
    const std::vector<Matrix> ctil = detail::poly_power_coeffs(ctx, p - 1, truncation);

    // Rhat powers: Rhat = sum_{k != j} (lhat_k - l_j)^{-1} Phat_k.
    Vector rhat_w = Vector::Zero(d);
    for (Index k = 0; k < d; ++k)
        if (k != j - 1) rhat_w(k) = 1.0 / (perturbed.eigenvalues(k) - lam);
    const Matrix& uh = perturbed.basis;

    const Matrix& e = inst.e();
    Matrix rhs = Matrix::Zero(d, d);
    // kappa = p - m >= 1: explicit Rhat^kappa factors.
    double gap_pow = 1.0;
    for (int m = 0; m <= p - 1; ++m) {
        const Matrix cm = u * ctil[static_cast<std::size_t>(m)] * u.transpose() * gap_pow;
        const int kappa = p - m;
        Matrix rhat_pow =
            uh * rhat_w.array().pow(kappa).matrix().asDiagonal() * uh.transpose();
        rhs += cm * e * rhat_pow;
        gap_pow /= g;
    }
    // kappa <= 0: scalar powers of tau folded against Phat_j; the weights
    // (tau/g)^{m-p} stay below delta^{m-p} so the sum is stable.
    Matrix tail_sum = Matrix::Zero(d, d);
    double w = 1.0;  // (tau/g)^{m-p} at m = p
    for (int m = p; m <= truncation; ++m) {
        tail_sum += w * ctil[static_cast<std::size_t>(m)];
        w *= tau / g;
    }
    rhs -= std::pow(g, -p) * (u * tail_sum * u.transpose()) * e * phat;
    rhs *= (p % 2 == 1) ? 1.0 : -1.0;  // (-1)^{p-1}

    out.discrepancy = hs_norm(lhs - rhs);

    // Geometric tail over the omitted kappa < p - truncation terms, from the
    // per-term bounds and the composition count.
    const double a = rep.norm_rp * std::sqrt(g);
    const double two_delta = 2.0 * rep.delta;
    out.tail_estimate = a / std::sqrt(g) * std::pow(rep.delta_prime, p - 1) *
                        std::pow(2.0, 2 * p - 1) * std::pow(two_delta, truncation - p + 1) /
                        ((1.0 - two_delta) * (1.0 - two_delta));
    out.pass = out.discrepancy <= out.tail_estimate + 1e-10;
    return out;
}

CheckResult verify_weighted_projection_bound(const PerturbationInstance& inst, Index j) {
    const DeltaReport rep = delta(inst, j);
    const bool applicable = rep.delta < 0.5;
    const SpectralModel perturbed = exact_perturbed(inst).model;
    const Matrix phat = projector(perturbed, j);
    const double lhs = hs_norm(abs_resolvent_inv_sqrt(inst.base, j) * phat);
    const double a = rep.norm_rp * std::sqrt(rep.gap);  // ||(|R|^{1/2} E P||_2
    const double rhs = applicable ? a / (1.0 - 2.0 * rep.delta) : 0.0;
    return make_check("weighted_projection", applicable, lhs, rhs);
}

double basic_identity_residual(const PerturbationInstance& inst, Index j) {
    const SpectralModel perturbed = exact_perturbed(inst).model;
    const Matrix phat = projector(perturbed, j);
    const double lhat = perturbed.eigenvalue(j);
    double worst = 0.0;
    for (Index k = 1; k <= inst.dim(); ++k) {
        if (k == j) continue;
        const Matrix pk = projector(inst.base, k);
        const Matrix residual =
            (lhat - inst.base.eigenvalue(k)) * pk * phat - pk * inst.e() * phat;
        worst = std::max(worst, hs_norm(residual));
    }
    return worst;
}

} // namespace eigenpert
