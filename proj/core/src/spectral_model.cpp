#include "eigenpert/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace eigenpert {

namespace {

void check_index(const SpectralModel& model, Index j) {
    if (j < 1 || j > model.dim())
        throw InputError("spectral index out of range: j = " + std::to_string(j));
}

void require_simple(const SpectralModel& model, Index j, const char* op) {
    if (!is_simple(model, j))
        throw DegenerateGapError(std::string(op) + ": eigenvalue " + std::to_string(j) +
                                 " has zero spectral gap");
}

// U diag(w) U^T with per-eigenvalue weights; the workhorse behind every
// derived spectral object.
Matrix weighted_projector_sum(const SpectralModel& model, const Vector& weights) {
    return model.basis * weights.asDiagonal() * model.basis.transpose();
}

} // namespace

SpectralModel SpectralModel::diagonal(const Vector& values) {
    const Index d = values.size();
    if (d < 1)
        throw InputError("SpectralModel::diagonal: empty spectrum");
    if (!values.allFinite())
        throw InputError("SpectralModel::diagonal: non-finite eigenvalues");
    std::vector<Index> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return values(a) > values(b); });
    SpectralModel model;
    model.eigenvalues.resize(d);
    model.basis = Matrix::Zero(d, d);
    for (Index i = 0; i < d; ++i) {
        model.eigenvalues(i) = values(order[static_cast<std::size_t>(i)]);
        model.basis(order[static_cast<std::size_t>(i)], i) = 1.0;
    }
    return model;
}

SpectralModel decompose_symmetric(const SymmetricMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.matrix());
    if (es.info() != Eigen::Success)
        throw InputError("decompose_symmetric: eigensolver failed");
    const Index d = a.dim();
    SpectralModel model;
    model.eigenvalues.resize(d);
    model.basis.resize(d, d);
    // Eigen sorts ascending; flip to non-increasing.
    for (Index i = 0; i < d; ++i) {
        model.eigenvalues(i) = es.eigenvalues()(d - 1 - i);
        model.basis.col(i) = es.eigenvectors().col(d - 1 - i);
    }
    return model;
}

double spectral_gap(const SpectralModel& model, Index j) {
    check_index(model, j);
    const Index d = model.dim();
    if (d < 2)
        throw InputError("spectral_gap: needs dimension >= 2");
    const Vector& l = model.eigenvalues;
    if (j == 1) return l(0) - l(1);
    if (j == d) return l(d - 2) - l(d - 1);
    return std::min(l(j - 2) - l(j - 1), l(j - 1) - l(j));
}

bool is_simple(const SpectralModel& model, Index j) {
    return spectral_gap(model, j) > 0.0;
}

Matrix projector(const SpectralModel& model, Index j) {
    check_index(model, j);
    const Vector u = model.basis.col(j - 1);
    return u * u.transpose();
}

Matrix reduced_resolvent(const SpectralModel& model, Index j) {
    require_simple(model, j, "reduced_resolvent");
    const Index d = model.dim();
    Vector w = Vector::Zero(d);
    for (Index k = 0; k < d; ++k)
        if (k != j - 1)
            w(k) = 1.0 / (model.eigenvalues(k) - model.eigenvalues(j - 1));
    return weighted_projector_sum(model, w);
}

Matrix abs_resolvent_sqrt(const SpectralModel& model, Index j) {
    require_simple(model, j, "abs_resolvent_sqrt");
    const Index d = model.dim();
    Vector w = Vector::Zero(d);
    for (Index k = 0; k < d; ++k)
        if (k != j - 1)
            w(k) = 1.0 / std::sqrt(std::abs(model.eigenvalues(k) - model.eigenvalues(j - 1)));
    return weighted_projector_sum(model, w);
}

Matrix abs_resolvent_inv_sqrt(const SpectralModel& model, Index j) {
    require_simple(model, j, "abs_resolvent_inv_sqrt");
    const Index d = model.dim();
    Vector w = Vector::Zero(d);
    for (Index k = 0; k < d; ++k)
        if (k != j - 1)
            w(k) = std::sqrt(std::abs(model.eigenvalues(k) - model.eigenvalues(j - 1)));
    return weighted_projector_sum(model, w);
}

Matrix weight_operator(const SpectralModel& model, Index j) {
    require_simple(model, j, "weight_operator");
    const Index d = model.dim();
    const double g = spectral_gap(model, j);
    Vector w(d);
    for (Index k = 0; k < d; ++k)
        w(k) = (k == j - 1)
                   ? 1.0 / std::sqrt(g)
                   : 1.0 / std::sqrt(std::abs(model.eigenvalues(k) - model.eigenvalues(j - 1)));
    return weighted_projector_sum(model, w);
}

Matrix weight_operator_inverse(const SpectralModel& model, Index j) {
    require_simple(model, j, "weight_operator_inverse");
    const Index d = model.dim();
    const double g = spectral_gap(model, j);
    Vector w(d);
    for (Index k = 0; k < d; ++k)
        w(k) = (k == j - 1)
                   ? std::sqrt(g)
                   : std::sqrt(std::abs(model.eigenvalues(k) - model.eigenvalues(j - 1)));
    return weighted_projector_sum(model, w);
}

Matrix resolvent_pseudo_inverse(const SpectralModel& model, Index j) {
    require_simple(model, j, "resolvent_pseudo_inverse");
    const Index d = model.dim();
    Vector w = Vector::Zero(d);
    for (Index k = 0; k < d; ++k)
        if (k != j - 1)
            w(k) = model.eigenvalues(k) - model.eigenvalues(j - 1);
    return weighted_projector_sum(model, w);
}

Matrix reconstruct(const SpectralModel& model) {
    return weighted_projector_sum(model, model.eigenvalues);
}

} // namespace eigenpert
