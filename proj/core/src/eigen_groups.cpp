#include "eigenpert/eigen_groups.hpp"

#include <cmath>

namespace eigenpert {

namespace {

void check_group_index(const std::vector<EigenGroup>& groups, Index r) {
    if (r < 1 || r > static_cast<Index>(groups.size()))
        throw InputError("group index out of range: r = " + std::to_string(r));
}

Vector group_weights(const SpectralModel& model, const std::vector<EigenGroup>& groups, Index r,
                     double (*f)(double)) {
    const Index d = model.dim();
    Vector w = Vector::Zero(d);
    for (const EigenGroup& g : groups) {
        if (g.index == r) continue;
        const double diff = g.value - groups[static_cast<std::size_t>(r - 1)].value;
        for (Index j = g.first; j <= g.last; ++j)
            w(j - 1) = f(diff);
    }
    return w;
}

} // namespace

std::vector<EigenGroup> group_eigenvalues(const SpectralModel& model, double tol) {
    if (tol < 0.0)
        tol = 1e-9 * model.eigenvalues.cwiseAbs().maxCoeff();
    const Index d = model.dim();
    std::vector<EigenGroup> groups;
    Index first = 1;
    for (Index j = 2; j <= d + 1; ++j) {
        const bool close =
            j <= d && model.eigenvalues(j - 2) - model.eigenvalues(j - 1) <= tol;
        if (!close) {
            EigenGroup g;
            g.index = static_cast<Index>(groups.size()) + 1;
            g.first = first;
            g.last = j - 1;
            g.value = model.eigenvalues.segment(first - 1, j - first).mean();
            groups.push_back(g);
            first = j;
        }
    }
    return groups;
}

double group_gap(const std::vector<EigenGroup>& groups, Index r) {
    check_group_index(groups, r);
    const Index nr = static_cast<Index>(groups.size());
    if (nr < 2)
        throw DegenerateGapError("group_gap: a single group has no spectral gap");
    const auto value = [&](Index s) { return groups[static_cast<std::size_t>(s - 1)].value; };
    if (r == 1) return value(1) - value(2);
    if (r == nr) return value(nr - 1) - value(nr);
    return std::min(value(r - 1) - value(r), value(r) - value(r + 1));
}

Matrix group_projector(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                       Index r) {
    check_group_index(groups, r);
    const EigenGroup& g = groups[static_cast<std::size_t>(r - 1)];
    const Matrix block = model.basis.middleCols(g.first - 1, g.rank());
    return block * block.transpose();
}

Matrix group_reduced_resolvent(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                               Index r) {
    check_group_index(groups, r);
    Vector w = group_weights(model, groups, r, +[](double diff) { return 1.0 / diff; });
    return model.basis * w.asDiagonal() * model.basis.transpose();
}

Matrix group_abs_resolvent_sqrt(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                                Index r) {
    check_group_index(groups, r);
    Vector w = group_weights(model, groups, r,
                             +[](double diff) { return 1.0 / std::sqrt(std::abs(diff)); });
    return model.basis * w.asDiagonal() * model.basis.transpose();
}

Matrix group_weight_operator(const SpectralModel& model, const std::vector<EigenGroup>& groups,
                             Index r) {
    check_group_index(groups, r);
    const double g = group_gap(groups, r);
    if (!(g > 0.0))
        throw DegenerateGapError("group_weight_operator: zero group gap");
    Vector w = group_weights(model, groups, r,
                             +[](double diff) { return 1.0 / std::sqrt(std::abs(diff)); });
    const EigenGroup& gr = groups[static_cast<std::size_t>(r - 1)];
    for (Index j = gr.first; j <= gr.last; ++j)
        w(j - 1) = 1.0 / std::sqrt(g);
    return model.basis * w.asDiagonal() * model.basis.transpose();
}

} // namespace eigenpert
