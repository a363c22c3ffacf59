#include "eigenpert/covariance.hpp"

#include <cmath>

namespace eigenpert {

SpectralModel DecayModel::spectral() const {
    SpectralModel m;
    m.eigenvalues = eigenvalues;
    m.basis = Matrix::Identity(dim(), dim());
    return m;
}

double DecayModel::truncation_tail_ratio() const {
    if (kind != DecayKind::exponential_alpha) return 0.0;
    const Index d = dim();
    // Tail sum_{k>d} exp(-k^alpha), summed until the increments vanish; the
    // integrand decays faster than geometrically relative to machine epsilon
    // within a few hundred terms for any alpha in (0,1].
    double tail = 0.0;
    for (Index k = d + 1;; ++k) {
        const double term = std::exp(-std::pow(static_cast<double>(k), alpha));
        tail += term;
        if (term < 1e-18 * (tail + 1.0) || k > d + 100000) break;
    }
    return tail / (eigenvalues.sum() + tail);
}

DecayModel build_decay_model(double alpha, Index d) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InputError("build_decay_model: alpha must lie in (0, 1]");
    if (d < 2)
        throw InputError("build_decay_model: d must be >= 2");
    DecayModel m;
    m.kind = DecayKind::exponential_alpha;
    m.alpha = alpha;
    m.eigenvalues.resize(d);
    for (Index j = 1; j <= d; ++j)
        m.eigenvalues(j - 1) = std::exp(-std::pow(static_cast<double>(j), alpha));
    return m;
}

DecayModel build_user_decay_model(const Vector& eigenvalues) {
    if (eigenvalues.size() < 2)
        throw InputError("build_user_decay_model: need at least two eigenvalues");
    for (Index k = 0; k < eigenvalues.size(); ++k) {
        if (!(eigenvalues(k) > 0.0))
            throw InputError("build_user_decay_model: eigenvalues must be positive");
        if (k > 0 && eigenvalues(k) > eigenvalues(k - 1))
            throw InputError("build_user_decay_model: eigenvalues must be non-increasing");
    }
    DecayModel m;
    m.kind = DecayKind::user_list;
    m.alpha = 0.0;
    m.eigenvalues = eigenvalues;
    return m;
}

Dist parse_dist(const std::string& name) {
    if (name == "gaussian") return Dist::gaussian;
    if (name == "rademacher") return Dist::rademacher;
    if (name == "uniform_scaled") return Dist::uniform_scaled;
    if (name == "student_t") return Dist::student_t;
    throw InputError("unknown distribution: " + name);
}

std::string dist_name(Dist dist) {
    switch (dist) {
        case Dist::gaussian: return "gaussian";
        case Dist::rademacher: return "rademacher";
        case Dist::uniform_scaled: return "uniform_scaled";
        case Dist::student_t: return "student_t";
    }
    return "?";
}

namespace {

// Unit-variance t with 5 degrees of freedom: Z / sqrt(W/5) scaled by
// sqrt(3/5); symmetric but not sub-Gaussian.
double next_student_t5(SplitMix64& rng) {
    const double z = rng.next_normal();
    double w = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double x = rng.next_normal();
        w += x * x;
    }
    return std::sqrt(0.6) * z / std::sqrt(w / 5.0);
}

} // namespace

Matrix sample_data(const SpectralModel& model, const SamplerSpec& spec) {
    if (spec.n < 1)
        throw InputError("sample_data: n must be >= 1");
    if (spec.dist == Dist::student_t && !spec.out_of_assumption)
        throw InputError(
            "sample_data: student_t violates the sampling assumption; set out_of_assumption");
    const Index d = model.dim();
    SplitMix64 rng(spec.seed);
    Matrix coeffs(spec.n, d);  // sqrt(lambda_j) eta_j^(i)
    const Vector scale = model.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    for (Index i = 0; i < spec.n; ++i) {
        for (Index j = 0; j < d; ++j) {
            double eta = 0.0;
            switch (spec.dist) {
                case Dist::gaussian: eta = rng.next_normal(); break;
                case Dist::rademacher: eta = rng.next_rademacher(); break;
                case Dist::uniform_scaled: eta = rng.next_uniform_scaled(); break;
                case Dist::student_t: eta = next_student_t5(rng); break;
            }
            coeffs(i, j) = scale(j) * eta;
        }
    }
    if (model.basis.isIdentity(0.0)) return coeffs;
    return coeffs * model.basis.transpose();
}

SymmetricMatrix empirical_covariance(const Matrix& data) {
    if (data.rows() < 1)
        throw InputError("empirical_covariance: need at least one sample");
    Matrix cov = data.transpose() * data / static_cast<double>(data.rows());
    return SymmetricMatrix(0.5 * (cov + cov.transpose()));
}

RelativeRankStats relative_rank_stats(const SpectralModel& model, Index j) {
    const double g = spectral_gap(model, j);
    if (!(g > 0.0))
        throw DegenerateGapError("relative_rank_stats: zero gap at j = " + std::to_string(j));
    RelativeRankStats s;
    s.j = j;
    const Vector& l = model.eigenvalues;
    const double lj = l(j - 1);
    s.ratio_lg = lj / g;
    for (Index k = 0; k < model.dim(); ++k) {
        if (k == j - 1) continue;
        const double diff = l(k) - lj;
        s.abs_sum += l(k) / std::abs(diff);
        s.signed_sum += l(k) / diff;
        s.quad_sum += l(k) * l(k) / (diff * diff);
        s.proj_sum += lj * l(k) / (diff * diff);
    }
    return s;
}

bool RelativeRankStats::condition_rg(double c1, Index n) const {
    return ratio_lg * (abs_sum + ratio_lg) <= c1 * static_cast<double>(n);
}

bool RelativeRankStats::condition_relative_rank(double c1, Index n) const {
    return abs_sum + ratio_lg <= std::sqrt(c1 * static_cast<double>(n));
}

double gaussian_first_two_term_moment(const SpectralModel& model, Index j, Index n) {
    if (n < 1)
        throw InputError("gaussian_first_two_term_moment: n must be >= 1");
    const RelativeRankStats st = relative_rank_stats(model, j);
    const double lj = model.eigenvalue(j);
    const double nn = static_cast<double>(n);
    const double s = st.signed_sum;
    const double q = st.quad_sum;
    return lj * lj / nn *
           (2.0 - 4.0 / nn * s + (nn + 2.0) / (nn * nn) * s * s +
            2.0 * (nn + 2.0) / (nn * nn) * q);
}

} // namespace eigenpert
