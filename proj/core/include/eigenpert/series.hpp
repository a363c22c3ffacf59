#pragma once

#include "eigenpert/bounds.hpp"
#include "eigenpert/perturbation.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace eigenpert {

// How to evaluate a projection coefficient P_j^(n):
//  - enumerative: explicit sum over the C(2n, n) compositions of n into
//    n+1 parts, R^(0) = -P_j, R^(k) = R_j^k.
//  - generating: truncated matrix-polynomial multiplication; with
//    S(z) = -P_j + sum_{k>=1} z^k R_j^k, the coefficient is
//    (-1)^{n+1} [z^n] S(z) (E S(z))^n.
//  - automatic: enumerative up to n_enum_max (default 7), generating beyond.
enum class SeriesPath { automatic, enumerative, generating };

inline constexpr int kDefaultEnumMax = 7;

// Number of (n+1)-tuples of nonnegative integers summing to m: C(n+m, n).
double composition_count(int n, int m);

// P_j^(n). n = 0 returns P_j. Requires g_j > 0.
Matrix series_coefficient_projection(const PerturbationInstance& inst, Index j, int n,
                                     SeriesPath path = SeriesPath::automatic,
                                     int n_enum_max = kDefaultEnumMax);

// lambda_j^(n) = tr(P_j^(n-1) E) + tr(P_j^(n) M_j) with M_j the resolvent
// pseudo-inverse. n = 0 returns lambda_j.
double series_coefficient_eigenvalue(const PerturbationInstance& inst, Index j, int n);

// Visits every composition term of P_j^(n) before the global sign:
// callback(ks, term) with ks = (k_1..k_{n+1}), term = R^(k_1) E ... R^(k_{n+1}).
void enumerate_composition_terms(
    const PerturbationInstance& inst, Index j, int n,
    const std::function<void(const std::vector<int>&, const Matrix&)>& callback);

// Coefficients 0..p-1, both partial sums, and every remainder bound.
struct SeriesExpansion {
    Index j = 0;
    int order = 0;  // p
    std::vector<Matrix> proj_coeffs;
    std::vector<double> eval_coeffs;
    Matrix proj_partial_sum;
    double eval_partial_sum = 0.0;
    DeltaReport delta_report;
    std::map<std::string, BoundValue> bounds;
};

SeriesExpansion partial_sums(const PerturbationInstance& inst, Index j, int p);

// Grouped expansion around a (possibly multiple) eigenvalue group.
//
// Two sign conventions exist for the grouped coefficients; they differ by a
// global factor (-1) at every order. `standard` reduces to the simple-
// eigenvalue series on singleton groups (and is the convention the
// convergence test validates); `negated` flips every coefficient.
enum class GroupSeriesSign { standard, negated };

struct GroupSeries {
    Index r = 0;
    int order = 0;
    double delta_r = 0.0;
    double gap = 0.0;
    std::vector<Matrix> coeffs;
    Matrix partial_sum;
    double geometric_bound = 0.0;  // (4 delta_r)^p; valid when delta_r < 1/4
    bool bound_applicable = false;
};

GroupSeries multiple_group_series(const SpectralModel& model,
                                  const std::vector<EigenGroup>& groups, Index r,
                                  const Matrix& e, int p,
                                  GroupSeriesSign sign = GroupSeriesSign::standard);

} // namespace eigenpert
