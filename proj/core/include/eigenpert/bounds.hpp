#pragma once

#include "eigenpert/perturbation.hpp"

#include <map>
#include <string>

namespace eigenpert {

// A remainder-bound evaluation. Inapplicability (precondition on delta or
// delta' violated, or unknown constant) is a result state so that sweeps can
// record it instead of aborting.
struct BoundValue {
    double value = 0.0;
    bool applicable = false;
    std::string reason;  // empty when applicable

    static BoundValue ok(double v) { return {v, true, {}}; }
    static BoundValue na(double v, std::string why) { return {v, false, std::move(why)}; }
};

// All remainder bounds for the order-p Taylor approximations at index j.
//
//   thm1          4 g^{-1/2} ||P E |R|^{1/2}||_2 (4d')^{p-1} / (1-2d)^2   [d < 1/2]
//   cor2_proj     4 g^{-1/2} ||P E |R|^{1/2}||_2 (4d')^{p-1} / (1-4d')    [d' < 1/4]
//   cor2_proj_tail(4d')^p / (1-4d')                                       [d' < 1/4]
//   hfc_proj      2 (2d)^p / (1-2d)                                       [d < 1/2]
//   thm2          12 ||P E |R|^{1/2}||_2^2 (4d')^{p-2} / (1-2d)^3         [d < 1/2, p >= 2]
//   cor2_eval     8 ||P E |R|^{1/2}||_2^2 (4d')^{p-2} / (1-4d')           [d' < 1/4, p >= 2]
//   cor2_eval_tail g (4d')^p / (1-4d')                                    [d' < 1/4, p >= 2]
//   hfc_eval      g (2d)^p / (1-2d), constant 1 proven only for p = 1
std::map<std::string, BoundValue> remainder_bounds(const PerturbationInstance& inst, Index j,
                                                   int p);
std::map<std::string, BoundValue> remainder_bounds(const DeltaReport& rep, double norm_pe_rsqrt,
                                                   int p);

// Scalar accessors; throw BoundInapplicableError outside the validity region.
double remainder_bound_projection(const PerturbationInstance& inst, Index j, int p);
double remainder_bound_eigenvalue(const PerturbationInstance& inst, Index j, int p);

// |lambda_hat_j - lambda_j| <= ||P E P||_2 + C ||P E |R|^{1/2}||_2^2 for
// delta_j <= 1/2 - eps. C defaults to 12/(2 eps)^3 (the p = 2 remainder
// constant at the worst allowed delta); it is a calibration parameter, not a
// stated constant.
struct TwoTermBound {
    double linear = 0.0;     // ||P E P||_2
    double quadratic = 0.0;  // ||P E |R|^{1/2}||_2^2
    double constant = 0.0;   // C
    double total = 0.0;      // linear + C * quadratic
    bool applicable = false;
};

TwoTermBound eigenvalue_two_term_bound(const PerturbationInstance& inst, Index j,
                                       double eps = 0.05, double constant = -1.0);

// Raw quantities behind the projection-distance bounds:
//  (a) adaptive: sum_{m=1}^{M} ||(R E)^m P||_2 with M chosen so the term
//      ratio contracts and the geometric tail estimate drops below 1e-12;
//      throws DivergenceError if no M <= 60 works.
//  (b) order-p pair: (sum_{m=1}^{p-1} ||(R E)^m P||_2, d'^p)
//  (c) order-p pair: (||sum_{m=1}^{p-1} (R E)^m P||_2, d'^p)
// Multiplicative constants are unknown; callers calibrate.
struct ProjectionDistanceBounds {
    double adaptive_sum = 0.0;
    int adaptive_terms = 0;
    double tail_estimate = 0.0;
    double sum_of_norms = 0.0;  // (b) first component
    double norm_of_sum = 0.0;   // (c) first component
    double delta_prime_pow = 0.0;
};

ProjectionDistanceBounds projection_distance_bounds(const PerturbationInstance& inst, Index j,
                                                    int p);

} // namespace eigenpert
