#pragma once

#include "eigenpert/instance_gen.hpp"
#include "eigenpert/oracles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eigenpert {

// Randomized invariant sweep: draws (Sigma, E, j) instances and checks every
// remainder bound and structural inequality against the exact
// re-diagonalization oracle. Used by the verify command and the acceptance
// suite.
struct SweepOptions {
    Index instances = 1000;
    Index d = 15;
    std::vector<double> delta_targets = {0.05, 0.2, 0.45};
    double min_gap = 0.05;
    int p_max = 6;
    std::uint64_t seed = 20260801;
    int threads = 1;
    // Harness self-test: shrink one bound so a correct engine must fail.
    bool corrupt_bound = false;
};

struct SweepRow {
    Index instance = 0;
    Index j = 0;
    double delta_target = 0.0;
    CheckResult check;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    Index applicable = 0;
    Index failures = 0;
};

SweepResult run_invariant_sweep(const SweepOptions& opts);

// Checks for one instance, appended to rows (instance index i recorded).
void sweep_instance_checks(const RandomInstance& ri, Index i, double delta_target, int p_max,
                           bool corrupt_bound, std::vector<SweepRow>& rows);

// CSV: instance,j,delta_target,check,applicable,lhs,rhs,slack,pass
std::string sweep_csv(const SweepResult& result);

} // namespace eigenpert
