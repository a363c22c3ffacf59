#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace eigenpert {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Bad input: non-finite entries, dimension mismatch, out-of-range parameters.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation requires a simple eigenvalue (or isolated group) but g = 0.
class DegenerateGapError : public std::domain_error {
public:
    explicit DegenerateGapError(const std::string& what) : std::domain_error(what) {}
};

// A remainder bound was requested as a scalar outside its validity region
// (e.g. delta >= 1/2). Distinct from numeric failure; sweeps should use the
// BoundValue result state instead of catching this.
class BoundInapplicableError : public std::domain_error {
public:
    explicit BoundInapplicableError(const std::string& what) : std::domain_error(what) {}
};

// An adaptively truncated series failed to contract within the term budget.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Finite-difference stencil crosses an eigenvalue crossing or leaves the
// region where the perturbed eigenvalue stays simple.
class StencilError : public std::runtime_error {
public:
    explicit StencilError(const std::string& what) : std::runtime_error(what) {}
};

inline double operator_norm(const Matrix& a) {
    if (a.rows() == a.cols() && a.isApprox(a.transpose(), 1e-13)) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
        return es.eigenvalues().cwiseAbs().maxCoeff();
    }
    return a.jacobiSvd().singularValues()(0);
}

inline double hs_norm(const Matrix& a) { return a.norm(); }

} // namespace eigenpert
