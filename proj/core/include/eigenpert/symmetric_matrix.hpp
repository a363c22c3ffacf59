#pragma once

#include "eigenpert/types.hpp"

#include <iosfwd>
#include <string>

namespace eigenpert {

// A real symmetric matrix. Construction checks finiteness, measures the
// asymmetry residual max|A_ik - A_ki|, rejects it beyond the tolerance
// (default 1e-12 * max|entry|), and stores the symmetrized (A + A^T)/2.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(const Matrix& a, double symmetry_tol = -1.0);

    Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    double asymmetry_residual() const { return asymmetry_residual_; }

    double operator()(Index i, Index k) const { return entries_(i, k); }

    static SymmetricMatrix zero(Index d) { return SymmetricMatrix(Matrix::Zero(d, d)); }

private:
    Matrix entries_;
    double asymmetry_residual_ = 0.0;
};

// Plain-text dense format: first line "d", then d rows of d space-separated
// decimals, 17 significant digits (round-trips doubles bit-faithfully).
SymmetricMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const SymmetricMatrix& m);

// JSON object {"dim": d, "rows": [[...], ...]} with the same fidelity.
SymmetricMatrix read_matrix_json(std::istream& in);
void write_matrix_json(std::ostream& out, const SymmetricMatrix& m);

// Reads either format from a file; JSON is detected by a leading '{'.
// Throws InputError if the file is missing or malformed.
SymmetricMatrix load_matrix(const std::string& path);
void save_matrix_text(const std::string& path, const SymmetricMatrix& m);
void save_matrix_json(const std::string& path, const SymmetricMatrix& m);

// 17-significant-digit decimal formatting used by every text/CSV emitter.
std::string format_double(double x);

} // namespace eigenpert
