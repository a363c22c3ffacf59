#include "eigenpert/symmetric_matrix.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace eigenpert {

SymmetricMatrix::SymmetricMatrix(const Matrix& a, double symmetry_tol) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw InputError("SymmetricMatrix: matrix must be square and non-empty");
    if (!a.allFinite())
        throw InputError("SymmetricMatrix: non-finite entries");

    const double max_abs = a.cwiseAbs().maxCoeff();
    if (symmetry_tol < 0.0)
        symmetry_tol = 1e-12 * max_abs;
    asymmetry_residual_ = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asymmetry_residual_ > symmetry_tol)
        throw InputError("SymmetricMatrix: asymmetry residual " +
                         std::to_string(asymmetry_residual_) + " exceeds tolerance");
    entries_ = 0.5 * (a + a.transpose());
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

SymmetricMatrix read_matrix_text(std::istream& in) {
    Index d = 0;
    if (!(in >> d) || d < 1)
        throw InputError("matrix text: bad dimension line");
    Matrix a(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index k = 0; k < d; ++k)
            if (!(in >> a(i, k)))
                throw InputError("matrix text: truncated entries");
    return SymmetricMatrix(a);
}

void write_matrix_text(std::ostream& out, const SymmetricMatrix& m) {
    const Index d = m.dim();
    out << d << "\n";
    for (Index i = 0; i < d; ++i) {
        for (Index k = 0; k < d; ++k) {
            if (k) out << ' ';
            out << format_double(m(i, k));
        }
        out << "\n";
    }
}

SymmetricMatrix read_matrix_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("matrix json: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("rows"))
        throw InputError("matrix json: expected {\"dim\", \"rows\"}");
    const Index d = j["dim"].get<Index>();
    const auto& rows = j["rows"];
    if (d < 1 || !rows.is_array() || static_cast<Index>(rows.size()) != d)
        throw InputError("matrix json: row count does not match dim");
    Matrix a(d, d);
    for (Index i = 0; i < d; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != d)
            throw InputError("matrix json: ragged rows");
        for (Index k = 0; k < d; ++k)
            a(i, k) = row[static_cast<std::size_t>(k)].get<double>();
    }
    return SymmetricMatrix(a);
}

void write_matrix_json(std::ostream& out, const SymmetricMatrix& m) {
    // Hand-rolled emission so doubles go through the same %.17g path as the
    // text format (bit-faithful round trip).
    const Index d = m.dim();
    out << "{\"dim\": " << d << ", \"rows\": [";
    for (Index i = 0; i < d; ++i) {
        out << (i ? ", [" : "[");
        for (Index k = 0; k < d; ++k) {
            if (k) out << ", ";
            out << format_double(m(i, k));
        }
        out << "]";
    }
    out << "]}\n";
}

SymmetricMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open matrix file: " + path);
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    if (first == '{')
        return read_matrix_json(in);
    return read_matrix_text(in);
}

void save_matrix_text(const std::string& path, const SymmetricMatrix& m) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write matrix file: " + path);
    write_matrix_text(out, m);
}

void save_matrix_json(const std::string& path, const SymmetricMatrix& m) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write matrix file: " + path);
    write_matrix_json(out, m);
}

} // namespace eigenpert
