#include "hk/matrix.hpp"

namespace hk {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
    entries_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

PolyMatrix::PolyMatrix(int rows, int cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw MathError("negative matrix dimension");
    if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw MathError("matrix entry count does not match dimensions");
}

size_t PolyMatrix::idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw MathError("matrix index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

std::vector<Polynomial> PolyMatrix::column(int c) const {
    std::vector<Polynomial> col;
    col.reserve(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) col.push_back(at(r, c));
    return col;
}

PolyMatrix PolyMatrix::from_columns(int rows, const std::vector<std::vector<Polynomial>>& cols) {
    PolyMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        const auto& col = cols[static_cast<size_t>(c)];
        if (static_cast<int>(col.size()) != rows)
            throw MathError("column height does not match matrix rows");
        for (int r = 0; r < rows; ++r) m.at(r, c) = col[static_cast<size_t>(r)];
    }
    return m;
}

PolyMatrix PolyMatrix::identity(const PolyRing& ring, int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = poly_constant(ring, 1);
    return m;
}

PolyMatrix matrix_mul(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw MathError("matrix dimension mismatch in product");
    PolyMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Polynomial acc;
            for (int k = 0; k < a.cols(); ++k)
                acc = poly_add(ring, acc, poly_mul(ring, a.at(i, k), b.at(k, j)));
            out.at(i, j) = std::move(acc);
        }
    return out;
}

bool matrix_is_zero(const PolyMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

}  // namespace hk
