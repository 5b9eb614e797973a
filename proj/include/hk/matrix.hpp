#pragma once

#include "hk/polynomial.hpp"

namespace hk {

// Dense row-major matrix of polynomials over one ambient ring.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);  // zero-filled
    PolyMatrix(int rows, int cols, std::vector<Polynomial> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Polynomial& at(int r, int c) const { return entries_[idx(r, c)]; }
    Polynomial& at(int r, int c) { return entries_[idx(r, c)]; }

    std::vector<Polynomial> column(int c) const;
    static PolyMatrix from_columns(int rows, const std::vector<std::vector<Polynomial>>& cols);
    static PolyMatrix identity(const PolyRing& ring, int n);

    bool operator==(const PolyMatrix&) const = default;

  private:
    size_t idx(int r, int c) const;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> entries_;
};

PolyMatrix matrix_mul(const PolyRing& ring, const PolyMatrix& a, const PolyMatrix& b);
bool matrix_is_zero(const PolyMatrix& m);

}  // namespace hk
