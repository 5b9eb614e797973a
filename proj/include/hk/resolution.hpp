#pragma once

#include "hk/complex.hpp"

namespace hk {

// row shifts and column degrees making every column homogeneous; throws
// MathError when no consistent grading exists
struct MatrixGrading {
    std::vector<Exp> row_shifts;
    std::vector<Exp> col_degrees;
};
MatrixGrading infer_grading(const PolyRing& ring, const PolyMatrix& m);

// Gauss elimination of unit entries; the cokernel is unchanged. The scan is
// deterministic: lowest row first, then lowest column.
PolyMatrix minimalize_presentation(const QuotientRing& r, PolyMatrix p);

// minimal generators of the ideal (gens + relations)/relations, ascending degree
std::vector<Polynomial> minimal_generators(const QuotientRing& r, std::vector<Polynomial> gens);

// Minimal free resolution of R/(I + J) over R = S/J, through the requested
// number of stages: ranks [1, b_1, ..., b_stages].
FreeComplex resolve_ideal(const QuotientRing& r, const IdealHandle& i, int stages);

// Minimal free resolution of coker(matrix) over R.
FreeComplex resolve_module(const QuotientRing& r, const ModulePresentation& pres, int stages);

}  // namespace hk
