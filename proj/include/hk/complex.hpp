#pragma once

#include "hk/quotient.hpp"

namespace hk {

// Finite complex of free R-modules: d_i maps R^{ranks[i]} into R^{ranks[i-1]}.
// Entries are stored as normal forms mod the relations, and consecutive
// differentials compose to zero mod the relations (validated at construction).
struct FreeComplex {
    std::vector<int> ranks;          // ranks[0..s]
    std::vector<PolyMatrix> diffs;   // diffs[i-1] = d_i, for i = 1..s

    int length() const { return static_cast<int>(diffs.size()); }
    int rank(int i) const { return ranks[static_cast<size_t>(i)]; }
    const PolyMatrix& diff(int i) const { return diffs[static_cast<size_t>(i - 1)]; }  // d_i
};

FreeComplex make_complex(const QuotientRing& r, std::vector<int> ranks,
                         std::vector<PolyMatrix> diffs);

// Koszul complex on the given elements (reduced mod the relations first).
FreeComplex koszul_complex(const QuotientRing& r, const std::vector<Polynomial>& elems);

// Entrywise q-th Frobenius power followed by reduction mod the relations;
// q must be a power of the characteristic.
FreeComplex frobenius_twist(const QuotientRing& r, const FreeComplex& c, Exp q);

// Cokernel presentation: R^rank / column span of matrix (rank x k).
struct ModulePresentation {
    int rank = 0;
    PolyMatrix matrix;
};

}  // namespace hk
