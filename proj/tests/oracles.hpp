#pragma once

#include <vector>

#include "hk/complex.hpp"
#include "hk/quotient.hpp"

// Independent cross-checks computed with dense degree-by-degree linear algebra
// over F_p. No Groebner bases, staircases, or syzygy machinery anywhere in
// here: graded pieces are spanned by explicit monomial multiples and measured
// by Gaussian elimination.
namespace oracle {

std::vector<hk::Monomial> monomials_of_degree(int nvars, int d);

// dim_k S/I summed degree by degree; stops at the first degree whose quotient
// piece is zero. Throws hk::MathError when that never happens below dmax.
long long colength(const hk::PolyRing& ring, const std::vector<hk::Polynomial>& gens, int dmax);

// length of H_i of a complex of graded free modules over R = S/J. shifts0
// holds the generator degrees of the stage-0 module; later stages are inferred
// from the homogeneous matrix entries. The last three degrees up to dmax must
// contribute nothing, otherwise dmax is declared too small.
long long homology_length(const hk::QuotientRing& r, const hk::FreeComplex& c, int i,
                          const std::vector<hk::Exp>& shifts0, int dmax);

}  // namespace oracle
