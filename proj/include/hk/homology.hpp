#pragma once

#include <utility>

#include "hk/resolution.hpp"

namespace hk {

// length of H_i(C) as an R-module; throws MathError when the length is infinite
long long homology_length(const QuotientRing& r, const FreeComplex& c, int i);

// length of Tor_i(R/I, R viewed through the n-th Frobenius);
// I must be m-primary with homogeneous generators
long long tor_length(const QuotientRing& r, const IdealHandle& i, int homological_index, int n);

// (length of H_1 of the n-th twist of C, length of Tor_1(H_0(C), twisted R));
// the first component always dominates the second
std::pair<long long, long long> bi_surjection_bound(const QuotientRing& r, const FreeComplex& c,
                                                    int n);

Exp prime_power(uint32_t p, int n);  // p^n, overflow-checked

}  // namespace hk
