#pragma once

#include <cstdint>

#include "hk/error.hpp"

namespace hk {

bool is_prime_u32(uint32_t n);

// Arithmetic in F_p for prime p with 2 <= p <= 2^31 - 1. Values live in [0, p).
class PrimeField {
  public:
    explicit PrimeField(uint32_t p);

    uint32_t p() const { return p_; }

    // signed integer -> canonical representative in [0, p)
    uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;  // a, b < p <= 2^31 - 1: no wraparound
        return s >= p_ ? s - p_ : s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }

    uint32_t pow(uint32_t a, uint64_t e) const;

    // multiplicative inverse via extended Euclid; throws MathError on 0
    uint32_t inv(uint32_t a) const;

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField&) const = default;

  private:
    uint32_t p_;
};

}  // namespace hk
