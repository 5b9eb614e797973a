#include "hk/field.hpp"

#include <string>

namespace hk {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p > 0x7fffffffu || !is_prime_u32(p))
        throw MathError("characteristic must be a prime in [2, 2^31-1], got " + std::to_string(p));
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p_;
    uint32_t b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a % p_ == 0) throw MathError("division by zero in F_p");
    long long t = 0, nt = 1;
    long long r = p_, nr = a % p_;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return static_cast<uint32_t>(t < 0 ? t + p_ : t);
}

}  // namespace hk
