#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hk/error.hpp"

namespace hk {

using Exp = long long;

// Exponent vector; arity = number of ring variables.
struct Monomial {
    std::vector<Exp> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<Exp> v) : e(std::move(v)) {}

    int arity() const { return static_cast<int>(e.size()); }
    Exp degree() const;  // overflow-checked sum
    bool is_one() const;

    bool operator==(const Monomial&) const = default;
};

enum class OrderKind { degrevlex, lex };

// -1 if a < b, 0 if equal, +1 if a > b. Throws MathError on arity mismatch.
int monomial_compare(const Monomial& a, const Monomial& b, OrderKind ord);

// compare a*sa against b*sb without materializing the products
int shifted_monomial_compare(const Monomial& a, const Monomial& sa, const Monomial& b,
                             const Monomial& sb, OrderKind ord);

bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);  // overflow-checked
Monomial monomial_quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
bool monomials_coprime(const Monomial& a, const Monomial& b);
Monomial monomial_power(const Monomial& a, Exp q);  // componentwise scale, overflow-checked

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace hk
