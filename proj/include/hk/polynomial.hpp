#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk/field.hpp"
#include "hk/monomial.hpp"

namespace hk {

// Ambient polynomial ring S = F_p[vars] with a fixed global monomial order.
struct PolyRing {
    PrimeField field;
    std::vector<std::string> vars;
    OrderKind order = OrderKind::degrevlex;

    PolyRing(uint32_t p, std::vector<std::string> names, OrderKind ord = OrderKind::degrevlex);

    int nvars() const { return static_cast<int>(vars.size()); }
    uint32_t p() const { return field.p(); }
    int var_index(const std::string& name) const;  // -1 if absent

    bool operator==(const PolyRing&) const = default;
};

struct Term {
    Monomial mon;
    uint32_t coeff = 0;
    bool operator==(const Term&) const = default;
};

// Terms strictly descending under the ring order, no zero coefficients.
class Polynomial {
  public:
    Polynomial() = default;

    // sorts, coalesces equal monomials, prunes zeros
    static Polynomial from_terms(const PolyRing& ring, std::vector<Term> ts);
    // trusts the caller: ts already strictly descending with nonzero coeffs
    static Polynomial from_sorted_terms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const Term& lead() const;  // throws MathError on zero
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }

    bool operator==(const Polynomial&) const = default;

  private:
    std::vector<Term> terms_;
};

Polynomial poly_constant(const PolyRing& ring, long long c);
Polynomial poly_variable(const PolyRing& ring, int idx, Exp power = 1);
Polynomial poly_monomial(const PolyRing& ring, Monomial m, long long c = 1);

Polynomial poly_add(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const PolyRing& ring, const Polynomial& a);
Polynomial poly_scale(const PolyRing& ring, const Polynomial& a, uint32_t c);
// a * (c * m) with term order preserved
Polynomial poly_term_mul(const PolyRing& ring, const Polynomial& a, const Monomial& m, uint32_t c);
Polynomial poly_mul(const PolyRing& ring, const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const PolyRing& ring, const Polynomial& a, Exp e);
// f^q by exponent scaling; requires q a power of the characteristic
Polynomial poly_qth_power(const PolyRing& ring, const Polynomial& a, Exp q);
Polynomial poly_monic(const PolyRing& ring, const Polynomial& a);

bool poly_is_homogeneous(const Polynomial& a);
Exp poly_degree(const Polynomial& a);  // max term degree; -1 for zero
// rebuild the term order after a ring-order change
Polynomial poly_resort(const PolyRing& ring, const Polynomial& a);

bool is_power_of(Exp q, uint32_t p);

std::string poly_to_string(const PolyRing& ring, const Polynomial& a);
Polynomial parse_polynomial(const PolyRing& ring, const std::string& text);  // throws InputError

}  // namespace hk
