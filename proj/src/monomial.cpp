#include "hk/monomial.hpp"

namespace hk {

Exp Monomial::degree() const {
    Exp s = 0;
    for (Exp x : e)
        if (__builtin_add_overflow(s, x, &s)) throw MathError("exponent overflow in total degree");
    return s;
}

bool Monomial::is_one() const {
    for (Exp x : e)
        if (x != 0) return false;
    return true;
}

static void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw MathError("monomial arity mismatch");
}

int monomial_compare(const Monomial& a, const Monomial& b, OrderKind ord) {
    require_same_arity(a, b);
    const int n = a.arity();
    if (ord == OrderKind::lex) {
        for (int i = 0; i < n; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }
    const Exp da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // same degree: last nonzero coordinate of a - b negative means a > b
    for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

int shifted_monomial_compare(const Monomial& a, const Monomial& sa, const Monomial& b,
                             const Monomial& sb, OrderKind ord) {
    require_same_arity(a, sa);
    require_same_arity(a, b);
    require_same_arity(b, sb);
    const int n = a.arity();
    if (ord == OrderKind::lex) {
        for (int i = 0; i < n; ++i) {
            __int128 x = static_cast<__int128>(a.e[i]) + sa.e[i];
            __int128 y = static_cast<__int128>(b.e[i]) + sb.e[i];
            if (x != y) return x > y ? 1 : -1;
        }
        return 0;
    }
    __int128 da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        da += static_cast<__int128>(a.e[i]) + sa.e[i];
        db += static_cast<__int128>(b.e[i]) + sb.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
        __int128 x = static_cast<__int128>(a.e[i]) + sa.e[i];
        __int128 y = static_cast<__int128>(b.e[i]) + sb.e[i];
        if (x != y) return x < y ? 1 : -1;
    }
    return 0;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (int i = 0; i < a.arity(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r(a.arity());
    for (int i = 0; i < a.arity(); ++i)
        if (__builtin_add_overflow(a.e[i], b.e[i], &r.e[i]))
            throw MathError("exponent overflow in monomial product");
    return r;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
    require_same_arity(a, b);
    Monomial r(a.arity());
    for (int i = 0; i < a.arity(); ++i) {
        if (a.e[i] > b.e[i]) throw MathError("monomial quotient with non-divisor");
        r.e[i] = b.e[i] - a.e[i];
    }
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r(a.arity());
    for (int i = 0; i < a.arity(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial r(a.arity());
    for (int i = 0; i < a.arity(); ++i) r.e[i] = a.e[i] < b.e[i] ? a.e[i] : b.e[i];
    return r;
}

bool monomials_coprime(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    for (int i = 0; i < a.arity(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

Monomial monomial_power(const Monomial& a, Exp q) {
    if (q < 0) throw MathError("negative monomial power");
    Monomial r(a.arity());
    for (int i = 0; i < a.arity(); ++i)
        if (__builtin_mul_overflow(a.e[i], q, &r.e[i]))
            throw MathError("exponent overflow in monomial power");
    return r;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    if (m.arity() != static_cast<int>(vars.size())) throw MathError("monomial arity mismatch");
    std::string s;
    for (int i = 0; i < m.arity(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[static_cast<size_t>(i)];
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace hk
