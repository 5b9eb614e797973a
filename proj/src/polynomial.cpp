#include "hk/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace hk {

PolyRing::PolyRing(uint32_t p, std::vector<std::string> names, OrderKind ord)
    : field(p), vars(std::move(names)), order(ord) {
    if (vars.empty()) throw InputError("ring needs at least one variable");
    for (size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw InputError("empty variable name");
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable name: " + vars[i]);
    }
}

int PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars[static_cast<size_t>(i)] == name) return i;
    return -1;
}

const Term& Polynomial::lead() const {
    if (terms_.empty()) throw MathError("leading term of the zero polynomial");
    return terms_[0];
}

Polynomial Polynomial::from_terms(const PolyRing& ring, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return monomial_compare(a.mon, b.mon, ring.order) > 0;
    });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        uint32_t c = t.coeff % ring.p();
        if (!out.empty() && out.back().mon == t.mon) {
            out.back().coeff = ring.field.add(out.back().coeff, c);
            if (out.back().coeff == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back(Term{std::move(t.mon), c});
        }
    }
    Polynomial r;
    r.terms_ = std::move(out);
    return r;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> ts) {
    Polynomial r;
    r.terms_ = std::move(ts);
    return r;
}

Polynomial poly_constant(const PolyRing& ring, long long c) {
    uint32_t v = ring.field.reduce(c);
    if (v == 0) return {};
    return Polynomial::from_sorted_terms({Term{Monomial(ring.nvars()), v}});
}

Polynomial poly_variable(const PolyRing& ring, int idx, Exp power) {
    if (idx < 0 || idx >= ring.nvars()) throw MathError("variable index out of range");
    if (power < 0) throw MathError("negative exponent");
    Monomial m(ring.nvars());
    m.e[static_cast<size_t>(idx)] = power;
    return poly_monomial(ring, std::move(m), 1);
}

Polynomial poly_monomial(const PolyRing& ring, Monomial m, long long c) {
    if (m.arity() != ring.nvars()) throw MathError("monomial arity mismatch");
    uint32_t v = ring.field.reduce(c);
    if (v == 0) return {};
    return Polynomial::from_sorted_terms({Term{std::move(m), v}});
}

Polynomial poly_add(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<Term> out;
    out.reserve(ta.size() + tb.size());
    size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        int c = monomial_compare(ta[i].mon, tb[j].mon, ring.order);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back(tb[j++]);
        } else {
            uint32_t s = ring.field.add(ta[i].coeff, tb[j].coeff);
            if (s != 0) out.push_back(Term{ta[i].mon, s});
            ++i, ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) out.push_back(tb[j]);
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial poly_neg(const PolyRing& ring, const Polynomial& a) {
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.coeff = ring.field.neg(t.coeff);
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial poly_sub(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
    return poly_add(ring, a, poly_neg(ring, b));
}

Polynomial poly_scale(const PolyRing& ring, const Polynomial& a, uint32_t c) {
    c %= ring.p();
    if (c == 0) return {};
    if (c == 1) return a;
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.coeff = ring.field.mul(t.coeff, c);
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial poly_term_mul(const PolyRing& ring, const Polynomial& a, const Monomial& m, uint32_t c) {
    c %= ring.p();
    if (c == 0) return {};
    std::vector<Term> out;
    out.reserve(a.terms().size());
    // multiplication by a fixed monomial preserves the global order
    for (const auto& t : a.terms()) out.push_back(Term{monomial_mul(t.mon, m), ring.field.mul(t.coeff, c)});
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial poly_mul(const PolyRing& ring, const Polynomial& a, const Polynomial& b) {
    std::vector<Term> prods;
    prods.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            prods.push_back(Term{monomial_mul(ta.mon, tb.mon), ring.field.mul(ta.coeff, tb.coeff)});
    return Polynomial::from_terms(ring, std::move(prods));
}

Polynomial poly_pow(const PolyRing& ring, const Polynomial& a, Exp e) {
    if (e < 0) throw MathError("negative exponent");
    Polynomial r = poly_constant(ring, 1);
    Polynomial base = a;
    while (e) {
        if (e & 1) r = poly_mul(ring, r, base);
        e >>= 1;
        if (e) base = poly_mul(ring, base, base);
    }
    return r;
}

bool is_power_of(Exp q, uint32_t p) {
    if (q < 1) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

Polynomial poly_qth_power(const PolyRing& ring, const Polynomial& a, Exp q) {
    if (!is_power_of(q, ring.p()))
        throw MathError("bracket exponent " + std::to_string(q) + " is not a power of " +
                        std::to_string(ring.p()));
    std::vector<Term> out;
    out.reserve(a.terms().size());
    // c^q = c for c in F_p and q a power of p, so only exponents scale;
    // scaling by q > 0 preserves both supported orders
    for (const auto& t : a.terms()) out.push_back(Term{monomial_power(t.mon, q), t.coeff});
    return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial poly_monic(const PolyRing& ring, const Polynomial& a) {
    if (a.is_zero()) return a;
    return poly_scale(ring, a, ring.field.inv(a.lead().coeff));
}

bool poly_is_homogeneous(const Polynomial& a) {
    if (a.is_zero()) return true;
    Exp d = a.terms()[0].mon.degree();
    for (const auto& t : a.terms())
        if (t.mon.degree() != d) return false;
    return true;
}

Exp poly_degree(const Polynomial& a) {
    Exp d = -1;
    for (const auto& t : a.terms()) {
        Exp td = t.mon.degree();
        if (td > d) d = td;
    }
    return d;
}

Polynomial poly_resort(const PolyRing& ring, const Polynomial& a) {
    return Polynomial::from_terms(ring, a.terms());
}

std::string poly_to_string(const PolyRing& ring, const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& t : a.terms()) {
        if (!s.empty()) s += " + ";
        if (t.mon.is_one()) {
            s += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) s += std::to_string(t.coeff) + "*";
            s += monomial_to_string(t.mon, ring.vars);
        }
    }
    return s;
}

namespace {

struct PolyLexer {
    const std::string& text;
    size_t pos = 0;

    explicit PolyLexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw InputError("expected an integer in '" + text + "'");
        if (pos - start > 18) throw InputError("integer literal too large in '" + text + "'");
        return std::stoll(text.substr(start, pos - start));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '\''))
            ++pos;
        return text.substr(start, pos - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const PolyRing& ring, const std::string& text) {
    PolyLexer lx(text);
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == '\0') {
            if (first) throw InputError("empty polynomial");
            break;
        }
        long long sign = 1;
        if (c == '+' || c == '-') {
            lx.eat(c);
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            throw InputError("expected '+' or '-' before '" + text.substr(lx.pos) + "'");
        }
        first = false;

        // one term: '*'-separated factors, each an integer or var^exp
        long long coeff_acc = 1;
        Monomial mon(ring.nvars());
        bool factor_expected = true;
        while (factor_expected) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                long long v = lx.read_int();
                coeff_acc = static_cast<long long>(ring.field.mul(ring.field.reduce(coeff_acc),
                                                                  ring.field.reduce(v)));
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::string name = lx.read_ident();
                int idx = ring.var_index(name);
                if (idx < 0) throw InputError("undeclared variable '" + name + "'");
                Exp ex = 1;
                if (lx.eat('^')) {
                    char nxt = lx.peek();
                    if (!std::isdigit(static_cast<unsigned char>(nxt)))
                        throw InputError("malformed exponent after '" + name + "^'");
                    ex = lx.read_int();
                }
                if (__builtin_add_overflow(mon.e[static_cast<size_t>(idx)], ex,
                                           &mon.e[static_cast<size_t>(idx)]))
                    throw InputError("exponent overflow in term");
            } else {
                throw InputError("unexpected character '" + std::string(1, f) + "' in '" + text + "'");
            }
            factor_expected = lx.eat('*');
        }
        terms.push_back(Term{std::move(mon), ring.field.reduce(sign * coeff_acc)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace hk
