#include "hk/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace hk {

// ---------------------------------------------------------------------------
// module order

int ModuleOrder::compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
    const bool ba = ca >= split_, bb = cb >= split_;
    if (ba != bb) return ba ? -1 : 1;  // front block beats the Schreyer block
    if (!ba) {
        if (ca != cb) return ca < cb ? 1 : -1;  // lower component wins
        return monomial_compare(ma, mb, kind_);
    }
    const auto& sa = shifts_[static_cast<size_t>(ca - split_)];
    const auto& sb = shifts_[static_cast<size_t>(cb - split_)];
    // compare the images ma*shift(ca), mb*shift(cb) under the front-block rule
    if (sa.second != sb.second) return sa.second < sb.second ? 1 : -1;
    int c = shifted_monomial_compare(ma, sa.first, mb, sb.first, kind_);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
}

// ---------------------------------------------------------------------------
// module vectors

const ModTerm& ModPoly::lead() const {
    if (terms_.empty()) throw MathError("leading term of the zero vector");
    return terms_[0];
}

int ModPoly::max_comp() const {
    int m = -1;
    for (const auto& t : terms_)
        if (t.comp > m) m = t.comp;
    return m;
}

ModPoly ModPoly::from_terms(const PolyRing& ring, const ModuleOrder& ord, std::vector<ModTerm> ts) {
    std::sort(ts.begin(), ts.end(),
              [&](const ModTerm& a, const ModTerm& b) { return ord.compare(a, b) > 0; });
    std::vector<ModTerm> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        uint32_t c = t.coeff % ring.p();
        if (!out.empty() && out.back().mon == t.mon && out.back().comp == t.comp) {
            out.back().coeff = ring.field.add(out.back().coeff, c);
            if (out.back().coeff == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back(ModTerm{std::move(t.mon), t.comp, c});
        }
    }
    ModPoly r;
    r.terms_ = std::move(out);
    return r;
}

ModPoly ModPoly::from_sorted_terms(std::vector<ModTerm> ts) {
    ModPoly r;
    r.terms_ = std::move(ts);
    return r;
}

ModPoly mod_add(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a, const ModPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<ModTerm> out;
    out.reserve(ta.size() + tb.size());
    size_t i = 0, j = 0;
    while (i < ta.size() && j < tb.size()) {
        int c = ord.compare(ta[i], tb[j]);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back(tb[j++]);
        } else {
            uint32_t s = ring.field.add(ta[i].coeff, tb[j].coeff);
            if (s != 0) out.push_back(ModTerm{ta[i].mon, ta[i].comp, s});
            ++i, ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) out.push_back(tb[j]);
    return ModPoly::from_sorted_terms(std::move(out));
}

ModPoly mod_sub(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a, const ModPoly& b) {
    std::vector<ModTerm> nb = b.terms();
    for (auto& t : nb) t.coeff = ring.field.neg(t.coeff);
    return mod_add(ring, ord, a, ModPoly::from_sorted_terms(std::move(nb)));
}

ModPoly mod_term_mul(const PolyRing& ring, const ModPoly& a, const Monomial& m, uint32_t c) {
    c %= ring.p();
    if (c == 0) return {};
    std::vector<ModTerm> out;
    out.reserve(a.terms().size());
    // monomial multiplication preserves any of our module orders
    for (const auto& t : a.terms())
        out.push_back(ModTerm{monomial_mul(t.mon, m), t.comp, ring.field.mul(t.coeff, c)});
    return ModPoly::from_sorted_terms(std::move(out));
}

ModPoly mod_monic(const PolyRing& ring, const ModPoly& a) {
    if (a.is_zero()) return a;
    uint32_t inv = ring.field.inv(a.lead().coeff);
    if (inv == 1) return a;
    std::vector<ModTerm> out = a.terms();
    for (auto& t : out) t.coeff = ring.field.mul(t.coeff, inv);
    return ModPoly::from_sorted_terms(std::move(out));
}

ModPoly modpoly_resort(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a) {
    return ModPoly::from_terms(ring, ord, a.terms());
}

int modpoly_compare_full(const ModuleOrder& ord, const ModPoly& a, const ModPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = ord.compare(ta[i], tb[i]);
        if (c != 0) return c;
        if (ta[i].coeff != tb[i].coeff) return ta[i].coeff > tb[i].coeff ? 1 : -1;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? 1 : -1;
    return 0;
}

ModPoly modpoly_from_column(const PolyRing& ring, const ModuleOrder& ord,
                            const std::vector<Polynomial>& col) {
    std::vector<ModTerm> ts;
    for (size_t c = 0; c < col.size(); ++c)
        for (const auto& t : col[c].terms()) ts.push_back(ModTerm{t.mon, static_cast<int>(c), t.coeff});
    return ModPoly::from_terms(ring, ord, std::move(ts));
}

std::vector<Polynomial> modpoly_to_column(const ModPoly& v, int rank) {
    std::vector<std::vector<Term>> per(static_cast<size_t>(rank));
    for (const auto& t : v.terms()) {
        if (t.comp < 0 || t.comp >= rank) throw MathError("component index out of range");
        per[static_cast<size_t>(t.comp)].push_back(Term{t.mon, t.coeff});
    }
    std::vector<Polynomial> col;
    col.reserve(per.size());
    // terms per component inherit the global descending order
    for (auto& ts : per) col.push_back(Polynomial::from_sorted_terms(std::move(ts)));
    return col;
}

ModPoly modpoly_from_poly(const PolyRing& ring, const ModuleOrder& ord, const Polynomial& f,
                          int comp) {
    std::vector<ModTerm> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) ts.push_back(ModTerm{t.mon, comp, t.coeff});
    return ModPoly::from_terms(ring, ord, std::move(ts));
}

// ---------------------------------------------------------------------------
// normal form and division

namespace {

// index of the first basis element whose lead divides (mon, comp); -1 if none
int find_reducer(const std::vector<ModPoly>& basis, const Monomial& mon, int comp,
                 const std::vector<int>& skip) {
    for (size_t k = 0; k < basis.size(); ++k) {
        if (!skip.empty() && skip[k]) continue;
        const ModTerm& lt = basis[k].lead();
        if (lt.comp == comp && monomial_divides(lt.mon, mon)) return static_cast<int>(k);
    }
    return -1;
}

struct DivideResult {
    ModPoly remainder;
    std::vector<std::vector<Term>> quot_terms;  // per basis element
};

DivideResult divide_core(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& v,
                         const std::vector<ModPoly>& basis, bool track,
                         const std::vector<int>& skip) {
    DivideResult res;
    if (track) res.quot_terms.resize(basis.size());
    std::vector<ModTerm> rem;
    ModPoly h = v;
    long long steps = 0;
    while (!h.is_zero()) {
        if (++steps % 256 == 0) check_deadline();
        const ModTerm t = h.lead();
        int k = find_reducer(basis, t.mon, t.comp, skip);
        if (k < 0) {
            rem.push_back(t);
            std::vector<ModTerm> rest(h.terms().begin() + 1, h.terms().end());
            h = ModPoly::from_sorted_terms(std::move(rest));
            continue;
        }
        const ModPoly& g = basis[static_cast<size_t>(k)];
        Monomial q = monomial_quotient(t.mon, g.lead().mon);
        uint32_t c = ring.field.div(t.coeff, g.lead().coeff);
        if (track) res.quot_terms[static_cast<size_t>(k)].push_back(Term{q, c});
        h = mod_sub(ring, ord, h, mod_term_mul(ring, g, q, c));
    }
    res.remainder = ModPoly::from_sorted_terms(std::move(rem));
    return res;
}

}  // namespace

ModPoly module_normal_form(const PolyRing& ring, const ModPoly& v, const ModuleGB& gb) {
    return divide_core(ring, gb.order, v, gb.elems, false, {}).remainder;
}

ModPoly module_divide(const PolyRing& ring, const ModPoly& v, const ModuleGB& gb,
                      std::vector<Polynomial>* quotients) {
    DivideResult r = divide_core(ring, gb.order, v, gb.elems, quotients != nullptr, {});
    if (quotients) {
        quotients->clear();
        for (auto& ts : r.quot_terms) quotients->push_back(Polynomial::from_terms(ring, std::move(ts)));
    }
    return r.remainder;
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

ModPoly s_vector(const PolyRing& ring, const ModuleOrder& ord, const ModPoly& a, const ModPoly& b,
                 const Monomial& lcm) {
    // both inputs monic with leads in the same component
    Monomial ua = monomial_quotient(lcm, a.lead().mon);
    Monomial ub = monomial_quotient(lcm, b.lead().mon);
    return mod_sub(ring, ord, mod_term_mul(ring, a, ua, 1), mod_term_mul(ring, b, ub, 1));
}

std::vector<ModPoly> buchberger_core(const PolyRing& ring, const ModuleOrder& ord,
                                     const std::vector<ModPoly>& gens, bool product_criterion) {
    std::vector<ModPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(mod_monic(ring, g));

    // (degree of lcm, i, j): normal selection pops the minimal lcm degree first
    std::set<std::tuple<Exp, int, int>> pairs;
    auto add_pairs_for = [&](int n) {
        const ModTerm& ln = basis[static_cast<size_t>(n)].lead();
        for (int i = 0; i < n; ++i) {
            const ModTerm& li = basis[static_cast<size_t>(i)].lead();
            if (li.comp != ln.comp) continue;
            pairs.emplace(monomial_lcm(li.mon, ln.mon).degree(), i, n);
        }
    };
    for (int n = 0; n < static_cast<int>(basis.size()); ++n) add_pairs_for(n);

    while (!pairs.empty()) {
        check_deadline();
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        const ModTerm& li = basis[static_cast<size_t>(i)].lead();
        const ModTerm& lj = basis[static_cast<size_t>(j)].lead();
        Monomial lcm = monomial_lcm(li.mon, lj.mon);

        if (product_criterion && monomials_coprime(li.mon, lj.mon)) continue;

        // chain criterion: a third lead dividing the lcm strictly finer on both sides
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
            const ModTerm& lk = basis[k].lead();
            if (lk.comp != li.comp || !monomial_divides(lk.mon, lcm)) continue;
            if (monomial_lcm(li.mon, lk.mon) != lcm && monomial_lcm(lj.mon, lk.mon) != lcm)
                skip = true;
        }
        if (skip) continue;

        ModPoly s = s_vector(ring, ord, basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], lcm);
        ModPoly r = divide_core(ring, ord, s, basis, false, {}).remainder;
        if (!r.is_zero()) {
            basis.push_back(mod_monic(ring, r));
            add_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }
    return basis;
}

std::vector<ModPoly> autoreduce(const PolyRing& ring, const ModuleOrder& ord,
                                std::vector<ModPoly> basis) {
    std::sort(basis.begin(), basis.end(), [&](const ModPoly& a, const ModPoly& b) {
        int c = ord.compare(a.lead(), b.lead());
        if (c != 0) return c < 0;
        return modpoly_compare_full(ord, a, b) < 0;  // ascending, deterministic
    });
    // minimality: keep an element only if no kept lead divides its lead
    std::vector<ModPoly> kept;
    for (auto& f : basis) {
        const ModTerm& lf = f.lead();
        bool redundant = false;
        for (const auto& g : kept) {
            const ModTerm& lg = g.lead();
            if (lg.comp == lf.comp && monomial_divides(lg.mon, lf.mon)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(f));
    }
    // tail reduction against the other kept elements; leads are untouchable
    std::vector<int> skip(kept.size(), 0);
    for (size_t i = 0; i < kept.size(); ++i) {
        skip[i] = 1;
        kept[i] = divide_core(ring, ord, kept[i], kept, false, skip).remainder;
        skip[i] = 0;
    }
    std::sort(kept.begin(), kept.end(),
              [&](const ModPoly& a, const ModPoly& b) { return ord.compare(a.lead(), b.lead()) > 0; });
    return kept;
}

}  // namespace

ModuleGB module_groebner(const PolyRing& ring, int rank, const ModuleOrder& ord,
                         std::vector<ModPoly> gens) {
    for (auto& g : gens) {
        if (g.max_comp() >= rank) throw MathError("generator component exceeds module rank");
        g = modpoly_resort(ring, ord, g);
    }
    bool product_ok = rank == 1;  // the coprimality shortcut is only sound for ideals
    std::vector<ModPoly> basis = buchberger_core(ring, ord, gens, product_ok);
    return ModuleGB{rank, ord, autoreduce(ring, ord, std::move(basis))};
}

ExtendedGB module_groebner_extended(const PolyRing& ring, int rank, OrderKind kind,
                                    const std::vector<ModPoly>& raw_gens) {
    const int n = static_cast<int>(raw_gens.size());
    ModuleOrder plain(kind);
    std::vector<ModPoly> gens;
    gens.reserve(static_cast<size_t>(n));
    for (const auto& g : raw_gens) {
        if (g.max_comp() >= rank) throw MathError("generator component exceeds module rank");
        gens.push_back(modpoly_resort(ring, plain, g));
    }
    // augmented module S^rank (+) S^n ordered with the generator leads as shifts;
    // a zero generator gets shift 1 in component 0, any consistent value works
    std::vector<std::pair<Monomial, int>> shifts;
    shifts.reserve(static_cast<size_t>(n));
    for (const auto& g : gens) {
        if (g.is_zero())
            shifts.emplace_back(Monomial(ring.nvars()), 0);
        else
            shifts.emplace_back(g.lead().mon, g.lead().comp);
    }
    ModuleOrder aug_ord(kind, rank, std::move(shifts));

    std::vector<ModPoly> aug;
    aug.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<ModTerm> ts = gens[static_cast<size_t>(j)].terms();
        ts.push_back(ModTerm{Monomial(ring.nvars()), rank + j, 1});
        aug.push_back(ModPoly::from_terms(ring, aug_ord, std::move(ts)));
    }

    std::vector<ModPoly> basis = buchberger_core(ring, aug_ord, aug, false);
    basis = autoreduce(ring, aug_ord, std::move(basis));

    ExtendedGB out;
    out.gb.rank = rank;
    out.gb.order = ModuleOrder(kind);
    ModuleOrder plain_syz(kind);
    for (const auto& f : basis) {
        if (f.lead().comp >= rank) {
            // no term in the front block: this is a syzygy of the generators
            std::vector<ModTerm> ts;
            ts.reserve(f.terms().size());
            for (const auto& t : f.terms()) ts.push_back(ModTerm{t.mon, t.comp - rank, t.coeff});
            out.syzygies.push_back(ModPoly::from_terms(ring, plain_syz, std::move(ts)));
        } else {
            std::vector<ModTerm> front;
            std::vector<std::vector<Term>> cof(static_cast<size_t>(n));
            for (const auto& t : f.terms()) {
                if (t.comp < rank)
                    front.push_back(t);
                else
                    cof[static_cast<size_t>(t.comp - rank)].push_back(Term{t.mon, t.coeff});
            }
            out.gb.elems.push_back(ModPoly::from_terms(ring, out.gb.order, std::move(front)));
            std::vector<Polynomial> cofs;
            cofs.reserve(cof.size());
            for (auto& ts : cof) cofs.push_back(Polynomial::from_terms(ring, std::move(ts)));
            out.cofactors.push_back(std::move(cofs));
        }
    }
    return out;
}

}  // namespace hk
