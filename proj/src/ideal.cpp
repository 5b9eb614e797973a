#include <algorithm>

#include "hk/cache.hpp"
#include "hk/groebner.hpp"

namespace hk {

// ---------------------------------------------------------------------------
// staircase counting
//
// Both counters recurse on N(I) = N(I + (x_v)) [+ t*] N(I : x_v) after
// interreduction, with pairwise-coprime generator sets as the base case.

namespace {

void interreduce_monomials(std::vector<Monomial>& g) {
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Monomial> kept;
    for (size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < g.size() && !redundant; ++j)
            if (i != j && monomial_divides(g[j], g[i])) redundant = true;
        if (!redundant) kept.push_back(g[i]);
    }
    g = std::move(kept);
}

bool pairwise_coprime(const std::vector<Monomial>& g) {
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (!monomials_coprime(g[i], g[j])) return false;
    return true;
}

// pivot: variable hit by the most generators, required to appear in >= 2
int pick_pivot(const std::vector<Monomial>& g, int nvars) {
    int best = -1, best_count = 1;
    for (int v = 0; v < nvars; ++v) {
        int count = 0;
        for (const auto& m : g)
            if (m.e[static_cast<size_t>(v)] > 0) ++count;
        if (count > best_count) {
            best_count = count;
            best = v;
        }
    }
    return best;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw MathError("length overflow");
    return r;
}

long long count_rec(std::vector<Monomial> g, int nvars) {
    check_deadline();
    interreduce_monomials(g);
    for (const auto& m : g)
        if (m.is_one()) return 0;
    if (pairwise_coprime(g)) {
        // coprime generators cut independently; finite only if every variable
        // is bounded by a pure power
        std::vector<Exp> bound(static_cast<size_t>(nvars), -1);
        for (const auto& m : g) {
            int support = -1;
            for (int v = 0; v < nvars; ++v)
                if (m.e[static_cast<size_t>(v)] > 0) support = support < 0 ? v : -2;
            if (support < 0) continue;  // mixed generator: ideal cannot be zero-dimensional here
            bound[static_cast<size_t>(support)] = m.e[static_cast<size_t>(support)];
        }
        for (int v = 0; v < nvars; ++v)
            if (bound[static_cast<size_t>(v)] < 0)
                throw MathError("staircase complement is infinite: no pure power of variable " +
                                std::to_string(v));
        long long total = 1;
        for (int v = 0; v < nvars; ++v) total = checked_mul(total, bound[static_cast<size_t>(v)]);
        return total;
    }
    int v = pick_pivot(g, nvars);
    std::vector<Monomial> with_v;  // I + (x_v)
    Monomial xv(nvars);
    xv.e[static_cast<size_t>(v)] = 1;
    with_v.push_back(xv);
    for (const auto& m : g)
        if (m.e[static_cast<size_t>(v)] == 0) with_v.push_back(m);
    std::vector<Monomial> colon;  // I : x_v
    for (const auto& m : g) {
        Monomial q = m;
        if (q.e[static_cast<size_t>(v)] > 0) --q.e[static_cast<size_t>(v)];
        colon.push_back(std::move(q));
    }
    long long a = count_rec(std::move(with_v), nvars);
    long long b = count_rec(std::move(colon), nvars);
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw MathError("length overflow");
    return r;
}

std::vector<long long> poly1_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            long long t;
            if (__builtin_mul_overflow(a[i], b[j], &t) ||
                __builtin_add_overflow(r[i + j], t, &r[i + j]))
                throw MathError("numerator coefficient overflow");
        }
    return r;
}

std::vector<long long> poly1_add_shifted(std::vector<long long> a, const std::vector<long long>& b,
                                         size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (size_t j = 0; j < b.size(); ++j)
        if (__builtin_add_overflow(a[j + shift], b[j], &a[j + shift]))
            throw MathError("numerator coefficient overflow");
    return a;
}

void poly1_trim(std::vector<long long>& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

std::vector<long long> numerator_rec(std::vector<Monomial> g, int nvars) {
    check_deadline();
    interreduce_monomials(g);
    for (const auto& m : g)
        if (m.is_one()) return {0};
    if (pairwise_coprime(g)) {
        std::vector<long long> num{1};
        for (const auto& m : g) {
            Exp d = m.degree();
            std::vector<long long> factor(static_cast<size_t>(d) + 1, 0);
            factor[0] = 1;
            factor[static_cast<size_t>(d)] = -1;  // 1 - t^d
            num = poly1_mul(num, factor);
        }
        poly1_trim(num);
        return num;
    }
    int v = pick_pivot(g, nvars);
    std::vector<Monomial> with_v;
    Monomial xv(nvars);
    xv.e[static_cast<size_t>(v)] = 1;
    with_v.push_back(xv);
    for (const auto& m : g)
        if (m.e[static_cast<size_t>(v)] == 0) with_v.push_back(m);
    std::vector<Monomial> colon;
    for (const auto& m : g) {
        Monomial q = m;
        if (q.e[static_cast<size_t>(v)] > 0) --q.e[static_cast<size_t>(v)];
        colon.push_back(std::move(q));
    }
    // N(I) = N(I + (x_v)) + t * N(I : x_v)
    std::vector<long long> num = numerator_rec(std::move(with_v), nvars);
    num = poly1_add_shifted(std::move(num), numerator_rec(std::move(colon), nvars), 1);
    poly1_trim(num);
    return num;
}

}  // namespace

bool staircase_is_finite(const std::vector<Monomial>& leads, int nvars) {
    for (const auto& m : leads)
        if (m.is_one()) return true;
    for (int v = 0; v < nvars; ++v) {
        bool bounded = false;
        for (const auto& m : leads) {
            bool pure = m.e[static_cast<size_t>(v)] > 0;
            for (int w = 0; w < nvars && pure; ++w)
                if (w != v && m.e[static_cast<size_t>(w)] > 0) pure = false;
            if (pure) {
                bounded = true;
                break;
            }
        }
        if (!bounded) return false;
    }
    return true;
}

long long staircase_complement_count(std::vector<Monomial> leads, int nvars) {
    return count_rec(std::move(leads), nvars);
}

std::vector<long long> staircase_numerator(std::vector<Monomial> leads, int nvars) {
    return numerator_rec(std::move(leads), nvars);
}

// ---------------------------------------------------------------------------
// ideal handle

namespace {

std::vector<Polynomial> reduced_poly_gb(const PolyRing& ring, const std::vector<Polynomial>& gens) {
    ModuleOrder ord(ring.order);
    std::vector<ModPoly> mgens;
    mgens.reserve(gens.size());
    for (const auto& g : gens) mgens.push_back(modpoly_from_poly(ring, ord, g, 0));
    ModuleGB gb = module_groebner(ring, 1, ord, std::move(mgens));
    std::vector<Polynomial> out;
    out.reserve(gb.elems.size());
    for (const auto& e : gb.elems) out.push_back(modpoly_to_column(e, 1)[0]);
    return out;
}

}  // namespace

IdealHandle::IdealHandle(const PolyRing& ring, std::vector<Polynomial> gens)
    : ring_(ring), gens_(std::move(gens)) {
    if (GbCache* cache = active_gb_cache()) {
        if (cache->load(ring_, gens_, gb_)) return;
        gb_ = reduced_poly_gb(ring_, gens_);
        cache->store(ring_, gens_, gb_);
        return;
    }
    gb_ = reduced_poly_gb(ring_, gens_);
}

Polynomial normal_form(const Polynomial& f, const IdealHandle& g) {
    ModuleOrder ord(g.ring().order);
    std::vector<ModPoly> basis;
    basis.reserve(g.groebner().size());
    for (const auto& b : g.groebner()) basis.push_back(modpoly_from_poly(g.ring(), ord, b, 0));
    ModuleGB gb{1, ord, std::move(basis)};
    ModPoly r = module_normal_form(g.ring(), modpoly_from_poly(g.ring(), ord, f, 0), gb);
    return modpoly_to_column(r, 1)[0];
}

bool is_member(const Polynomial& f, const IdealHandle& g) { return normal_form(f, g).is_zero(); }

bool same_ideal(const IdealHandle& a, const IdealHandle& b) {
    return a.ring() == b.ring() && a.groebner() == b.groebner();
}

IdealHandle ideal_sum(const IdealHandle& a, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle bracket_power(const IdealHandle& i, Exp q) {
    std::vector<Polynomial> gens;
    gens.reserve(i.generators().size());
    for (const auto& g : i.generators()) gens.push_back(poly_qth_power(i.ring(), g, q));
    return IdealHandle(i.ring(), std::move(gens));
}

namespace {

std::vector<Monomial> lead_monomials(const IdealHandle& i) {
    std::vector<Monomial> leads;
    leads.reserve(i.groebner().size());
    for (const auto& g : i.groebner()) leads.push_back(g.lead().mon);
    return leads;
}

}  // namespace

long long colength(const IdealHandle& i) {
    return staircase_complement_count(lead_monomials(i), i.ring().nvars());
}

bool has_finite_colength(const IdealHandle& i) {
    return staircase_is_finite(lead_monomials(i), i.ring().nvars());
}

int krull_dimension(const IdealHandle& i) {
    const int n = i.ring().nvars();
    if (n > 30) throw MathError("too many variables for dimension search");
    if (i.is_unit()) throw MathError("dimension of the zero ring");
    std::vector<Monomial> leads = lead_monomials(i);
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (m.e[static_cast<size_t>(v)] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Hilbert series

HilbertSeries hilbert_series(const IdealHandle& i) {
    for (const auto& g : i.generators())
        if (!poly_is_homogeneous(g))
            throw MathError("non-homogeneous input: " + poly_to_string(i.ring(), g));
    return HilbertSeries{staircase_numerator(lead_monomials(i), i.ring().nvars()),
                         i.ring().nvars()};
}

HilbertSeries HilbertSeries::reduced() const {
    HilbertSeries h = *this;
    while (h.den_exponent > 0) {
        // (1-t) divides iff the coefficient sum vanishes; quotient by prefix sums
        std::vector<long long> prefix(h.numerator.size(), 0);
        long long acc = 0;
        for (size_t k = 0; k < h.numerator.size(); ++k) {
            if (__builtin_add_overflow(acc, h.numerator[k], &acc))
                throw MathError("numerator coefficient overflow");
            prefix[k] = acc;
        }
        if (acc != 0) break;
        if (!prefix.empty()) prefix.pop_back();
        if (prefix.empty()) prefix.push_back(0);
        h.numerator = std::move(prefix);
        --h.den_exponent;
        if (h.numerator.size() == 1 && h.numerator[0] == 0) break;
    }
    poly1_trim(h.numerator);
    return h;
}

long long hs_multiplicity(const HilbertSeries& h) {
    HilbertSeries r = h.reduced();
    long long s = 0;
    for (long long c : r.numerator)
        if (__builtin_add_overflow(s, c, &s)) throw MathError("multiplicity overflow");
    return s;
}

// ---------------------------------------------------------------------------
// syzygies over a quotient

PolyMatrix syzygies(const PolyRing& ring, const PolyMatrix& m, const IdealHandle& relations) {
    if (!(relations.ring() == ring)) throw MathError("relations live in a different ring");
    const int rank = m.rows();
    ModuleOrder plain(ring.order);
    std::vector<ModPoly> gens;
    for (int c = 0; c < m.cols(); ++c) gens.push_back(modpoly_from_column(ring, plain, m.column(c)));
    const int ncols = m.cols();
    for (const auto& f : relations.groebner())
        for (int c = 0; c < rank; ++c) gens.push_back(modpoly_from_poly(ring, plain, f, c));

    ExtendedGB ext = module_groebner_extended(ring, rank, ring.order, gens);

    std::vector<std::vector<Polynomial>> cols;
    for (const auto& syz : ext.syzygies) {
        std::vector<Polynomial> full = modpoly_to_column(syz, static_cast<int>(gens.size()));
        std::vector<Polynomial> head(full.begin(), full.begin() + ncols);
        for (auto& entry : head) entry = normal_form(entry, relations);
        bool zero = true;
        for (const auto& entry : head)
            if (!entry.is_zero()) {
                zero = false;
                break;
            }
        if (!zero && std::find(cols.begin(), cols.end(), head) == cols.end())
            cols.push_back(std::move(head));
    }
    return PolyMatrix::from_columns(ncols, cols);
}

// ---------------------------------------------------------------------------
// module colength

long long module_colength(const PolyRing& ring, const ModuleGB& gb) {
    long long total = 0;
    for (int c = 0; c < gb.rank; ++c) {
        std::vector<Monomial> leads;
        for (const auto& e : gb.elems)
            if (e.lead().comp == c) leads.push_back(e.lead().mon);
        long long piece = staircase_complement_count(std::move(leads), ring.nvars());
        if (__builtin_add_overflow(total, piece, &total)) throw MathError("length overflow");
    }
    return total;
}

}  // namespace hk
