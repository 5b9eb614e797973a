#include "hk/homology.hpp"

namespace hk {

Exp prime_power(uint32_t p, int n) {
    if (n < 0) throw MathError("negative Frobenius iterate");
    Exp q = 1;
    for (int k = 0; k < n; ++k)
        if (__builtin_mul_overflow(q, static_cast<Exp>(p), &q))
            throw MathError("Frobenius exponent overflow");
    return q;
}

namespace {

// generators and relation multiples assembled into one plain module basis
ModuleGB span_with_relations(const QuotientRing& r, int rank, std::vector<ModPoly> gens) {
    const PolyRing& ring = r.ambient();
    ModuleOrder plain(ring.order);
    auto rel = r.relation_multiples(rank, plain);
    gens.insert(gens.end(), rel.begin(), rel.end());
    return module_groebner(ring, rank, plain, std::move(gens));
}

std::vector<ModPoly> matrix_columns_as_vectors(const PolyRing& ring, const ModuleOrder& ord,
                                               const PolyMatrix& m) {
    std::vector<ModPoly> out;
    out.reserve(static_cast<size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) out.push_back(modpoly_from_column(ring, ord, m.column(c)));
    return out;
}

}  // namespace

long long homology_length(const QuotientRing& r, const FreeComplex& c, int i) {
    if (i < 0 || i > c.length()) throw MathError("homology index out of range");
    const PolyRing& ring = r.ambient();
    ModuleOrder plain(ring.order);
    const int bi = c.rank(i);
    if (bi == 0) return 0;

    if (i == 0) {
        std::vector<ModPoly> gens;
        if (c.length() >= 1) gens = matrix_columns_as_vectors(ring, plain, c.diff(1));
        return module_colength(ring, span_with_relations(r, bi, std::move(gens)));
    }

    // kernel generators of d_i over R
    PolyMatrix k = syzygies(ring, c.diff(i), r.relations());
    const int knum = k.cols();
    if (knum == 0) return 0;

    // one extended basis provides both division data for lifting and the
    // syzygies among the kernel generators
    std::vector<ModPoly> gens2 = matrix_columns_as_vectors(ring, plain, k);
    auto rel2 = r.relation_multiples(bi, plain);
    const size_t nk = gens2.size();
    gens2.insert(gens2.end(), rel2.begin(), rel2.end());
    ExtendedGB ext = module_groebner_extended(ring, bi, ring.order, gens2);

    std::vector<ModPoly> pres;
    if (i < c.length()) {
        const PolyMatrix& d_next = c.diff(i + 1);
        for (int col = 0; col < d_next.cols(); ++col) {
            ModPoly v = modpoly_from_column(ring, plain, d_next.column(col));
            std::vector<Polynomial> quots;
            ModPoly rem = module_divide(ring, v, ext.gb, &quots);
            if (!rem.is_zero()) throw Error("boundary column failed to lift through the kernel");
            // pull the division back to coordinates on the kernel generators
            std::vector<Polynomial> lifted(nk);
            for (size_t t = 0; t < quots.size(); ++t) {
                if (quots[t].is_zero()) continue;
                for (size_t j = 0; j < nk; ++j)
                    lifted[j] = poly_add(ring, lifted[j],
                                         poly_mul(ring, quots[t], ext.cofactors[t][j]));
            }
            for (auto& e : lifted) e = r.nf(e);
            pres.push_back(modpoly_from_column(ring, plain, lifted));
        }
    }
    for (const auto& syz : ext.syzygies) {
        std::vector<Polynomial> head = modpoly_to_column(syz, static_cast<int>(gens2.size()));
        head.resize(nk);
        for (auto& e : head) e = r.nf(e);
        ModPoly v = modpoly_from_column(ring, plain, head);
        if (!v.is_zero()) pres.push_back(std::move(v));
    }
    return module_colength(ring, span_with_relations(r, knum, std::move(pres)));
}

long long tor_length(const QuotientRing& r, const IdealHandle& i, int homological_index, int n) {
    if (homological_index < 0) throw MathError("negative homological index");
    if (n < 0) throw MathError("negative Frobenius iterate");
    for (const auto& g : i.generators())
        if (!poly_is_homogeneous(g))
            throw MathError("non-homogeneous generator: " + poly_to_string(r.ambient(), g));
    std::vector<Polynomial> sum = i.generators();
    const auto& jg = r.relations().generators();
    sum.insert(sum.end(), jg.begin(), jg.end());
    if (!has_finite_colength(IdealHandle(r.ambient(), std::move(sum))))
        throw MathError("ideal is not m-primary");

    Exp q = prime_power(r.p(), n);
    FreeComplex res = resolve_ideal(r, i, homological_index + 1);
    FreeComplex tw = frobenius_twist(r, res, q);
    return homology_length(r, tw, homological_index);
}

std::pair<long long, long long> bi_surjection_bound(const QuotientRing& r, const FreeComplex& c,
                                                    int n) {
    // the statement needs every positive homology of C to have finite length
    for (int i = 1; i <= c.length(); ++i) (void)homology_length(r, c, i);

    Exp q = prime_power(r.p(), n);
    long long twisted_h1 = 0;
    if (c.length() >= 1) twisted_h1 = homology_length(r, frobenius_twist(r, c, q), 1);

    ModulePresentation pres;
    pres.rank = c.rank(0);
    pres.matrix = c.length() >= 1 ? c.diff(1) : PolyMatrix(pres.rank, 0);
    FreeComplex g = resolve_module(r, pres, 2);
    long long tor1 = homology_length(r, frobenius_twist(r, g, q), 1);
    return {twisted_h1, tor1};
}

}  // namespace hk
