#include "hk/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace hk {

Rational LengthSequence::normalized_at(int n) const {
    if (n < 1 || n > count()) throw MathError("sequence index out of range");
    Rational scale = Rational::pow_int(static_cast<long long>(p),
                                       static_cast<long long>(n) * normalization_dim);
    return Rational(values[static_cast<size_t>(n - 1)]) / scale;
}

std::vector<Rational> LengthSequence::normalized() const {
    std::vector<Rational> out;
    out.reserve(values.size());
    for (int n = 1; n <= count(); ++n) out.push_back(normalized_at(n));
    return out;
}

LimitEstimate extrapolate(const LengthSequence& seq) {
    const int n = seq.count();
    if (n == 0) throw MathError("empty length sequence");
    LimitEstimate est;
    est.n_used = n;
    est.raw_last = seq.normalized_at(n);
    if (n == 1) {
        est.richardson = est.raw_last;
        est.error_indicator = Rational(0);
        return est;
    }
    const long long p = seq.p;
    const long long d = seq.normalization_dim;
    Rational lN(seq.values[static_cast<size_t>(n - 1)]);
    Rational lP(seq.values[static_cast<size_t>(n - 2)]);
    // alpha = (ell_N - p^(d-1) ell_{N-1}) / (p^(Nd) - p^(Nd-1))
    Rational numer = lN - Rational::pow_int(p, d - 1) * lP;
    Rational denom = Rational::pow_int(p, n * d) - Rational::pow_int(p, n * d - 1);
    est.richardson = numer / denom;
    est.error_indicator = (seq.normalized_at(n) - seq.normalized_at(n - 1)).abs();
    return est;
}

double effective_tol(double user_tol, const Rational& error_indicator) {
    return std::max(user_tol, 2.0 * error_indicator.to_double());
}

namespace {

void require_homogeneous_gens(const PolyRing& ring, const IdealHandle& i) {
    for (const auto& g : i.generators())
        if (!poly_is_homogeneous(g))
            throw MathError("non-homogeneous generator: " + poly_to_string(ring, g));
}

IdealHandle with_relations(const QuotientRing& r, const IdealHandle& i) {
    std::vector<Polynomial> gens = i.generators();
    const auto& jg = r.relations().generators();
    gens.insert(gens.end(), jg.begin(), jg.end());
    return IdealHandle(r.ambient(), std::move(gens));
}

void require_m_primary(const QuotientRing& r, const IdealHandle& i) {
    require_homogeneous_gens(r.ambient(), i);
    if (!has_finite_colength(with_relations(r, i))) throw MathError("ideal is not m-primary");
}

long long bracket_colength(const QuotientRing& r, const IdealHandle& i, Exp q) {
    return colength(with_relations(r, bracket_power(i, q)));
}

IdealHandle maximal_ideal_handle(const QuotientRing& r) {
    return IdealHandle(r.ambient(), r.maximal_ideal());
}

}  // namespace

LengthSequence ehk_sequence(const QuotientRing& r, const IdealHandle& i, int n_max) {
    if (n_max < 1) throw MathError("sequence needs at least one level");
    require_m_primary(r, i);
    LengthSequence seq;
    seq.kind = SequenceKind::bracket_colength;
    seq.p = r.p();
    seq.normalization_dim = r.dim();
    for (int n = 1; n <= n_max; ++n)
        seq.values.push_back(bracket_colength(r, i, prime_power(r.p(), n)));
    return seq;
}

LengthSequence ti_sequence(const QuotientRing& r, const IdealHandle& i, int tor_index, int n_max) {
    if (n_max < 1) throw MathError("sequence needs at least one level");
    if (tor_index < 0) throw MathError("negative homological index");
    require_m_primary(r, i);
    FreeComplex res = resolve_ideal(r, i, tor_index + 1);
    LengthSequence seq;
    seq.kind = SequenceKind::tor;
    seq.tor_index = tor_index;
    seq.p = r.p();
    seq.normalization_dim = r.dim();
    for (int n = 1; n <= n_max; ++n) {
        FreeComplex tw = frobenius_twist(r, res, prime_power(r.p(), n));
        seq.values.push_back(homology_length(r, tw, tor_index));
    }
    return seq;
}

bool kunz_test(const QuotientRing& r) {
    long long lhs = bracket_colength(r, maximal_ideal_handle(r), r.p());
    Exp rhs = 1;
    for (int k = 0; k < r.dim(); ++k)
        if (__builtin_mul_overflow(rhs, static_cast<Exp>(r.p()), &rhs))
            throw MathError("p^dim overflow");
    return lhs == rhs;
}

RegularityReport regularity_report(const QuotientRing& r, int n_max, double tol) {
    if (n_max < 1) throw MathError("report needs at least one level");
    RegularityReport rep;
    rep.kunz_exact = kunz_test(r);
    rep.verdict = rep.kunz_exact ? Verdict::regular : Verdict::non_regular;

    IdealHandle m = maximal_ideal_handle(r);
    rep.ehk_seq = ehk_sequence(r, m, n_max);

    FreeComplex res = resolve_ideal(r, m, 3);
    auto tor_seq = [&](int idx) {
        LengthSequence seq;
        seq.kind = SequenceKind::tor;
        seq.tor_index = idx;
        seq.p = r.p();
        seq.normalization_dim = r.dim();
        for (int n = 1; n <= n_max; ++n) {
            FreeComplex tw = frobenius_twist(r, res, prime_power(r.p(), n));
            seq.values.push_back(homology_length(r, tw, idx));
        }
        return seq;
    };
    rep.t1_seq = tor_seq(1);
    rep.t2_seq = tor_seq(2);

    rep.e_hk = extrapolate(rep.ehk_seq);
    rep.t1 = extrapolate(rep.t1_seq);
    rep.t2 = extrapolate(rep.t2_seq);

    rep.t1_zero.value = rep.t1.richardson;
    rep.t1_zero.tol = effective_tol(tol, rep.t1.error_indicator);
    rep.t1_zero.holds = std::abs(rep.t1_zero.value.to_double()) <= rep.t1_zero.tol;

    rep.t2_zero.value = rep.t2.richardson;
    rep.t2_zero.tol = effective_tol(tol, rep.t2.error_indicator);
    rep.t2_zero.holds = std::abs(rep.t2_zero.value.to_double()) <= rep.t2_zero.tol;

    rep.ehk_t1_match.value = rep.e_hk.richardson - Rational(1) - rep.t1.richardson;
    Rational worst = rep.e_hk.error_indicator > rep.t1.error_indicator ? rep.e_hk.error_indicator
                                                                       : rep.t1.error_indicator;
    rep.ehk_t1_match.tol = effective_tol(tol, worst);
    rep.ehk_t1_match.holds = std::abs(rep.ehk_t1_match.value.to_double()) <= rep.ehk_t1_match.tol;
    return rep;
}

InequalitySuite inequality_suite(const QuotientRing& r, const IdealHandle& i, int n_max,
                                 std::vector<Exp> q_list, double tol, int alt_i_max) {
    if (n_max < 1) throw MathError("suite needs at least one level");
    require_m_primary(r, i);
    if (q_list.empty()) q_list = {static_cast<Exp>(r.p())};
    for (Exp q : q_list)
        if (!is_power_of(q, r.p()))
            throw MathError("q = " + std::to_string(q) + " is not a power of p");

    InequalitySuite suite;
    IdealHandle m = maximal_ideal_handle(r);

    LengthSequence t1s = ti_sequence(r, m, 1, n_max);
    LengthSequence t2s = ti_sequence(r, m, 2, n_max);
    LengthSequence es = ehk_sequence(r, m, n_max);
    suite.e_hk = extrapolate(es);
    suite.t1 = extrapolate(t1s);
    suite.t2 = extrapolate(t2s);

    for (Exp q : q_list) {
        IdealHandle iq = bracket_power(i, q);
        long long a = colength(with_relations(r, iq));
        FreeComplex res_iq = resolve_ideal(r, iq, 2);
        for (int n = 1; n <= n_max; ++n) {
            check_deadline();
            Exp pn = prime_power(r.p(), n);
            InequalityRow row;
            row.n = n;
            row.q = q;
            row.len_iq = a;
            row.tor1_k = t1s.values[static_cast<size_t>(n - 1)];
            row.tor2_k = t2s.values[static_cast<size_t>(n - 1)];
            Exp qpn;
            if (__builtin_mul_overflow(q, pn, &qpn)) throw MathError("bracket exponent overflow");
            row.fn_riq = colength(with_relations(r, bracket_power(i, qpn)));
            row.fn_k = es.values[static_cast<size_t>(n - 1)];
            row.tor1_riq = homology_length(r, frobenius_twist(r, res_iq, pn), 1);

            __int128 a128 = row.len_iq;
            __int128 lhs1 = (a128 - 1) * row.tor1_k + row.fn_riq;
            __int128 rhs1 = a128 * row.fn_k;
            row.ineq1 = lhs1 >= rhs1;
            __int128 lhs2 = (a128 - 1) * row.tor2_k + row.tor1_riq + a128 * row.fn_k;
            __int128 rhs2 = a128 * row.tor1_k + row.fn_riq;
            row.ineq2 = lhs2 >= rhs2;
            suite.rows.push_back(row);
        }
    }

    double tol_a = effective_tol(
        tol, suite.e_hk.error_indicator > suite.t1.error_indicator ? suite.e_hk.error_indicator
                                                                   : suite.t1.error_indicator);
    suite.limit_a.value = suite.e_hk.richardson - Rational(1) - suite.t1.richardson;
    suite.limit_a.tol = tol_a;
    suite.limit_a.holds = suite.limit_a.value.to_double() <= tol_a;

    double tol_b = effective_tol(
        tol, suite.t1.error_indicator > suite.t2.error_indicator ? suite.t1.error_indicator
                                                                 : suite.t2.error_indicator);
    suite.limit_b.value = suite.t1.richardson - suite.e_hk.richardson + Rational(1) -
                          suite.t2.richardson;
    suite.limit_b.tol = tol_b;
    suite.limit_b.holds = suite.limit_b.value.to_double() <= tol_b;

    auto [depth, cm] = cm_depth(r);
    suite.depth = depth;
    suite.cm = cm;

    // t_i - t_{i-1} + ... + (-1)^(i-1) t_1 + (-1)^i e_hk + (-1)^(i+1) >= 0
    std::vector<LimitEstimate> t_est{suite.t1, suite.t2};
    for (int idx = 3; idx <= alt_i_max; ++idx)
        t_est.push_back(extrapolate(ti_sequence(r, m, idx, n_max)));
    for (int idx = 1; idx <= alt_i_max; ++idx) {
        AlternatingCheck chk;
        chk.i = idx;
        Rational v(0);
        Rational err(0);
        int sign = 1;
        for (int j = idx; j >= 1; --j) {
            const LimitEstimate& tj = t_est[static_cast<size_t>(j - 1)];
            v = v + (sign > 0 ? tj.richardson : -tj.richardson);
            if (tj.error_indicator > err) err = tj.error_indicator;
            sign = -sign;
        }
        v = v + (sign > 0 ? suite.e_hk.richardson : -suite.e_hk.richardson);
        if (suite.e_hk.error_indicator > err) err = suite.e_hk.error_indicator;
        v = v + Rational(-sign);
        chk.value = v;
        chk.holds = v.to_double() >= -effective_tol(tol, err);
        chk.informational = !cm;
        suite.alternating.push_back(chk);
    }
    return suite;
}

LemmaReport lemma_check(const QuotientRing& r, const std::vector<Polynomial>& sop, int n_max) {
    if (n_max < 1) throw MathError("lemma check needs at least one level");
    if (static_cast<int>(sop.size()) != r.dim())
        throw MathError("expected " + std::to_string(r.dim()) +
                        " parameters, got " + std::to_string(sop.size()));
    IdealHandle i(r.ambient(), sop);
    require_m_primary(r, i);

    LemmaReport rep;
    rep.tor1 = ti_sequence(r, i, 1, n_max);

    FreeComplex kz = koszul_complex(r, sop);
    rep.koszul.kind = SequenceKind::koszul_h1;
    rep.koszul.p = r.p();
    rep.koszul.normalization_dim = r.dim();
    for (int n = 1; n <= n_max; ++n) {
        FreeComplex tw = frobenius_twist(r, kz, prime_power(r.p(), n));
        rep.koszul.values.push_back(homology_length(r, tw, 1));
    }

    for (int n = 0; n < n_max; ++n)
        rep.dominates.push_back(rep.koszul.values[static_cast<size_t>(n)] >=
                                rep.tor1.values[static_cast<size_t>(n)]);

    auto trend = [](const LengthSequence& seq) {
        Rational first = seq.normalized_at(1);
        Rational last = seq.normalized_at(seq.count());
        return last < first || last == Rational(0);
    };
    rep.tor_trend = trend(rep.tor1);
    rep.koszul_trend = trend(rep.koszul);
    return rep;
}

std::pair<int, bool> cm_depth(const QuotientRing& r) {
    const PolyRing& ring = r.ambient();
    QuotientRing ambient(ring, {});
    FreeComplex res = resolve_ideal(ambient, r.relations(), ring.nvars() + 1);
    int pd = 0;
    for (int s = 0; s <= res.length(); ++s)
        if (res.rank(s) > 0) pd = s;
    if (res.rank(res.length()) != 0) throw Error("resolution over the ambient ring did not stop");
    int depth = ring.nvars() - pd;
    return {depth, depth == r.dim()};
}

CorollaryReport corollary_check(const QuotientRing& r, int n_max, double tol) {
    CorollaryReport rep;
    auto [depth, cm] = cm_depth(r);
    rep.depth = depth;
    rep.cm = cm;
    rep.applicable = cm;
    rep.e = hs_multiplicity(hilbert_series(r.relations()));
    if (rep.e < 1) throw MathError("multiplicity must be positive");

    IdealHandle m = maximal_ideal_handle(r);
    rep.e_hk = extrapolate(ehk_sequence(r, m, n_max));
    rep.t1 = extrapolate(ti_sequence(r, m, 1, n_max));

    Rational lhs = rep.e_hk.richardson - Rational(1);
    Rational rhs = Rational(rep.e - 1, rep.e) * rep.t1.richardson;
    Rational worst = rep.e_hk.error_indicator > rep.t1.error_indicator ? rep.e_hk.error_indicator
                                                                       : rep.t1.error_indicator;
    rep.bound.value = lhs - rhs;
    rep.bound.tol = effective_tol(tol, worst);
    rep.bound.holds = rep.bound.value.to_double() <= rep.bound.tol;
    rep.implied_t1_floor = rep.e > 1 ? Rational(rep.e, rep.e - 1) * lhs : Rational(0);
    return rep;
}

Rational monomial_ehk_exact(std::vector<Monomial> gens, int nvars) {
    for (const auto& g : gens)
        if (g.arity() != nvars) throw MathError("monomial arity mismatch");
    // interreduce first: subsets of a smaller generating set
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && monomial_divides(gens[j], gens[i])) redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    if (!staircase_is_finite(minimal, nvars)) throw MathError("ideal is not m-primary");
    const int s = static_cast<int>(minimal.size());
    if (s > 24) throw MathError("too many monomial generators for inclusion-exclusion");

    std::vector<Exp> box(static_cast<size_t>(nvars), 0);
    for (const auto& g : minimal)
        for (int v = 0; v < nvars; ++v) box[static_cast<size_t>(v)] = std::max(box[static_cast<size_t>(v)], g.e[static_cast<size_t>(v)]);

    // ell(S/I) = sum over generator subsets T of (-1)^|T| prod_v max(0, box_v - lcm(T)_v)
    long long total = 0;
    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
        check_deadline();
        std::vector<Exp> lcm(static_cast<size_t>(nvars), 0);
        for (int b = 0; b < s; ++b)
            if (mask & (1u << b))
                for (int v = 0; v < nvars; ++v)
                    lcm[static_cast<size_t>(v)] = std::max(lcm[static_cast<size_t>(v)],
                                                           minimal[static_cast<size_t>(b)].e[static_cast<size_t>(v)]);
        long long vol = 1;
        for (int v = 0; v < nvars && vol != 0; ++v) {
            Exp side = box[static_cast<size_t>(v)] - lcm[static_cast<size_t>(v)];
            if (side <= 0) {
                vol = 0;
            } else if (__builtin_mul_overflow(vol, side, &vol)) {
                throw MathError("volume overflow");
            }
        }
        int parity = __builtin_popcount(mask) % 2;
        if (__builtin_add_overflow(total, parity ? -vol : vol, &total))
            throw MathError("volume overflow");
    }
    // bracket powers of monomial ideals scale every box side by q, so the
    // normalized lengths are already constant and equal to this count
    return Rational(total);
}

}  // namespace hk
