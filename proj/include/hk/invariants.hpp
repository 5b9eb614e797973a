#pragma once

#include "hk/homology.hpp"
#include "hk/rational.hpp"

namespace hk {

enum class SequenceKind { bracket_colength, tor, koszul_h1 };

// lengths ell_n for n = 1..N together with the normalization ell_n / p^(n*d)
struct LengthSequence {
    SequenceKind kind = SequenceKind::bracket_colength;
    int tor_index = 0;
    uint32_t p = 2;
    int normalization_dim = 0;
    std::vector<long long> values;

    int count() const { return static_cast<int>(values.size()); }
    Rational normalized_at(int n) const;  // n is 1-based
    std::vector<Rational> normalized() const;
};

struct LimitEstimate {
    Rational raw_last;
    Rational richardson;
    Rational error_indicator;  // |a_N - a_{N-1}|, zero when N = 1
    int n_used = 0;
};

// two-point extrapolation against the model ell_n = alpha q^d + beta q^(d-1)
LimitEstimate extrapolate(const LengthSequence& seq);

LengthSequence ehk_sequence(const QuotientRing& r, const IdealHandle& i, int n_max);
LengthSequence ti_sequence(const QuotientRing& r, const IdealHandle& i, int tor_index, int n_max);

// exact regularity certificate: ell(R/m^[p]) == p^dim
bool kunz_test(const QuotientRing& r);

struct CriterionCheck {
    Rational value;
    double tol = 0;
    bool holds = false;
};

enum class Verdict { regular, non_regular };

struct RegularityReport {
    bool kunz_exact = false;
    Verdict verdict = Verdict::non_regular;
    LengthSequence ehk_seq, t1_seq, t2_seq;
    LimitEstimate e_hk, t1, t2;
    CriterionCheck t1_zero, t2_zero, ehk_t1_match;
};

RegularityReport regularity_report(const QuotientRing& r, int n_max, double tol);

struct InequalityRow {
    int n = 0;
    Exp q = 1;
    long long len_iq = 0;    // ell(R/I^[q])
    long long tor1_k = 0;    // ell(Tor_1(k, twisted R))
    long long fn_riq = 0;    // ell(F^n(R/I^[q]))
    long long fn_k = 0;      // ell(F^n(k))
    long long tor2_k = 0;    // ell(Tor_2(k, twisted R))
    long long tor1_riq = 0;  // ell(Tor_1(R/I^[q], twisted R))
    bool ineq1 = false;      // (A-1)B + C >= A D
    bool ineq2 = false;      // (A-1)E + F + A D >= A B + C
};

struct AlternatingCheck {
    int i = 0;
    Rational value;  // t_i - t_{i-1} + ... +- e_hk -+ 1
    bool holds = false;
    bool informational = false;  // true when the ring is not Cohen-Macaulay
};

struct InequalitySuite {
    std::vector<InequalityRow> rows;
    LimitEstimate e_hk, t1, t2;
    CriterionCheck limit_a;  // e_hk - 1 <= t1
    CriterionCheck limit_b;  // t1 - e_hk + 1 <= t2
    int depth = 0;
    bool cm = false;
    std::vector<AlternatingCheck> alternating;
};

InequalitySuite inequality_suite(const QuotientRing& r, const IdealHandle& i, int n_max,
                                 std::vector<Exp> q_list, double tol, int alt_i_max);

struct LemmaReport {
    LengthSequence tor1, koszul;
    std::vector<bool> dominates;  // koszul value >= tor value, per n
    bool tor_trend = false;       // normalized sequence heads to zero
    bool koszul_trend = false;
};

// I generated by a homogeneous system of parameters
LemmaReport lemma_check(const QuotientRing& r, const std::vector<Polynomial>& sop, int n_max);

// (depth via projective dimension over the ambient ring, Cohen-Macaulay flag)
std::pair<int, bool> cm_depth(const QuotientRing& r);

struct CorollaryReport {
    bool applicable = false;  // requires Cohen-Macaulay
    int depth = 0;
    bool cm = false;
    long long e = 0;  // Hilbert-Samuel multiplicity
    LimitEstimate e_hk, t1;
    CriterionCheck bound;       // e_hk - 1 <= ((e-1)/e) t1
    Rational implied_t1_floor;  // (e/(e-1)) (e_hk - 1), zero when e = 1
};

CorollaryReport corollary_check(const QuotientRing& r, int n_max, double tol);

// exact Hilbert-Kunz multiplicity of an m-primary monomial ideal over F_p[vars],
// by inclusion-exclusion over the generator subsets
Rational monomial_ehk_exact(std::vector<Monomial> gens, int nvars);

double effective_tol(double user_tol, const Rational& error_indicator);

}  // namespace hk
