#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hk/invariants.hpp"
#include "oracles.hpp"

using namespace hk;

namespace {
Polynomial parse(const PolyRing& r, const std::string& s) { return parse_polynomial(r, s); }
std::vector<Polynomial> parse_all(const PolyRing& r, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse(r, s));
    return out;
}
Monomial mono(std::vector<Exp> e) { return Monomial{std::move(e)}; }

// the quadric cone in three variables, the running singular example
QuotientRing cone() {
    PolyRing r(3, {"x", "y", "z"});
    return QuotientRing(r, parse_all(r, {"x*y - z^2"}));
}
}  // namespace

TEST_CASE("normalization divides by p to the n times dim") {
    LengthSequence seq;
    seq.p = 3;
    seq.normalization_dim = 2;
    seq.values = {13, 121};
    CHECK(seq.normalized_at(1) == Rational(13, 9));
    CHECK(seq.normalized_at(2) == Rational(121, 81));
    CHECK_THROWS_AS(seq.normalized_at(0), MathError);
    CHECK_THROWS_AS(seq.normalized_at(3), MathError);
    CHECK(seq.normalized() == std::vector<Rational>{Rational(13, 9), Rational(121, 81)});
}

TEST_CASE("extrapolation is exact on two-term model sequences") {
    // values alpha q^d + beta q^(d-1) must return alpha exactly
    auto model = [](uint32_t p, int d, long long alpha, long long beta, int n_max) {
        LengthSequence seq;
        seq.p = p;
        seq.normalization_dim = d;
        for (int n = 1; n <= n_max; ++n) {
            Exp q = prime_power(p, n);
            long long qd = 1, qd1 = 1;
            for (int k = 0; k < d; ++k) qd *= q;
            for (int k = 0; k + 1 < d; ++k) qd1 *= q;
            seq.values.push_back(alpha * qd + beta * qd1);
        }
        return extrapolate(seq);
    };
    CHECK(model(3, 2, 3, -1, 2).richardson == Rational(3));
    CHECK(model(3, 2, 3, -1, 3).richardson == Rational(3));
    CHECK(model(2, 3, 1, 0, 3).richardson == Rational(1));
    CHECK(model(2, 3, 1, 0, 3).error_indicator == Rational(0));
    CHECK(model(5, 1, 7, 2, 4).richardson == Rational(7));

    LengthSequence one;
    one.p = 3;
    one.normalization_dim = 2;
    one.values = {13};
    LimitEstimate est = extrapolate(one);
    CHECK(est.richardson == est.raw_last);
    CHECK(est.raw_last == Rational(13, 9));
    CHECK(est.error_indicator == Rational(0));
    CHECK(est.n_used == 1);

    LengthSequence empty;
    CHECK_THROWS_AS(extrapolate(empty), MathError);
}

TEST_CASE("effective tolerance widens with the error indicator") {
    CHECK(effective_tol(0.05, Rational(1, 100)) == doctest::Approx(0.05));
    CHECK(effective_tol(0.01, Rational(1, 10)) == doctest::Approx(0.2));
    CHECK(effective_tol(0.0, Rational(0)) == doctest::Approx(0.0));
}

TEST_CASE("bracket colength sequence of the quadric cone") {
    QuotientRing q = cone();
    IdealHandle m(q.ambient(), q.maximal_ideal());
    LengthSequence seq = ehk_sequence(q, m, 3);
    // ell(R/m^[q]) = (3 q^2 - 1)/2
    CHECK(seq.values == std::vector<long long>{13, 121, 1093});
    LimitEstimate est = extrapolate(seq);
    CHECK(est.richardson == Rational(365, 243));
    CHECK(est.raw_last == Rational(1093, 729));
    CHECK(est.n_used == 3);

    CHECK_THROWS_AS(ehk_sequence(q, m, 0), MathError);
    IdealHandle notprimary(q.ambient(), parse_all(q.ambient(), {"x"}));
    CHECK_THROWS_AS(ehk_sequence(q, notprimary, 1), MathError);
}

TEST_CASE("the coordinate cross has Hilbert-Kunz multiplicity exactly two") {
    PolyRing r(2, {"x", "y"});
    QuotientRing q(r, parse_all(r, {"x*y"}));
    IdealHandle m(r, parse_all(r, {"x", "y"}));
    LengthSequence seq = ehk_sequence(q, m, 3);
    CHECK(seq.values == std::vector<long long>{3, 7, 15});  // 2q - 1
    CHECK(extrapolate(seq).richardson == Rational(2));
}

TEST_CASE("Kunz certificate") {
    PolyRing r2(2, {"x", "y"});
    CHECK(kunz_test(QuotientRing(r2, {})));
    PolyRing r3(3, {"x", "y", "z"});
    CHECK(kunz_test(QuotientRing(r3, {})));
    CHECK_FALSE(kunz_test(cone()));
    CHECK_FALSE(kunz_test(QuotientRing(r2, parse_all(r2, {"y^2"}))));
    // a field presented as a quotient is regular of dimension zero
    PolyRing r1(2, {"x", "y"});
    CHECK(kunz_test(QuotientRing(r1, parse_all(r1, {"x", "y"}))));
}

TEST_CASE("regularity report on a regular ring") {
    PolyRing r(3, {"x", "y", "z"});
    QuotientRing q(r, {});
    RegularityReport rep = regularity_report(q, 2, 0.05);
    CHECK(rep.kunz_exact);
    CHECK(rep.verdict == Verdict::regular);
    CHECK(rep.ehk_seq.values == std::vector<long long>{27, 729});
    CHECK(rep.t1_seq.values == std::vector<long long>{0, 0});
    CHECK(rep.t2_seq.values == std::vector<long long>{0, 0});
    CHECK(rep.e_hk.richardson == Rational(1));
    CHECK(rep.t1.richardson == Rational(0));
    CHECK(rep.t1_zero.holds);
    CHECK(rep.t2_zero.holds);
    CHECK(rep.ehk_t1_match.holds);
    CHECK(rep.ehk_t1_match.value == Rational(0));
}

TEST_CASE("regularity report on the quadric cone") {
    RegularityReport rep = regularity_report(cone(), 2, 0.05);
    CHECK_FALSE(rep.kunz_exact);
    CHECK(rep.verdict == Verdict::non_regular);
    CHECK(rep.ehk_seq.values == std::vector<long long>{13, 121});
    CHECK(rep.t1_seq.values == std::vector<long long>{8, 80});
    CHECK(rep.t2_seq.values == std::vector<long long>{8, 80});
    CHECK(rep.e_hk.richardson == Rational(41, 27));
    CHECK(rep.t1.richardson == Rational(28, 27));
    // e_hk - 1 - t1 = 14/27 - 28/27
    CHECK(rep.ehk_t1_match.value == Rational(-14, 27));
    CHECK_FALSE(rep.ehk_t1_match.holds);
    CHECK_FALSE(rep.t1_zero.holds);
    CHECK_FALSE(rep.t2_zero.holds);
}

TEST_CASE("inequality suite on the quadric cone") {
    QuotientRing q = cone();
    IdealHandle m(q.ambient(), q.maximal_ideal());
    InequalitySuite suite = inequality_suite(q, m, 2, {3, 9}, 0.05, 2);
    REQUIRE(suite.rows.size() == 4);
    for (const auto& row : suite.rows) {
        CHECK(row.ineq1);
        CHECK(row.ineq2);
    }
    const InequalityRow& r0 = suite.rows[0];
    CHECK(r0.n == 1);
    CHECK(r0.q == 3);
    CHECK(r0.len_iq == 13);
    CHECK(r0.tor1_k == 8);
    CHECK(r0.fn_riq == 121);  // m^[3] twisted once more is m^[9]
    CHECK(r0.fn_k == 13);
    CHECK(suite.limit_a.value == Rational(-14, 27));
    CHECK(suite.limit_a.holds);
    CHECK(suite.limit_b.value == Rational(-14, 27));
    CHECK(suite.limit_b.holds);
    CHECK(suite.depth == 2);
    CHECK(suite.cm);
    REQUIRE(suite.alternating.size() == 2);
    // i = 1 reproduces limit a, i = 2 reproduces limit b, with flipped sign
    CHECK(suite.alternating[0].value == Rational(14, 27));
    CHECK(suite.alternating[1].value == Rational(14, 27));
    CHECK(suite.alternating[0].holds);
    CHECK(suite.alternating[1].holds);
    CHECK_FALSE(suite.alternating[0].informational);

    CHECK_THROWS_AS(inequality_suite(q, m, 1, {4}, 0.05, 1), MathError);  // 4 not a power of 3
}

TEST_CASE("inequality suite over a regular ring is tight at zero") {
    PolyRing r(2, {"x", "y"});
    QuotientRing q(r, {});
    IdealHandle m(r, parse_all(r, {"x", "y"}));
    InequalitySuite suite = inequality_suite(q, m, 2, {}, 0.05, 2);
    REQUIRE(suite.rows.size() == 2);  // empty q list defaults to {p}
    for (const auto& row : suite.rows) {
        CHECK(row.q == 2);
        CHECK(row.tor1_k == 0);
        CHECK(row.tor2_k == 0);
        CHECK(row.ineq1);
        CHECK(row.ineq2);
    }
    CHECK(suite.limit_a.value == Rational(0));
    CHECK(suite.limit_b.value == Rational(0));
    CHECK(suite.alternating[0].value == Rational(0));
    CHECK(suite.alternating[1].value == Rational(0));
}

TEST_CASE("parameter lemma on a Cohen-Macaulay ring degenerates to zero") {
    QuotientRing q = cone();
    // x, y is a homogeneous system of parameters, hence a regular sequence here
    LemmaReport rep = lemma_check(q, parse_all(q.ambient(), {"x", "y"}), 2);
    CHECK(rep.tor1.values == std::vector<long long>{0, 0});
    CHECK(rep.koszul.values == std::vector<long long>{0, 0});
    CHECK(rep.dominates == std::vector<bool>{true, true});
    CHECK(rep.tor_trend);
    CHECK(rep.koszul_trend);
}

TEST_CASE("parameter lemma separates Koszul homology from Tor on a non-CM ring") {
    PolyRing r(2, {"x", "y"});
    QuotientRing q(r, parse_all(r, {"x^2", "x*y"}));
    REQUIRE(q.dim() == 1);
    LemmaReport rep = lemma_check(q, parse_all(r, {"y"}), 3);
    // ann(y^q) = (x) has length one for every q
    CHECK(rep.koszul.values == std::vector<long long>{1, 1, 1});
    CHECK(rep.tor1.values == std::vector<long long>{1, 1, 1});
    CHECK(rep.dominates == std::vector<bool>{true, true, true});
    CHECK(rep.tor_trend);  // 1/2 > 1/8 normalized

    CHECK_THROWS_AS(lemma_check(q, parse_all(r, {"x", "y"}), 2), MathError);  // wrong count
    CHECK_THROWS_AS(lemma_check(q, parse_all(r, {"x"}), 2), MathError);       // not m-primary
}

TEST_CASE("depth via projective dimension over the ambient ring") {
    PolyRing r2(2, {"x", "y"});
    CHECK(cm_depth(QuotientRing(r2, {})) == std::pair<int, bool>{2, true});
    CHECK(cm_depth(QuotientRing(r2, parse_all(r2, {"x*y"}))) == std::pair<int, bool>{1, true});
    CHECK(cm_depth(QuotientRing(r2, parse_all(r2, {"x^2", "x*y"}))) ==
          std::pair<int, bool>{0, false});
    CHECK(cm_depth(cone()) == std::pair<int, bool>{2, true});
}

TEST_CASE("corollary bound is an equality for the quadric cone") {
    CorollaryReport rep = corollary_check(cone(), 2, 0.05);
    CHECK(rep.applicable);
    CHECK(rep.cm);
    CHECK(rep.depth == 2);
    CHECK(rep.e == 2);
    // e_hk - 1 = 14/27 equals ((e-1)/e) t1 = (1/2)(28/27) on the nose
    CHECK(rep.bound.value == Rational(0));
    CHECK(rep.bound.holds);
    CHECK(rep.implied_t1_floor == Rational(28, 27));
}

TEST_CASE("corollary report on a non-CM ring is informational") {
    PolyRing r(2, {"x", "y"});
    QuotientRing q(r, parse_all(r, {"x^2", "x*y"}));
    CorollaryReport rep = corollary_check(q, 2, 0.05);
    CHECK_FALSE(rep.applicable);
    CHECK_FALSE(rep.cm);
    CHECK(rep.depth == 0);
    CHECK(rep.e == 1);
    CHECK(rep.implied_t1_floor == Rational(0));
    // ell(R/m^[q]) = q + 1, so e_hk = 1 and the bound value is zero
    CHECK(rep.e_hk.richardson == Rational(1));
    CHECK(rep.bound.value == Rational(0));
}

TEST_CASE("monomial Hilbert-Kunz multiplicities by inclusion-exclusion") {
    CHECK(monomial_ehk_exact({mono({2, 0}), mono({1, 1}), mono({0, 2})}, 2) == Rational(3));
    CHECK(monomial_ehk_exact({mono({3, 0}), mono({0, 4})}, 2) == Rational(12));
    // redundant generators are interreduced away
    CHECK(monomial_ehk_exact({mono({2, 0}), mono({3, 0}), mono({0, 2}), mono({1, 5})}, 2) ==
          Rational(4));
    CHECK(monomial_ehk_exact({mono({1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})}, 3) ==
          Rational(1));
    CHECK_THROWS_AS(monomial_ehk_exact({mono({2, 0}), mono({1, 1})}, 2), MathError);
    CHECK_THROWS_AS(monomial_ehk_exact({mono({2, 0})}, 1), MathError);  // arity mismatch

    // the subset guard rejects oversized antichains
    std::vector<Monomial> anti;
    for (Exp k = 0; k <= 25; ++k) anti.push_back(mono({26 - k, k}));
    CHECK_THROWS_AS(monomial_ehk_exact(anti, 2), MathError);
}

TEST_CASE("monomial count agrees with the colength of the staircase") {
    // for a monomial ideal the normalized lengths are constant, so the exact
    // multiplicity equals ell(S/I); both engine and oracle confirm it
    PolyRing r(2, {"x", "y"});
    std::mt19937 rng(20240816);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Monomial> gens{mono({static_cast<Exp>(2 + rng() % 4), 0}),
                                   mono({0, static_cast<Exp>(2 + rng() % 4)})};
        for (int extra = 0; extra < 2; ++extra)
            gens.push_back(mono({static_cast<Exp>(1 + rng() % 3), static_cast<Exp>(1 + rng() % 3)}));
        std::vector<Polynomial> polys;
        for (const auto& g : gens) polys.push_back(poly_monomial(r, g));
        Rational exact = monomial_ehk_exact(gens, 2);
        CHECK(exact == Rational(colength(IdealHandle(r, polys))));
        CHECK(exact == Rational(oracle::colength(r, polys, 16)));
    }
}
