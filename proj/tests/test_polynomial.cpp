#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hk/polynomial.hpp"

using namespace hk;

namespace {

PolyRing ring5() { return PolyRing(5, {"x", "y"}); }

Polynomial parse(const PolyRing& r, const std::string& s) { return parse_polynomial(r, s); }

Polynomial random_poly(const PolyRing& r, std::mt19937& rng, int max_terms, Exp max_exp) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<Exp> de(0, max_exp);
    std::uniform_int_distribution<uint32_t> dc(0, r.p() - 1);
    std::vector<Term> ts;
    int n = nt(rng);
    for (int k = 0; k < n; ++k) {
        Monomial m;
        for (int v = 0; v < r.nvars(); ++v) m.e.push_back(de(rng));
        ts.push_back(Term{std::move(m), dc(rng)});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("ring construction validates variable names") {
    CHECK_THROWS_AS(PolyRing(5, {}), InputError);
    CHECK_THROWS_AS(PolyRing(5, {"x", "x"}), InputError);
    PolyRing r(5, {"x", "y"});
    CHECK(r.var_index("y") == 1);
    CHECK(r.var_index("z") == -1);
}

TEST_CASE("from_terms canonicalizes") {
    PolyRing r = ring5();
    // duplicate monomials coalesce, zero coefficients vanish
    Monomial xy{{1, 1}};
    std::vector<Term> ts = {{xy, 3}, {xy, 2}, {Monomial{{0, 0}}, 5}};
    Polynomial f = Polynomial::from_terms(r, ts);
    CHECK(f.is_zero());  // 3 + 2 = 0 mod 5, and 5 = 0
}

TEST_CASE("parser handles the documented grammar") {
    PolyRing r = ring5();
    CHECK(poly_to_string(r, parse(r, "x^2*y - 3*x + 1")) == "x^2*y + 2*x + 1");
    CHECK(poly_to_string(r, parse(r, "  -x  +  x ")) == "0");
    CHECK(poly_to_string(r, parse(r, "2*2*x")) == "4*x");
    CHECK(poly_to_string(r, parse(r, "7")) == "2");
    CHECK(poly_to_string(r, parse(r, "x^0")) == "1");
    CHECK(parse(r, "x*y") == parse(r, "y*x"));
}

TEST_CASE("parser rejects bad input with named causes") {
    PolyRing r = ring5();
    CHECK_THROWS_WITH_AS(parse(r, "x*w"), doctest::Contains("undeclared variable 'w'"),
                         InputError);
    CHECK_THROWS_AS(parse(r, "x^"), InputError);
    CHECK_THROWS_AS(parse(r, "x^y"), InputError);
    CHECK_THROWS_AS(parse(r, ""), InputError);
    CHECK_THROWS_AS(parse(r, "x +"), InputError);
    CHECK_THROWS_AS(parse(r, "(x)"), InputError);
    CHECK_THROWS_AS(parse(r, "12345678901234567890123"), InputError);
}

TEST_CASE("print then parse is the identity") {
    PolyRing r = ring5();
    std::mt19937 rng(2026);
    for (int k = 0; k < 200; ++k) {
        Polynomial f = random_poly(r, rng, 6, 5);
        CHECK(parse(r, poly_to_string(r, f)) == f);
    }
}

TEST_CASE("ring laws on random triples") {
    PolyRing r = ring5();
    std::mt19937 rng(7);
    for (int k = 0; k < 60; ++k) {
        Polynomial a = random_poly(r, rng, 4, 3);
        Polynomial b = random_poly(r, rng, 4, 3);
        Polynomial c = random_poly(r, rng, 4, 3);
        CHECK(poly_mul(r, a, b) == poly_mul(r, b, a));
        CHECK(poly_mul(r, poly_mul(r, a, b), c) == poly_mul(r, a, poly_mul(r, b, c)));
        CHECK(poly_mul(r, a, poly_add(r, b, c)) ==
              poly_add(r, poly_mul(r, a, b), poly_mul(r, a, c)));
        CHECK(poly_add(r, a, poly_neg(r, a)).is_zero());
        CHECK(poly_sub(r, a, b) == poly_add(r, a, poly_neg(r, b)));
    }
}

TEST_CASE("leading term respects the order") {
    PolyRing r = ring5();
    Polynomial f = parse(r, "x^2 + x*y + y^3");
    CHECK(f.lead().mon == Monomial{{0, 3}});  // y^3 has top degree
    CHECK_THROWS_AS(Polynomial().lead(), MathError);
}

TEST_CASE("powers") {
    PolyRing r = ring5();
    Polynomial f = parse(r, "x + y");
    CHECK(poly_pow(r, f, 0) == poly_constant(r, 1));
    CHECK(poly_pow(r, f, 5) == parse(r, "x^5 + y^5"));  // freshman's dream at p = 5
    CHECK(poly_pow(r, f, 2) == parse(r, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("degree and homogeneity") {
    PolyRing r = ring5();
    CHECK(poly_degree(Polynomial()) == -1);
    CHECK(poly_degree(parse(r, "x^2*y + x")) == 3);
    CHECK(poly_is_homogeneous(parse(r, "x^2 + x*y")));
    CHECK_FALSE(poly_is_homogeneous(parse(r, "x^2 + x")));
    CHECK(poly_is_homogeneous(Polynomial()));
}

TEST_CASE("bracket exponentiation is the q-th power on terms") {
    PolyRing r = ring5();
    std::mt19937 rng(11);
    CHECK(is_power_of(25, 5));
    CHECK_FALSE(is_power_of(10, 5));
    CHECK_FALSE(is_power_of(0, 5));
    for (int k = 0; k < 40; ++k) {
        Polynomial f = random_poly(r, rng, 4, 3);
        // (sum t_i)^[q] agrees with the genuine q-th power in characteristic p
        CHECK(poly_qth_power(r, f, 5) == poly_pow(r, f, 5));
        CHECK(poly_qth_power(r, f, 25) == poly_pow(r, f, 25));
    }
    CHECK_THROWS_AS(poly_qth_power(r, parse(r, "x"), 10), MathError);
}

TEST_CASE("monic scales the lead to one") {
    PolyRing r = ring5();
    Polynomial f = parse(r, "3*y^2 + x");
    Polynomial m = poly_monic(r, f);
    CHECK(m.lead().coeff == 1);
    CHECK(poly_scale(r, m, 3) == f);
}
