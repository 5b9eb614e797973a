#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hk/monomial.hpp"

using namespace hk;

namespace {
Monomial mono(std::vector<Exp> e) { return Monomial{std::move(e)}; }
}  // namespace

TEST_CASE("degree and identity") {
    CHECK(mono({0, 0}).is_one());
    CHECK(mono({0, 0}).degree() == 0);
    CHECK(mono({2, 3, 1}).degree() == 6);
    CHECK_FALSE(mono({1, 0}).is_one());
}

TEST_CASE("degrevlex order") {
    // higher total degree wins
    CHECK(monomial_compare(mono({2, 0}), mono({1, 0}), OrderKind::degrevlex) > 0);
    // same degree: smaller exponent on the last variable wins
    CHECK(monomial_compare(mono({2, 0}), mono({1, 1}), OrderKind::degrevlex) > 0);
    CHECK(monomial_compare(mono({1, 1}), mono({0, 2}), OrderKind::degrevlex) > 0);
    // x*z vs y^2 in three variables: y^2 beats x*z under degrevlex
    CHECK(monomial_compare(mono({1, 0, 1}), mono({0, 2, 0}), OrderKind::degrevlex) < 0);
    CHECK(monomial_compare(mono({1, 2}), mono({1, 2}), OrderKind::degrevlex) == 0);
}

TEST_CASE("lex order") {
    CHECK(monomial_compare(mono({1, 0}), mono({0, 5}), OrderKind::lex) > 0);
    CHECK(monomial_compare(mono({1, 1}), mono({1, 0}), OrderKind::lex) > 0);
    CHECK(monomial_compare(mono({0, 2}), mono({0, 3}), OrderKind::lex) < 0);
}

TEST_CASE("order axioms on a brute-forced set") {
    // totality, antisymmetry, transitivity, multiplicativity on all monomials
    // of degree <= 4 in three variables
    std::vector<Monomial> ms;
    for (Exp a = 0; a <= 4; ++a)
        for (Exp b = 0; a + b <= 4; ++b)
            for (Exp c = 0; a + b + c <= 4; ++c) ms.push_back(mono({a, b, c}));
    for (OrderKind ord : {OrderKind::degrevlex, OrderKind::lex}) {
        for (const auto& a : ms)
            for (const auto& b : ms) {
                int ab = monomial_compare(a, b, ord);
                CHECK(ab == -monomial_compare(b, a, ord));
                if (ab == 0) CHECK(a == b);
                // multiplicative: comparing after a common factor keeps the sign
                Monomial f = mono({1, 2, 0});
                CHECK(monomial_compare(monomial_mul(a, f), monomial_mul(b, f), ord) == ab);
            }
    }
}

TEST_CASE("shifted compare agrees with materialized products") {
    std::vector<Monomial> ms;
    for (Exp a = 0; a <= 3; ++a)
        for (Exp b = 0; a + b <= 3; ++b) ms.push_back(mono({a, b}));
    for (OrderKind ord : {OrderKind::degrevlex, OrderKind::lex})
        for (const auto& a : ms)
            for (const auto& sa : ms)
                for (const auto& b : ms)
                    for (const auto& sb : ms)
                        CHECK(shifted_monomial_compare(a, sa, b, sb, ord) ==
                              monomial_compare(monomial_mul(a, sa), monomial_mul(b, sb), ord));
}

TEST_CASE("divisibility, quotient, lcm, gcd") {
    Monomial a = mono({2, 1, 0});
    Monomial b = mono({1, 1, 0});
    CHECK(monomial_divides(b, a));
    CHECK_FALSE(monomial_divides(a, b));
    CHECK(monomial_quotient(a, b) == mono({1, 0, 0}));
    CHECK(monomial_lcm(a, mono({0, 2, 1})) == mono({2, 2, 1}));
    CHECK(monomial_gcd(a, mono({1, 3, 0})) == mono({1, 1, 0}));
    CHECK(monomials_coprime(mono({2, 0, 0}), mono({0, 1, 1})));
    CHECK_FALSE(monomials_coprime(a, b));
}

TEST_CASE("mul then quotient round-trips") {
    Monomial a = mono({3, 0, 7});
    Monomial b = mono({1, 5, 2});
    Monomial ab = monomial_mul(a, b);
    CHECK(monomial_quotient(ab, b) == a);
    CHECK(monomial_quotient(ab, a) == b);
    CHECK(monomial_power(b, 3) == mono({3, 15, 6}));
}

TEST_CASE("arity mismatch throws") {
    CHECK_THROWS_AS(monomial_compare(mono({1}), mono({1, 0}), OrderKind::degrevlex), MathError);
    CHECK_THROWS_AS(monomial_mul(mono({1}), mono({1, 0})), MathError);
}

TEST_CASE("overflow is reported, not wrapped") {
    Exp huge = static_cast<Exp>(1) << 62;
    Monomial big = mono({huge});
    CHECK_THROWS_AS(monomial_mul(big, big), MathError);
    CHECK_THROWS_AS(monomial_power(big, 4), MathError);
    CHECK_THROWS_AS(mono({huge, huge, huge}).degree(), MathError);
}

TEST_CASE("printing") {
    CHECK(monomial_to_string(mono({0, 0}), {"x", "y"}) == "1");
    CHECK(monomial_to_string(mono({2, 1}), {"x", "y"}) == "x^2*y");
    CHECK(monomial_to_string(mono({0, 3}), {"x", "y"}) == "y^3");
}
