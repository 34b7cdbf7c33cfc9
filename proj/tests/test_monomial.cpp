#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ginspace/monomial.hpp"
#include "ginspace/monomial_ideal.hpp"
#include "ginspace/prng.hpp"
#include "helpers.hpp"

using namespace ginspace;

static bool greater_than(const Monomial& a, const Monomial& b) {
    return RevlexGreater{}(a, b);
}

// Independent comparator used to cross-check the library's order: lower
// total degree wins; otherwise scan exponents from the back and the
// monomial with the smaller exponent at the last difference is larger.
static bool reference_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (std::size_t i = ea.size(); i-- > 0;)
        if (ea[i] != eb[i])
            return ea[i] < eb[i];
    return false;
}

TEST_CASE("order pins: degree first, then the last differing exponent") {
    const Monomial x1 = Monomial::variable(3, 1);
    const Monomial x1sq({2, 0, 0});
    CHECK(greater_than(x1, x1sq)); // lower degree is larger

    CHECK(greater_than(Monomial({2, 1, 0}), Monomial({1, 2, 0})));
    CHECK(greater_than(Monomial({0, 3, 0}), Monomial({1, 1, 1})));
    CHECK_FALSE(greater_than(Monomial({1, 1, 1}), Monomial({0, 3, 0})));
    CHECK_FALSE(greater_than(x1, x1));
}

TEST_CASE("degree-3 monomials in three variables, largest to smallest") {
    const std::vector<Monomial> ms = monomials_of_degree(3, 3);
    REQUIRE(ms.size() == 10);
    const std::vector<Monomial> expected = {
        Monomial({3, 0, 0}), Monomial({2, 1, 0}), Monomial({1, 2, 0}),
        Monomial({0, 3, 0}), Monomial({2, 0, 1}), Monomial({1, 1, 1}),
        Monomial({0, 2, 1}), Monomial({1, 0, 2}), Monomial({0, 1, 2}),
        Monomial({0, 0, 3})};
    CHECK(ms == expected);
    // The enumeration is strictly descending: each entry beats the next.
    CHECK(std::is_sorted(ms.begin(), ms.end(),
                         [](const Monomial& a, const Monomial& b) {
                             return greater_than(a, b);
                         }));
}

TEST_CASE("counts match the stars-and-bars formula") {
    CHECK(monomials_of_degree(3, 0).size() == 1);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(4, 3).size() == 20);
    CHECK(monomials_of_degree(2, 7).size() == 8);
    CHECK(monomial_count(3, 3) == 10);
    CHECK(monomial_count(4, 3) == 20);
    CHECK(monomial_count(1, 9) == 1);
}

TEST_CASE("order agrees with the independent comparator on random pairs") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = static_cast<int>(rng.between(1, 5));
        const Monomial a = testhelp::random_monomial(
            n, static_cast<int>(rng.between(0, 6)), rng);
        const Monomial b = testhelp::random_monomial(
            n, static_cast<int>(rng.between(0, 6)), rng);
        CHECK(greater_than(a, b) == reference_greater(a, b));
    }
}

TEST_CASE("order is total and multiplicative") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng.between(2, 4));
        const int d = static_cast<int>(rng.between(1, 5));
        const Monomial a = testhelp::random_monomial(n, d, rng);
        const Monomial b = testhelp::random_monomial(n, d, rng);
        const Monomial c = testhelp::random_monomial(
            n, static_cast<int>(rng.between(0, 3)), rng);
        // Exactly one of >, <, == holds.
        const int cmp =
            (greater_than(a, b) ? 1 : 0) + (greater_than(b, a) ? 2 : 0);
        if (a == b)
            CHECK(cmp == 0);
        else
            CHECK((cmp == 1 || cmp == 2));
        // Multiplying by a fixed monomial preserves the order.
        if (greater_than(a, b))
            CHECK(greater_than(a * c, b * c));
    }
}

TEST_CASE("divisibility and exact quotient") {
    const Monomial m({2, 1, 0});
    CHECK(Monomial({1, 0, 0}).divides(m));
    CHECK(Monomial({2, 1, 0}).divides(m));
    CHECK_FALSE(Monomial({0, 0, 1}).divides(m));
    const auto q = Monomial({1, 0, 0}).try_divide_into(m);
    REQUIRE(q.has_value());
    CHECK(*q == Monomial({1, 1, 0}));
    CHECK_FALSE(Monomial({0, 0, 1}).try_divide_into(m).has_value());
}

TEST_CASE("dropping and reinserting a variable") {
    const Monomial m({2, 1, 0});
    CHECK(m.drop_var(3) == Monomial({2, 1}));
    CHECK_THROWS_AS(Monomial({1, 0, 2}).drop_var(3), PreconditionError);
    CHECK(Monomial({2, 1}).insert_var(3, 0) == m);
    CHECK(Monomial({2, 1}).insert_var(1, 3) == Monomial({3, 2, 1}));
}

TEST_CASE("exchange moves raise an earlier exponent, lower a later one") {
    const auto moves = detail::exchange_moves(Monomial({1, 1, 1}));
    const std::vector<Monomial> expected = {
        Monomial({2, 0, 1}), Monomial({2, 1, 0}), Monomial({1, 2, 0})};
    CHECK(moves.size() == 3);
    for (const Monomial& e : expected)
        CHECK(std::find(moves.begin(), moves.end(), e) != moves.end());
    CHECK(detail::exchange_moves(Monomial({3, 0, 0})).empty());
    CHECK(Monomial({1, 1, 1}).exchange(1, 3) == Monomial({2, 1, 0}));
    CHECK_THROWS_AS(Monomial({1, 1, 0}).exchange(1, 3), PreconditionError);
}

TEST_CASE("printing uses caret powers and star products") {
    CHECK(Monomial({3, 0, 0}).to_string() == "x1^3");
    CHECK(Monomial({1, 2, 0}).to_string() == "x1*x2^2");
    CHECK(Monomial({0, 0, 0}).to_string() == "1");
}
