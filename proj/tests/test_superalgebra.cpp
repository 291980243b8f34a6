#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spalg/random_poly.hpp"
#include "test_util.hpp"

using namespace spalg;
using namespace spalg::testing;

namespace {

Monomial odd_monomial(std::initializer_list<std::uint32_t> factors) {
    Monomial m;
    m.even_exponents.assign(desk_table()->even_count(), 0);
    m.odd_factors = factors;
    return m;
}

} // namespace

TEST_CASE("normalize_product orders odd factors with transposition signs") {
    auto t1 = odd_monomial({0});
    auto t2 = odd_monomial({1});

    auto r12 = normalize_product(t1, t2);
    REQUIRE(r12.has_value());
    CHECK(r12->sign == 1);
    CHECK(r12->monomial == odd_monomial({0, 1}));

    auto r21 = normalize_product(t2, t1);
    REQUIRE(r21.has_value());
    CHECK(r21->sign == -1);
    CHECK(r21->monomial == odd_monomial({0, 1}));

    CHECK_FALSE(normalize_product(t1, t1).has_value());
}

TEST_CASE("normalize_product merge sign equals brute-force transposition count") {
    // Oracle: move each factor of b left past the remaining factors of a,
    // one swap at a time.
    auto brute = [](const Monomial& a, const Monomial& b) -> std::optional<int> {
        std::vector<std::uint32_t> seq(a.odd_factors);
        seq.insert(seq.end(), b.odd_factors.begin(), b.odd_factors.end());
        int sign = 1;
        for (std::size_t i = 1; i < seq.size(); ++i)
            for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
                std::swap(seq[j - 1], seq[j]);
                sign = -sign;
            }
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (seq[i - 1] == seq[i]) return std::nullopt;
        return sign;
    };
    const std::vector<std::vector<std::uint32_t>> subsets = {
        {}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    for (const auto& sa : subsets)
        for (const auto& sb : subsets) {
            Monomial a = odd_monomial({}), b = odd_monomial({});
            a.odd_factors = sa;
            b.odd_factors = sb;
            auto got = normalize_product(a, b);
            auto expect = brute(a, b);
            REQUIRE(got.has_value() == expect.has_value());
            if (got) CHECK(got->sign == *expect);
        }
}

TEST_CASE("addition is canonical") {
    CHECK((P("q1") + P("-q1")).is_zero());
    CHECK(P("theta1") + P("theta1") == P("2*theta1"));
    CHECK(P("q1 + theta1*theta2") + P("p1") == P("q1 + p1 + theta1*theta2"));
}

TEST_CASE("multiplication follows the supercommutative sign rule") {
    CHECK(P("theta1") * P("theta2") == P("theta1*theta2"));
    CHECK(P("theta2") * P("theta1") == P("-theta1*theta2"));
    CHECK(P("1") * P("q1 + theta1") == P("q1 + theta1"));

    // Cross terms: q*theta1 + theta1*q = 2*q*theta1 survives, theta1^2 dies.
    SuperPolynomial f = P("q1 + theta1");
    CHECK(f * f == P("q1^2 + 2*q1*theta1"));
}

TEST_CASE("single-term product against normalize_product directly") {
    SuperPolynomial a = P("theta1*theta3");
    SuperPolynomial b = P("theta2");
    auto prod = normalize_product(a.terms().begin()->first, b.terms().begin()->first);
    REQUIRE(prod.has_value());
    SuperPolynomial expected =
        SuperPolynomial::from_monomial(desk_table(), prod->monomial, Rational(prod->sign));
    CHECK(a * b == expected);
    CHECK(a * b == P("-theta1*theta2*theta3"));
}

TEST_CASE("parity_of") {
    CHECK(P("q1*p1").parity() == Parity::Even);
    CHECK(P("theta1 + theta1*theta2*theta3").parity() == Parity::Odd);
    CHECK_THROWS_AS(P("q1 + theta1").parity(), NonhomogeneousError);
    CHECK(SuperPolynomial::zero(desk_table()).parity() == Parity::Even);
}

TEST_CASE("homogeneous_components") {
    auto [even, odd] = P("q1 + theta1").homogeneous_components();
    CHECK(even == P("q1"));
    CHECK(odd == P("theta1"));

    auto [e2, o2] = P("theta1*theta2").homogeneous_components();
    CHECK(e2 == P("theta1*theta2"));
    CHECK(o2.is_zero());

    auto [e3, o3] = SuperPolynomial::zero(desk_table()).homogeneous_components();
    CHECK(e3.is_zero());
    CHECK(o3.is_zero());
}

TEST_CASE("left derivatives") {
    CHECK(P("theta1*theta2").left_derivative("theta1") == P("theta2"));
    CHECK(P("theta1*theta2").left_derivative("theta2") == P("-theta1"));
    CHECK(P("q1^2*p1").left_derivative("q1") == P("2*q1*p1"));
    CHECK_THROWS_AS(P("q1").left_derivative("nope"), UnknownVariableError);
}

TEST_CASE("randomized superalgebra laws") {
    RandomTermSpec spec;
    const std::uint64_t seed = 20250810;
    for (std::uint64_t i = 0; i < 300; ++i) {
        SplitMix64 rng = case_rng(seed, i);
        Parity pf = rng.below(2) ? Parity::Odd : Parity::Even;
        Parity pg = rng.below(2) ? Parity::Odd : Parity::Even;
        RandomTermSpec sf = spec, sg = spec, sh = spec;
        sf.parity = pf;
        sg.parity = pg;
        SuperPolynomial f = generate_random_poly(desk_table(), sf, seed, 3 * i);
        SuperPolynomial g = generate_random_poly(desk_table(), sg, seed, 3 * i + 1);
        SuperPolynomial h = generate_random_poly(desk_table(), sh, seed, 3 * i + 2);

        // Supercommutativity, exact.
        CHECK((f * g - Rational(koszul_sign(pf, pg)) * (g * f)).is_zero());
        // Associativity of the superproduct.
        CHECK(((f * g) * h - f * (g * h)).is_zero());
        // Parity additivity on a nonzero homogeneous product.
        if (!(f * g).is_zero()) CHECK((f * g).parity() == pf + pg);

        // Odd-derivative nilpotency and graded Leibniz for the left
        // derivative: d(fg) = d(f) g + (-1)^{parity f} f d(g).
        for (std::size_t a = 0; a < desk_table()->odd_count(); ++a) {
            CHECK(f.derivative_odd(a).derivative_odd(a).is_zero());
            SuperPolynomial lhs = (f * g).derivative_odd(a);
            SuperPolynomial rhs = f.derivative_odd(a) * g;
            if (pf == Parity::Odd)
                rhs -= f * g.derivative_odd(a);
            else
                rhs += f * g.derivative_odd(a);
            CHECK((lhs - rhs).is_zero());
        }
    }
}

TEST_CASE("operations reject mismatched variable tables") {
    TablePtr other = VariableTable::create({"x", "y"}, {});
    SuperPolynomial a = P("q1");
    SuperPolynomial b = SuperPolynomial::variable(other, "x");
    CHECK_THROWS_AS(a + b, TableMismatchError);
    CHECK_THROWS_AS(a * b, TableMismatchError);
}

TEST_CASE("variable table invariants") {
    CHECK_THROWS_AS(VariableTable::create({"q1"}, {}), Error);          // unpaired even
    CHECK_THROWS_AS(VariableTable::create({"a", "a"}, {}), Error);      // duplicate
    CHECK_THROWS_AS(VariableTable::create({"q", "p"}, {"q"}), Error);   // cross-list duplicate
    TablePtr t = VariableTable::create({"q", "p"}, {"t1"});
    CHECK(t->pair_count() == 1);
    CHECK(t->digest() != desk_table()->digest());
}
