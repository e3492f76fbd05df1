#include "doctest.h"

#include "fockcb/laurent.hpp"

#include <random>
#include <stdexcept>

using namespace fockcb;

namespace {

LaurentInt random_laurent(std::mt19937& rng)
{
    std::uniform_int_distribution<int> nterms(0, 4), exp(-5, 5), coef(-9, 9);
    LaurentInt p;
    for (int t = nterms(rng); t > 0; --t) p.add_term(exp(rng), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("ring operations")
{
    const LaurentInt v = LaurentInt::v();
    CHECK(LaurentInt(1) * v == v);
    CHECK((v + v.bar()) * (v - v.bar()) == LaurentInt::v(2) - LaurentInt::v(-2));
    for (int k = 0; k <= 6; ++k) CHECK(gauss_number(k) * (v - v.bar()) == LaurentInt::v(k) - LaurentInt::v(-k));
    CHECK((v - v).is_zero());
    CHECK((-v).coeff(1) == -1);
}

TEST_CASE("canonical form stores no zero coefficients")
{
    LaurentInt p = LaurentInt::v(2) + 3;
    p -= LaurentInt::v(2);
    CHECK(p.size() == 1);
    CHECK(p == LaurentInt(3));
}

TEST_CASE("bar involution")
{
    CHECK(LaurentInt::v().bar() == LaurentInt::v(-1));
    CHECK((1 + LaurentInt::v(2)).bar() == 1 + LaurentInt::v(-2));
    CHECK(gauss_number(3) == parse_laurent("v^-2 + 1 + v^2"));
    for (int j = 0; j < 10; ++j) CHECK(gauss_number(j).bar() == gauss_number(j));

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const LaurentInt a = random_laurent(rng), b = random_laurent(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("gauss numbers")
{
    CHECK(gauss_number(0).is_zero());
    CHECK(gauss_number(1) == LaurentInt(1));
    const LaurentInt v = LaurentInt::v();
    for (int j = 0; j <= 50; ++j) CHECK(gauss_number(j) * (v - v.bar()) == LaurentInt::v(j) - LaurentInt::v(-j));
    CHECK_THROWS_AS(gauss_number(-1), std::invalid_argument);
}

TEST_CASE("specialization")
{
    const LaurentInt v = LaurentInt::v();
    CHECK((v + v.bar()).specialize(1) == 2);
    CHECK(gauss_number(3).specialize(1) == 3);
    CHECK(LaurentInt::v(7).specialize(1) == 1);
    CHECK(LaurentInt::v(-2).specialize(mpq_class(1, 2)) == 4);
    CHECK_THROWS_AS(v.specialize(0), std::invalid_argument);
}

TEST_CASE("arbitrary precision")
{
    LaurentInt p = LaurentInt::monomial(BigInt("123456789012345678901234567890"), 3);
    LaurentInt sq = p * p;
    CHECK(sq.coeff(6) == BigInt("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("exact quotient")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const LaurentInt a = random_laurent(rng), b = random_laurent(rng);
        if (b.is_zero()) continue;
        auto q = exact_quotient(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(exact_quotient(LaurentInt(1), gauss_number(2)).has_value());
    CHECK_FALSE(exact_quotient(LaurentInt(3), LaurentInt(2)).has_value());
    CHECK_THROWS_AS(exact_quotient(LaurentInt(1), LaurentInt()), std::domain_error);
}

TEST_CASE("text round trip")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        const LaurentInt a = random_laurent(rng);
        CHECK(parse_laurent(a.to_string()) == a);
    }
    CHECK(parse_laurent("-v^-1").to_string() == "-v^-1");
    CHECK(LaurentInt().to_string() == "0");
}

TEST_CASE("modular evaluation agrees with exact evaluation")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        const LaurentInt a = random_laurent(rng);
        const mpq_class exact = a.specialize(3);
        const std::uint64_t num = modp::reduce(exact.get_num());
        const std::uint64_t den = modp::reduce(exact.get_den());
        CHECK(a.eval_mod(3) == modp::mul(num, modp::inv(den)));
    }
    CHECK(modp::lift(modp::reduce(BigInt(-17))) == -17);
}
