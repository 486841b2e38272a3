#include "doctest.h"

#include "newtonforge/parser.hpp"

#include <random>

using namespace newtonforge;

namespace {

mpq_class rat(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

Polynomial poly(std::vector<long> ascending) {
    std::vector<mpq_class> c;
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(std::move(c));
}

} // namespace

TEST_CASE("basic expressions parse to reduced rational functions") {
    RationalFunction r = parse_rational("1/(z+1)");
    CHECK(r.num() == poly({1}));
    CHECK(r.den() == poly({1, 1}));

    RationalFunction s = parse_rational("(z^2+2)/(z+1)");
    CHECK(s.num() == poly({2, 0, 1}));
    CHECK(s.den() == poly({1, 1}));

    RationalFunction t = parse_rational("(z^2-1)/(z-1)");
    CHECK(t.is_polynomial());
    CHECK(t.num() == poly({1, 1}));
}

TEST_CASE("operator precedence and associativity") {
    CHECK(parse_rational("2+3*z").num() == poly({2, 3}));
    CHECK(parse_rational("(2+3)*z").num() == poly({0, 5}));
    CHECK(parse_rational("2*z^2").num() == poly({0, 0, 2}));
    CHECK(parse_rational("1-2-3").num() == poly({-4}));
    CHECK(parse_rational("z*z*z").num() == poly({0, 0, 0, 1}));
}

TEST_CASE("signs live inside literals, not as unary operators") {
    CHECK(parse_rational("-3").num() == poly({-3}));
    CHECK(parse_rational("-1*z").num() == poly({0, -1}));
    CHECK(parse_rational("1/-2").num() == Polynomial(std::vector<mpq_class>{rat(-1, 2)}));
    CHECK(parse_rational("1/-2").den() == poly({1}));
    CHECK_THROWS_AS(parse_rational("-z"), ParseError);
    CHECK_THROWS_AS(parse_rational("-(z+1)"), ParseError);
    CHECK_THROWS_AS(parse_rational("3*-z"), ParseError);
}

TEST_CASE("rational and decimal literals are exact") {
    CHECK(parse_rational("0.25").num() == Polynomial(std::vector<mpq_class>{rat(1, 4)}));
    CHECK(parse_rational("3/4").num() == Polynomial(std::vector<mpq_class>{rat(3, 4)}));
    CHECK(parse_rational("0.1").num() == Polynomial(std::vector<mpq_class>{rat(1, 10)}));

    // A slash literal binds tighter than division; exponent applies to it.
    RationalFunction a = parse_rational("3/2^2");
    CHECK(a.num() == Polynomial(std::vector<mpq_class>{rat(9, 4)}));
    // But a decimal after the slash is a division expression.
    RationalFunction b = parse_rational("6/3.5");
    CHECK(b.num() == Polynomial(std::vector<mpq_class>{rat(12, 7)}));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("z+"), ParseError);
    CHECK_THROWS_AS(parse_rational("(z+1"), ParseError);
    CHECK_THROWS_AS(parse_rational("z 1"), ParseError);
    CHECK_THROWS_AS(parse_rational("z^-1"), ParseError);
    CHECK_THROWS_AS(parse_rational("x+1"), ParseError);
    try {
        parse_rational("z+*2");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
        CHECK(std::string(e.what()).find("position 2") != std::string::npos);
    }
}

TEST_CASE("mathematical domain errors") {
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/(z-z)"), DomainError);
    CHECK_THROWS_AS(parse_rational("z^2000"), DomainError);
}

TEST_CASE("formatting round-trips through the parser") {
    for (const char* text : {"1/(z+1)", "(z^2+2)/(z+1)", "z^3", "-1/4",
                             "(z+3)/((z+1)*(z+1))", "1/2*z^2-3*z+7/5"}) {
        RationalFunction r = parse_rational(text);
        CHECK(parse_rational(r.str()) == r);
    }

    std::mt19937 rng(20260817);
    std::uniform_int_distribution<long> coeff(-9, 9), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<mpq_class> nc(1 + rng() % 5), dc(1 + rng() % 5);
        for (auto& q : nc) q = rat(coeff(rng), den(rng));
        for (auto& q : dc) q = rat(coeff(rng), den(rng));
        Polynomial n(std::move(nc)), d(std::move(dc));
        if (d.is_zero()) continue;
        RationalFunction r(n, d);
        CHECK(parse_rational(r.str()) == r);
    }
}

TEST_CASE("complex rational scalars for flag values") {
    CHECK(parse_complex_rational("2") == RationalComplex(rat(2, 1), rat(0, 1)));
    CHECK(parse_complex_rational("-1/2") == RationalComplex(rat(-1, 2), rat(0, 1)));
    CHECK(parse_complex_rational("0.25") == RationalComplex(rat(1, 4), rat(0, 1)));
    CHECK(parse_complex_rational("1+i") == RationalComplex(rat(1, 1), rat(1, 1)));
    CHECK(parse_complex_rational("1-2i") == RationalComplex(rat(1, 1), rat(-2, 1)));
    CHECK(parse_complex_rational("3i") == RationalComplex(rat(0, 1), rat(3, 1)));
    CHECK(parse_complex_rational("-i") == RationalComplex(rat(0, 1), rat(-1, 1)));
    CHECK(parse_complex_rational("1/2+3/4i") == RationalComplex(rat(1, 2), rat(3, 4)));

    CHECK_THROWS_AS(parse_complex_rational(""), ParseError);
    CHECK_THROWS_AS(parse_complex_rational("1+2"), ParseError);
    CHECK_THROWS_AS(parse_complex_rational("i+1"), ParseError);
    CHECK_THROWS_AS(parse_complex_rational("1i+2i"), ParseError);
    CHECK_THROWS_AS(parse_complex_rational("z"), ParseError);
}
