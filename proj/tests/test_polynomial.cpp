#include "doctest.h"

#include "newtonforge/polynomial.hpp"

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

TEST_CASE("polynomial normal form trims trailing zeros") {
    Polynomial p(std::vector<mpq_class>{mpq_class(1), mpq_class(0), mpq_class(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().degree() == -1);
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
}

TEST_CASE("ring operations") {
    Polynomial a = poly({1, 1});      // z+1
    Polynomial b = poly({-1, 1});     // z-1
    CHECK(a * b == poly({-1, 0, 1})); // z^2-1
    CHECK(a + b == poly({0, 2}));
    CHECK(a.pow(3) == poly({1, 3, 3, 1}));
    CHECK(poly({0, 0, 1}).derivative() == poly({0, 2}));
}

TEST_CASE("euclidean division and gcd") {
    Polynomial n = poly({2, 0, 1});  // z^2+2
    Polynomial d = poly({1, 1});     // z+1
    auto [q, r] = n.divmod(d);
    CHECK(q == poly({-1, 1}));       // z-1
    CHECK(r == poly({3}));
    CHECK(q * d + r == n);

    Polynomial g = Polynomial::gcd(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(g == poly({-1, 1}));
    CHECK(Polynomial::gcd(poly({1, 1}), poly({2, 1})).degree() == 0);
    CHECK_THROWS_AS(n.divmod(Polynomial()), DomainError);
}

TEST_CASE("evaluation paths agree") {
    Polynomial p = poly({1, -3, 0, 2});  // 2z^3-3z+1
    CHECK(p.eval_q(rat(1, 2)) == rat(-1, 4));
    CHECK(p.eval(Scalar(rat(1, 2))) == Scalar(rat(-1, 4)));

    RationalComplex i(rat(0, 1), rat(1, 1));
    RationalComplex v = p.eval_qc(i);  // 2i^3-3i+1 = 1-5i
    CHECK(v == RationalComplex(rat(1, 1), rat(-5, 1)));

    Complex z(BigFloat(0.5, 128), BigFloat(0L, 128));
    CHECK((p.eval_c(z, 128).re - BigFloat(-0.25, 128)).abs() <
          BigFloat(1L, 64).mul_2si(-120));
}

TEST_CASE("taylor coefficients by synthetic division") {
    Polynomial p = poly({2, 0, 1});  // z^2+2
    auto t = taylor_at(p, RationalComplex(rat(3, 1), rat(0, 1)), 3);
    // p(3+u) = 11 + 6u + u^2
    CHECK(t[0] == RationalComplex(rat(11, 1), rat(0, 1)));
    CHECK(t[1] == RationalComplex(rat(6, 1), rat(0, 1)));
    CHECK(t[2] == RationalComplex(rat(1, 1), rat(0, 1)));
    CHECK(t[3].is_zero());

    auto tf = taylor_at(p, Complex(BigFloat(3L, 128), BigFloat(0L, 128)), 2, 128);
    CHECK(tf[0].re == BigFloat(11L, 128));
    CHECK(tf[1].re == BigFloat(6L, 128));
}

TEST_CASE("rational functions reduce and keep a monic denominator") {
    RationalFunction r(poly({-1, 0, 1}), poly({-1, 1}));  // (z^2-1)/(z-1)
    CHECK(r.is_polynomial());
    CHECK(r.num() == poly({1, 1}));

    RationalFunction s(poly({2}), poly({4, 2}));  // 2/(2z+4)
    CHECK(s.den() == poly({2, 1}));
    CHECK(s.num() == poly({1}));

    CHECK_THROWS_AS(RationalFunction(poly({1}), Polynomial()), DomainError);
}

TEST_CASE("rational function field operations") {
    RationalFunction a(poly({1}), poly({1, 1}));  // 1/(z+1)
    RationalFunction b(poly({1}), poly({2, 1}));  // 1/(z+2)
    RationalFunction sum = a + b;
    CHECK(sum.num() == poly({3, 2}));
    CHECK(sum.den() == poly({2, 3, 1}));
    CHECK(a - a == RationalFunction());
    CHECK(a / a == RationalFunction::from_polynomial(poly({1})));
    CHECK(a.pow(2).den() == poly({1, 2, 1}));
    CHECK_THROWS_AS(a / RationalFunction(), DomainError);
}

TEST_CASE("evaluation guards poles") {
    RationalFunction a(poly({1}), poly({1, 1}));  // 1/(z+1)
    CHECK(a.eval(Scalar(1)) == Scalar(rat(1, 2)));
    CHECK_THROWS_AS(a.eval(Scalar(-1)), PoleError);

    // A floating point within 2^{-prec/2} of the pole is rejected.
    BigFloat nearly(-1.0, 128);
    BigFloat bump = BigFloat(1L, 128).mul_2si(-100);
    Scalar close(Complex(nearly + bump, BigFloat(0L, 128)));
    CHECK_THROWS_AS(a.eval(close), PoleError);

    Scalar fine(Complex(BigFloat(-0.5, 128), BigFloat(0L, 128)));
    CHECK(a.eval(fine).precision_bits() == 128);
}

TEST_CASE("polynomial and rational formatting") {
    CHECK(poly({-1, 0, 1}).str() == "z^2-1");
    CHECK(Polynomial(std::vector<mpq_class>{rat(-1, 2), rat(3, 2), rat(1, 1)}).str() ==
          "z^2+3/2*z-1/2");
    CHECK(poly({0, -1}).str() == "-1*z");
    CHECK(Polynomial().str() == "0");
    CHECK(poly({0, 1}).str() == "z");

    RationalFunction r(poly({1}), poly({1, 1}));
    CHECK(r.str() == "(1)/(z+1)");
    CHECK(RationalFunction::from_polynomial(poly({2, 1})).str() == "z+2");
}
