#include "doctest.h"

#include "newtonforge/function_handle.hpp"
#include "newtonforge/parser.hpp"

using namespace newtonforge;

namespace {

mpq_class rat(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("rational handle evaluates exactly and carries its signal") {
    auto h = handle_from_rational(parse_rational("1/(z+1)"));
    Scalar v = h(Scalar(1));
    CHECK(v.is_exact());
    CHECK(v == Scalar(rat(1, 2)));
    CHECK(h.exact_evaluator);

    REQUIRE(h.laplace.has_value());
    CHECK(h.laplace->signal.terms().size() == 1);
    CHECK(h.laplace->deltas.empty());
    REQUIRE(h.abs_abscissa.has_value());
    CHECK(*h.abs_abscissa == Scalar(0));  // pole at -1 clamps up to 0
    CHECK(abs_convergence_abscissa(h) == Scalar(0));
}

TEST_CASE("abscissa is the largest pole real part when positive") {
    auto h = handle_from_rational(parse_rational("1/((z-2)*(z+3))"));
    CHECK(abs_convergence_abscissa(h) == Scalar(2));
}

TEST_CASE("polynomial handle converges everywhere and keeps spike images") {
    auto h = handle_from_rational(parse_rational("z^2"));
    CHECK(abs_convergence_abscissa(h) == Scalar(0));
    REQUIRE(h.laplace.has_value());
    CHECK(h.laplace->signal.empty());
    REQUIRE(h.laplace->deltas.size() == 1);
    CHECK(h.laplace->deltas[0].degree == 2);
}

TEST_CASE("catalog bessel handle has no transform signal") {
    auto h = catalog("bessel_recip_sqrt");
    CHECK(!h.laplace.has_value());
    CHECK(!h.abs_abscissa.has_value());
    CHECK_THROWS_AS(abs_convergence_abscissa(h), DomainError);

    CHECK(h(Scalar(0)) == Scalar(1));
    // 1 + (3/4)^2 = 25/16, whose square root is exact.
    CHECK(h(Scalar(rat(3, 4))) == Scalar(rat(4, 5)));

    Scalar v = h(Scalar(2), 192);
    BigFloat expect = BigFloat(5L, 224).sqrt();
    CHECK((v.as_complex(224).re * expect - BigFloat(1L, 224)).abs() <
          BigFloat(1L, 64).mul_2si(-180));
}

TEST_CASE("gaussian pair is self dual") {
    auto h = catalog("gaussian");
    CHECK(h(Scalar(0), 128).magnitude() == BigFloat(1L, 64));
    REQUIRE(h.fourier.has_value());
    CHECK(h.fourier->inverse(BigFloat(0L, 128), 128) == BigFloat(1L, 128));

    BigFloat direct = h(Scalar(1), 256).as_complex(256).re;
    BigFloat expect = (-BigFloat::pi(288)).exp();
    CHECK((direct - expect).abs() < BigFloat(1L, 64).mul_2si(-250));
    BigFloat inv = h.fourier->inverse(BigFloat(1L, 256), 256);
    CHECK((inv - expect).abs() < BigFloat(1L, 64).mul_2si(-250));
}

TEST_CASE("two sided exponential pairs with the Cauchy kernel") {
    auto h = catalog("two_sided_exp");
    CHECK(h(Scalar(0), 128).magnitude() == BigFloat(1L, 64));
    BigFloat v = h(Scalar(rat(1, 2)), 256).as_complex(256).re;
    BigFloat expect = (-BigFloat::pi(288)).exp();
    CHECK((v - expect).abs() < BigFloat(1L, 64).mul_2si(-250));

    CHECK_THROWS_AS(h(Scalar(RationalComplex(rat(0, 1), rat(1, 1))), 128), DomainError);

    REQUIRE(h.fourier.has_value());
    BigFloat at0 = h.fourier->inverse(BigFloat(0L, 256), 256);
    CHECK((at0 * BigFloat::pi(288) - BigFloat(1L, 288)).abs() < BigFloat(1L, 64).mul_2si(-250));
}

TEST_CASE("catalog falls back to rational expressions") {
    auto h = catalog("1/((z+1)*(z+2))");
    CHECK(h.rational.has_value());
    CHECK(h.name == "1/((z+1)*(z+2))");
    CHECK(h(Scalar(0)) == Scalar(rat(1, 2)));
    REQUIRE(h.laplace.has_value());
    CHECK(h.laplace->signal.terms().size() == 2);
}

TEST_CASE("unknown names and broken expressions are distinct errors") {
    CHECK_THROWS_AS(catalog("no_such_function"), DomainError);
    CHECK_THROWS_AS(catalog("z+"), ParseError);
    CHECK_THROWS_AS(catalog("1/(z-z)"), DomainError);
}

TEST_CASE("product denominators take the max abscissa over factors") {
    auto f1 = handle_from_rational(parse_rational("1/(z-1)"));
    auto f2 = handle_from_rational(parse_rational("1/(z+4)"));
    auto prod = handle_from_rational(parse_rational("1/((z-1)*(z+4))"));
    Scalar a1 = abs_convergence_abscissa(f1);
    Scalar a2 = abs_convergence_abscissa(f2);
    Scalar ap = abs_convergence_abscissa(prod);
    Scalar expected = Scalar::real_cmp(a1, a2) >= 0 ? a1 : a2;
    CHECK(ap == expected);
}
