#include "doctest.h"

#include "newtonforge/scalar.hpp"

using namespace newtonforge;

namespace {

mpq_class rat(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

} // namespace

TEST_CASE("exact arithmetic stays exact and is a field") {
    Scalar third = Scalar(1) / Scalar(3);
    CHECK(third.is_exact());
    CHECK(third * Scalar(3) == Scalar(1));

    Scalar z(RationalComplex(rat(1, 1), rat(2, 1)));   // 1+2i
    Scalar w(RationalComplex(rat(3, 1), rat(-1, 1)));  // 3-i
    Scalar q = z / w;
    CHECK(q.is_exact());
    CHECK(q == Scalar(RationalComplex(rat(1, 10), rat(7, 10))));
    CHECK(q * w == z);

    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
}

TEST_CASE("mixed exact/float operations round to the float precision") {
    Scalar e(rat(1, 3));
    Scalar f(BigFloat(2L, 128));
    CHECK((e + f).precision_bits() == 128);
    CHECK((f * e).precision_bits() == 128);

    Scalar g(BigFloat(2L, 256));
    CHECK((f + g).precision_bits() == 128);
}

TEST_CASE("formatting is canonical") {
    CHECK(Scalar(rat(5, 3)).format() == "5/3");
    CHECK(Scalar(rat(-1, 4)).format() == "-1/4");
    CHECK(Scalar(RationalComplex(rat(1, 2), rat(-3, 4))).format() == "1/2-3/4i");
    CHECK(Scalar(RationalComplex(rat(0, 1), rat(2, 1))).format() == "2i");
    CHECK(Scalar(0).format() == "0");
}

TEST_CASE("real-part comparison is exact when both sides are exact") {
    CHECK(Scalar::real_cmp(Scalar(rat(1, 3)), Scalar(rat(1, 3))) == 0);
    CHECK(Scalar::real_cmp(Scalar(rat(1, 3)), Scalar(rat(3333, 10000))) > 0);
    // 1/3 against a 128-bit rounding of 1/3: resolved at widened precision.
    Scalar f = Scalar(rat(1, 3)).to_float(128);
    CHECK(Scalar::real_cmp(Scalar(rat(1, 3)), f) != 0);
}

TEST_CASE("complex square root takes the principal branch") {
    Complex m4(BigFloat(-4L, 128), BigFloat(0L, 128));
    Complex r = m4.sqrt();
    CHECK(r.re.is_zero());
    CHECK(r.im == BigFloat(2L, 128));

    Complex z(BigFloat(3L, 128), BigFloat(4L, 128));
    Complex s = z.sqrt();
    BigFloat eps = BigFloat(1L, 64).mul_2si(-120);
    CHECK((s.re - BigFloat(2L, 128)).abs() < eps);
    CHECK((s.im - BigFloat(1L, 128)).abs() < eps);

    Complex zn(BigFloat(3L, 128), BigFloat(-4L, 128));
    Complex sn = zn.sqrt();
    CHECK(sn.re.sign() > 0);
    CHECK(sn.im.sign() < 0);
}

TEST_CASE("complex exponential: exp(i pi) = -1") {
    Complex z(BigFloat(0L, 256), BigFloat::pi(256));
    Complex e = z.exp();
    BigFloat eps = BigFloat(1L, 64).mul_2si(-250);
    CHECK((e.re + BigFloat(1L, 256)).abs() < eps);
    CHECK(e.im.abs() < eps);
}

TEST_CASE("complex integer powers") {
    Complex z(BigFloat(1L, 64), BigFloat(1L, 64));
    Complex p = z.pow_ui(8);
    CHECK(p.re == BigFloat(16L, 64));
    CHECK(p.im.is_zero());
}

TEST_CASE("magnitude of exact values") {
    Scalar s(rat(3, 4));
    CHECK(s.magnitude(128) == BigFloat(3L, 128) / BigFloat(4L, 128));
    Scalar z(RationalComplex(rat(3, 1), rat(4, 1)));
    CHECK(z.magnitude(128) == BigFloat(5L, 128));
}
