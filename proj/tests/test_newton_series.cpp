#include "doctest.h"

#include "newtonforge/differences.hpp"
#include "newtonforge/errors.hpp"
#include "newtonforge/newton_series.hpp"
#include "newtonforge/parser.hpp"

using namespace newtonforge;

namespace {

mpq_class rat(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

Scalar gauss(long re_n, long re_d, long im) {
    return Scalar(RationalComplex(rat(re_n, re_d), mpq_class(im)));
}

Scalar tol_exp10(int digits) {
    mpq_class t(1);
    for (int i = 0; i < digits; ++i) t /= 10;
    return Scalar(t);
}

} // namespace

TEST_CASE("series coefficients tabulate unit-step differences at the center") {
    NewtonSeries sq = build_newton_series(catalog("z^2"), Scalar(0), 8);
    REQUIRE(sq.coeffs.size() == 8);
    CHECK(sq.coeffs[0].is_zero());
    CHECK((sq.coeffs[1] - Scalar(1)).is_zero());
    CHECK((sq.coeffs[2] - Scalar(2)).is_zero());
    for (std::size_t k = 3; k < sq.coeffs.size(); ++k) {
        CHECK(sq.coeffs[k].is_zero());
        CHECK(sq.coeffs[k].is_exact());
    }
    CHECK(sq.trailing_zero_from == 3);
    CHECK(sq.max_terms == 8);

    auto f = catalog("1/(z+1)");
    NewtonSeries s = build_newton_series(f, Scalar(1), 12);
    CHECK((s.coeffs[0] - Scalar(rat(1, 2))).is_zero());
    CHECK(s.abscissa == Scalar(0));
    for (unsigned k = 0; k < 12; ++k) {
        Scalar direct = forward_difference(f, Scalar(1), Scalar(1), k);
        CHECK((s.coeffs[k] - direct).is_zero());
        CHECK(s.coeffs[k].is_exact());
    }
    CHECK(s.trailing_zero_from == s.coeffs.size());
}

TEST_CASE("build validates the center region strictly") {
    auto f = catalog("1/(z+1)");
    CHECK_THROWS_AS(build_newton_series(f, Scalar(-2), 16), RegionError);
    // abscissa is the zero clamp, so the boundary itself is rejected
    CHECK_THROWS_AS(build_newton_series(f, Scalar(0), 16), RegionError);

    auto wide = catalog("1/((z-2)*(z+3))");
    CHECK_THROWS_AS(build_newton_series(wide, Scalar(2), 16), RegionError);
    CHECK_NOTHROW(build_newton_series(wide, Scalar(rat(5, 2)), 16));

    CHECK_THROWS_AS(build_newton_series(f, Scalar(1), 0), ArgumentError);
}

TEST_CASE("handles without a transform signal cannot be expanded") {
    CHECK_THROWS_AS(build_newton_series(catalog("bessel_recip_sqrt"), Scalar(1), 8), DomainError);
    CHECK_THROWS_AS(build_newton_series(catalog("gaussian"), Scalar(1), 8), DomainError);
}

TEST_CASE("polynomials expand anywhere and terminate exactly") {
    // a purely polynomial function has a finite expansion with no
    // half-plane restriction on the center
    NewtonSeries s0 = build_newton_series(catalog("z^2"), Scalar(0), 40);
    NewtonEval at5 = eval_newton_series(s0, Scalar(5), tol_exp10(30));
    CHECK(at5.value.is_exact());
    CHECK((at5.value - Scalar(25)).is_zero());
    CHECK(at5.diagnostics.terms_used == 3);
    CHECK(at5.diagnostics.converged);
    CHECK(at5.diagnostics.last_term_mag.is_zero());

    // center left of zero is fine for polynomials
    NewtonSeries sm = build_newton_series(catalog("z^2"), Scalar(-3), 16);
    NewtonEval atm1 = eval_newton_series(sm, Scalar(-1), tol_exp10(20));
    CHECK((atm1.value - Scalar(1)).is_zero());
    CHECK(atm1.diagnostics.converged);

    // degree-7 example: zero coefficients beyond the degree, exactly
    NewtonSeries s7 = build_newton_series(catalog("z^7-4*z^3+z-10"), Scalar(2), 24);
    for (std::size_t k = 8; k < s7.coeffs.size(); ++k) {
        CHECK(s7.coeffs[k].is_zero());
        CHECK(s7.coeffs[k].is_exact());
    }
    CHECK(s7.trailing_zero_from == 8);
    // integer gap: the binomials vanish from k=2 on, two terms suffice
    NewtonEval at3 = eval_newton_series(s7, Scalar(3), tol_exp10(20));
    // 3^7 - 4*27 + 3 - 10 = 2187 - 108 - 7
    CHECK((at3.value - Scalar(2072)).is_zero());
    CHECK(at3.diagnostics.terms_used == 2);
    // non-integer gap: the zero coefficient tail ends it after degree+1 terms
    NewtonEval half = eval_newton_series(s7, Scalar(rat(7, 2)), tol_exp10(20));
    CHECK(half.value.is_exact());
    CHECK((half.value - Scalar(rat(800759, 128))).is_zero());
    CHECK(half.diagnostics.terms_used == 8);
    CHECK(half.diagnostics.converged);
}

TEST_CASE("partial sums interpolate the function at integer offsets exactly") {
    auto f = catalog("1/(z+1)");
    // one spare coefficient so the vanishing binomial at k=m+1 is visible
    NewtonSeries s = build_newton_series(f, Scalar(1), 42);
    for (long m = 1; m <= 40; ++m) {
        NewtonEval e = eval_newton_series(s, Scalar(1 + m), tol_exp10(40));
        CHECK(e.value.is_exact());
        CHECK((e.value - Scalar(rat(1, m + 2))).is_zero());
        CHECK(e.diagnostics.converged);
    }

    NewtonSeries sq = build_newton_series(catalog("z^2"), Scalar(0), 41);
    for (long m = 1; m <= 12; ++m) {
        NewtonEval e = eval_newton_series(sq, Scalar(m), tol_exp10(40));
        CHECK((e.value - Scalar(m * m)).is_zero());
    }
}

TEST_CASE("evaluation refuses the boundary and the left half-plane") {
    auto f = catalog("1/(z+1)");
    NewtonSeries s = build_newton_series(f, Scalar(1), 32);
    CHECK_THROWS_AS(eval_newton_series(s, Scalar(1), tol_exp10(8)), RegionError);
    CHECK_THROWS_AS(eval_newton_series(s, Scalar(rat(1, 2)), tol_exp10(8)), RegionError);
    // a purely imaginary offset still sits on the boundary line
    CHECK_THROWS_AS(eval_newton_series(s, gauss(1, 1, 5), tol_exp10(8)), RegionError);
    CHECK_NOTHROW(eval_newton_series(s, Scalar(2), tol_exp10(8)));

    CHECK_THROWS_AS(eval_newton_series(s, Scalar(2), Scalar(0)), ArgumentError);
    CHECK_THROWS_AS(eval_newton_series(s, Scalar(2), Scalar(-1)), ArgumentError);
    CHECK_THROWS_AS(eval_newton_series(s, Scalar(2), gauss(1, 100, 1)), ArgumentError);
}

TEST_CASE("integer gaps zero the binomials and give exact values") {
    auto f = catalog("1/(z+1)");
    NewtonSeries s = build_newton_series(f, Scalar(1), 32);
    NewtonEval e = eval_newton_series(s, Scalar(2), tol_exp10(10));
    CHECK(e.value.is_exact());
    CHECK((e.value - Scalar(rat(1, 3))).is_zero());
    CHECK(e.diagnostics.converged);
    CHECK(e.diagnostics.terms_used == 2);
}

TEST_CASE("convergence on the proven half-plane behaves as measured") {
    auto f = catalog("1/(z+1)");
    NewtonSeries s = build_newton_series(f, Scalar(1), 500);
    const Scalar tol8 = tol_exp10(8);

    auto check_point = [&](const Scalar& z, const Scalar& tol, bool want_converged,
                           double err_bound) {
        NewtonEval e = eval_newton_series(s, z, tol);
        CHECK(e.diagnostics.converged == want_converged);
        BigFloat err = (e.value - f(z)).magnitude(128);
        CHECK(err < BigFloat(err_bound, 64));
        if (want_converged) {
            CHECK(e.diagnostics.last_term_mag <= tol.magnitude(64));
        } else {
            CHECK(e.diagnostics.terms_used == 500);
        }
    };

    // real centers with integer gap terminate exactly
    check_point(Scalar(2), tol8, true, 1e-30);
    check_point(Scalar(4), tol8, true, 1e-30);
    // moderate gaps converge comfortably
    check_point(gauss(4, 1, 1), tol8, true, 1e-7);
    check_point(gauss(4, 1, -1), tol8, true, 1e-7);
    check_point(gauss(4, 1, 5), tol8, true, 1e-6);
    check_point(Scalar(rat(5, 4)), tol8, true, 1e-5);
    // tighter tolerance pushes the true error below 1e-8 where the gap is wide
    check_point(gauss(4, 1, 1), tol_exp10(10), true, 1e-8);
    check_point(gauss(4, 1, 5), tol_exp10(10), true, 1e-8);
    // a small gap with large imaginary part exhausts the budget honestly
    check_point(gauss(5, 4, 5), tol8, false, 1e-3);
    check_point(gauss(2, 1, 5), tol8, false, 1e-4);
}

TEST_CASE("exhausting max_terms reports converged=false without throwing") {
    auto f = catalog("1/(z+1)");
    NewtonSeries s = build_newton_series(f, Scalar(1), 12);
    NewtonEval e = eval_newton_series(s, Scalar(rat(9, 8)), tol_exp10(10));
    CHECK_FALSE(e.diagnostics.converged);
    CHECK(e.diagnostics.terms_used == 12);
    CHECK(e.diagnostics.last_term_mag > tol_exp10(10).magnitude(64));
    // the partial sum is still a usable approximation
    CHECK((e.value - f(Scalar(rat(9, 8)))).magnitude(128) < BigFloat(1e-2, 64));

    NewtonSeries s500 = build_newton_series(f, Scalar(1), 500);
    NewtonEval e2 = eval_newton_series(s500, Scalar(rat(9, 8)), tol_exp10(6));
    CHECK(e2.diagnostics.converged);
    CHECK(e2.diagnostics.last_term_mag <= tol_exp10(6).magnitude(64));
    CHECK((e2.value - f(Scalar(rat(9, 8)))).magnitude(128) < BigFloat(1e-4, 64));
}

TEST_CASE("binomial majorant: verdicts match the decay of the terms") {
    // integer gap: terms are 1, 1, 0, ... and T = 2 exactly
    BinomialMajorant unit = binomial_majorant(Scalar(2), Scalar(1), 40);
    CHECK(unit.verdict == MajorantVerdict::Converging);
    CHECK(unit.partial_sums.back() == BigFloat(2L, 64));
    CHECK(unit.partial_sums[1] == BigFloat(2L, 64));

    // gap 3/2: terms ~ k^{-5/2}
    BinomialMajorant conv = binomial_majorant(Scalar(rat(5, 2)), Scalar(1), 400);
    CHECK(conv.verdict == MajorantVerdict::Converging);
    CHECK(conv.decay_estimate > BigFloat(2.3, 64));
    CHECK(conv.decay_estimate < BigFloat(2.7, 64));

    // gap -1/2: terms ~ k^{-1/2}, the magnitude series cannot converge
    BinomialMajorant div = binomial_majorant(Scalar(rat(1, 2)), Scalar(1), 400);
    CHECK(div.verdict == MajorantVerdict::Diverging);
    CHECK(div.decay_estimate < BigFloat(0.7, 64));
    CHECK(div.partial_sums.back() > div.partial_sums[100]);

    // purely imaginary gap: terms ~ 1/k, still divergent
    BinomialMajorant imag = binomial_majorant(gauss(1, 1, 5), Scalar(1), 400);
    CHECK(imag.verdict == MajorantVerdict::Diverging);

    // growing terms for a gap left of the center
    BinomialMajorant grow = binomial_majorant(Scalar(-2), Scalar(1), 60);
    CHECK(grow.verdict == MajorantVerdict::Diverging);

    CHECK_THROWS_AS(binomial_majorant(Scalar(2), Scalar(1), 0), ArgumentError);
}

TEST_CASE("majorant tail times the peak signal weight bounds the remainder") {
    auto f = catalog("1/(z+1)");
    NewtonSeries s = build_newton_series(f, Scalar(1), 500);
    REQUIRE(f.laplace.has_value());
    // sup over t of |e^{-t} * e^{-t}| with the center weight sigma = Re z0 = 1
    BigFloat weight = f.laplace->signal.sup_weight(Scalar(1));
    CHECK(weight <= BigFloat(1.0000001, 64));

    for (const Scalar& z : {Scalar(rat(5, 2)), gauss(2, 1, 1), Scalar(rat(5, 4)), gauss(4, 1, 5)}) {
        NewtonEval e = eval_newton_series(s, z, tol_exp10(6));
        REQUIRE(e.diagnostics.majorant_tail.has_value());
        CHECK(!(e.diagnostics.majorant_tail->sign() < 0));
        BigFloat remainder = (e.value - f(z)).magnitude(128);
        CHECK(remainder <= *e.diagnostics.majorant_tail * weight);
    }
}

TEST_CASE("corollary pipeline validates factors and names offending poles") {
    RationalFunction simple = parse_rational("1/(z+1)");
    NewtonSeries s = corollary2_pipeline(simple, Scalar(1), 32);
    NewtonEval e = eval_newton_series(s, Scalar(2), tol_exp10(10));
    CHECK((e.value - Scalar(rat(1, 3))).is_zero());

    RationalFunction blocked = parse_rational("1/((z-2)*(z+3))");
    CHECK_THROWS_WITH_AS(corollary2_pipeline(blocked, Scalar(1), 32),
                         doctest::Contains("pole at 2"), RegionError);
    // right of every pole it builds fine, and integer gaps stay exact
    NewtonSeries sb = corollary2_pipeline(blocked, Scalar(3), 32);
    NewtonEval eb = eval_newton_series(sb, Scalar(4), tol_exp10(10));
    CHECK(eb.value.is_exact());
    CHECK((eb.value - Scalar(rat(1, 14))).is_zero());

    // polynomials have no poles but the threshold still clamps at zero
    RationalFunction cube = parse_rational("z^3");
    NewtonSeries sc = corollary2_pipeline(cube, Scalar(1), 16);
    CHECK(sc.trailing_zero_from == 4);
    NewtonEval ec = eval_newton_series(sc, Scalar(2), tol_exp10(10));
    CHECK((ec.value - Scalar(8)).is_zero());
    NewtonEval ech = eval_newton_series(sc, Scalar(rat(5, 2)), tol_exp10(10));
    CHECK((ech.value - Scalar(rat(125, 8))).is_zero());
    CHECK(ech.diagnostics.terms_used == 4);
    CHECK_THROWS_WITH_AS(corollary2_pipeline(cube, Scalar(0), 16),
                         doctest::Contains("Re(z0) > 0"), RegionError);
    CHECK_THROWS_AS(corollary2_pipeline(cube, Scalar(rat(-1, 2)), 16), RegionError);

    // complex pole pairs clamp at their real part
    RationalFunction quad = parse_rational("1/(z^2+4)");
    NewtonSeries sq = corollary2_pipeline(quad, Scalar(1), 32);
    NewtonEval eq = eval_newton_series(sq, Scalar(2), tol_exp10(10));
    CHECK((eq.value - Scalar(rat(1, 8))).is_zero());

    // improper input: polynomial part plus a proper remainder
    RationalFunction improper = parse_rational("(z^3+1)/(z-1)");
    CHECK_THROWS_WITH_AS(corollary2_pipeline(improper, Scalar(rat(1, 2)), 32),
                         doctest::Contains("pole at 1"), RegionError);
    NewtonSeries si = corollary2_pipeline(improper, Scalar(2), 32);
    NewtonEval ei = eval_newton_series(si, Scalar(3), tol_exp10(10));
    CHECK((ei.value - Scalar(14)).is_zero());
}
