#include "doctest.h"

#include "newtonforge/errors.hpp"
#include "newtonforge/quadrature.hpp"

using namespace newtonforge;

namespace {

mpq_class rat(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

BigFloat tiny(int e, mpfr_prec_t prec = 192) { return BigFloat(1L, prec).mul_2si(e); }

} // namespace

TEST_CASE("gauss rules have symmetric nodes and unit-measure weights") {
    for (unsigned pts : {7u, 15u}) {
        const GaussRule& rule = gauss_rule(pts, 192);
        REQUIRE(rule.nodes.size() == pts);
        REQUIRE(rule.weights.size() == pts);
        BigFloat wsum(0L, 256);
        for (const auto& w : rule.weights) wsum += w;
        CHECK((wsum - BigFloat(2L, 256)).abs() < tiny(-180));
        for (unsigned i = 0; i < pts; ++i) {
            CHECK((rule.nodes[i] + rule.nodes[pts - 1 - i]).abs() < tiny(-180));
            CHECK(rule.weights[i] > BigFloat(0L, 64));
        }
    }
}

TEST_CASE("gauss rules integrate monomials to their degree of exactness") {
    for (auto [pts, kmax] : {std::pair<unsigned, unsigned>{7, 13}, {15, 29}}) {
        const GaussRule& rule = gauss_rule(pts, 192);
        for (unsigned k = 0; k <= kmax; ++k) {
            BigFloat acc(0L, 224);
            for (unsigned i = 0; i < pts; ++i) acc += rule.weights[i] * rule.nodes[i].pow_ui(k);
            BigFloat expect = k % 2 == 1 ? BigFloat(0L, 224)
                                         : BigFloat(rat(2, static_cast<long>(k) + 1), 224);
            CHECK((acc - expect).abs() < tiny(-170));
        }
    }
}

TEST_CASE("adaptive engine handles smooth and oscillatory components together") {
    const mpfr_prec_t prec = 192;
    VectorIntegrand f = [](const BigFloat& x, std::vector<Complex>& out) {
        BigFloat s(0L, x.prec()), c(0L, x.prec());
        x.sin_cos(s, c);
        out[0] = Complex(c, BigFloat(0L, x.prec()));
        out[1] = Complex(s, BigFloat(0L, x.prec()));
        out[2] = Complex((BigFloat(20L, x.prec()) * x).sin(), BigFloat(0L, x.prec()));
    };
    BigFloat pi = BigFloat::pi(prec + 32);
    BigFloat cap = pi / BigFloat(20L, prec + 32); // half period of the fast component
    auto rule = [cap](const BigFloat& a, const BigFloat& b) { return (b - a) > cap; };
    EvalBudget budget;
    VectorQuadrature q =
        adaptive_integrate(f, 3, BigFloat(0L, prec), pi, prec, BigFloat(rat(1, 1), 224).mul_2si(-83),
                           rule, budget);

    // sin and cos over a full half wave: 0, 2, and (1 - cos 20 pi)/20 = 0.
    CHECK(q.values[0].magnitude() < tiny(-80));
    CHECK((q.values[1].re - BigFloat(2L, 224)).abs() < tiny(-80));
    CHECK(q.values[1].im.is_zero());
    CHECK(q.values[2].magnitude() < tiny(-80));
    for (const auto& e : q.est_errors) CHECK(e < tiny(-80) * BigFloat(3L, 64));
    CHECK(budget.used > 22u * 40u); // the cap alone forces at least 40 panels
    CHECK(budget.used <= budget.limit);
}

TEST_CASE("adaptive engine integrates e^x on [0,1]") {
    VectorIntegrand f = [](const BigFloat& x, std::vector<Complex>& out) {
        out[0] = Complex(x.exp(), BigFloat(0L, x.prec()));
    };
    EvalBudget budget;
    VectorQuadrature q = adaptive_integrate(f, 1, BigFloat(0L, 192), BigFloat(1L, 192), 192,
                                            tiny(-120), {}, budget);
    BigFloat expect = BigFloat(1L, 224).exp() - BigFloat(1L, 224);
    CHECK((q.values[0].re - expect).abs() < tiny(-115));
    // stopping rule is tol * max(1, |value|) and the value here is e - 1
    CHECK(q.est_errors[0] < tiny(-119));
}

TEST_CASE("semiinfinite integral of e^-t is 1") {
    auto res = quadrature_semiinfinite([](const BigFloat& t) { return Scalar((-t).exp()); },
                                       Scalar(1), Scalar(rat(1, 1000000000000L)));
    CHECK((res.value - Scalar(1)).magnitude() < BigFloat(rat(1, 1000000000000L), 64));
    CHECK(res.est_error <= BigFloat(rat(1, 1000000000000L), 64));
    CHECK(res.evaluations > 0u);
    CHECK(res.evaluations <= 1000000u);
    CHECK_FALSE(res.value.is_exact());
}

TEST_CASE("semiinfinite integral of t e^-t is 1") {
    auto res = quadrature_semiinfinite([](const BigFloat& t) { return Scalar(t * (-t).exp()); },
                                       Scalar(1), Scalar(rat(1, 1000000000000L)));
    CHECK((res.value - Scalar(1)).magnitude() < BigFloat(rat(1, 1000000000000L), 64));
    CHECK(res.est_error <= BigFloat(rat(1, 1000000000000L), 64));
}

TEST_CASE("semiinfinite integral of t^2 e^-2t is 1/4") {
    auto res = quadrature_semiinfinite(
        [](const BigFloat& t) { return Scalar(t * t * (BigFloat(-2L, t.prec()) * t).exp()); },
        Scalar(2), Scalar(rat(1, 1000000000000L)));
    CHECK((res.value - Scalar(rat(1, 4))).magnitude() < BigFloat(rat(1, 1000000000000L), 64));
}

TEST_CASE("semiinfinite integral of a gaussian matches sqrt(pi)/2") {
    auto res = quadrature_semiinfinite([](const BigFloat& t) { return Scalar((-(t * t)).exp()); },
                                       Scalar(1), Scalar(rat(1, 1000000000000L)));
    BigFloat expect = BigFloat::pi(224).sqrt().mul_2si(-1);
    CHECK((res.value.as_complex(224).re - expect).abs() < BigFloat(rat(1, 1000000000000L), 64));
}

TEST_CASE("semiinfinite zero integrand returns zero with zero error") {
    auto res = quadrature_semiinfinite([](const BigFloat&) { return Scalar(0); }, Scalar(1),
                                       Scalar(rat(1, 1000000000000L)));
    CHECK(res.value.magnitude().is_zero());
    CHECK(res.est_error.is_zero());
    CHECK(res.evaluations > 0u);
}

TEST_CASE("semiinfinite vector path resolves oscillation under the half-period cap") {
    // e^-t cos t and e^-t sin t integrate to 1/2 each.
    VectorIntegrand f = [](const BigFloat& t, std::vector<Complex>& out) {
        BigFloat s(0L, t.prec()), c(0L, t.prec());
        t.sin_cos(s, c);
        BigFloat damp = (-t).exp();
        out[0] = Complex(damp * c, BigFloat(0L, t.prec()));
        out[1] = Complex(damp * s, BigFloat(0L, t.prec()));
    };
    EvalBudget budget;
    VectorQuadrature q = semiinfinite_integrate(f, 2, BigFloat(1L, 192), 192, tiny(-66),
                                                BigFloat::pi(192), budget);
    BigFloat half = BigFloat(1L, 224).mul_2si(-1);
    CHECK((q.values[0].re - half).abs() < tiny(-64));
    CHECK((q.values[1].re - half).abs() < tiny(-64));
    CHECK(q.est_errors[0] < tiny(-64));
    CHECK(q.est_errors[1] < tiny(-64));
    CHECK(budget.used <= budget.limit);
}

TEST_CASE("exhausting the evaluation budget raises a convergence error") {
    CHECK_THROWS_WITH_AS(quadrature_semiinfinite([](const BigFloat& t) { return Scalar((-t).exp()); },
                                                 Scalar(1), Scalar(rat(1, 1000000000000L)), 192, 21),
                         "quadrature tolerance not reached within the evaluation budget",
                         ConvergenceError);
}

TEST_CASE("semiinfinite integration validates its arguments") {
    auto f = [](const BigFloat&) { return Scalar(1); };
    CHECK_THROWS_AS(quadrature_semiinfinite(f, Scalar(0), Scalar(rat(1, 100))), ArgumentError);
    CHECK_THROWS_AS(quadrature_semiinfinite(f, Scalar(-1), Scalar(rat(1, 100))), ArgumentError);
    CHECK_THROWS_AS(quadrature_semiinfinite(f, Scalar(RationalComplex(mpq_class(1), mpq_class(1))),
                                            Scalar(rat(1, 100))),
                    ArgumentError);
    CHECK_THROWS_AS(quadrature_semiinfinite(f, Scalar(1), Scalar(0)), ArgumentError);
    CHECK_THROWS_AS(quadrature_semiinfinite(f, Scalar(1), Scalar(rat(-1, 100))), ArgumentError);
}
