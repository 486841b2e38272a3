#pragma once

#include "newtonforge/scalar.hpp"

#include <functional>
#include <vector>

namespace newtonforge {

/// One adaptive-quadrature answer: the value, an upper error estimate from
/// the refinement differences, and the number of integrand evaluations spent.
struct QuadratureResult {
    Scalar value;
    BigFloat est_error{64};
    unsigned long evaluations = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], cached per (points, prec).
struct GaussRule {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};
const GaussRule& gauss_rule(unsigned points, mpfr_prec_t prec);

/// Evaluation-budget ledger shared across the pieces of one oracle call.
/// Throws ConvergenceError when charging past the limit.
struct EvalBudget {
    unsigned long limit = 1'000'000;
    unsigned long used = 0;
    void charge(unsigned long n);
};

/// Integrand writing one Complex per tracked component into `out`
/// (out.size() fixes the component count).
using VectorIntegrand = std::function<void(const BigFloat& x, std::vector<Complex>& out)>;

struct VectorQuadrature {
    std::vector<Complex> values;
    std::vector<BigFloat> est_errors;
};

/// Globally adaptive bisection with an embedded G7/G15 pair on [a, b] for a
/// vector-valued integrand. Stops when every component's accumulated error
/// estimate is below tol * (1 + |component value|). `needs_split(a, b)`
/// forces subdivision of suspect panels (oscillation caps) regardless of
/// their error estimate; pass an empty function for none.
VectorQuadrature adaptive_integrate(
    const VectorIntegrand& f, std::size_t dim, const BigFloat& a, const BigFloat& b,
    mpfr_prec_t prec, const BigFloat& tol,
    const std::function<bool(const BigFloat&, const BigFloat&)>& needs_split, EvalBudget& budget);

/// Vector form of the half-line integral over [0, infinity) of integrands
/// bounded by C e^{-decay_rate t}: substitutes u = e^{-lambda t} with
/// lambda = decay_rate / 2 (so the transformed integrand vanishes like u at
/// the far endpoint) and integrates adaptively on (0, 1]. A positive
/// max_half_period forces panels below half an oscillation period in t.
VectorQuadrature semiinfinite_integrate(const VectorIntegrand& f, std::size_t dim,
                                        const BigFloat& decay_rate, mpfr_prec_t prec,
                                        const BigFloat& tol, const BigFloat& max_half_period,
                                        EvalBudget& budget);

/// The scalar public face: integral over [0, infinity) of an eventually
/// exponentially-decaying integrand, with est_error at or below tol.
QuadratureResult quadrature_semiinfinite(const std::function<Scalar(const BigFloat& t)>& integrand,
                                         const Scalar& decay_rate, const Scalar& tol,
                                         mpfr_prec_t prec = 192,
                                         unsigned long eval_budget = 1'000'000);

} // namespace newtonforge
