#pragma once

#include "newtonforge/signals.hpp"

#include <functional>
#include <optional>
#include <string>

namespace newtonforge {

/// Pair of an inverse-Fourier-side evaluator m(x) with the convention that
/// the forward integral of m against e^{-2 pi i y x} reproduces the handle's
/// own evaluator on the real line. m must be real-valued and decay at least
/// like x^{-2} so tail integrals converge absolutely.
struct FourierPair {
    std::function<BigFloat(const BigFloat& x, mpfr_prec_t prec)> inverse;
};

/// A function together with whatever transform-side data it supports.
/// Evaluators take the requested working precision; exact-capable handles
/// return exact scalars for exact arguments and ignore it.
struct FunctionHandle {
    std::string name;
    std::function<Scalar(const Scalar& z, mpfr_prec_t prec)> evaluator;
    bool exact_evaluator = false;

    /// Time-domain signal (plus spike images) whose transform is this
    /// function; present for rational-derived handles.
    std::optional<LaplacePair> laplace;

    /// Inverse-transform evaluator for Fourier-side identities.
    std::optional<FourierPair> fourier;

    /// Boundary of the absolute-convergence half-plane: membership is
    /// Re(z) > abs_abscissa, strictly. Present whenever laplace is.
    std::optional<Scalar> abs_abscissa;

    /// The underlying rational function, when the handle came from one.
    std::optional<RationalFunction> rational;

    Scalar operator()(const Scalar& z, mpfr_prec_t prec = 256) const {
        return evaluator(z, prec);
    }
};

/// Handle for a rational function: exact evaluator, transform signal with
/// spike images for the polynomial part, and the absolute abscissa
/// max{0, max Re(pole)}.
FunctionHandle handle_from_rational(const RationalFunction& R, std::string name = {});

/// The absolute-convergence boundary of a handle carrying a signal.
/// Throws DomainError when the handle has no transform signal.
Scalar abs_convergence_abscissa(const FunctionHandle& handle);

/// Named catalog: "bessel_recip_sqrt" for (1+z^2)^{-1/2} (evaluator only),
/// "gaussian" for e^{-pi y^2} with inverse e^{-pi x^2}, "two_sided_exp" for
/// e^{-2 pi |y|} with inverse (1/pi)/(1+x^2). Anything else is parsed as a
/// rational expression; unknown bare identifiers raise DomainError.
FunctionHandle catalog(const std::string& name);

} // namespace newtonforge
