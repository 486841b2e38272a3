#pragma once

#include "newtonforge/partial_fractions.hpp"

#include <optional>
#include <vector>

namespace newtonforge {

enum class Phase { Cos, Sin };

/// One summand c * t^m * e^{a t} * cos(b t) (or sin) of a real signal on
/// t >= 0. c, a, b are real scalars; b >= 0, and pure exponentials use
/// b = 0 with a Cos phase.
struct SignalTerm {
    Scalar c;
    unsigned m = 0;
    Scalar a;
    Scalar b;
    Phase phase = Phase::Cos;
};

/// Finite sum of exponential-polynomial terms: the time-domain class whose
/// integral transforms are exactly the proper rational functions.
class ExpPolySignal {
public:
    ExpPolySignal() = default;
    /// Validates realness and b >= 0, merges duplicate shapes, drops zero
    /// terms, and sorts (descending rate, ascending frequency and power).
    explicit ExpPolySignal(std::vector<SignalTerm> terms);

    const std::vector<SignalTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    BigFloat eval(const BigFloat& t, mpfr_prec_t prec) const;

    /// Largest exponential rate max_k a_k; empty for the zero signal. The
    /// transform integral of the signal converges absolutely for Re z above
    /// this value.
    std::optional<Scalar> abscissa() const;

    /// Upper bound for sup_{t >= 0} |e^{-sigma t} * signal(t)|, valid when
    /// sigma exceeds every rate; throws RegionError otherwise.
    BigFloat sup_weight(const Scalar& sigma, mpfr_prec_t prec = 128) const;

private:
    std::vector<SignalTerm> terms_;
};

/// Image-side term b * e^{-c z} * z^m (the transform of a shifted
/// derivative spike at t = c). Polynomial image parts are carried this way.
struct DeltaImageTerm {
    Scalar coefficient;
    Scalar shift;        // real, >= 0
    unsigned degree = 0;

    Scalar image(const Scalar& z, mpfr_prec_t prec) const;
};

/// A polynomial p as zero-shift spike images p_k z^k.
std::vector<DeltaImageTerm> delta_terms_from_polynomial(const Polynomial& p);

/// Time-domain signal whose transform is the proper rational function R,
/// obtained from the partial fraction decomposition term by term. The
/// coefficients come out exact whenever every pole is rational or Gaussian
/// rational; otherwise they carry at least `prec` bits. Throws DomainError
/// on improper input.
ExpPolySignal inverse_laplace_rational(const RationalFunction& R, mpfr_prec_t prec = 256);

/// Both halves of the image pairing for an arbitrary rational function:
/// signal for the proper part, spikes for the polynomial part.
struct LaplacePair {
    ExpPolySignal signal;
    std::vector<DeltaImageTerm> deltas;
};

LaplacePair laplace_pair_for(const RationalFunction& R, mpfr_prec_t prec = 256);

} // namespace newtonforge
