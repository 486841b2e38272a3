#pragma once

#include "newtonforge/differences.hpp"
#include "newtonforge/partial_fractions.hpp"

#include <optional>
#include <vector>

namespace newtonforge {

/// Forward-difference (Newton) series of f centered at z0 with unit step:
/// value(z) = sum_k C(z - z0, k) * coeffs[k]. Convergence is proven in the
/// open half-plane Re(z) > Re(z0) once the center lies strictly right of
/// the absolute-convergence abscissa of f.
struct NewtonSeries {
    FunctionHandle f;
    Scalar z0;
    /// coeffs[k] = forward difference of order k of f at z0, step 1.
    std::vector<Scalar> coeffs;
    /// Boundary the center was validated against. Purely polynomial
    /// functions expand into a finite series valid everywhere; their
    /// stored boundary is -infinity.
    Scalar abscissa;
    unsigned max_terms = 0;
    /// First index from which every remaining coefficient is exactly zero
    /// (== coeffs.size() when the tail is nonzero); lets evaluation
    /// terminate polynomial expansions exactly.
    std::size_t trailing_zero_from = 0;
};

struct EvalDiagnostics {
    unsigned terms_used = 0;
    /// Magnitude of the last added term measured relative to the stopping
    /// scale 1 + |partial sum|, so converged implies last_term_mag <= tol.
    /// Zero when the series terminated exactly.
    BigFloat last_term_mag{64};
    /// Tail of the binomial magnitude series T from the first unused index
    /// onward; present when binomial_majorant reports converging at this
    /// (z, z0). Together with the peak signal weight it bounds the
    /// remainder.
    std::optional<BigFloat> majorant_tail;
    bool converged = false;
};

struct NewtonEval {
    Scalar value;
    EvalDiagnostics diagnostics;
};

/// Builds the series. Coefficients come from one unit-step difference table
/// at working precision max_terms + 64 bits, computed once and reused by
/// every evaluation. The center must lie strictly right of the handle's
/// absolute-convergence abscissa (RegionError otherwise); handles without a
/// transform signal are rejected (DomainError), except purely polynomial
/// ones, whose finite expansion needs no region at all.
NewtonSeries build_newton_series(const FunctionHandle& f, const Scalar& z0, unsigned max_terms);

/// Evaluates the partial sum with a heuristic stopping rule: stop at the
/// first index K >= 8 whose term and predecessor are both below
/// tol * (1 + |partial sum|); two consecutive small terms guard against the
/// alternating-magnitude pattern of generalized binomials. Series that
/// terminate exactly (zero coefficient tail, or integer z - z0 zeroing the
/// binomials) converge immediately. Requires Re(z) > Re(z0) strictly
/// (RegionError; the boundary is never attempted). Exhausting max_terms is
/// not an error: the best value is returned with converged = false.
NewtonEval eval_newton_series(const NewtonSeries& s, const Scalar& z, const Scalar& tol);

enum class MajorantVerdict { Converging, Diverging, Inconclusive };

const char* to_string(MajorantVerdict v);

/// Partial sums of the binomial magnitude series T = sum_k |C(z - z0, k)|,
/// whose terms behave like k^(-1 - Re(z - z0)) for large k. The verdict
/// fits the decay exponent from trailing term ratios: converging needs a
/// fitted exponent safely above 1, diverging covers growth as well as decay
/// too slow to sum. decay_estimate reports the fitted exponent.
struct BinomialMajorant {
    std::vector<BigFloat> partial_sums;
    MajorantVerdict verdict = MajorantVerdict::Inconclusive;
    BigFloat decay_estimate{64};
};

BinomialMajorant binomial_majorant(const Scalar& z, const Scalar& z0, unsigned k_max);

/// Series for a rational function through the decomposition route: splits R
/// into partial fractions, checks Re(z0) > max{0, Re(pole)} strictly
/// against every factor's poles (RegionError naming the offending pole,
/// or the zero threshold when only the clamp binds), then builds the series
/// on R itself. Polynomial parts terminate exactly.
NewtonSeries corollary2_pipeline(const RationalFunction& R, const Scalar& z0, unsigned max_terms);

} // namespace newtonforge
