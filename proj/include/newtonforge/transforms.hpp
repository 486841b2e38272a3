#pragma once

#include "newtonforge/function_handle.hpp"
#include "newtonforge/quadrature.hpp"
#include "newtonforge/signals.hpp"

#include <string>
#include <vector>

namespace newtonforge {

enum class RegionMembership { absolute, conditional_unknown, outside };
std::string to_string(RegionMembership m);

/// Membership of a point in the transform's convergence regions. `outside`
/// exists as a verdict but is never produced here: strictly right of the
/// abscissa means absolute convergence, and everywhere else conditional
/// convergence has no finite decision procedure, so the answer stays
/// conditional_unknown.
struct RegionVerdict {
    RegionMembership membership = RegionMembership::conditional_unknown;
    Scalar abscissa_used;
};

/// Classifies z against the handle's absolute-convergence boundary.
/// Throws DomainError when the handle carries no transform signal.
RegionVerdict region_membership(const FunctionHandle& handle, const Scalar& z);

/// Shared knobs for the integral oracles.
struct OracleOptions {
    mpfr_prec_t prec = 192;          // quadrature node precision
    double tol = 1e-12;              // per-order target, relative above magnitude 1
    unsigned long eval_budget = 1'000'000;
    double tail_split = 8.0;         // Fourier: |x| beyond which tails go mode by mode
};

/// Integral oracle for the n-th forward difference of a transform at step h:
///   integral over [0, inf) of e^{-z t} (e^{-h t} - 1)^n signal(t) dt
/// plus, for the spike images, the same difference formed directly from the
/// image values b e^{-c z} z^m. Requires Re(z) strictly right of the signal
/// abscissa (RegionError otherwise). A pure-spike input (empty signal) costs
/// no quadrature and stays exact for exact inputs.
QuadratureResult laplace_difference_oracle(const ExpPolySignal& signal,
                                           const std::vector<DeltaImageTerm>& deltas,
                                           const Scalar& z, const Scalar& h, unsigned n,
                                           const OracleOptions& opt = {});

/// All orders 0..n_max in one shared adaptive pass (result[n] is order n).
std::vector<QuadratureResult> laplace_difference_oracle_upto(
    const ExpPolySignal& signal, const std::vector<DeltaImageTerm>& deltas, const Scalar& z,
    const Scalar& h, unsigned n_max, const OracleOptions& opt = {});

/// Integral oracle for the forward difference on the Fourier side:
///   integral over R of (e^{-2 pi i h x} - 1)^n e^{-2 pi i y x} m(x) dx
/// with m the pair's inverse evaluator. y and h must be exact rationals
/// (h > 0): the far tails are summed mode by mode at exact frequencies
/// y + k h, which keeps slowly-decaying pairs inside the evaluation budget.
QuadratureResult fourier_forward_oracle(const FourierPair& pair, const Scalar& y, const Scalar& h,
                                        unsigned n, const OracleOptions& opt = {});
std::vector<QuadratureResult> fourier_forward_oracle_upto(const FourierPair& pair, const Scalar& y,
                                                          const Scalar& h, unsigned n_max,
                                                          const OracleOptions& opt = {});

/// Central-difference oracle through the sin^n closed form:
///   (-2i)^n integral over R of sin^n(pi h x) e^{-2 pi i y x} m(x) dx.
QuadratureResult fourier_central_oracle(const FourierPair& pair, const Scalar& y, const Scalar& h,
                                        unsigned n, const OracleOptions& opt = {});
std::vector<QuadratureResult> fourier_central_oracle_upto(const FourierPair& pair, const Scalar& y,
                                                          const Scalar& h, unsigned n_max,
                                                          const OracleOptions& opt = {});

/// The same central difference through the literal product kernel
/// (1 - e^{2 pi i h x})^n e^{-i pi h x n} e^{-2 pi i y x}: the second
/// pipeline for agreement checks against the sin^n form.
QuadratureResult fourier_central_product_oracle(const FourierPair& pair, const Scalar& y,
                                                const Scalar& h, unsigned n,
                                                const OracleOptions& opt = {});
std::vector<QuadratureResult> fourier_central_product_oracle_upto(const FourierPair& pair,
                                                                  const Scalar& y, const Scalar& h,
                                                                  unsigned n_max,
                                                                  const OracleOptions& opt = {});

} // namespace newtonforge
