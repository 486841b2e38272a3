#pragma once

#include "newtonforge/differences.hpp"

#include <optional>
#include <vector>

namespace newtonforge {

/// Side-by-side record of an alternating series sum(-1)^n f(n) and its
/// Euler-transformed companion sum(-1)^m diff^m[f](0) / 2^(m+1), which sums
/// the same value but usually much faster.
struct AccelerationReport {
    /// Partial sums of the raw alternating series.
    std::vector<Scalar> raw_partials;
    /// Partial sums of the transformed series; entry n adds the terms
    /// (-1)^m diff^m[f](0) / 2^(m+1) for m <= n.
    std::vector<Scalar> accel_partials;
    /// Known limit supplied by the caller; the report never guesses one.
    std::optional<Scalar> reference;
    /// Distances to the reference, present when it was supplied.
    std::vector<BigFloat> raw_errors;
    std::vector<BigFloat> accel_errors;
    /// Trailing geometric mean of consecutive accel_errors ratios (last
    /// quartile); zero when the errors vanish outright.
    BigFloat rate_ratio{64};
};

/// Runs the transformation alone: both partial-sum sequences for n = 0 ..
/// n_terms, the difference coefficients coming from one unit-step table at
/// the origin. Exact function values keep every partial sum exact.
AccelerationReport euler_transform(const FunctionHandle& f, unsigned n_terms);

/// euler_transform plus error analysis against a caller-supplied limit.
AccelerationReport acceleration_report(const FunctionHandle& f, const Scalar& reference,
                                       unsigned n_terms);

} // namespace newtonforge
