#include "newtonforge/euler.hpp"

#include "newtonforge/errors.hpp"

#include <algorithm>

namespace newtonforge {

namespace {

constexpr mpfr_prec_t kErrPrec = 128;

// Geometric mean of consecutive error ratios over the last quartile.
// Ratios with a zero denominator are skipped; a zero numerator drives the
// mean to zero, which is the honest reading of an exactly-hit limit.
BigFloat trailing_rate(const std::vector<BigFloat>& errors) {
    if (errors.size() < 2) {
        return BigFloat(0L, kErrPrec);
    }
    const std::size_t quartile = std::max<std::size_t>(errors.size() / 4, 1);
    const std::size_t first = errors.size() - 1 - quartile;
    BigFloat log_sum(0L, kErrPrec);
    unsigned long used = 0;
    for (std::size_t i = first; i + 1 < errors.size(); ++i) {
        if (errors[i].is_zero()) {
            continue;
        }
        log_sum = log_sum + (errors[i + 1] / errors[i]).log();
        ++used;
    }
    if (used == 0) {
        return BigFloat(0L, kErrPrec);
    }
    return (log_sum / BigFloat(static_cast<long>(used), kErrPrec)).exp();
}

} // namespace

AccelerationReport euler_transform(const FunctionHandle& f, unsigned n_terms) {
    if (n_terms == 0) {
        throw ArgumentError("n_terms must be positive");
    }
    DifferenceTable table(f, Scalar(0), Scalar(1), n_terms, PrecisionPolicy::automatic(64));
    const std::vector<Scalar>& values = table.rows()[0];
    const std::vector<Scalar> diffs = table.leading_column();

    AccelerationReport rep;
    rep.raw_partials.reserve(n_terms + 1);
    rep.accel_partials.reserve(n_terms + 1);

    Scalar raw(0);
    Scalar accel(0);
    mpq_class half_pow(1, 2); // 1 / 2^(m+1)
    for (unsigned n = 0; n <= n_terms; ++n) {
        const Scalar sign(n % 2 == 0 ? 1 : -1);
        raw = raw + sign * values[n];
        accel = accel + sign * diffs[n] * Scalar(half_pow);
        rep.raw_partials.push_back(raw);
        rep.accel_partials.push_back(accel);
        half_pow /= 2;
    }
    return rep;
}

AccelerationReport acceleration_report(const FunctionHandle& f, const Scalar& reference,
                                       unsigned n_terms) {
    AccelerationReport rep = euler_transform(f, n_terms);
    rep.reference = reference;
    rep.raw_errors.reserve(rep.raw_partials.size());
    rep.accel_errors.reserve(rep.accel_partials.size());
    for (std::size_t n = 0; n < rep.raw_partials.size(); ++n) {
        rep.raw_errors.push_back((rep.raw_partials[n] - reference).magnitude(kErrPrec));
        rep.accel_errors.push_back((rep.accel_partials[n] - reference).magnitude(kErrPrec));
    }
    rep.rate_ratio = trailing_rate(rep.accel_errors);
    return rep;
}

} // namespace newtonforge
