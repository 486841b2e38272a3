#pragma once

#include "newtonforge/function_handle.hpp"

#include <vector>

namespace newtonforge {

enum class DifferenceKind { Forward, Backward, Central };

/// n-th order forward difference at step h: sum of C(n,k) (-1)^{n-k} f(z+kh),
/// by direct exact-binomial summation under the precision policy. Node
/// evaluation failures carry the offending node in the message.
Scalar forward_difference(const FunctionHandle& f, const Scalar& z, const Scalar& h, unsigned n,
                          const PrecisionPolicy& policy = {});

/// sum of C(n,k) (-1)^k f(z-kh).
Scalar backward_difference(const FunctionHandle& f, const Scalar& z, const Scalar& h, unsigned n,
                           const PrecisionPolicy& policy = {});

/// sum of C(n,k) (-1)^k f(z+(n/2-k)h); odd n lands on half-integer offsets,
/// which stay exact for rational z and h.
Scalar central_difference(const FunctionHandle& f, const Scalar& z, const Scalar& h, unsigned n,
                          const PrecisionPolicy& policy = {});

/// The plus-sign companion sum of the chosen variant (binomial weights, no
/// alternating signs), e.g. forward: sum of C(n,k) f(y+kh).
Scalar binomial_sum(const FunctionHandle& f, const Scalar& y, const Scalar& h, unsigned n,
                    DifferenceKind variant, const PrecisionPolicy& policy = {});

/// Triangular difference table rows[n][j] = forward difference of order n at
/// z + j h, for 0 <= n + j <= n_max, built by the Pascal recurrence
/// rows[n+1][j] = rows[n][j+1] - rows[n][j] from one row of function values.
class DifferenceTable {
public:
    DifferenceTable(const FunctionHandle& f, Scalar z, Scalar h, unsigned n_max,
                    const PrecisionPolicy& policy = {});

    unsigned order_max() const { return static_cast<unsigned>(rows_.size()) - 1; }
    const Scalar& z() const { return z_; }
    const Scalar& h() const { return h_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const Scalar& at(unsigned n, unsigned j) const;
    /// rows[n][0] for n = 0..n_max: all difference orders at the base point.
    std::vector<Scalar> leading_column() const;

private:
    Scalar z_, h_;
    std::vector<std::vector<Scalar>> rows_;
};

/// Leading difference column up to large n_max without storing the triangle:
/// one rolling row, updated in place. Same values as
/// DifferenceTable::leading_column.
std::vector<Scalar> forward_difference_sequence(const FunctionHandle& f, const Scalar& z,
                                                const Scalar& h, unsigned n_max,
                                                const PrecisionPolicy& policy = {});

/// The modulated function y -> e^{i pi y / h} f(y). At half-integer y/h the
/// phase is a power of i and exact inputs stay exact.
FunctionHandle modulate(const FunctionHandle& f, const Scalar& h);

enum class AsymptoticVerdict { TendsToZero, LittleO2nOnly, Divergent, Inconclusive };

const char* to_string(AsymptoticVerdict v);

/// Desk-scale classification of a difference sequence against the o(2^n)
/// yardstick, by comparing leading- and trailing-quartile maxima.
struct AsymptoticReport {
    std::vector<Scalar> raw;
    std::vector<BigFloat> normalized;  // |raw[n]| / 2^n
    AsymptoticVerdict verdict = AsymptoticVerdict::Inconclusive;
    unsigned quartile = 0;
    BigFloat lead_raw_max, trail_raw_max;
    BigFloat lead_norm_max, trail_norm_max;
};

/// Requires >= 16 values. Verdict rules, in precedence order:
/// tends_to_zero when trailing raw max < 1e-6 * (leading raw max, or 1 if 0);
/// little_o_2n_only when trailing normalized max < 1e-3 * leading normalized
/// max but raw does not tend to zero; divergent when trailing raw max >
/// 10 * leading raw max; otherwise inconclusive.
AsymptoticReport asymptotic_profile(const std::vector<Scalar>& values);

} // namespace newtonforge
