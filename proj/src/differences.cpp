#include "newtonforge/differences.hpp"

#include "newtonforge/numerics.hpp"

#include <functional>

namespace newtonforge {

namespace {

void require_step(const Scalar& h) {
    if (!h.is_real()) throw ArgumentError("step h must be real");
    if (Scalar::real_cmp(h, Scalar(0)) <= 0) throw ArgumentError("step h must be positive");
}

Scalar eval_node(const FunctionHandle& f, const Scalar& node, mpfr_prec_t wp,
                 bool require_exact) {
    Scalar v;
    try {
        v = f.evaluator(node, wp);
    } catch (const PoleError& e) {
        throw PoleError("node " + node.format() + ": " + e.what());
    } catch (const DomainError& e) {
        throw DomainError("node " + node.format() + ": " + e.what());
    }
    if (require_exact && !v.is_exact())
        throw DomainError("exact mode: value at node " + node.format() +
                          " did not come out exact");
    return v;
}

// Shared direct-summation core: nodes node_at(k), weights C(n,k) with an
// optional alternating sign.
Scalar weighted_sum(const FunctionHandle& f, unsigned n, const PrecisionPolicy& policy,
                    const std::function<Scalar(unsigned)>& node_at,
                    const std::function<bool(unsigned)>& negate) {
    mpfr_prec_t wp = policy.working_bits(n);
    bool exact_req = policy.is_exact();
    std::vector<Scalar> terms;
    terms.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Scalar v = eval_node(f, node_at(k), wp, exact_req);
        mpz_class c = binomial_exact(n, k);
        if (negate(k)) c = -c;
        terms.push_back(Scalar(mpq_class(c)) * v);
    }
    return compensated_sum(terms);
}

} // namespace

Scalar forward_difference(const FunctionHandle& f, const Scalar& z, const Scalar& h, unsigned n,
                          const PrecisionPolicy& policy) {
    require_step(h);
    return weighted_sum(
        f, n, policy, [&](unsigned k) { return z + Scalar(static_cast<long>(k)) * h; },
        [&](unsigned k) { return ((n - k) & 1u) != 0; });
}

Scalar backward_difference(const FunctionHandle& f, const Scalar& z, const Scalar& h, unsigned n,
                           const PrecisionPolicy& policy) {
    require_step(h);
    return weighted_sum(
        f, n, policy, [&](unsigned k) { return z - Scalar(static_cast<long>(k)) * h; },
        [](unsigned k) { return (k & 1u) != 0; });
}

Scalar central_difference(const FunctionHandle& f, const Scalar& z, const Scalar& h, unsigned n,
                          const PrecisionPolicy& policy) {
    require_step(h);
    return weighted_sum(
        f, n, policy,
        [&](unsigned k) {
            mpq_class offset(static_cast<long>(n) - 2 * static_cast<long>(k), 2);
            offset.canonicalize();
            return z + Scalar(offset) * h;
        },
        [](unsigned k) { return (k & 1u) != 0; });
}

Scalar binomial_sum(const FunctionHandle& f, const Scalar& y, const Scalar& h, unsigned n,
                    DifferenceKind variant, const PrecisionPolicy& policy) {
    require_step(h);
    auto no_sign = [](unsigned) { return false; };
    switch (variant) {
        case DifferenceKind::Forward:
            return weighted_sum(
                f, n, policy, [&](unsigned k) { return y + Scalar(static_cast<long>(k)) * h; },
                no_sign);
        case DifferenceKind::Backward:
            return weighted_sum(
                f, n, policy, [&](unsigned k) { return y - Scalar(static_cast<long>(k)) * h; },
                no_sign);
        case DifferenceKind::Central:
        default:
            return weighted_sum(
                f, n, policy,
                [&](unsigned k) {
                    mpq_class offset(static_cast<long>(n) - 2 * static_cast<long>(k), 2);
                    offset.canonicalize();
                    return y + Scalar(offset) * h;
                },
                no_sign);
    }
}

DifferenceTable::DifferenceTable(const FunctionHandle& f, Scalar z, Scalar h, unsigned n_max,
                                 const PrecisionPolicy& policy)
    : z_(std::move(z)), h_(std::move(h)) {
    require_step(h_);
    mpfr_prec_t wp = policy.working_bits(n_max);
    bool exact_req = policy.is_exact();

    std::vector<Scalar> row;
    row.reserve(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j)
        row.push_back(eval_node(f, z_ + Scalar(static_cast<long>(j)) * h_, wp, exact_req));
    rows_.push_back(row);
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<Scalar> next;
        next.reserve(n_max - n + 1);
        const auto& prev = rows_.back();
        for (unsigned j = 0; j + 1 < prev.size(); ++j) next.push_back(prev[j + 1] - prev[j]);
        rows_.push_back(std::move(next));
    }
}

const Scalar& DifferenceTable::at(unsigned n, unsigned j) const {
    if (n >= rows_.size() || j >= rows_[n].size())
        throw ArgumentError("difference table index out of range");
    return rows_[n][j];
}

std::vector<Scalar> DifferenceTable::leading_column() const {
    std::vector<Scalar> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.front());
    return out;
}

std::vector<Scalar> forward_difference_sequence(const FunctionHandle& f, const Scalar& z,
                                                const Scalar& h, unsigned n_max,
                                                const PrecisionPolicy& policy) {
    require_step(h);
    mpfr_prec_t wp = policy.working_bits(n_max);
    bool exact_req = policy.is_exact();

    std::vector<Scalar> row;
    row.reserve(n_max + 1);
    for (unsigned j = 0; j <= n_max; ++j)
        row.push_back(eval_node(f, z + Scalar(static_cast<long>(j)) * h, wp, exact_req));

    std::vector<Scalar> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        out.push_back(row.front());
        for (std::size_t j = 0; j + 1 < row.size(); ++j) row[j] = row[j + 1] - row[j];
        row.pop_back();
    }
    return out;
}

FunctionHandle modulate(const FunctionHandle& f, const Scalar& h) {
    require_step(h);
    FunctionHandle out;
    out.name = "modulated(" + f.name + ")";
    out.exact_evaluator = f.exact_evaluator;
    auto inner = f.evaluator;
    Scalar step = h;
    out.evaluator = [inner, step](const Scalar& y, mpfr_prec_t prec) {
        Scalar value = inner(y, prec);
        Scalar ratio = y / step;
        if (ratio.is_exact() && ratio.is_real()) {
            mpq_class twice = 2 * ratio.exact().re;
            if (twice.get_den() == 1) {
                // Phase is a power of i: e^{i pi m / 2} with m = 2 y / h.
                mpz_class m = twice.get_num() % 4;
                if (m < 0) m += 4;
                static const RationalComplex quarter_turns[4] = {
                    RationalComplex(mpq_class(1), mpq_class(0)),
                    RationalComplex(mpq_class(0), mpq_class(1)),
                    RationalComplex(mpq_class(-1), mpq_class(0)),
                    RationalComplex(mpq_class(0), mpq_class(-1)),
                };
                return Scalar(quarter_turns[m.get_ui()]) * value;
            }
        }
        mpfr_prec_t wp = prec + 16;
        Complex rc = ratio.as_complex(wp);
        Complex iarg(-(BigFloat::pi(wp) * rc.im), BigFloat::pi(wp) * rc.re);
        return Scalar(iarg.exp()) * value;
    };
    return out;
}

const char* to_string(AsymptoticVerdict v) {
    switch (v) {
        case AsymptoticVerdict::TendsToZero: return "tends_to_zero";
        case AsymptoticVerdict::LittleO2nOnly: return "little_o_2n_only";
        case AsymptoticVerdict::Divergent: return "divergent";
        case AsymptoticVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

AsymptoticReport asymptotic_profile(const std::vector<Scalar>& values) {
    if (values.size() < 16)
        throw DomainError("asymptotic profile needs at least 16 values");

    const mpfr_prec_t mp = 128;
    AsymptoticReport rep;
    rep.raw = values;
    rep.normalized.reserve(values.size());
    std::vector<BigFloat> mags;
    mags.reserve(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        BigFloat m = values[n].magnitude(mp);
        mags.push_back(m);
        rep.normalized.push_back(m.mul_2si(-static_cast<long>(n)));
    }

    std::size_t q = values.size() / 4;
    if (q == 0) q = 1;
    rep.quartile = static_cast<unsigned>(q);
    auto window_max = [&](const std::vector<BigFloat>& xs, std::size_t from, std::size_t count) {
        BigFloat best(0L, mp);
        for (std::size_t i = from; i < from + count; ++i) best = BigFloat::max(best, xs[i]);
        return best;
    };
    rep.lead_raw_max = window_max(mags, 0, q);
    rep.trail_raw_max = window_max(mags, values.size() - q, q);
    rep.lead_norm_max = window_max(rep.normalized, 0, q);
    rep.trail_norm_max = window_max(rep.normalized, values.size() - q, q);

    mpq_class micro(1, 1000000);
    mpq_class milli(1, 1000);
    BigFloat lead_or_one =
        rep.lead_raw_max.is_zero() ? BigFloat(1L, mp) : rep.lead_raw_max;
    if (rep.trail_raw_max < BigFloat(micro, mp) * lead_or_one)
        rep.verdict = AsymptoticVerdict::TendsToZero;
    else if (rep.trail_norm_max < BigFloat(milli, mp) * rep.lead_norm_max)
        rep.verdict = AsymptoticVerdict::LittleO2nOnly;
    else if (BigFloat(10L, mp) * rep.lead_raw_max < rep.trail_raw_max)
        rep.verdict = AsymptoticVerdict::Divergent;
    else
        rep.verdict = AsymptoticVerdict::Inconclusive;
    return rep;
}

} // namespace newtonforge
