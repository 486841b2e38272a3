#include "newtonforge/transforms.hpp"

#include "newtonforge/errors.hpp"
#include "newtonforge/numerics.hpp"

#include <map>
#include <utility>
#include <vector>

namespace newtonforge {

namespace {

mpq_class require_exact_rational(const Scalar& v, const char* what) {
    if (!v.is_exact() || !v.is_real())
        throw ArgumentError(std::string(what) + " must be an exact rational");
    return v.exact().re;
}

void require_positive_real_step(const Scalar& h) {
    if (!h.is_real() || Scalar::real_cmp(h, Scalar(0)) <= 0)
        throw ArgumentError("step h must be a positive real number");
}

BigFloat two_pi(mpfr_prec_t prec) { return BigFloat::pi(prec).mul_2si(1); }

/// Rough roundoff allowance for a value assembled at `prec` working bits.
BigFloat roundoff_allowance(const BigFloat& scale, mpfr_prec_t prec) {
    return (BigFloat(1L, prec) + scale).mul_2si(-static_cast<long>(prec));
}

// --------------------------------------------------------------------------
// Laplace side
// --------------------------------------------------------------------------

/// Forward differences of the spike-image sum at nodes z, z+h, ..., z+n_max h.
/// Exact inputs stay exact; the caller widens precision for the binomial
/// cancellation.
std::vector<Scalar> spike_differences(const std::vector<DeltaImageTerm>& deltas, const Scalar& z,
                                      const Scalar& h, unsigned n_max, mpfr_prec_t wp) {
    std::vector<Scalar> node_values(n_max + 1);
    for (unsigned k = 0; k <= n_max; ++k) {
        Scalar node = z + Scalar(static_cast<long>(k)) * h;
        std::vector<Scalar> parts;
        parts.reserve(deltas.size());
        for (const auto& d : deltas) parts.push_back(d.image(node, wp));
        node_values[k] = compensated_sum(parts);
    }
    std::vector<Scalar> diffs(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<Scalar> terms;
        terms.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            mpz_class c = binomial_exact(n, k);
            if ((n - k) % 2 != 0) c = -c;
            terms.push_back(Scalar(mpq_class(c)) * node_values[k]);
        }
        diffs[n] = compensated_sum(terms);
    }
    return diffs;
}

} // namespace

std::string to_string(RegionMembership m) {
    switch (m) {
    case RegionMembership::absolute: return "absolute";
    case RegionMembership::conditional_unknown: return "conditional_unknown";
    case RegionMembership::outside: return "outside";
    }
    return "conditional_unknown";
}

RegionVerdict region_membership(const FunctionHandle& handle, const Scalar& z) {
    RegionVerdict verdict;
    verdict.abscissa_used = abs_convergence_abscissa(handle); // throws without a signal
    verdict.membership = Scalar::real_cmp(z, verdict.abscissa_used) > 0
                             ? RegionMembership::absolute
                             : RegionMembership::conditional_unknown;
    return verdict;
}

std::vector<QuadratureResult> laplace_difference_oracle_upto(
    const ExpPolySignal& signal, const std::vector<DeltaImageTerm>& deltas, const Scalar& z,
    const Scalar& h, unsigned n_max, const OracleOptions& opt) {
    require_positive_real_step(h);
    const mpfr_prec_t wp = opt.prec + 32;
    EvalBudget budget{opt.eval_budget, 0};

    std::vector<Complex> integral_vals(n_max + 1, Complex(wp));
    std::vector<BigFloat> integral_errs(n_max + 1, BigFloat(wp));
    if (!signal.empty()) {
        const Scalar abscissa = *signal.abscissa();
        if (Scalar::real_cmp(z, abscissa) <= 0)
            throw RegionError("laplace oracle needs Re(z) strictly right of the signal abscissa " +
                              abscissa.format());

        const Complex zc = z.as_complex(wp);
        const BigFloat hc = h.as_complex(wp).re;
        const BigFloat decay = zc.re - abscissa.as_complex(wp).re;

        // Oscillation bound: e^{-i Im(z) t} times the largest cos/sin rate.
        BigFloat freq = zc.im.abs();
        BigFloat bmax(0L, wp);
        for (const auto& term : signal.terms()) bmax = BigFloat::max(bmax, term.b.as_complex(wp).re);
        freq += bmax;
        BigFloat half_period(0L, wp);
        if (freq.sign() > 0) half_period = BigFloat::pi(wp) / freq;

        VectorIntegrand f = [&signal, &zc, &hc, wp](const BigFloat& t, std::vector<Complex>& out) {
            BigFloat weight = signal.eval(t, wp);
            Complex acc = weight * Complex(-(zc.re * t), -(zc.im * t)).exp();
            BigFloat kernel_step = (-(hc * t)).expm1(); // e^{-h t} - 1, cancellation-free
            for (auto& slot : out) {
                slot = acc;
                acc = kernel_step * acc;
            }
        };
        VectorQuadrature q = semiinfinite_integrate(f, n_max + 1, decay, opt.prec,
                                                    BigFloat(opt.tol, wp), half_period, budget);
        integral_vals = std::move(q.values);
        integral_errs = std::move(q.est_errors);
    }

    std::vector<Scalar> spike_diffs;
    if (!deltas.empty())
        spike_diffs = spike_differences(deltas, z, h, n_max, opt.prec + n_max + 64);

    std::vector<QuadratureResult> out(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        QuadratureResult& r = out[n];
        Scalar spike = deltas.empty() ? Scalar(0) : spike_diffs[n];
        if (signal.empty()) {
            r.value = spike;
            r.est_error = spike.is_exact() ? BigFloat(0L, 64)
                                           : roundoff_allowance(spike.magnitude(), opt.prec);
        } else {
            r.value = Scalar(integral_vals[n].with_prec(opt.prec)) + spike;
            r.est_error = integral_errs[n];
            if (!deltas.empty() && !spike.is_exact())
                r.est_error += roundoff_allowance(spike.magnitude(), opt.prec);
        }
        r.evaluations = budget.used;
    }
    return out;
}

QuadratureResult laplace_difference_oracle(const ExpPolySignal& signal,
                                           const std::vector<DeltaImageTerm>& deltas,
                                           const Scalar& z, const Scalar& h, unsigned n,
                                           const OracleOptions& opt) {
    return laplace_difference_oracle_upto(signal, deltas, z, h, n, opt).back();
}

// --------------------------------------------------------------------------
// Fourier side
// --------------------------------------------------------------------------

namespace {

enum class FourierForm { Forward, CentralSin, CentralProduct };

/// One whole-line oracle run: a literal-kernel core on [-X0, X0] for every
/// order at once, plus far tails summed mode by mode at the exact frequencies
/// y + k h (or the half-step central ones) so slowly-decaying pairs stay
/// inside the evaluation budget. Tail integrals are cached per frequency and
/// shared by all orders of the run.
class FourierRun {
public:
    FourierRun(const FourierPair& pair, const Scalar& y, const Scalar& h, const OracleOptions& opt)
        : pair_(&pair), opt_(opt), wp_(opt.prec + 32), budget_{opt.eval_budget, 0} {
        y_ = require_exact_rational(y, "fourier oracle offset y");
        h_ = require_exact_rational(h, "fourier oracle step h");
        if (sgn(h_) <= 0) throw ArgumentError("step h must be a positive real number");
        x0_ = BigFloat(opt.tail_split, wp_);
        if (x0_.sign() <= 0) throw ArgumentError("tail split point must be positive");
    }

    std::vector<QuadratureResult> run(FourierForm form, unsigned n_max) {
        const std::size_t dim = n_max + 1;

        // Panel cap at half the fastest oscillation period in the kernel.
        mpq_class fmax = abs(y_) + mpq_class(static_cast<long>(n_max)) * h_;
        std::function<bool(const BigFloat&, const BigFloat&)> rule;
        if (sgn(fmax) > 0) {
            BigFloat cap = BigFloat(1L, wp_) / BigFloat(fmax, wp_).mul_2si(1);
            rule = [cap](const BigFloat& a, const BigFloat& b) { return (b - a) > cap; };
        }

        VectorIntegrand f = core_integrand(form);
        VectorQuadrature core = adaptive_integrate(f, dim, -x0_, x0_, opt_.prec,
                                                   BigFloat(opt_.tol, wp_).mul_2si(-1), rule, budget_);

        std::vector<QuadratureResult> out(dim);
        for (unsigned n = 0; n <= n_max; ++n) {
            Complex total = core.values[n];
            BigFloat err = core.est_errors[n];
            for (const auto& [coeff, w] : modes(form, n)) {
                const Tail& tail = tail_at(w);
                BigFloat c(coeff, wp_);
                total += c * tail.value;
                err += c.abs() * tail.err;
            }
            out[n].value = Scalar(total.with_prec(opt_.prec));
            out[n].est_error = err;
        }
        for (auto& r : out) r.evaluations = budget_.used;
        return out;
    }

private:
    struct Tail {
        Complex value{64};
        BigFloat err{64};
    };

    VectorIntegrand core_integrand(FourierForm form) const {
        const mpfr_prec_t p = wp_;
        const FourierPair* pair = pair_;
        const BigFloat ybf(y_, p);
        const BigFloat hbf(h_, p);
        return [pair, ybf, hbf, p, form](const BigFloat& x, std::vector<Complex>& out) {
            BigFloat weight = pair->inverse(x, p);
            BigFloat theta_y = two_pi(p) * ybf * x;
            BigFloat sy(0L, p), cy(0L, p);
            theta_y.sin_cos(sy, cy);
            Complex acc = weight * Complex(cy, -sy); // m(x) e^{-2 pi i y x}

            BigFloat half_theta = BigFloat::pi(p) * hbf * x; // pi h x
            BigFloat sh(0L, p), ch(0L, p);
            half_theta.sin_cos(sh, ch);

            switch (form) {
            case FourierForm::Forward: {
                // e^{-2 pi i h x} - 1 = -2 sin^2(pi h x) - 2 i sin cos, stable near 0
                Complex step(-(sh * sh).mul_2si(1), -(sh * ch).mul_2si(1));
                for (auto& slot : out) {
                    slot = acc;
                    acc = step * acc;
                }
                return;
            }
            case FourierForm::CentralSin: {
                Complex step(BigFloat(0L, p), -sh.mul_2si(1)); // (-2i) sin(pi h x)
                for (auto& slot : out) {
                    slot = acc;
                    acc = step * acc;
                }
                return;
            }
            case FourierForm::CentralProduct: {
                // literal product kernel: (1 - e^{2 pi i h x})^n e^{-i pi h x n}
                BigFloat s2(0L, p), c2(0L, p);
                (half_theta.mul_2si(1)).sin_cos(s2, c2); // sin/cos of 2 pi h x
                Complex product(BigFloat(1L, p) - c2, -s2);
                Complex phase(ch, -sh); // e^{-i pi h x}
                Complex step = product * phase;
                for (auto& slot : out) {
                    slot = acc;
                    acc = step * acc;
                }
                return;
            }
            }
        };
    }

    /// Exact binomial expansion of the kernel: coefficient and frequency of
    /// each pure mode e^{-2 pi i w x}, so the tails can be summed per mode.
    std::vector<std::pair<mpz_class, mpq_class>> modes(FourierForm form, unsigned n) const {
        std::vector<std::pair<mpz_class, mpq_class>> out;
        out.reserve(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            mpz_class c = binomial_exact(n, k);
            mpq_class w;
            long spread = static_cast<long>(n) - 2 * static_cast<long>(k);
            mpq_class half_spread(spread, 2);
            half_spread.canonicalize();
            switch (form) {
            case FourierForm::Forward:
                if ((n - k) % 2 != 0) c = -c;
                w = y_ + mpq_class(static_cast<long>(k)) * h_;
                break;
            case FourierForm::CentralSin:
                if ((n + k) % 2 != 0) c = -c;
                w = y_ - half_spread * h_;
                break;
            case FourierForm::CentralProduct:
                if (k % 2 != 0) c = -c;
                w = y_ + half_spread * h_;
                break;
            }
            out.emplace_back(std::move(c), std::move(w));
        }
        return out;
    }

    const Tail& tail_at(const mpq_class& w) {
        auto it = cache_.find(w);
        if (it == cache_.end())
            it = cache_.emplace(w, sgn(w) == 0 ? zero_frequency_tail() : oscillatory_tail(w)).first;
        return it->second;
    }

    /// integral of m over |x| >= X0: u = 1/x turns each side into a regular
    /// integral of m(1/u)/u^2 over (0, 1/X0].
    Tail zero_frequency_tail() {
        const mpfr_prec_t p = wp_;
        const FourierPair* pair = pair_;
        VectorIntegrand g = [pair, p](const BigFloat& u, std::vector<Complex>& out) {
            BigFloat x = BigFloat(1L, p) / u;
            BigFloat scale = u * u;
            out[0] = Complex(pair->inverse(x, p) / scale, BigFloat(0L, p));
            out[1] = Complex(pair->inverse(-x, p) / scale, BigFloat(0L, p));
        };
        VectorQuadrature q = adaptive_integrate(g, 2, BigFloat(0L, wp_), BigFloat(1L, wp_) / x0_,
                                                opt_.prec, tail_tolerance(), {}, budget_);
        Tail t;
        t.value = q.values[0] + q.values[1];
        t.err = q.est_errors[0] + q.est_errors[1];
        return t;
    }

    /// integral of m(x) e^{-2 pi i w x} over |x| >= X0, one side at a time,
    /// in half-period blocks. Consecutive blocks alternate in sign, so the
    /// outward walk is a direct stretch (32 blocks) followed by binomial
    /// averaging of the next 64. Delaying the averaged stretch matters: the
    /// averaging floor scales like (M W / (2e X))^M with X the start of the
    /// averaged region, so pushing X past 32 half-periods pins the floor
    /// around 1e-28 regardless of the pair's decay profile.
    Tail oscillatory_tail(const mpq_class& w) {
        constexpr unsigned direct_blocks = 32;
        constexpr unsigned averaged_blocks = 64;
        const BigFloat wbf(w, wp_);
        const BigFloat width = BigFloat(1L, wp_) / BigFloat(abs(w), wp_).mul_2si(1);

        Tail t;
        t.value = Complex(wp_);
        t.err = BigFloat(0L, wp_);
        for (int side : {+1, -1}) {
            Complex direct(wp_);
            std::vector<Complex> averaged;
            averaged.reserve(averaged_blocks);
            BigFloat probe_err(0L, wp_);
            for (unsigned j = 0; j < direct_blocks + averaged_blocks; ++j) {
                BigFloat a = x0_ + BigFloat(static_cast<long>(j), wp_) * width;
                Complex block = oscillatory_block(a, a + width, wbf, side, j < 8 ? &probe_err : nullptr);
                if (j < direct_blocks)
                    direct += block;
                else
                    averaged.push_back(std::move(block));
            }
            BigFloat trunc(0L, wp_);
            Complex accelerated = alternating_block_sum(averaged, trunc);
            t.value += direct + accelerated;
            t.err += probe_err + trunc;
        }
        return t;
    }

    /// G15 on the two halves of one block; the optional probe compares
    /// against a single whole-block G15 to estimate the panel error level.
    Complex oscillatory_block(const BigFloat& a, const BigFloat& b, const BigFloat& w, int side,
                              BigFloat* probe_err) {
        BigFloat mid = (a + b).mul_2si(-1);
        Complex two_panels = oscillatory_g15(a, mid, w, side) + oscillatory_g15(mid, b, w, side);
        if (probe_err != nullptr) {
            Complex one_panel = oscillatory_g15(a, b, w, side);
            *probe_err += (two_panels - one_panel).magnitude();
        }
        return two_panels;
    }

    Complex oscillatory_g15(const BigFloat& a, const BigFloat& b, const BigFloat& w, int side) {
        budget_.charge(15);
        const GaussRule& rule = gauss_rule(15, wp_);
        BigFloat mid = (a + b).mul_2si(-1);
        BigFloat half = (b - a).mul_2si(-1);
        Complex acc(wp_);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            BigFloat r = mid + half * rule.nodes[i];
            BigFloat x = side > 0 ? r : -r;
            BigFloat theta = two_pi(wp_) * w * x;
            BigFloat s(0L, wp_), c(0L, wp_);
            theta.sin_cos(s, c);
            acc += rule.weights[i] * (pair_->inverse(x, wp_) * Complex(c, -s));
        }
        return half * acc;
    }

    /// Sum of an alternating-by-construction block sequence by binomial
    /// averaging: sum_j B_j = sum_m (-1)^m D^m[(-1)^j B_j](0) / 2^{m+1}.
    /// The magnitude of the last term serves as the truncation estimate.
    static Complex alternating_block_sum(const std::vector<Complex>& blocks, BigFloat& trunc) {
        std::vector<Complex> row;
        row.reserve(blocks.size());
        for (std::size_t j = 0; j < blocks.size(); ++j)
            row.push_back(j % 2 != 0 ? -blocks[j] : blocks[j]);
        Complex acc(row.empty() ? 64 : row[0].prec());
        BigFloat last(0L, 64);
        for (std::size_t m = 0; m < row.size(); ++m) {
            Complex term = row[0].mul_2si(-static_cast<long>(m + 1));
            if (m % 2 != 0)
                acc -= term;
            else
                acc += term;
            last = term.magnitude();
            for (std::size_t i = 0; i + m + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        }
        trunc = last.mul_2si(2);
        return acc;
    }

    /// Tail integrals aim well below the core tolerance because binomial
    /// mode coefficients amplify them by up to 2^n.
    BigFloat tail_tolerance() const {
        BigFloat t(1e-21, wp_);
        BigFloat requested(opt_.tol, wp_);
        return BigFloat::min_of(t, requested);
    }

    const FourierPair* pair_;
    OracleOptions opt_;
    mpfr_prec_t wp_;
    EvalBudget budget_;
    mpq_class y_, h_;
    BigFloat x0_{64};
    std::map<mpq_class, Tail> cache_;
};

} // namespace

std::vector<QuadratureResult> fourier_forward_oracle_upto(const FourierPair& pair, const Scalar& y,
                                                          const Scalar& h, unsigned n_max,
                                                          const OracleOptions& opt) {
    return FourierRun(pair, y, h, opt).run(FourierForm::Forward, n_max);
}

QuadratureResult fourier_forward_oracle(const FourierPair& pair, const Scalar& y, const Scalar& h,
                                        unsigned n, const OracleOptions& opt) {
    return fourier_forward_oracle_upto(pair, y, h, n, opt).back();
}

std::vector<QuadratureResult> fourier_central_oracle_upto(const FourierPair& pair, const Scalar& y,
                                                          const Scalar& h, unsigned n_max,
                                                          const OracleOptions& opt) {
    return FourierRun(pair, y, h, opt).run(FourierForm::CentralSin, n_max);
}

QuadratureResult fourier_central_oracle(const FourierPair& pair, const Scalar& y, const Scalar& h,
                                        unsigned n, const OracleOptions& opt) {
    return fourier_central_oracle_upto(pair, y, h, n, opt).back();
}

std::vector<QuadratureResult> fourier_central_product_oracle_upto(const FourierPair& pair,
                                                                  const Scalar& y, const Scalar& h,
                                                                  unsigned n_max,
                                                                  const OracleOptions& opt) {
    return FourierRun(pair, y, h, opt).run(FourierForm::CentralProduct, n_max);
}

QuadratureResult fourier_central_product_oracle(const FourierPair& pair, const Scalar& y,
                                                const Scalar& h, unsigned n,
                                                const OracleOptions& opt) {
    return fourier_central_product_oracle_upto(pair, y, h, n, opt).back();
}

} // namespace newtonforge
