#include "newtonforge/newton_series.hpp"

#include "newtonforge/errors.hpp"
#include "newtonforge/roots.hpp"

#include <algorithm>
#include <limits>

namespace newtonforge {

namespace {

constexpr mpfr_prec_t kMajorantPrec = 160;
constexpr mpfr_prec_t kMagPrec = 128;

BigFloat positive_real_tolerance(const Scalar& tol) {
    if (!tol.is_real() || Scalar::real_cmp(tol, Scalar(0)) <= 0) {
        throw ArgumentError("tolerance must be a positive real number");
    }
    return tol.magnitude(kMagPrec);
}

// True for handles whose transform signal is all spikes: the function is a
// polynomial, its expansion is finite, and no half-plane restriction applies.
bool purely_polynomial(const FunctionHandle& f) {
    return f.laplace.has_value() && f.laplace->signal.empty();
}

} // namespace

NewtonSeries build_newton_series(const FunctionHandle& f, const Scalar& z0, unsigned max_terms) {
    if (max_terms == 0) {
        throw ArgumentError("max_terms must be positive");
    }
    Scalar abscissa;
    if (purely_polynomial(f)) {
        abscissa = Scalar(BigFloat(-std::numeric_limits<double>::infinity(), 32));
    } else {
        abscissa = abs_convergence_abscissa(f);
        if (Scalar::real_cmp(z0, abscissa) <= 0) {
            throw RegionError("newton series center " + z0.format() +
                              " must lie strictly right of the abscissa " + abscissa.format());
        }
    }
    DifferenceTable table(f, z0, Scalar(1), max_terms - 1, PrecisionPolicy::automatic(64));
    NewtonSeries s;
    s.f = f;
    s.z0 = z0;
    s.coeffs = table.leading_column();
    s.abscissa = abscissa;
    s.max_terms = max_terms;
    std::size_t tz = s.coeffs.size();
    while (tz > 0 && s.coeffs[tz - 1].is_zero()) {
        --tz;
    }
    s.trailing_zero_from = tz;
    return s;
}

NewtonEval eval_newton_series(const NewtonSeries& s, const Scalar& z, const Scalar& tol) {
    const BigFloat tol_mag = positive_real_tolerance(tol);
    if (Scalar::real_cmp(z, s.z0) <= 0) {
        throw RegionError("evaluation point " + z.format() +
                          " is outside the proven half-plane Re(z) > Re(z0) = " +
                          s.z0.real_part().format());
    }

    const Scalar w = z - s.z0;
    Scalar binom(1);
    Scalar partial(0);
    EvalDiagnostics diag;
    diag.last_term_mag = BigFloat(0L, kMagPrec);
    BigFloat prev_rel(0L, kMagPrec);
    bool have_prev = false;

    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
        if (k >= s.trailing_zero_from || binom.is_zero()) {
            // every remaining term is exactly zero
            diag.converged = true;
            diag.last_term_mag = BigFloat(0L, kMagPrec);
            break;
        }
        const Scalar term = binom * s.coeffs[k];
        partial = partial + term;
        diag.terms_used = static_cast<unsigned>(k + 1);
        const BigFloat scale = BigFloat(1L, kMagPrec) + partial.magnitude(kMagPrec);
        const BigFloat rel = term.magnitude(kMagPrec) / scale;
        diag.last_term_mag = rel;
        if (k >= 8 && have_prev && rel < tol_mag && prev_rel < tol_mag) {
            diag.converged = true;
            break;
        }
        prev_rel = rel;
        have_prev = true;
        binom = binom * (w - Scalar(static_cast<long>(k))) *
                Scalar(mpq_class(1, static_cast<unsigned long>(k) + 1));
    }

    const unsigned k_fit = std::max<unsigned>(96, diag.terms_used + 32);
    const BinomialMajorant maj = binomial_majorant(z, s.z0, k_fit);
    if (maj.verdict == MajorantVerdict::Converging) {
        BigFloat tail = maj.partial_sums.back();
        if (diag.terms_used > 0) {
            tail = tail - maj.partial_sums[diag.terms_used - 1];
        }
        if (tail.sign() < 0) {
            tail = BigFloat(0L, kMajorantPrec);
        }
        const std::size_t last = maj.partial_sums.size() - 1;
        const BigFloat t_last = maj.partial_sums[last] - maj.partial_sums[last - 1];
        if (!t_last.is_zero()) {
            // integral-comparison remainder beyond the tabulated range:
            // sum_{k > K} k^(-d) is about t_K * K / (d - 1)
            tail = tail + t_last * BigFloat(static_cast<long>(k_fit), kMajorantPrec) /
                              (maj.decay_estimate - BigFloat(1L, kMajorantPrec));
        }
        diag.majorant_tail = tail;
    }

    return NewtonEval{partial, diag};
}

const char* to_string(MajorantVerdict v) {
    switch (v) {
    case MajorantVerdict::Converging: return "converging";
    case MajorantVerdict::Diverging: return "diverging";
    default: return "inconclusive";
    }
}

BinomialMajorant binomial_majorant(const Scalar& z, const Scalar& z0, unsigned k_max) {
    if (k_max == 0) {
        throw ArgumentError("k_max must be positive");
    }
    const mpfr_prec_t wp = kMajorantPrec;
    const Complex w = (z - z0).as_complex(wp);

    BinomialMajorant out;
    out.partial_sums.reserve(k_max + 1);
    out.decay_estimate = BigFloat(0L, wp);

    BigFloat t(1L, wp);
    BigFloat total = t;
    out.partial_sums.push_back(total);
    std::vector<BigFloat> fitted;
    fitted.reserve(k_max);
    bool finite_tail = false;

    for (unsigned k = 0; k < k_max; ++k) {
        // term ratio r_k = |w - k| / (k + 1); k (1 - r_k) estimates the
        // decay exponent of |C(w, k)| ~ k^(-1 - Re w)
        const BigFloat gap =
            Complex(w.re - BigFloat(static_cast<long>(k), wp), w.im).magnitude();
        const BigFloat r = gap / BigFloat(static_cast<long>(k) + 1, wp);
        if (k >= 1 && !t.is_zero()) {
            fitted.push_back(BigFloat(static_cast<long>(k), wp) * (BigFloat(1L, wp) - r));
        }
        t = t * r;
        if (t.is_zero()) {
            finite_tail = true;
        }
        total = total + t;
        out.partial_sums.push_back(total);
    }

    if (finite_tail) {
        // the series terminated exactly (integer w >= 0): trivially summable
        out.verdict = MajorantVerdict::Converging;
        if (!fitted.empty()) {
            out.decay_estimate = fitted.back();
        }
        return out;
    }
    if (fitted.size() < 4) {
        return out; // too short to fit; verdict stays inconclusive
    }
    const std::size_t quartile = std::max<std::size_t>(fitted.size() / 4, 1);
    BigFloat acc(0L, wp);
    for (std::size_t i = fitted.size() - quartile; i < fitted.size(); ++i) {
        acc = acc + fitted[i];
    }
    const BigFloat avg = acc / BigFloat(static_cast<long>(quartile), wp);
    out.decay_estimate = avg;
    if (avg >= BigFloat(1.10, wp)) {
        out.verdict = MajorantVerdict::Converging;
    } else if (avg <= BigFloat(1.02, wp)) {
        out.verdict = MajorantVerdict::Diverging;
    }
    return out;
}

NewtonSeries corollary2_pipeline(const RationalFunction& R, const Scalar& z0, unsigned max_terms) {
    const PartialFractions pf = partial_fractions(R);
    for (const ProperTerm& term : pf.terms) {
        const RationalFunction factor(Polynomial::constant(1), term.base);
        for (const auto& [pole, multiplicity] : poles(factor)) {
            (void)multiplicity;
            if (Scalar::real_cmp(z0, pole) <= 0) {
                throw RegionError("corollary threshold violated: center " + z0.format() +
                                  " is not strictly right of the pole at " + pole.format());
            }
        }
    }
    if (Scalar::real_cmp(z0, Scalar(0)) <= 0) {
        throw RegionError("corollary threshold violated: center " + z0.format() +
                          " must satisfy Re(z0) > 0");
    }
    return build_newton_series(handle_from_rational(R), z0, max_terms);
}

} // namespace newtonforge
