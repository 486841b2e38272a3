#include "newtonforge/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "newtonforge/differences.hpp"
#include "newtonforge/errors.hpp"
#include "newtonforge/euler.hpp"
#include "newtonforge/function_handle.hpp"
#include "newtonforge/newton_series.hpp"
#include "newtonforge/parser.hpp"
#include "newtonforge/transforms.hpp"

namespace newtonforge {
namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

Scalar q(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return Scalar(v);
}

Scalar complex_q(long re_num, long re_den, long im_num, long im_den) {
    mpq_class re(re_num, re_den);
    re.canonicalize();
    mpq_class im(im_num, im_den);
    im.canonicalize();
    return Scalar(RationalComplex(re, im));
}

// Exact 10^{-d} as a rational, so thresholds are not double-rounded.
mpq_class pow10_inv(unsigned d) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, d);
    return mpq_class(mpz_class(1), p);
}

bool exact_equal(const Scalar& a, const Scalar& b) {
    return a.is_exact() && b.is_exact() && (a - b).is_zero();
}

std::string sci(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::string sci(const BigFloat& x) { return sci(x.to_double()); }

std::string fixed2(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

// ---------------------------------------------------------------------------
// 1. Plus-sign sums of 1/(k+1) against the exact closed form.

CriterionResult criterion1() {
    CriterionResult r;
    r.number = 1;
    r.title = "plus-sign sums of 1/(k+1) equal (2^{n+1}-1)/(n+1) exactly for n <= 200";
    constexpr unsigned kMaxOrder = 200;
    constexpr double kBudgetSeconds = 5.0;

    Timer t;
    auto f = catalog("1/(z+1)");
    unsigned matches = 0;
    std::optional<unsigned> first_bad;
    for (unsigned n = 0; n <= kMaxOrder; ++n) {
        Scalar s = binomial_sum(f, Scalar(0), Scalar(1), n, DifferenceKind::Forward);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, n + 1);
        p -= 1;
        mpq_class expect(p, mpz_class(n + 1));
        expect.canonicalize();
        if (s.is_exact() && exact_equal(s, Scalar(expect))) {
            ++matches;
        } else if (!first_bad) {
            first_bad = n;
        }
    }
    r.seconds = t.elapsed();
    bool in_budget = r.seconds < kBudgetSeconds;
    r.passed = (matches == kMaxOrder + 1) && in_budget;
    {
        std::ostringstream d;
        d << matches << "/" << (kMaxOrder + 1) << " orders match the closed form exactly";
        if (first_bad) d << "; first mismatch at n=" << *first_bad;
        r.details.push_back(d.str());
    }
    r.details.push_back(std::string("runtime ") + fixed2(r.seconds) + "s against a 5s budget" +
                        (in_budget ? "" : " (EXCEEDED)"));
    return r;
}

// ---------------------------------------------------------------------------
// 2. Plus-sign sums of the constant 1 equal 2^n and profile as divergent.

CriterionResult criterion2() {
    CriterionResult r;
    r.number = 2;
    r.title = "plus-sign sums of 1 equal 2^n exactly and the profile reports divergent";
    constexpr unsigned kMaxOrder = 200;

    Timer t;
    auto one = catalog("1");
    std::vector<Scalar> seq;
    seq.reserve(kMaxOrder + 1);
    unsigned matches = 0;
    for (unsigned n = 0; n <= kMaxOrder; ++n) {
        Scalar s = binomial_sum(one, Scalar(0), Scalar(1), n, DifferenceKind::Forward);
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
        if (s.is_exact() && exact_equal(s, Scalar(mpq_class(p)))) ++matches;
        seq.push_back(s);
    }
    AsymptoticReport profile = asymptotic_profile(seq);
    r.seconds = t.elapsed();
    bool divergent = profile.verdict == AsymptoticVerdict::Divergent;
    r.passed = (matches == kMaxOrder + 1) && divergent;
    {
        std::ostringstream d;
        d << matches << "/" << (kMaxOrder + 1) << " orders equal 2^n exactly";
        r.details.push_back(d.str());
    }
    {
        std::ostringstream d;
        d << "asymptotic verdict: " << to_string(profile.verdict)
          << " (normalized trailing max " << sci(profile.trail_norm_max) << ")";
        r.details.push_back(d.str());
    }
    return r;
}

// ---------------------------------------------------------------------------
// 3. High-order forward differences of the rational test set drop below 1e-6
//    and stay there inside the order window [N, 400].

struct SustainedScan {
    std::vector<BigFloat> mags;
    long sustained_from = -1;  // smallest N with mags[n] < threshold for all n in [N, last]
    double window_min = 0.0;
    unsigned window_min_at = 0;
};

SustainedScan scan_sequence(const std::vector<Scalar>& seq, const BigFloat& threshold) {
    SustainedScan s;
    s.mags.reserve(seq.size());
    for (const auto& v : seq) s.mags.push_back(v.magnitude(128));
    long last_bad = -1;
    for (long n = 0; n < (long)s.mags.size(); ++n)
        if (!(s.mags[(size_t)n] < threshold)) last_bad = n;
    if (last_bad + 1 < (long)s.mags.size()) s.sustained_from = last_bad + 1;
    s.window_min = s.mags[0].to_double();
    for (unsigned n = 0; n < s.mags.size(); ++n) {
        double m = s.mags[n].to_double();
        if (m < s.window_min) {
            s.window_min = m;
            s.window_min_at = n;
        }
    }
    return s;
}

CriterionResult criterion3() {
    CriterionResult r;
    r.number = 3;
    r.title = "forward differences of the rational test set fall below 1e-6 inside [N, 400]";
    constexpr unsigned kMaxOrder = 400;
    constexpr double kBudgetSeconds = 30.0;
    const BigFloat threshold = Scalar(pow10_inv(6)).magnitude(128);

    struct Case {
        const char* expr;
        Scalar z;
        const char* zlabel;
        long pinned;  // sustained start measured by the exact oracle; -1 when none exists <= 400
    };
    const Case cases[] = {
        {"1/(z+1)", Scalar(1), "1", -1},
        {"1/(z+1)", Scalar(2), "2", 124},
        {"1/(z+1)", complex_q(1, 1, 1, 1), "1+i", -1},
        {"1/((z+1)*(z+2))", Scalar(1), "1", -1},
        {"1/((z+1)*(z+2))", Scalar(2), "2", 123},
        {"1/((z+1)*(z+2))", complex_q(1, 1, 1, 1), "1+i", -1},
        {"(z+3)/((z+1)^2)", Scalar(1), "1", -1},
        {"(z+3)/((z+1)^2)", Scalar(2), "2", 274},
        {"(z+3)/((z+1)^2)", complex_q(1, 1, 1, 1), "1+i", -1},
    };

    Timer t;
    bool all_ok = true;
    for (const auto& c : cases) {
        auto f = catalog(c.expr);
        auto seq =
            forward_difference_sequence(f, c.z, Scalar(1), kMaxOrder, PrecisionPolicy::automatic(64));
        SustainedScan scan = scan_sequence(seq, threshold);
        std::ostringstream d;
        d << "f=" << c.expr << " z=" << c.zlabel << ": ";
        bool ok = scan.sustained_from >= 0 && scan.sustained_from == c.pinned;
        if (scan.sustained_from >= 0) {
            d << "|diff| < 1e-6 sustained from n=" << scan.sustained_from << " through "
              << kMaxOrder;
            if (scan.sustained_from != c.pinned)
                d << " (pinned N=" << c.pinned << " MISMATCH)";
        } else {
            // No qualifying window start exists at orders <= 400. Rerun in high
            // precision further out to report where the drop actually starts.
            d << "never sustained below 1e-6 in [0,400]; window min " << sci(scan.window_min)
              << " at n=" << scan.window_min_at;
            const unsigned ext_order = 1200;
            PrecisionPolicy ext = PrecisionPolicy::automatic(160);
            mpfr_prec_t bits = ext.working_bits(ext_order);
            Scalar zf = c.z.is_real()
                            ? Scalar(BigFloat(c.z.real_part().magnitude(64).to_double(), bits))
                            : Scalar(Complex(BigFloat(1.0, bits), BigFloat(1.0, bits)));
            auto long_seq = forward_difference_sequence(f, zf, Scalar(1), ext_order, ext);
            SustainedScan far = scan_sequence(long_seq, threshold);
            if (far.sustained_from >= 0)
                d << "; float run to n=" << ext_order << " puts the sustained start at n="
                  << far.sustained_from;
            else
                d << "; still not sustained by n=" << ext_order;
        }
        if (!ok) all_ok = false;
        d << (ok ? "  [ok]" : "  [FAIL]");
        r.details.push_back(d.str());
    }
    r.seconds = t.elapsed();
    bool in_budget = r.seconds < kBudgetSeconds;
    r.passed = all_ok && in_budget;
    r.details.push_back(std::string("runtime ") + fixed2(r.seconds) + "s against a 30s budget" +
                        (in_budget ? "" : " (EXCEEDED)"));
    return r;
}

// ---------------------------------------------------------------------------
// 4. Integral oracles against direct sums.

CriterionResult criterion4() {
    CriterionResult r;
    r.number = 4;
    r.title = "Laplace oracle within 1e-8 relative and Fourier oracles within 1e-8 of direct sums";
    constexpr unsigned kMaxOrder = 30;
    constexpr double kBudgetSeconds = 60.0;
    const BigFloat rel_tol = Scalar(pow10_inv(8)).magnitude(192);
    const BigFloat abs_tol = Scalar(pow10_inv(8)).magnitude(192);

    Timer t;

    // Laplace leg: rational test set, exact direct differences, relative gaps.
    // The direct values shrink to ~1e-9 at n=30, so the quadrature target is
    // pushed well below the comparison tolerance.
    BigFloat worst_rel(0.0, 192);
    std::string worst_rel_where = "-";
    unsigned rel_failures = 0;
    {
        OracleOptions opt;
        opt.tol = 1e-16;
        const char* exprs[] = {"1/(z+1)", "1/((z+1)*(z+2))", "(z+3)/((z+1)^2)"};
        const Scalar hs[] = {q(1, 2), Scalar(1), Scalar(2)};
        const char* hlabels[] = {"1/2", "1", "2"};
        const Scalar z(1);
        for (const char* expr : exprs) {
            auto f = catalog(expr);
            for (unsigned hi = 0; hi < 3; ++hi) {
                auto orc = laplace_difference_oracle_upto(f.laplace->signal, f.laplace->deltas, z,
                                                          hs[hi], kMaxOrder, opt);
                for (unsigned n = 0; n <= kMaxOrder; ++n) {
                    Scalar direct = forward_difference(f, z, hs[hi], n);
                    BigFloat gap = (orc[n].value - direct).magnitude(192);
                    BigFloat rel = gap / direct.magnitude(192);
                    if (!(rel <= rel_tol)) ++rel_failures;
                    if (rel > worst_rel) {
                        worst_rel = rel;
                        std::ostringstream w;
                        w << "f=" << expr << " h=" << hlabels[hi] << " n=" << n;
                        worst_rel_where = w.str();
                    }
                }
            }
        }
    }

    // Fourier leg: forward kernel plus both central pipelines, absolute gaps.
    // 128 bits and a 1e-10 quadrature target leave orders of magnitude of
    // slack against the 1e-8 comparison while keeping the oscillatory tail
    // integration affordable.
    BigFloat worst_abs(0.0, 192);
    std::string worst_abs_where = "-";
    unsigned abs_failures = 0;
    {
        OracleOptions opt;
        opt.prec = 128;
        opt.tol = 1e-10;
        const char* names[] = {"gaussian", "two_sided_exp"};
        const Scalar ys[] = {Scalar(0), q(1, 3)};
        const char* ylabels[] = {"0", "1/3"};
        const Scalar h(1);
        const PrecisionPolicy direct_policy = PrecisionPolicy::fixed(256);
        for (const char* name : names) {
            auto f = catalog(name);
            for (unsigned yi = 0; yi < 2; ++yi) {
                auto fw = fourier_forward_oracle_upto(*f.fourier, ys[yi], h, kMaxOrder, opt);
                auto ce = fourier_central_oracle_upto(*f.fourier, ys[yi], h, kMaxOrder, opt);
                auto pr = fourier_central_product_oracle_upto(*f.fourier, ys[yi], h, kMaxOrder, opt);
                for (unsigned n = 0; n <= kMaxOrder; ++n) {
                    Scalar dir_f = forward_difference(f, ys[yi], h, n, direct_policy);
                    Scalar dir_c = central_difference(f, ys[yi], h, n, direct_policy);
                    const struct {
                        const char* kind;
                        const Scalar* oracle;
                        const Scalar* direct;
                    } legs[] = {{"forward", &fw[n].value, &dir_f},
                                {"central", &ce[n].value, &dir_c},
                                {"central-product", &pr[n].value, &dir_c}};
                    for (const auto& leg : legs) {
                        BigFloat gap = (*leg.oracle - *leg.direct).magnitude(192);
                        if (!(gap <= abs_tol)) ++abs_failures;
                        if (gap > worst_abs) {
                            worst_abs = gap;
                            std::ostringstream w;
                            w << name << " " << leg.kind << " y=" << ylabels[yi] << " n=" << n;
                            worst_abs_where = w.str();
                        }
                    }
                }
            }
        }
    }

    r.seconds = t.elapsed();
    bool in_budget = r.seconds < kBudgetSeconds;
    r.passed = rel_failures == 0 && abs_failures == 0 && in_budget;
    r.details.push_back("Laplace leg: worst relative gap " + sci(worst_rel) + " at " +
                        worst_rel_where + " (tolerance 1e-8, " + std::to_string(rel_failures) +
                        " failures over 279 comparisons)");
    r.details.push_back("Fourier leg: worst gap " + sci(worst_abs) + " at " + worst_abs_where +
                        " (tolerance 1e-8, " + std::to_string(abs_failures) +
                        " failures over 372 comparisons)");
    r.details.push_back(std::string("runtime ") + fixed2(r.seconds) + "s against a 60s budget" +
                        (in_budget ? "" : " (EXCEEDED)"));
    return r;
}

// ---------------------------------------------------------------------------
// 5. Newton series of 1/(z+1) centered at 1: 15-point grid plus rejections.

CriterionResult criterion5() {
    CriterionResult r;
    r.number = 5;
    r.title = "Newton series at center 1 reproduces 1/(z+1) within 1e-8 on the grid and "
              "rejects Re(z) <= 1";
    constexpr unsigned kMaxTerms = 500;
    constexpr double kBudgetSeconds = 30.0;
    const BigFloat value_tol = Scalar(pow10_inv(8)).magnitude(192);

    Timer t;
    RationalFunction R = parse_rational("1/(z+1)");
    NewtonSeries series = corollary2_pipeline(R, Scalar(1), kMaxTerms);
    auto f = catalog("1/(z+1)");

    const long res[] = {5, 2, 4};      // real parts 5/4, 2, 4
    const long dens[] = {4, 1, 1};
    const long ims[] = {0, 1, -1, 5, -5};
    // Three stopping tolerances, loosest first.  The middle entries matter for the
    // points whose true error crosses 1e-8 only a few dozen terms before the
    // stopping rule would fire at the looser setting.
    const Scalar tols[] = {Scalar(pow10_inv(8)), Scalar(pow10_inv(10)), q(1, 20000000000L)};

    unsigned grid_passes = 0;
    unsigned grid_total = 0;
    for (unsigned zi = 0; zi < 3; ++zi) {
        for (long im : ims) {
            ++grid_total;
            Scalar z = complex_q(res[zi], dens[zi], im, 1);
            Scalar fz = f(z);
            bool point_ok = false;
            BigFloat best_err(0.0, 192);
            unsigned best_terms = 0;
            bool best_conv = false;
            bool have_best = false;
            for (const Scalar& tol : tols) {
                NewtonEval ev = eval_newton_series(series, z, tol);
                BigFloat err = (ev.value - fz).magnitude(192);
                if (!have_best || err < best_err) {
                    best_err = err;
                    best_terms = ev.diagnostics.terms_used;
                    best_conv = ev.diagnostics.converged;
                    have_best = true;
                }
                if (ev.diagnostics.converged && ev.diagnostics.terms_used <= kMaxTerms &&
                    err <= value_tol) {
                    point_ok = true;
                    best_err = err;
                    best_terms = ev.diagnostics.terms_used;
                    best_conv = true;
                    break;
                }
            }
            if (point_ok) ++grid_passes;
            std::ostringstream d;
            d << "z=" << res[zi];
            if (dens[zi] != 1) d << "/" << dens[zi];
            if (im > 0) d << "+" << im << "i";
            if (im < 0) d << im << "i";
            d << ": err=" << sci(best_err) << " terms=" << best_terms
              << " converged=" << (best_conv ? "yes" : "no") << (point_ok ? "  [ok]" : "  [FAIL]");
            r.details.push_back(d.str());
        }
    }

    unsigned rejections = 0;
    const Scalar rejected[] = {Scalar(1), complex_q(1, 1, 5, 1), q(1, 2), Scalar(0), Scalar(-2)};
    for (const Scalar& z : rejected) {
        try {
            eval_newton_series(series, z, Scalar(pow10_inv(8)));
        } catch (const RegionError&) {
            ++rejections;
        }
    }

    r.seconds = t.elapsed();
    bool in_budget = r.seconds < kBudgetSeconds;
    r.passed = grid_passes == grid_total && rejections == 5 && in_budget;
    {
        std::ostringstream d;
        d << grid_passes << "/" << grid_total
          << " grid points reproduce f within 1e-8 with converged=true in <= 500 terms";
        r.details.push_back(d.str());
    }
    {
        std::ostringstream d;
        d << rejections << "/5 points with Re(z) <= 1 rejected";
        r.details.push_back(d.str());
    }
    r.details.push_back(std::string("runtime ") + fixed2(r.seconds) + "s against a 30s budget" +
                        (in_budget ? "" : " (EXCEEDED)"));
    return r;
}

// ---------------------------------------------------------------------------
// 6. Degree-n Newton partial sums interpolate exactly at the leading nodes.

CriterionResult criterion6() {
    CriterionResult r;
    r.number = 6;
    r.title = "degree-n Newton partial sums match f exactly at the n+1 integer nodes, n <= 40";
    constexpr unsigned kMaxDegree = 40;

    struct Case {
        const char* expr;
        Scalar z0;
    };
    const Case cases[] = {
        {"1/(z+1)", Scalar(1)},
        {"1/((z+1)*(z+2))", Scalar(1)},
        {"(z+3)/((z+1)^2)", Scalar(1)},
        {"z^3-2*z+1", Scalar(0)},
    };

    Timer t;
    bool all_ok = true;
    for (const auto& c : cases) {
        auto f = catalog(c.expr);
        NewtonSeries s = build_newton_series(f, c.z0, kMaxDegree + 5);
        unsigned checked = 0;
        unsigned exact = 0;
        for (unsigned m = 0; m <= kMaxDegree; ++m) {
            Scalar node = c.z0 + Scalar((long)m);
            Scalar fz = f(node);
            Scalar w((long)m);
            Scalar binom(1);
            Scalar partial(0);
            for (unsigned k = 0; k <= kMaxDegree; ++k) {
                if (k > 0)
                    binom = binom * (w - Scalar((long)(k - 1))) * q(1, (long)k);
                partial = partial + binom * s.coeffs[k];
                if (k >= m) {
                    // the degree-k partial sum must agree with f at node z0+m
                    ++checked;
                    if (exact_equal(partial, fz)) ++exact;
                }
            }
        }
        std::ostringstream d;
        d << "f=" << c.expr << " z0=" << c.z0.format() << ": " << exact << "/" << checked
          << " (degree, node) pairs exact";
        if (exact != checked) {
            all_ok = false;
            d << "  [FAIL]";
        }
        r.details.push_back(d.str());
    }
    r.seconds = t.elapsed();
    r.passed = all_ok;
    return r;
}

// ---------------------------------------------------------------------------
// 7. Alternating binomial sums of 1/sqrt(k^2+1) at high order.

CriterionResult criterion7() {
    CriterionResult r;
    r.number = 7;
    r.title = "alternating binomial sums of 1/sqrt(k^2+1) stay bounded away from zero at "
              "high order";
    constexpr unsigned kMaxOrder = 2000;
    constexpr double kBudgetSeconds = 120.0;

    Timer t;
    auto f = catalog("bessel_recip_sqrt");
    auto seq =
        forward_difference_sequence(f, Scalar(0), Scalar(1), kMaxOrder, PrecisionPolicy::automatic(64));
    std::vector<double> mags;
    mags.reserve(seq.size());
    for (const auto& v : seq) mags.push_back(v.magnitude(96).to_double());

    double lead_max = 0.0;
    for (unsigned n = 0; n <= 10; ++n)
        if (mags[n] > lead_max) lead_max = mags[n];
    double trail_max = 0.0;
    unsigned trail_arg = 1000;
    for (unsigned n = 1000; n <= kMaxOrder; ++n)
        if (mags[n] > trail_max) {
            trail_max = mags[n];
            trail_arg = n;
        }
    double dip_min = mags[20];
    unsigned dip_arg = 20;
    for (unsigned n = 20; n <= 80; ++n)
        if (mags[n] < dip_min) {
            dip_min = mags[n];
            dip_arg = n;
        }

    AsymptoticReport profile = asymptotic_profile(seq);
    bool exceeds_one = trail_max > 1.0;
    bool exceeds_lead = trail_max > lead_max;
    bool verdict_ok = profile.verdict == AsymptoticVerdict::Divergent ||
                      profile.verdict == AsymptoticVerdict::Inconclusive;
    bool never_vanishing = profile.verdict != AsymptoticVerdict::TendsToZero;

    r.seconds = t.elapsed();
    bool in_budget = r.seconds < kBudgetSeconds;
    r.passed = exceeds_one && exceeds_lead && verdict_ok && in_budget;

    r.details.push_back("trailing max |a_n| over [1000,2000] is " + sci(trail_max) + " at n=" +
                        std::to_string(trail_arg) +
                        (exceeds_one ? " (> 1) [ok]" : " (NOT > 1) [FAIL]"));
    r.details.push_back("leading max over [0,10] is " + sci(lead_max) +
                        (exceeds_lead ? "; trailing exceeds it [ok]"
                                      : "; trailing does NOT exceed it [FAIL]"));
    r.details.push_back(std::string("asymptotic verdict: ") + to_string(profile.verdict) +
                        (verdict_ok ? " [ok]" : " (wanted divergent or inconclusive) [FAIL]") +
                        (never_vanishing ? "" : "; verdict claims the sequence tends to zero"));
    r.details.push_back("shape: dip to " + sci(dip_min) + " near n=" + std::to_string(dip_arg) +
                        ", then |a_100|=" + sci(mags[100]) + ", |a_400|=" + sci(mags[400]) +
                        ", |a_1000|=" + sci(mags[1000]) + ", |a_2000|=" + sci(mags[2000]));
    r.details.push_back("no oscillation-envelope constants are fitted or asserted");
    r.details.push_back(std::string("runtime ") + fixed2(r.seconds) + "s against a 120s budget" +
                        (in_budget ? "" : " (EXCEEDED)"));
    return r;
}

// ---------------------------------------------------------------------------
// 8. Euler transformation of the alternating harmonic series.

CriterionResult criterion8() {
    CriterionResult r;
    r.number = 8;
    r.title = "Euler transformation accelerates the alternating harmonic series at a "
              "geometric 1/2 rate";
    constexpr unsigned kTerms = 60;

    Timer t;
    auto f = catalog("1/(z+1)");
    AccelerationReport rep = acceleration_report(f, Scalar(BigFloat::log2(256)), kTerms);

    bool envelope_ok = true;
    unsigned first_violation = 0;
    for (unsigned n = 8; n <= kTerms; ++n) {
        BigFloat bound = BigFloat(1.0, 64).mul_2si(-(long)n);
        if (!(rep.accel_errors[n] <= bound)) {
            if (envelope_ok) first_violation = n;
            envelope_ok = false;
        }
    }
    bool rate_ok = rep.rate_ratio >= BigFloat(0.4, 64) && rep.rate_ratio <= BigFloat(0.6, 64);
    BigFloat gain = rep.raw_errors[kTerms] / rep.accel_errors[kTerms];
    bool gain_ok = gain > BigFloat(1e12, 64);

    r.seconds = t.elapsed();
    r.passed = envelope_ok && rate_ok && gain_ok;
    r.details.push_back(std::string("accel_errors[n] <= 2^{-n} for all n in [8,60]: ") +
                        (envelope_ok ? "yes"
                                     : "no, first violation at n=" + std::to_string(first_violation)));
    r.details.push_back("rate_ratio = " + sci(rep.rate_ratio) + " (required within [0.4, 0.6])" +
                        (rate_ok ? "" : " [FAIL]"));
    r.details.push_back("raw/accelerated error ratio at n=60 is " + sci(gain) +
                        " (required > 1e12)" + (gain_ok ? "" : " [FAIL]"));
    r.details.push_back("raw error at n=60 is " + sci(rep.raw_errors[kTerms]) +
                        ", accelerated error is " + sci(rep.accel_errors[kTerms]));
    return r;
}

// ---------------------------------------------------------------------------
// 9. Operator identity suite, exact through order 60.

CriterionResult criterion9() {
    CriterionResult r;
    r.number = 9;
    r.title = "operator identities hold exactly over the rational test set through order 60";
    constexpr unsigned kMaxOrder = 60;

    struct Pair {
        const char* expr;
        const char* reflected;  // g with g(t) = f(-t)
    };
    const Pair pairs[] = {
        {"1/(z+1)", "1/(1-z)"},
        {"1/((z+1)*(z+2))", "1/((1-z)*(2-z))"},
        {"(z+3)/((z+1)^2)", "(3-z)/((1-z)^2)"},
        {"z^3-2*z+1", "1+2*z-z^3"},
    };
    const Scalar z = q(1, 3);
    const Scalar hs[] = {Scalar(1), q(1, 2)};

    Timer t;
    unsigned pascal_ok = 0, pascal_total = 0;
    unsigned shiftb_ok = 0, shiftb_total = 0;
    unsigned shiftc_ok = 0, shiftc_total = 0;
    unsigned reflect_ok = 0, reflect_total = 0;

    for (const auto& p : pairs) {
        auto f = catalog(p.expr);
        auto g = catalog(p.reflected);
        for (const Scalar& h : hs) {
            for (unsigned n = 0; n <= kMaxOrder; ++n) {
                Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
                if (n < kMaxOrder) {
                    ++pascal_total;
                    Scalar lhs = forward_difference(f, z, h, n + 1);
                    Scalar rhs = forward_difference(f, z + h, h, n) - forward_difference(f, z, h, n);
                    if (exact_equal(lhs, rhs)) ++pascal_ok;
                }
                ++shiftb_total;
                if (exact_equal(backward_difference(f, z, h, n),
                                forward_difference(f, z - h * Scalar((long)n), h, n)))
                    ++shiftb_ok;
                ++shiftc_total;
                if (exact_equal(central_difference(f, z, h, n),
                                forward_difference(f, z - h * Scalar((long)n) * q(1, 2), h, n)))
                    ++shiftc_ok;
                ++reflect_total;
                if (exact_equal(backward_difference(f, z, h, n),
                                sign * forward_difference(g, Scalar(0) - z, h, n)))
                    ++reflect_ok;
            }
        }
    }

    // linearity: (9z-17)/(15(z+1)(z+2)) = (3/5)/(z+1) - (7/3)/((z+1)(z+2))
    unsigned linear_ok = 0, linear_total = 0;
    {
        auto combo = catalog("(9*z-17)/(15*(z+1)*(z+2))");
        auto f1 = catalog("1/(z+1)");
        auto f2 = catalog("1/((z+1)*(z+2))");
        const Scalar a = q(3, 5), b = q(-7, 3);
        for (const Scalar& h : hs)
            for (unsigned n = 0; n <= kMaxOrder; ++n) {
                ++linear_total;
                Scalar lhs = forward_difference(combo, z, h, n);
                Scalar rhs = a * forward_difference(f1, z, h, n) +
                             b * forward_difference(f2, z, h, n);
                if (exact_equal(lhs, rhs)) ++linear_ok;
            }
    }

    // degree annihilation: order > degree kills a cubic
    unsigned annihil_ok = 0, annihil_total = 0;
    {
        auto cubic = catalog("z^3-2*z+1");
        for (const Scalar& h : hs)
            for (unsigned n = 4; n <= kMaxOrder; ++n) {
                ++annihil_total;
                Scalar v = forward_difference(cubic, z, h, n);
                if (v.is_exact() && v.is_zero()) ++annihil_ok;
            }
    }

    // power rule: n-th difference of z^n is n! h^n
    unsigned power_ok = 0, power_total = 0;
    {
        for (const Scalar& h : hs) {
            for (unsigned n = 1; n <= kMaxOrder; ++n) {
                ++power_total;
                auto zn = catalog("z^" + std::to_string(n));
                mpz_class fac;
                mpz_fac_ui(fac.get_mpz_t(), n);
                Scalar expected{mpq_class(fac)};
                for (unsigned i = 0; i < n; ++i) expected = expected * h;
                if (exact_equal(forward_difference(zn, z, h, n), expected)) ++power_ok;
            }
        }
    }

    r.seconds = t.elapsed();
    auto line = [&](const char* name, unsigned ok, unsigned total) {
        std::ostringstream d;
        d << name << ": " << ok << "/" << total << " exact";
        if (ok != total) d << "  [FAIL]";
        r.details.push_back(d.str());
        return ok == total;
    };
    bool ok = true;
    ok &= line("Pascal recurrence", pascal_ok, pascal_total);
    ok &= line("backward shift identity", shiftb_ok, shiftb_total);
    ok &= line("central shift identity", shiftc_ok, shiftc_total);
    ok &= line("reflection sign relation", reflect_ok, reflect_total);
    ok &= line("linearity", linear_ok, linear_total);
    ok &= line("degree annihilation", annihil_ok, annihil_total);
    ok &= line("power rule n! h^n", power_ok, power_total);
    r.passed = ok;
    return r;
}

// ---------------------------------------------------------------------------
// 10. Modulation identities, exact at rational nodes through order 40.

Scalar i_power(unsigned n) {
    switch (n % 4) {
        case 0: return Scalar(1);
        case 1: return Scalar(RationalComplex(mpq_class(0), mpq_class(1)));
        case 2: return Scalar(-1);
        default: return Scalar(RationalComplex(mpq_class(0), mpq_class(-1)));
    }
}

CriterionResult criterion10() {
    CriterionResult r;
    r.number = 10;
    r.title = "modulation identities tie plus-sign sums to signed differences exactly, n <= 40";
    constexpr unsigned kMaxOrder = 40;

    const char* exprs[] = {"1", "z^3-2*z+1", "1/(z^2+4)", "(z+1)/(z^2+z+1)"};
    const Scalar y(5);
    struct Step {
        Scalar h;
        Scalar phase;  // e^{i pi y/h} = (-1)^{y/h} for integer y/h
    };
    const Step steps[] = {
        {Scalar(1), Scalar(-1)},  // y/h = 5, odd
        {q(1, 2), Scalar(1)},     // y/h = 10, even
    };

    Timer t;
    unsigned fwd_ok = 0, bwd_ok = 0, cen_ok = 0, total = 0;
    for (const char* expr : exprs) {
        auto f = catalog(expr);
        for (const auto& st : steps) {
            auto alpha = modulate(f, st.h);
            for (unsigned n = 0; n <= kMaxOrder; ++n) {
                ++total;
                Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
                if (exact_equal(forward_difference(alpha, y, st.h, n),
                                sign * st.phase *
                                    binomial_sum(f, y, st.h, n, DifferenceKind::Forward)))
                    ++fwd_ok;
                if (exact_equal(backward_difference(alpha, y, st.h, n),
                                st.phase * binomial_sum(f, y, st.h, n, DifferenceKind::Backward)))
                    ++bwd_ok;
                if (exact_equal(central_difference(alpha, y, st.h, n),
                                st.phase * i_power(n) *
                                    binomial_sum(f, y, st.h, n, DifferenceKind::Central)))
                    ++cen_ok;
            }
        }
    }

    r.seconds = t.elapsed();
    auto line = [&](const char* name, unsigned ok) {
        std::ostringstream d;
        d << name << ": " << ok << "/" << total << " exact";
        if (ok != total) d << "  [FAIL]";
        r.details.push_back(d.str());
        return ok == total;
    };
    bool ok = true;
    ok &= line("forward modulation identity", fwd_ok);
    ok &= line("backward modulation identity", bwd_ok);
    ok &= line("central modulation identity", cen_ok);
    r.passed = ok;
    return r;
}

}  // namespace

CriterionResult run_criterion(int number) {
    switch (number) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        case 10: return criterion10();
        default:
            throw ArgumentError("criterion number must be between 1 and 10, got " +
                                std::to_string(number));
    }
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    out.reserve(10);
    for (int n = 1; n <= 10; ++n) {
        try {
            out.push_back(run_criterion(n));
        } catch (const std::exception& e) {
            CriterionResult failed;
            failed.number = n;
            failed.title = "criterion aborted";
            failed.passed = false;
            failed.details.push_back(std::string("unexpected error: ") + e.what());
            out.push_back(std::move(failed));
        }
    }
    return out;
}

void print_criterion(const CriterionResult& result, std::ostream& out) {
    out << "CRITERION " << result.number << ' ' << (result.passed ? "PASS" : "FAIL") << " ("
        << fixed2(result.seconds) << "s): " << result.title << '\n';
    for (const auto& d : result.details) out << "    " << d << '\n';
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace newtonforge
