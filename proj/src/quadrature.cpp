#include "newtonforge/quadrature.hpp"

#include "newtonforge/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace newtonforge {

namespace {

/// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<BigFloat, BigFloat> legendre_pair(unsigned n, const BigFloat& x, mpfr_prec_t wp) {
    BigFloat p0(1L, wp);
    BigFloat p1 = x.with_prec(wp);
    if (n == 0) return {p0, BigFloat(0L, wp)};
    for (unsigned k = 2; k <= n; ++k) {
        BigFloat p2 = (BigFloat(2L * k - 1, wp) * x * p1 - BigFloat(static_cast<long>(k) - 1, wp) * p0) /
                      BigFloat(static_cast<long>(k), wp);
        p0 = p1;
        p1 = p2;
    }
    BigFloat one(1L, wp);
    BigFloat dp = BigFloat(static_cast<long>(n), wp) * (x * p1 - p0) / (x * x - one);
    return {p1, dp};
}

GaussRule build_gauss_rule(unsigned points, mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 32;
    GaussRule rule;
    rule.nodes.reserve(points);
    rule.weights.reserve(points);
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat one(1L, wp);
    const BigFloat two(2L, wp);
    const BigFloat step_floor = one.mul_2si(-(wp - 6));
    for (unsigned i = 1; i <= points; ++i) {
        // Chebyshev-flavored initial guess, then Newton on P_n.
        BigFloat x = (pi * BigFloat(4L * i - 1, wp) / BigFloat(4L * points + 2, wp)).cos();
        for (int iter = 0; iter < 200; ++iter) {
            auto [p, dp] = legendre_pair(points, x, wp);
            BigFloat step = p / dp;
            x -= step;
            if (step.abs() <= step_floor) break;
        }
        auto [p, dp] = legendre_pair(points, x, wp);
        (void)p;
        rule.nodes.push_back(x);
        rule.weights.push_back(two / ((one - x * x) * dp * dp));
    }
    return rule;
}

struct Panel {
    BigFloat a{64};
    BigFloat b{64};
    std::vector<Complex> val;
    std::vector<BigFloat> err;
    BigFloat key{64}; // max component error; refinement priority
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const { return x.key < y.key; }
};

struct Totals {
    std::vector<Complex> val;
    std::vector<BigFloat> err;

    explicit Totals(std::size_t dim, mpfr_prec_t wp)
        : val(dim, Complex(wp)), err(dim, BigFloat(wp)) {}
    void add(const Panel& p) {
        for (std::size_t c = 0; c < val.size(); ++c) {
            val[c] += p.val[c];
            err[c] += p.err[c];
        }
    }
    void subtract(const Panel& p) {
        for (std::size_t c = 0; c < val.size(); ++c) {
            val[c] -= p.val[c];
            err[c] -= p.err[c];
            if (err[c].sign() < 0) err[c] = BigFloat(0L, err[c].prec());
        }
    }
};

Panel evaluate_panel(const VectorIntegrand& f, std::size_t dim, const BigFloat& a, const BigFloat& b,
                     mpfr_prec_t wp, EvalBudget& budget) {
    const GaussRule& g7 = gauss_rule(7, wp);
    const GaussRule& g15 = gauss_rule(15, wp);
    budget.charge(22);

    const BigFloat two(2L, wp);
    BigFloat mid = (a + b) / two;
    BigFloat half = (b - a) / two;

    Panel p;
    p.a = a;
    p.b = b;
    p.val.assign(dim, Complex(wp));
    p.err.assign(dim, BigFloat(wp));

    std::vector<Complex> s7(dim, Complex(wp));
    std::vector<Complex> s15(dim, Complex(wp));
    std::vector<Complex> tmp(dim, Complex(wp));
    for (std::size_t i = 0; i < g7.nodes.size(); ++i) {
        BigFloat x = mid + half * g7.nodes[i];
        f(x, tmp);
        for (std::size_t c = 0; c < dim; ++c) s7[c] += g7.weights[i] * tmp[c];
    }
    for (std::size_t i = 0; i < g15.nodes.size(); ++i) {
        BigFloat x = mid + half * g15.nodes[i];
        f(x, tmp);
        for (std::size_t c = 0; c < dim; ++c) s15[c] += g15.weights[i] * tmp[c];
    }

    p.key = BigFloat(0L, wp);
    for (std::size_t c = 0; c < dim; ++c) {
        p.val[c] = half * s15[c];
        p.err[c] = (half * (s15[c] - s7[c])).magnitude().with_prec(wp);
        p.key = BigFloat::max(p.key, p.err[c]);
    }
    return p;
}

bool width_splittable(const Panel& p, mpfr_prec_t wp) {
    BigFloat scale = p.a.abs() + p.b.abs() + BigFloat(1L, wp);
    return (p.b - p.a) > scale.mul_2si(-(wp - 8));
}

void heap_push(std::vector<Panel>& heap, Panel p) {
    heap.push_back(std::move(p));
    std::push_heap(heap.begin(), heap.end(), PanelOrder{});
}

Panel heap_pop(std::vector<Panel>& heap) {
    std::pop_heap(heap.begin(), heap.end(), PanelOrder{});
    Panel p = std::move(heap.back());
    heap.pop_back();
    return p;
}

/// Evaluate [a, b], splitting first wherever the forced-split rule fires.
void seed_panels(const VectorIntegrand& f, std::size_t dim, const BigFloat& a, const BigFloat& b,
                 mpfr_prec_t wp, const std::function<bool(const BigFloat&, const BigFloat&)>& needs_split,
                 EvalBudget& budget, std::vector<Panel>& heap, Totals& totals, int depth) {
    if (depth < 64 && needs_split && needs_split(a, b)) {
        BigFloat mid = (a + b) / BigFloat(2L, wp);
        if (mid > a && mid < b) {
            seed_panels(f, dim, a, mid, wp, needs_split, budget, heap, totals, depth + 1);
            seed_panels(f, dim, mid, b, wp, needs_split, budget, heap, totals, depth + 1);
            return;
        }
    }
    Panel p = evaluate_panel(f, dim, a, b, wp, budget);
    totals.add(p);
    heap_push(heap, std::move(p));
}

bool tolerance_met(const Totals& totals, const BigFloat& tol) {
    for (std::size_t c = 0; c < totals.val.size(); ++c) {
        BigFloat bound = tol * BigFloat::max(BigFloat(1L, tol.prec()), totals.val[c].magnitude());
        if (totals.err[c] > bound) return false;
    }
    return true;
}

} // namespace

const GaussRule& gauss_rule(unsigned points, mpfr_prec_t prec) {
    static std::map<std::pair<unsigned, mpfr_prec_t>, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(points, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_gauss_rule(points, prec)).first;
    return it->second;
}

void EvalBudget::charge(unsigned long n) {
    used += n;
    if (used > limit)
        throw ConvergenceError("quadrature tolerance not reached within the evaluation budget");
}

VectorQuadrature adaptive_integrate(
    const VectorIntegrand& f, std::size_t dim, const BigFloat& a, const BigFloat& b,
    mpfr_prec_t prec, const BigFloat& tol,
    const std::function<bool(const BigFloat&, const BigFloat&)>& needs_split, EvalBudget& budget) {
    const mpfr_prec_t wp = prec + 32;
    if (dim == 0) throw ArgumentError("adaptive_integrate needs at least one component");
    if (!(b > a)) throw ArgumentError("adaptive_integrate needs an interval with a < b");

    std::vector<Panel> heap;
    Totals totals(dim, wp);
    seed_panels(f, dim, a.with_prec(wp), b.with_prec(wp), wp, needs_split, budget, heap, totals, 0);

    while (!tolerance_met(totals, tol)) {
        if (heap.empty() || heap.front().key.is_zero()) break; // nothing left to refine
        Panel worst = heap_pop(heap);
        if (!width_splittable(worst, wp)) {
            // Roundoff-width panel: freeze it so the loop can finish honestly.
            worst.key = BigFloat(0L, wp);
            heap_push(heap, std::move(worst));
            continue;
        }
        totals.subtract(worst);
        BigFloat mid = (worst.a + worst.b) / BigFloat(2L, wp);
        for (const auto& child : {std::make_pair(worst.a, mid), std::make_pair(mid, worst.b)}) {
            Panel p = evaluate_panel(f, dim, child.first, child.second, wp, budget);
            totals.add(p);
            heap_push(heap, std::move(p));
        }
    }

    VectorQuadrature out;
    out.values = std::move(totals.val);
    out.est_errors = std::move(totals.err);
    return out;
}

VectorQuadrature semiinfinite_integrate(const VectorIntegrand& f, std::size_t dim,
                                        const BigFloat& decay_rate, mpfr_prec_t prec,
                                        const BigFloat& tol, const BigFloat& max_half_period,
                                        EvalBudget& budget) {
    const mpfr_prec_t wp = prec + 32;
    if (!(decay_rate.sign() > 0)) throw ArgumentError("semiinfinite integration needs a positive decay rate");

    // u = e^{-lambda t} with lambda = decay_rate / 2: the substituted integrand
    // g(u) = f(-ln u / lambda) / (lambda u) then vanishes like u at u -> 0 for
    // integrands within the stated envelope, so (0, 1] is a regular interval.
    const BigFloat lambda = decay_rate.with_prec(wp).mul_2si(-1);
    VectorIntegrand g = [&f, lambda](const BigFloat& u, std::vector<Complex>& out) {
        BigFloat t = -(u.log()) / lambda;
        f(t, out);
        BigFloat scale = (lambda * u).with_prec(u.prec());
        for (auto& v : out) v = Complex(v.re / scale, v.im / scale);
    };

    // Oscillation control: a u-panel [a, b] spans t-width ln(b/a) / lambda, so
    // capping at half a period T means b <= a e^{lambda T}. The ratio rule is
    // scale-free and would subdivide forever toward u = 0, so it is dropped
    // below u_min, where the integrand envelope (~u) is far beneath tolerance.
    std::function<bool(const BigFloat&, const BigFloat&)> rule;
    if (max_half_period.sign() > 0) {
        BigFloat ratio_cap = (lambda * max_half_period).exp();
        BigFloat u_min = BigFloat(1L, wp).mul_2si(-(static_cast<long>(prec) / 2 + 32));
        rule = [ratio_cap, u_min](const BigFloat& a, const BigFloat& b) {
            if (b <= u_min) return false;
            if (a.sign() <= 0) return true;
            return b > a * ratio_cap;
        };
    }

    return adaptive_integrate(g, dim, BigFloat(0L, wp), BigFloat(1L, wp), prec, tol, rule, budget);
}

QuadratureResult quadrature_semiinfinite(const std::function<Scalar(const BigFloat& t)>& integrand,
                                         const Scalar& decay_rate, const Scalar& tol,
                                         mpfr_prec_t prec, unsigned long eval_budget) {
    if (!decay_rate.is_real() || Scalar::real_cmp(decay_rate, Scalar(0)) <= 0)
        throw ArgumentError("decay rate must be a positive real number");
    if (!tol.is_real() || Scalar::real_cmp(tol, Scalar(0)) <= 0)
        throw ArgumentError("tolerance must be a positive real number");

    const mpfr_prec_t wp = prec + 32;
    EvalBudget budget{eval_budget, 0};
    VectorIntegrand f = [&integrand, wp](const BigFloat& t, std::vector<Complex>& out) {
        out[0] = integrand(t).as_complex(wp);
    };
    VectorQuadrature q = semiinfinite_integrate(f, 1, decay_rate.as_complex(wp).re, prec,
                                                tol.as_complex(wp).re, BigFloat(0L, wp), budget);
    QuadratureResult result;
    result.value = Scalar(q.values[0].with_prec(prec));
    result.est_error = q.est_errors[0];
    result.evaluations = budget.used;
    return result;
}

} // namespace newtonforge
