#include "newtonforge/signals.hpp"

#include "newtonforge/numerics.hpp"

#include <algorithm>

namespace newtonforge {

namespace {

// Truncated power series product, length n.
template <class T>
std::vector<T> mul_trunc(const std::vector<T>& x, const std::vector<T>& y, std::size_t n,
                         const T& zero) {
    std::vector<T> r(n, zero);
    for (std::size_t i = 0; i < x.size() && i < n; ++i)
        for (std::size_t j = 0; j + i < n && j < y.size(); ++j)
            r[i + j] = r[i + j] + x[i] * y[j];
    return r;
}

// Truncated power series quotient num/den, length n; den[0] must be nonzero.
template <class T>
std::vector<T> div_trunc(const std::vector<T>& num, const std::vector<T>& den, std::size_t n,
                         const T& zero) {
    std::vector<T> g(n, zero);
    for (std::size_t k = 0; k < n; ++k) {
        T acc = k < num.size() ? num[k] : zero;
        for (std::size_t i = 1; i <= k && i < den.size(); ++i)
            acc = acc - den[i] * g[k - i];
        g[k] = acc / den[0];
    }
    return g;
}

void require_real(const Scalar& s, const char* what) {
    if (!s.is_real()) throw ArgumentError(std::string(what) + " must be real");
}

// Emit the pair of oscillating terms for residues A_j at the pole a+bi with
// b > 0: t^{j-1} e^{at} (2 Re A_j cos(bt) - 2 Im A_j sin(bt)) / (j-1)!.
template <class Emit>
void emit_conjugate_pair(const Scalar& re_a, const Scalar& im_a, unsigned j, const Scalar& a,
                         const Scalar& b, Emit&& push) {
    Scalar fact(mpq_class(factorial_exact(j - 1)));
    push(SignalTerm{Scalar(2) * re_a / fact, j - 1, a, b, Phase::Cos});
    push(SignalTerm{Scalar(-2) * im_a / fact, j - 1, a, b, Phase::Sin});
}

// Exact residues for an irreducible quadratic block num/(q^power) whose roots
// are the Gaussian rationals alpha +- beta i.
void block_exact_quadratic(const FactorBlock& blk, const mpq_class& alpha, const mpq_class& beta,
                           std::vector<SignalTerm>& out) {
    const unsigned m = blk.power;
    RationalComplex rho(alpha, beta);
    auto nser = taylor_at(blk.num, rho, m - 1);

    // (z - conj(rho))^m around rho: coefficients C(m,i) (2 beta i)^{m-i}.
    RationalComplex two_beta_i(mpq_class(0), 2 * beta);
    std::vector<RationalComplex> eser(m);
    for (unsigned i = 0; i < m; ++i) {
        RationalComplex pw(mpq_class(1), mpq_class(0));
        for (unsigned k = 0; k < m - i; ++k) pw = pw * two_beta_i;
        eser[i] = RationalComplex(mpq_class(binomial_exact(m, i)), mpq_class(0)) * pw;
    }

    auto g = div_trunc(nser, eser, m, RationalComplex());
    for (unsigned i = 0; i < m; ++i) {
        unsigned j = m - i;  // order of the pole term the residue multiplies
        emit_conjugate_pair(Scalar(g[i].re), Scalar(g[i].im), j, Scalar(alpha), Scalar(beta),
                            [&](SignalTerm t) { out.push_back(std::move(t)); });
    }
}

// Floating residues at one root of blk.base (all roots of an irreducible
// factor are simple, so the block denominator is (z-rho)^m * E with
// E = prod over the other roots).
void block_float_root(const FactorBlock& blk, const Complex& rho,
                      const std::vector<Complex>& others, bool is_real_root, mpfr_prec_t wp,
                      std::vector<SignalTerm>& out) {
    const unsigned m = blk.power;
    const Complex zero(BigFloat(0L, wp), BigFloat(0L, wp));
    const Complex one(BigFloat(1L, wp), BigFloat(0L, wp));

    std::vector<Complex> base{one};
    for (const auto& r : others) {
        std::vector<Complex> lin{rho - r, one};
        base = mul_trunc(base, lin, m, zero);
    }
    std::vector<Complex> eser{one};
    for (unsigned k = 0; k < m; ++k) eser = mul_trunc(eser, base, m, zero);

    auto nser = taylor_at(blk.num, rho, m - 1, wp);
    auto g = div_trunc(nser, eser, m, zero);

    for (unsigned i = 0; i < m; ++i) {
        unsigned j = m - i;
        if (is_real_root) {
            BigFloat fact(mpz_class(factorial_exact(j - 1)), wp);
            out.push_back(SignalTerm{Scalar(g[i].re / fact), j - 1, Scalar(rho.re),
                                     Scalar(BigFloat(0L, wp)), Phase::Cos});
        } else {
            emit_conjugate_pair(Scalar(g[i].re), Scalar(g[i].im), j, Scalar(rho.re),
                                Scalar(rho.im), [&](SignalTerm t) { out.push_back(std::move(t)); });
        }
    }
}

void emit_block(const FactorBlock& blk, mpfr_prec_t prec, std::vector<SignalTerm>& out) {
    const long d = blk.base.degree();
    const unsigned m = blk.power;

    if (d == 1) {
        // Simple rational pole rho: digits are constants, each mapping to
        // B t^{j-1} e^{rho t} / (j-1)!.
        mpq_class rho = -blk.base.coeff(0);
        Polynomial r = blk.num;
        for (unsigned j = 0; j < m; ++j) {
            auto [q, digit] = r.divmod(blk.base);
            if (!digit.is_zero()) {
                unsigned pw = m - j;
                mpq_class c = digit.coeff(0) / mpq_class(factorial_exact(pw - 1));
                out.push_back(SignalTerm{Scalar(c), pw - 1, Scalar(rho), Scalar(0), Phase::Cos});
            }
            r = q;
        }
        return;
    }

    if (d == 2) {
        mpq_class p1 = blk.base.coeff(1);
        mpq_class p0 = blk.base.coeff(0);
        mpq_class disc = p1 * p1 - 4 * p0;
        mpq_class alpha = -p1 / 2;
        if (sgn(disc) < 0) {
            if (auto s = exact_sqrt(mpq_class(-disc))) {
                block_exact_quadratic(blk, alpha, mpq_class(*s / 2), out);
                return;
            }
        }
        mpfr_prec_t wp = prec + 64;
        BigFloat half_root = BigFloat(disc < 0 ? mpq_class(-disc) : disc, wp).sqrt().mul_2si(-1);
        BigFloat al(alpha, wp);
        BigFloat zero(0L, wp);
        if (sgn(disc) > 0) {
            Complex r1(al + half_root, zero), r2(al - half_root, zero);
            block_float_root(blk, r1, {r2}, true, wp, out);
            block_float_root(blk, r2, {r1}, true, wp, out);
        } else {
            Complex r1(al, half_root), r2(al, -half_root);
            block_float_root(blk, r1, {r2}, false, wp, out);
        }
        return;
    }

    // Higher-degree irreducible factor: numerical simple roots, conjugates
    // folded into the positive-frequency terms.
    mpfr_prec_t wp = prec + 64;
    auto roots = roots_squarefree(blk.base, wp);
    BigFloat tol = BigFloat(1L, wp).mul_2si(-static_cast<long>(wp / 2));
    for (auto& r : roots)
        if (r.im.abs() < tol) r.im = BigFloat(0L, wp);
    for (std::size_t k = 0; k < roots.size(); ++k) {
        if (roots[k].im.is_zero()) {
            std::vector<Complex> others;
            for (std::size_t l = 0; l < roots.size(); ++l)
                if (l != k) others.push_back(roots[l]);
            block_float_root(blk, roots[k], others, true, wp, out);
        } else if (BigFloat(0L, wp) < roots[k].im) {
            std::vector<Complex> others;
            for (std::size_t l = 0; l < roots.size(); ++l)
                if (l != k) others.push_back(roots[l]);
            block_float_root(blk, roots[k], others, false, wp, out);
        }
    }
}

int term_order_cmp(const SignalTerm& x, const SignalTerm& y) {
    int c = Scalar::real_cmp(y.a, x.a);  // descending rate
    if (c != 0) return c;
    c = Scalar::real_cmp(x.b, y.b);
    if (c != 0) return c;
    if (x.m != y.m) return x.m < y.m ? -1 : 1;
    if (x.phase != y.phase) return x.phase == Phase::Cos ? -1 : 1;
    return 0;
}

} // namespace

ExpPolySignal::ExpPolySignal(std::vector<SignalTerm> terms) {
    for (auto& t : terms) {
        require_real(t.c, "signal coefficient");
        require_real(t.a, "signal rate");
        require_real(t.b, "signal frequency");
        if (Scalar::real_cmp(t.b, Scalar(0)) < 0)
            throw ArgumentError("signal frequency must be nonnegative");
        if (t.c.is_zero()) continue;
        if (t.b.is_zero() && t.phase == Phase::Sin) continue;  // identically zero
        bool merged = false;
        for (auto& u : terms_) {
            if (u.m == t.m && u.phase == t.phase && u.a == t.a && u.b == t.b) {
                u.c += t.c;
                merged = true;
                break;
            }
        }
        if (!merged) terms_.push_back(std::move(t));
    }
    std::erase_if(terms_, [](const SignalTerm& t) { return t.c.is_zero(); });
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const SignalTerm& x, const SignalTerm& y) {
                         return term_order_cmp(x, y) < 0;
                     });
}

BigFloat ExpPolySignal::eval(const BigFloat& t, mpfr_prec_t prec) const {
    mpfr_prec_t wp = prec + 32;
    BigFloat tw = t.with_prec(wp);
    BigFloat acc(0L, wp);
    for (const auto& term : terms_) {
        BigFloat v = term.c.as_complex(wp).re;
        if (term.m > 0) v = v * tw.pow_ui(term.m);
        BigFloat a = term.a.as_complex(wp).re;
        if (!a.is_zero()) v = v * (a * tw).exp();
        if (!term.b.is_zero()) {
            BigFloat arg = term.b.as_complex(wp).re * tw;
            v = v * (term.phase == Phase::Cos ? arg.cos() : arg.sin());
        }
        acc = acc + v;
    }
    return acc.with_prec(prec);
}

std::optional<Scalar> ExpPolySignal::abscissa() const {
    if (terms_.empty()) return std::nullopt;
    Scalar best = terms_.front().a;
    for (const auto& t : terms_)
        if (Scalar::real_cmp(t.a, best) > 0) best = t.a;
    return best;
}

BigFloat ExpPolySignal::sup_weight(const Scalar& sigma, mpfr_prec_t prec) const {
    require_real(sigma, "weight abscissa");
    mpfr_prec_t wp = prec + 32;
    BigFloat s = sigma.as_complex(wp).re;
    BigFloat acc(0L, wp);
    for (const auto& t : terms_) {
        BigFloat gap = s - t.a.as_complex(wp).re;
        if (!(BigFloat(0L, wp) < gap))
            throw RegionError("weight bound requires an abscissa above every signal rate");
        // sup t^m e^{-gap t} = (m / gap)^m e^{-m}
        BigFloat factor(1L, wp);
        if (t.m > 0) {
            BigFloat mm(static_cast<long>(t.m), wp);
            factor = ((mm / gap).log() * mm - mm).exp();
        }
        acc = acc + t.c.magnitude(wp) * factor;
    }
    return acc.with_prec(prec);
}

Scalar DeltaImageTerm::image(const Scalar& z, mpfr_prec_t prec) const {
    Scalar out = coefficient;
    for (unsigned i = 0; i < degree; ++i) out *= z;
    if (!shift.is_zero()) {
        Complex e = ((-shift).as_complex(prec) * z.as_complex(prec)).exp();
        out *= Scalar(e);
    }
    return out;
}

std::vector<DeltaImageTerm> delta_terms_from_polynomial(const Polynomial& p) {
    std::vector<DeltaImageTerm> out;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0)
            out.push_back(DeltaImageTerm{Scalar(c[k]), Scalar(0), static_cast<unsigned>(k)});
    return out;
}

ExpPolySignal inverse_laplace_rational(const RationalFunction& R, mpfr_prec_t prec) {
    if (!R.is_proper())
        throw DomainError("inverse transform requires a proper rational function "
                          "(split off the polynomial part first)");
    if (R.is_zero()) return {};

    auto factors = factor_rational(R.den(), std::max<mpfr_prec_t>(prec + 64, 320));
    auto blocks = coprime_split(R.num(), factors);
    std::vector<SignalTerm> raw;
    for (const auto& blk : blocks) emit_block(blk, prec, raw);
    return ExpPolySignal(std::move(raw));
}

LaplacePair laplace_pair_for(const RationalFunction& R, mpfr_prec_t prec) {
    LaplacePair out;
    auto [p, rem] = R.num().divmod(R.den());
    out.deltas = delta_terms_from_polynomial(p);
    if (!rem.is_zero())
        out.signal = inverse_laplace_rational(RationalFunction(rem, R.den()), prec);
    return out;
}

} // namespace newtonforge
