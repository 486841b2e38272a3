#include "newtonforge/roots.hpp"

#include <algorithm>
#include <numeric>

namespace newtonforge {

std::optional<mpq_class> rational_reconstruct(const BigFloat& x, const mpz_class& max_den,
                                              const BigFloat& tol) {
    mpq_class ex = x.to_exact_q();
    mpq_class tq = tol.to_exact_q();
    mpz_class num = ex.get_num(), den = ex.get_den();
    mpz_class a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class p0(1), q0(0), p1(a), q1(1);
    mpz_class n2 = den, d2 = r;
    for (int i = 0; i < 100000; ++i) {
        if (q1 > max_den) return std::nullopt;
        mpq_class approx(p1, q1);
        approx.canonicalize();
        if (abs(ex - approx) <= tq) return approx;
        if (sgn(d2) == 0) return std::nullopt;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        n2 = d2; d2 = r;
    }
    return std::nullopt;
}

std::vector<SquareFreePart> squarefree_decompose(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("cannot decompose the zero polynomial");
    Polynomial f = p.monic();
    if (f.degree() == 0) return {};
    Polynomial fp = f.derivative();
    Polynomial g = Polynomial::gcd(f, fp);
    if (g.degree() == 0) return {{f, 1}};
    Polynomial c = f.divmod(g).first;
    Polynomial d = fp.divmod(g).first - c.derivative();
    std::vector<SquareFreePart> out;
    for (unsigned i = 1; c.degree() > 0; ++i) {
        Polynomial a = Polynomial::gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = c.divmod(a).first;
        d = d.divmod(a).first - c.derivative();
    }
    return out;
}

std::vector<Complex> roots_squarefree(const Polynomial& p_in, mpfr_prec_t prec) {
    if (p_in.degree() <= 0) return {};
    Polynomial p = p_in.monic();
    long d = p.degree();
    BigFloat zero(0L, prec), one(1L, prec);
    if (d == 1) return {Complex(BigFloat(mpq_class(-p.coeff(0)), prec), zero)};

    Polynomial dp = p.derivative();

    BigFloat radius = one;
    for (long i = 0; i < d; ++i)
        radius = BigFloat::max(radius, BigFloat(p.coeff(static_cast<std::size_t>(i)), prec).abs());
    radius = radius + one;

    BigFloat two_pi = BigFloat::pi(prec).mul_2si(1);
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(d));
    for (long k = 0; k < d; ++k) {
        // Angular offset keeps the start set asymmetric about the real axis.
        BigFloat theta = two_pi * BigFloat(k, prec) / BigFloat(d, prec) + BigFloat(0.37, prec);
        BigFloat s(prec), c(prec);
        theta.sin_cos(s, c);
        z.emplace_back(radius * c, radius * s);
    }

    BigFloat tol = one.mul_2si(-static_cast<long>(prec - 16));
    for (int iter = 0; iter < 500; ++iter) {
        BigFloat worst = zero;
        for (long k = 0; k < d; ++k) {
            std::size_t ku = static_cast<std::size_t>(k);
            Complex pv = p.eval_c(z[ku], prec);
            if (pv.is_zero()) continue;
            Complex dv = dp.eval_c(z[ku], prec);
            if (dv.is_zero()) {
                z[ku] = z[ku] + Complex(tol * radius, tol * radius);
                worst = one;
                continue;
            }
            Complex w = pv / dv;
            Complex sum(zero, zero);
            bool collided = false;
            for (long j = 0; j < d && !collided; ++j) {
                if (j == k) continue;
                Complex diff = z[ku] - z[static_cast<std::size_t>(j)];
                if (diff.is_zero()) collided = true;
                else sum += diff.inv();
            }
            if (collided) {
                z[ku] = z[ku] + Complex(tol * radius * BigFloat(k + 2, prec), zero);
                worst = one;
                continue;
            }
            Complex denom = Complex(one, zero) - w * sum;
            Complex step = denom.is_zero() ? w : w / denom;
            z[ku] = z[ku] - step;
            worst = BigFloat::max(worst, step.magnitude() / (one + z[ku].magnitude()));
        }
        if (worst < tol) return z;
    }
    throw ConvergenceError("root finding did not converge for " + p_in.str());
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t s = idx.size();
    for (std::size_t i = s; i-- > 0;) {
        if (idx[i] + (s - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Expand the monic product over the picked roots, then try to recognize every
// coefficient as a small rational. The caller certifies by exact division.
std::optional<Polynomial> reconstruct_factor(const std::vector<Complex>& roots,
                                             const std::vector<std::size_t>& pick,
                                             mpfr_prec_t wp) {
    BigFloat zero(0L, wp), one(1L, wp);
    std::vector<Complex> c{Complex(one, zero)};
    for (std::size_t i : pick) {
        const Complex& r = roots[i];
        std::vector<Complex> nc(c.size() + 1, Complex(zero, zero));
        for (std::size_t j = 0; j < c.size(); ++j) {
            nc[j] = nc[j] - r * c[j];
            nc[j + 1] = nc[j + 1] + c[j];
        }
        c = std::move(nc);
    }
    BigFloat tol = one.mul_2si(-static_cast<long>(wp / 2));
    mpz_class max_den = mpz_class(1) << static_cast<unsigned>(wp / 5);
    std::vector<mpq_class> q(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!(c[j].im.abs() < tol)) return std::nullopt;
        auto rec = rational_reconstruct(c[j].re, max_den, tol);
        if (!rec) return std::nullopt;
        q[j] = *rec;
    }
    return Polynomial(std::move(q));
}

} // namespace

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(sn, sd);
    r.canonicalize();
    return r;
}

std::vector<Polynomial> factor_squarefree(const Polynomial& p, mpfr_prec_t prec) {
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    Polynomial cur = p.monic();
    std::vector<Polynomial> out;
    if (cur.degree() <= 1) {
        if (cur.degree() == 1) out.push_back(cur);
        return out;
    }
    for (int attempt = 0; attempt < 2 && cur.degree() > 1; ++attempt) {
        mpfr_prec_t wp = prec << attempt;
        std::vector<Complex> rs;
        try {
            rs = roots_squarefree(cur, wp);
        } catch (const ConvergenceError&) {
            if (attempt == 1) throw;
            continue;
        }
        bool progress = true;
        while (progress && cur.degree() > 1) {
            progress = false;
            std::size_t n = rs.size();
            std::size_t cap = cur.degree() > 24 ? 2 : static_cast<std::size_t>(cur.degree() / 2);
            for (std::size_t s = 1; s <= cap && !progress; ++s) {
                std::vector<std::size_t> idx(s);
                std::iota(idx.begin(), idx.end(), std::size_t{0});
                do {
                    auto cand = reconstruct_factor(rs, idx, wp);
                    if (cand && cand->degree() == static_cast<long>(s) &&
                        cur.divisible_by(*cand)) {
                        out.push_back(*cand);
                        cur = cur.divmod(*cand).first;
                        for (std::size_t t = idx.size(); t-- > 0;)
                            rs.erase(rs.begin() + static_cast<long>(idx[t]));
                        progress = true;
                        break;
                    }
                } while (next_combination(idx, n));
            }
        }
    }
    if (cur.degree() >= 1) out.push_back(cur);
    return out;
}

std::vector<IrreducibleFactor> factor_rational(const Polynomial& p, mpfr_prec_t prec) {
    std::vector<IrreducibleFactor> out;
    for (const auto& part : squarefree_decompose(p))
        for (const auto& f : factor_squarefree(part.factor, prec))
            out.push_back({f, part.multiplicity});
    return out;
}

namespace {

void sort_poles(std::vector<std::pair<Scalar, unsigned>>& out) {
    std::stable_sort(out.begin(), out.end(), [](const auto& A, const auto& B) {
        Complex a = A.first.as_complex(128), b = B.first.as_complex(128);
        int cr = a.re.cmp(b.re);
        if (cr != 0) return cr > 0;
        return a.im.cmp(b.im) < 0;
    });
}

} // namespace

std::vector<std::pair<Scalar, unsigned>> poles(const RationalFunction& R, mpfr_prec_t prec) {
    std::vector<std::pair<Scalar, unsigned>> out;
    for (const auto& f : factor_rational(R.den(), std::max<mpfr_prec_t>(prec, 320))) {
        const Polynomial& q = f.factor;
        if (q.degree() == 1) {
            out.push_back({Scalar(mpq_class(-q.coeff(0))), f.multiplicity});
        } else if (q.degree() == 2) {
            mpq_class b = q.coeff(1), c0 = q.coeff(0);
            mpq_class disc = b * b - 4 * c0;
            mpq_class alpha = mpq_class(-b) / 2;
            if (sgn(disc) < 0) {
                mpq_class nd(-disc);
                if (auto s = exact_sqrt(nd)) {
                    mpq_class beta = *s / 2;
                    out.push_back({Scalar(RationalComplex(alpha, beta)), f.multiplicity});
                    out.push_back({Scalar(RationalComplex(alpha, mpq_class(-beta))), f.multiplicity});
                } else {
                    BigFloat beta = BigFloat(nd, prec).sqrt().mul_2si(-1);
                    BigFloat a(alpha, prec);
                    out.push_back({Scalar(Complex(a, beta)), f.multiplicity});
                    out.push_back({Scalar(Complex(a, -beta)), f.multiplicity});
                }
            } else {
                BigFloat rd = BigFloat(disc, prec).sqrt().mul_2si(-1);
                BigFloat a(alpha, prec);
                out.push_back({Scalar(a + rd), f.multiplicity});
                out.push_back({Scalar(a - rd), f.multiplicity});
            }
        } else {
            for (const Complex& r : roots_squarefree(q, prec))
                out.push_back({Scalar(r), f.multiplicity});
        }
    }
    sort_poles(out);
    return out;
}

std::optional<Scalar> max_pole_real_part(const RationalFunction& R, mpfr_prec_t prec) {
    std::optional<Scalar> best;
    for (const auto& f : factor_rational(R.den(), std::max<mpfr_prec_t>(prec, 320))) {
        const Polynomial& q = f.factor;
        std::vector<Scalar> reals;
        if (q.degree() == 1) {
            reals.emplace_back(mpq_class(-q.coeff(0)));
        } else if (q.degree() == 2) {
            mpq_class b = q.coeff(1), c0 = q.coeff(0);
            mpq_class disc = b * b - 4 * c0;
            if (sgn(disc) < 0) {
                // Conjugate pair: the real part -b/2 is exact even when the
                // imaginary part is irrational.
                reals.emplace_back(mpq_class(mpq_class(-b) / 2));
            } else {
                mpq_class alpha = mpq_class(-b) / 2;
                BigFloat rd = BigFloat(disc, prec).sqrt().mul_2si(-1);
                reals.emplace_back(BigFloat(alpha, prec) + rd);
            }
        } else {
            for (const Complex& r : roots_squarefree(q, prec)) reals.emplace_back(r.re);
        }
        for (const Scalar& s : reals)
            if (!best || Scalar::real_cmp(s, *best) > 0) best = s;
    }
    return best;
}

} // namespace newtonforge
