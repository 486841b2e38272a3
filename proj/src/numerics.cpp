#include "newtonforge/numerics.hpp"

namespace newtonforge {

mpz_class binomial_exact(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial_exact(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Scalar generalized_binomial(const Scalar& z, unsigned long k) {
    if (z.is_exact()) {
        RationalComplex c(1);
        RationalComplex zq = z.exact();
        for (unsigned long j = 0; j < k; ++j) {
            RationalComplex num = zq - RationalComplex(static_cast<long>(j));
            c = c * num / RationalComplex(static_cast<long>(j) + 1);
        }
        return Scalar(c);
    }
    mpfr_prec_t p = z.precision_bits();
    Complex c(BigFloat(1L, p), BigFloat(0L, p));
    Complex zf = z.floating();
    for (unsigned long j = 0; j < k; ++j) {
        Complex num = zf - Complex(BigFloat(static_cast<long>(j), p), BigFloat(0L, p));
        c = c * num / Complex(BigFloat(static_cast<long>(j) + 1, p), BigFloat(0L, p));
    }
    return Scalar(c);
}

Scalar compensated_sum(const std::vector<Scalar>& terms) {
    bool all_exact = true;
    mpfr_prec_t min_prec = 0;
    for (const Scalar& t : terms) {
        if (!t.is_exact()) {
            all_exact = false;
            mpfr_prec_t p = t.precision_bits();
            if (min_prec == 0 || p < min_prec) min_prec = p;
        }
    }
    if (all_exact) {
        RationalComplex acc;
        for (const Scalar& t : terms) acc = acc + t.exact();
        return Scalar(acc);
    }
    mpfr_prec_t wide = min_prec + 64;
    Complex acc(BigFloat(0L, wide), BigFloat(0L, wide));
    for (const Scalar& t : terms) {
        Complex c = t.as_complex(wide);
        // Keep the accumulator wide: BigFloat ops round to the minimum
        // operand precision, and every c is already at `wide` bits.
        acc = acc + c;
    }
    return Scalar(acc.with_prec(min_prec));
}

} // namespace newtonforge
