#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace newtonforge {

/// Arbitrary-precision real number. Thin RAII wrapper over mpfr_t that keeps an
/// explicit precision in bits per value. Binary operations round to the minimum
/// of the operand precisions; callers that need a specific working precision
/// normalize operands with with_prec() first. Rounding is always to nearest.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64);
    BigFloat(long v, mpfr_prec_t prec);
    BigFloat(double v, mpfr_prec_t prec);
    BigFloat(const mpq_class& q, mpfr_prec_t prec);
    BigFloat(const mpz_class& z, mpfr_prec_t prec);

    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    /// Same value rounded to precision p.
    BigFloat with_prec(mpfr_prec_t p) const;

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat log2(mpfr_prec_t prec); // ln 2

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat exp() const;
    BigFloat expm1() const;
    BigFloat log() const;
    BigFloat sin() const;
    BigFloat cos() const;
    void sin_cos(BigFloat& s, BigFloat& c) const;
    BigFloat atan() const;
    BigFloat pow_ui(unsigned long n) const;
    /// Multiply by 2^k exactly.
    BigFloat mul_2si(long k) const;
    static BigFloat hypot(const BigFloat& x, const BigFloat& y);
    static BigFloat max(const BigFloat& x, const BigFloat& y);
    static BigFloat min_of(const BigFloat& x, const BigFloat& y);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Exact value as a rational (finite values only).
    mpq_class to_exact_q() const;
    /// Decimal string "m.mmme±x"; digits=0 derives the count from the precision.
    std::string str(std::size_t digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

} // namespace newtonforge
