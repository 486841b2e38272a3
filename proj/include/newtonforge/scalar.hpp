#pragma once

#include "newtonforge/bigfloat.hpp"
#include "newtonforge/errors.hpp"

#include <gmpxx.h>

#include <string>
#include <variant>

namespace newtonforge {

/// "p/q" (or just "p" for integers).
std::string rational_str(const mpq_class& q);

/// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
    mpq_class re, im;

    RationalComplex() : re(0), im(0) {}
    RationalComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit RationalComplex(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    mpq_class abs2() const { return re * re + im * im; }
    RationalComplex conj() const { return {re, -im}; }

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b);
    RationalComplex operator-() const { return {-re, -im}; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Complex number over BigFloat. Component precisions follow BigFloat's
/// min-precision rule under arithmetic.
struct Complex {
    BigFloat re, im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const RationalComplex& q, mpfr_prec_t prec) : re(q.re, prec), im(q.im, prec) {}

    mpfr_prec_t prec() const { return std::min(re.prec(), im.prec()); }
    Complex with_prec(mpfr_prec_t p) const { return {re.with_prec(p), im.with_prec(p)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    Complex conj() const { return {re, -im}; }
    BigFloat abs2() const { return re * re + im * im; }
    BigFloat magnitude() const { return BigFloat::hypot(re, im); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator-() const { return {-re, -im}; }

    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }

    Complex inv() const;
    /// e^z = e^re (cos im + i sin im).
    Complex exp() const;
    /// Principal square root.
    Complex sqrt() const;
    Complex pow_ui(unsigned long n) const;
    Complex mul_2si(long k) const { return {re.mul_2si(k), im.mul_2si(k)}; }
    friend Complex operator*(const BigFloat& s, const Complex& z) { return {s * z.re, s * z.im}; }
};

/// Adaptive-precision complex scalar: exact rational pair, or floating at an
/// explicit precision. Exact stays exact under +,-,*,/; mixed operations
/// produce floats at the minimum precision present.
class Scalar {
public:
    Scalar() : v_(RationalComplex()) {}
    Scalar(long n) : v_(RationalComplex(n)) {}
    Scalar(mpq_class q) : v_(RationalComplex(std::move(q), mpq_class(0))) {}
    Scalar(RationalComplex q) : v_(std::move(q)) {}
    Scalar(Complex c) : v_(std::move(c)) {}
    Scalar(BigFloat x) : v_(Complex(std::move(x), BigFloat(0L, 2))) {
        auto& c = std::get<Complex>(v_);
        c.im = BigFloat(0L, c.re.prec());
    }

    bool is_exact() const { return std::holds_alternative<RationalComplex>(v_); }
    /// Precision in bits of a floating scalar; 0 for exact values.
    mpfr_prec_t precision_bits() const {
        return is_exact() ? 0 : std::get<Complex>(v_).prec();
    }

    const RationalComplex& exact() const;
    const Complex& floating() const;

    /// Floating view at precision p (exact values are rounded; floats re-rounded).
    Complex as_complex(mpfr_prec_t p) const;
    Scalar to_float(mpfr_prec_t p) const { return Scalar(as_complex(p)); }

    bool is_zero() const;
    bool is_real() const;
    Scalar real_part() const;
    Scalar imag_part() const;
    Scalar conj() const;
    Scalar operator-() const;

    /// |z| as a BigFloat; `p` applies when the value is exact.
    BigFloat magnitude(mpfr_prec_t p = 128) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    /// Exact equality for exact pairs, bitwise value equality for float pairs.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Strict comparison of real parts: -1, 0, +1. Exact when both exact.
    static int real_cmp(const Scalar& a, const Scalar& b);

    /// Canonical display form: exact "p/q" / "a+bi", float decimal.
    std::string format() const;

private:
    std::variant<RationalComplex, Complex> v_;
};

/// Precision selection for difference and series computations.
/// Auto mode runs an order-n computation at >= n + guard bits (binomial weights
/// reach 2^n, so n leading bits can cancel), and takes the exact path whenever
/// the function and the nodes are exact.
struct PrecisionPolicy {
    enum class Mode { Exact, Fixed, Auto };

    Mode mode = Mode::Auto;
    unsigned fixed_bits = 256;
    unsigned guard_bits = 64;

    static PrecisionPolicy exact() { return {Mode::Exact, 256, 64}; }
    static PrecisionPolicy fixed(unsigned bits) { return {Mode::Fixed, bits, 64}; }
    static PrecisionPolicy automatic(unsigned guard = 64) { return {Mode::Auto, 256, guard}; }

    bool is_exact() const { return mode == Mode::Exact; }

    mpfr_prec_t working_bits(unsigned long order) const {
        if (mode == Mode::Fixed) return fixed_bits;
        unsigned long p = order + guard_bits;
        return p < 64 ? 64 : static_cast<mpfr_prec_t>(p);
    }
};

} // namespace newtonforge
