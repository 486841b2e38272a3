#include "newtonforge/scalar.hpp"

namespace newtonforge {

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    mpq_class d = b.abs2();
    RationalComplex n = a * b.conj();
    return {n.re / d, n.im / d};
}

Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigFloat d = b.abs2();
    Complex n = a * b.conj();
    return {n.re / d, n.im / d};
}

Complex Complex::inv() const {
    if (is_zero()) throw DomainError("division by zero");
    BigFloat d = abs2();
    return {re / d, -im / d};
}

Complex Complex::exp() const {
    BigFloat s(im.prec()), c(im.prec());
    im.sin_cos(s, c);
    BigFloat m = re.exp();
    return {m * c, m * s};
}

Complex Complex::sqrt() const {
    mpfr_prec_t p = prec();
    if (im.is_zero()) {
        if (re.sign() >= 0) return {re.sqrt(), BigFloat(0L, p)};
        return {BigFloat(0L, p), (-re).sqrt()};
    }
    // w = sqrt((|z| + |re|)/2); the other component is |im|/(2w).
    BigFloat m = magnitude();
    BigFloat w = ((m + re.abs()).mul_2si(-1)).sqrt();
    BigFloat t = im.abs() / w.mul_2si(1);
    if (re.sign() >= 0) return {w, im.sign() >= 0 ? t : -t};
    return {t, im.sign() >= 0 ? w : -w};
}

Complex Complex::pow_ui(unsigned long n) const {
    mpfr_prec_t p = prec();
    Complex acc(BigFloat(1L, p), BigFloat(0L, p));
    Complex base = *this;
    while (n > 0) {
        if (n & 1UL) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

const RationalComplex& Scalar::exact() const {
    if (!is_exact()) throw DomainError("scalar is not exact");
    return std::get<RationalComplex>(v_);
}

const Complex& Scalar::floating() const {
    if (is_exact()) throw DomainError("scalar is not floating");
    return std::get<Complex>(v_);
}

Complex Scalar::as_complex(mpfr_prec_t p) const {
    if (is_exact()) return Complex(std::get<RationalComplex>(v_), p);
    return std::get<Complex>(v_).with_prec(p);
}

bool Scalar::is_zero() const {
    if (is_exact()) return std::get<RationalComplex>(v_).is_zero();
    return std::get<Complex>(v_).is_zero();
}

bool Scalar::is_real() const {
    if (is_exact()) return std::get<RationalComplex>(v_).is_real();
    return std::get<Complex>(v_).im.is_zero();
}

Scalar Scalar::real_part() const {
    if (is_exact()) return Scalar(RationalComplex(std::get<RationalComplex>(v_).re, mpq_class(0)));
    const Complex& c = std::get<Complex>(v_);
    return Scalar(Complex(c.re, BigFloat(0L, c.re.prec())));
}

Scalar Scalar::imag_part() const {
    if (is_exact()) return Scalar(RationalComplex(std::get<RationalComplex>(v_).im, mpq_class(0)));
    const Complex& c = std::get<Complex>(v_);
    return Scalar(Complex(c.im, BigFloat(0L, c.im.prec())));
}

Scalar Scalar::conj() const {
    if (is_exact()) return Scalar(std::get<RationalComplex>(v_).conj());
    return Scalar(std::get<Complex>(v_).conj());
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-std::get<RationalComplex>(v_));
    return Scalar(-std::get<Complex>(v_));
}

BigFloat Scalar::magnitude(mpfr_prec_t p) const {
    return as_complex(is_exact() ? p : precision_bits()).magnitude();
}

namespace {

mpfr_prec_t mixed_prec(const Scalar& a, const Scalar& b) {
    mpfr_prec_t pa = a.precision_bits(), pb = b.precision_bits();
    if (pa == 0) return pb;
    if (pb == 0) return pa;
    return std::min(pa, pb);
}

template <typename ExactOp, typename FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp eop, FloatOp fop) {
    if (a.is_exact() && b.is_exact()) return Scalar(eop(a.exact(), b.exact()));
    mpfr_prec_t p = mixed_prec(a, b);
    return Scalar(fop(a.as_complex(p), b.as_complex(p)));
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b,
                   [](const RationalComplex& x, const RationalComplex& y) { return x + y; },
                   [](const Complex& x, const Complex& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b,
                   [](const RationalComplex& x, const RationalComplex& y) { return x - y; },
                   [](const Complex& x, const Complex& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b,
                   [](const RationalComplex& x, const RationalComplex& y) { return x * y; },
                   [](const Complex& x, const Complex& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return combine(a, b,
                   [](const RationalComplex& x, const RationalComplex& y) { return x / y; },
                   [](const Complex& x, const Complex& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.exact() == b.exact();
    const Complex& x = a.floating();
    const Complex& y = b.floating();
    return x.re == y.re && x.im == y.im;
}

int Scalar::real_cmp(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
        return cmp(a.exact().re, b.exact().re);
    mpfr_prec_t p = mixed_prec(a, b) + 32;
    return a.as_complex(p).re.cmp(b.as_complex(p).re);
}

namespace {

std::string float_str(const BigFloat& x) { return x.str(); }

std::string complex_pair_str(const std::string& re, const std::string& im,
                             bool re_zero, bool im_zero, bool im_neg,
                             const std::string& im_abs) {
    if (im_zero) return re;
    if (re_zero) return im + "i";
    return re + (im_neg ? "-" : "+") + im_abs + "i";
}

} // namespace

std::string Scalar::format() const {
    if (is_exact()) {
        const RationalComplex& q = std::get<RationalComplex>(v_);
        return complex_pair_str(rational_str(q.re), rational_str(q.im),
                                sgn(q.re) == 0, sgn(q.im) == 0, sgn(q.im) < 0,
                                rational_str(abs(q.im)));
    }
    const Complex& c = std::get<Complex>(v_);
    return complex_pair_str(float_str(c.re), float_str(c.im),
                            c.re.is_zero(), c.im.is_zero(), c.im.sign() < 0,
                            float_str(c.im.abs()));
}

} // namespace newtonforge
