#include "newtonforge/bigfloat.hpp"
#include "newtonforge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace newtonforge {

namespace {
mpfr_prec_t clamp_prec(mpfr_prec_t p) {
    return std::max<mpfr_prec_t>(p, MPFR_PREC_MIN + 2);
}
} // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& z, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN + 2);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_prec(mpfr_prec_t p) const {
    BigFloat r(clamp_prec(p));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log2(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t common_prec(const BigFloat& a, const BigFloat& b) {
    return std::min(a.prec(), b.prec());
}
} // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(common_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(common_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(common_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(common_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    BigFloat r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const {
    BigFloat r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::expm1() const {
    BigFloat r(prec());
    mpfr_expm1(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const {
    BigFloat r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const {
    BigFloat r(prec());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const {
    BigFloat r(prec());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

void BigFloat::sin_cos(BigFloat& s, BigFloat& c) const {
    s = BigFloat(prec());
    c = BigFloat(prec());
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

BigFloat BigFloat::atan() const {
    BigFloat r(prec());
    mpfr_atan(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_ui(unsigned long n) const {
    BigFloat r(prec());
    mpfr_pow_ui(r.v_, v_, n, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::mul_2si(long k) const {
    BigFloat r(prec());
    mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(common_prec(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::max(const BigFloat& x, const BigFloat& y) {
    return x.cmp(y) >= 0 ? x : y;
}

BigFloat BigFloat::min_of(const BigFloat& x, const BigFloat& y) {
    return x.cmp(y) <= 0 ? x : y;
}

mpq_class BigFloat::to_exact_q() const {
    if (!is_finite()) throw DomainError("cannot convert a non-finite float to a rational");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
}

std::string BigFloat::str(std::size_t digits) const {
    if (digits == 0)
        digits = static_cast<std::size_t>(static_cast<double>(prec()) * 0.30103) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits - 1), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

} // namespace newtonforge
