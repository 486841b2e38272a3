#include "newtonforge/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace newtonforge {

Polynomial::Polynomial(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const mpq_class& c) {
    return Polynomial(std::vector<mpq_class>{c});
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<mpq_class>{mpq_class(0), mpq_class(1)});
}

const mpq_class& Polynomial::leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<mpq_class> r(c_);
    for (auto& q : r) q = -q;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return Polynomial();
    std::vector<mpq_class> r(c_);
    for (auto& q : r) q *= s;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<mpq_class> rem(c_);
    std::vector<mpq_class> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, mpq_class(0));
    const mpq_class& lead = d.leading();
    for (long i = degree(); i >= d.degree(); --i) {
        mpq_class q = rem[static_cast<std::size_t>(i)] / lead;
        if (sgn(q) == 0) continue;
        quo[static_cast<std::size_t>(i - d.degree())] = q;
        for (long j = 0; j <= d.degree(); ++j)
            rem[static_cast<std::size_t>(i - d.degree() + j)] -= q * d.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

bool Polynomial::divisible_by(const Polynomial& d) const {
    return divmod(d).second.is_zero();
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<mpq_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw DomainError("zero polynomial cannot be made monic");
    return scaled(1 / leading());
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Polynomial::eval(const Scalar& z) const {
    Scalar acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + Scalar(c_[i]);
    return acc;
}

mpq_class Polynomial::eval_q(const mpq_class& x) const {
    mpq_class acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RationalComplex Polynomial::eval_qc(const RationalComplex& z) const {
    RationalComplex acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + RationalComplex(c_[i], mpq_class(0));
    return acc;
}

Complex Polynomial::eval_c(const Complex& z, mpfr_prec_t prec) const {
    Complex acc(BigFloat(0L, prec), BigFloat(0L, prec));
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * z + Complex(BigFloat(c_[i], prec), BigFloat(0L, prec));
    return acc;
}

namespace {

// One grammar-conforming term: coefficient q (nonzero) times z^k.  `first`
// selects the leading-term form, where a negative sign must live inside the
// literal ("-3/2*z") because the grammar has no unary minus.
std::string term_str(const mpq_class& q, std::size_t k, bool first) {
    std::string s;
    mpq_class a = abs(q);
    if (first) {
        if (sgn(q) < 0) {
            s += rational_str(q);
            if (k > 0) s += "*";
        } else if (a != 1 || k == 0) {
            s += rational_str(a);
            if (k > 0) s += "*";
        }
    } else {
        s += sgn(q) < 0 ? "-" : "+";
        if (a != 1 || k == 0) {
            s += rational_str(a);
            if (k > 0) s += "*";
        }
    }
    if (k == 1) s += "z";
    else if (k > 1) s += "z^" + std::to_string(k);
    return s;
}

} // namespace

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (sgn(c_[i]) == 0) continue;
        s += term_str(c_[i], i, first);
        first = false;
    }
    return s;
}

std::vector<RationalComplex> taylor_at(const Polynomial& p, const RationalComplex& rho,
                                       unsigned order) {
    std::vector<RationalComplex> work;
    work.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) work.emplace_back(q, mpq_class(0));
    std::vector<RationalComplex> out(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        // Synthetic division of `work` by (z - rho); the remainder is the
        // next Taylor coefficient.
        RationalComplex rem;
        for (std::size_t j = work.size(); j-- > 0;) rem = rem * rho + work[j];
        out[i] = rem;
        if (work.empty()) continue;
        std::vector<RationalComplex> quo(work.size() > 1 ? work.size() - 1 : 0);
        RationalComplex carry;
        for (std::size_t j = work.size(); j-- > 1;) {
            carry = work[j] + carry * rho;
            quo[j - 1] = carry;
        }
        work = std::move(quo);
    }
    return out;
}

std::vector<Complex> taylor_at(const Polynomial& p, const Complex& rho, unsigned order,
                               mpfr_prec_t prec) {
    BigFloat zero(0L, prec);
    std::vector<Complex> work;
    work.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) work.emplace_back(BigFloat(q, prec), zero);
    Complex r = rho.with_prec(prec);
    std::vector<Complex> out(order + 1, Complex(zero, zero));
    for (unsigned i = 0; i <= order; ++i) {
        Complex rem(zero, zero);
        for (std::size_t j = work.size(); j-- > 0;) rem = rem * r + work[j];
        out[i] = rem;
        if (work.empty()) continue;
        std::vector<Complex> quo(work.size() > 1 ? work.size() - 1 : 0, Complex(zero, zero));
        Complex carry(zero, zero);
        for (std::size_t j = work.size(); j-- > 1;) {
            carry = work[j] + carry * r;
            quo[j - 1] = carry;
        }
        work = std::move(quo);
    }
    return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DomainError("zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::constant(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    mpq_class lead = den.leading();
    num_ = num.scaled(1 / lead);
    den_ = den.scaled(1 / lead);
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    return RationalFunction(std::move(p), Polynomial::constant(1));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::pow(unsigned e) const {
    RationalFunction r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    if (r.num_.is_zero()) r.den_ = Polynomial::constant(1);
    return r;
}

Scalar RationalFunction::eval(const Scalar& z) const {
    Scalar d = den_.eval(z);
    if (d.is_zero()) throw PoleError("pole at z = " + z.format());
    if (!d.is_exact()) {
        mpfr_prec_t p = d.precision_bits();
        BigFloat guard = BigFloat(1L, 64).mul_2si(-static_cast<long>(p / 2));
        if (d.magnitude() < guard)
            throw PoleError("evaluation too close to a pole at z = " + z.format());
    }
    return num_.eval(z) / d;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace newtonforge
