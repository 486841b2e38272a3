#pragma once

#include "newtonforge/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace newtonforge {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree with no trailing zeros (empty vector = zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpq_class> ascending);
    static Polynomial constant(const mpq_class& c);
    static Polynomial variable();

    /// Degree, with -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }
    const mpq_class& leading() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    Polynomial scaled(const mpq_class& s) const;

    /// Euclidean division: *this = q*d + r with deg r < deg d. Throws on zero d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    bool divisible_by(const Polynomial& d) const;

    /// Monic greatest common divisor (zero if both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    Polynomial derivative() const;
    Polynomial monic() const;
    Polynomial pow(unsigned e) const;

    Scalar eval(const Scalar& z) const;
    mpq_class eval_q(const mpq_class& x) const;
    RationalComplex eval_qc(const RationalComplex& z) const;
    Complex eval_c(const Complex& z, mpfr_prec_t prec) const;

    /// Grammar-conforming text: descending terms, e.g. "z^2+3/2*z-1"; "0" when zero.
    std::string str() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Taylor coefficients of p around rho: p(rho + u) = sum_i out[i] u^i,
/// for i = 0..order (computed by repeated synthetic division).
std::vector<RationalComplex> taylor_at(const Polynomial& p, const RationalComplex& rho,
                                       unsigned order);
std::vector<Complex> taylor_at(const Polynomial& p, const Complex& rho, unsigned order,
                               mpfr_prec_t prec);

/// Ratio of polynomials kept in reduced form with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    static RationalFunction from_polynomial(Polynomial p);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }
    /// deg num < deg den.
    bool is_proper() const { return num_.degree() < den_.degree(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction pow(unsigned e) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Evaluate with a pole guard: exact zero denominators throw PoleError,
    /// and floating denominators below 2^{-prec/2} in magnitude do too.
    Scalar eval(const Scalar& z) const;

    std::string str() const;

private:
    Polynomial num_, den_;
};

} // namespace newtonforge
