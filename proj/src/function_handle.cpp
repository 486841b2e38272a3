#include "newtonforge/function_handle.hpp"

#include "newtonforge/parser.hpp"

#include <cctype>

namespace newtonforge {

namespace {

bool looks_like_identifier(const std::string& s) {
    if (s.empty() || s == "z") return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Scalar recip_sqrt_one_plus_square(const Scalar& z, mpfr_prec_t prec) {
    Scalar w = Scalar(1) + z * z;
    if (w.is_exact() && w.is_real()) {
        const mpq_class& q = w.exact().re;
        if (sgn(q) > 0) {
            if (auto s = exact_sqrt(q)) return Scalar(1) / Scalar(*s);
        }
    }
    Complex wc = w.as_complex(prec + 16);
    if (wc.is_zero()) throw PoleError("(1+z^2)^{-1/2} has a branch point at z = +-i");
    return Scalar(wc.sqrt().inv().with_prec(prec));
}

BigFloat require_real_arg(const Scalar& y, mpfr_prec_t prec, const char* name) {
    if (!y.is_real())
        throw DomainError(std::string(name) + " is defined on the real line");
    return y.as_complex(prec).re;
}

} // namespace

FunctionHandle handle_from_rational(const RationalFunction& R, std::string name) {
    FunctionHandle h;
    h.name = name.empty() ? R.str() : std::move(name);
    h.evaluator = [R](const Scalar& z, mpfr_prec_t) { return R.eval(z); };
    h.exact_evaluator = true;
    h.laplace = laplace_pair_for(R);
    Scalar bound(0);
    if (auto top = max_pole_real_part(R))
        if (Scalar::real_cmp(*top, bound) > 0) bound = *top;
    h.abs_abscissa = bound;
    h.rational = R;
    return h;
}

Scalar abs_convergence_abscissa(const FunctionHandle& handle) {
    if (!handle.laplace)
        throw DomainError("function '" + handle.name + "' carries no transform signal");
    if (!handle.abs_abscissa)
        throw DomainError("function '" + handle.name + "' is missing its abscissa");
    return *handle.abs_abscissa;
}

FunctionHandle catalog(const std::string& name) {
    if (name == "bessel_recip_sqrt") {
        FunctionHandle h;
        h.name = name;
        h.evaluator = recip_sqrt_one_plus_square;
        // No transform signal on purpose: the integral against this function
        // converges only conditionally at the boundary, and every oracle here
        // must be absolutely convergent.
        return h;
    }
    if (name == "gaussian") {
        FunctionHandle h;
        h.name = name;
        h.evaluator = [](const Scalar& y, mpfr_prec_t prec) {
            mpfr_prec_t wp = prec + 16;
            Complex yc = y.as_complex(wp);
            Complex arg = BigFloat::pi(wp) * (yc * yc);
            return Scalar((-arg).exp().with_prec(prec));
        };
        h.fourier = FourierPair{[](const BigFloat& x, mpfr_prec_t prec) {
            mpfr_prec_t wp = prec + 16;
            BigFloat xw = x.with_prec(wp);
            return (-(BigFloat::pi(wp) * xw * xw)).exp().with_prec(prec);
        }};
        return h;
    }
    if (name == "two_sided_exp") {
        FunctionHandle h;
        h.name = name;
        h.evaluator = [](const Scalar& y, mpfr_prec_t prec) {
            mpfr_prec_t wp = prec + 16;
            BigFloat yr = require_real_arg(y, wp, "two_sided_exp");
            BigFloat arg = BigFloat(-2L, wp) * BigFloat::pi(wp) * yr.abs();
            return Scalar(arg.exp().with_prec(prec));
        };
        h.fourier = FourierPair{[](const BigFloat& x, mpfr_prec_t prec) {
            mpfr_prec_t wp = prec + 16;
            BigFloat xw = x.with_prec(wp);
            BigFloat den = BigFloat::pi(wp) * (BigFloat(1L, wp) + xw * xw);
            return (BigFloat(1L, wp) / den).with_prec(prec);
        }};
        return h;
    }
    if (looks_like_identifier(name))
        throw DomainError("unknown catalog function '" + name + "'");
    return handle_from_rational(parse_rational(name), name);
}

} // namespace newtonforge
