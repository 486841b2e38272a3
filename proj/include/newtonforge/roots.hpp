#pragma once

#include "newtonforge/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace newtonforge {

/// Best rational approximation of x with denominator <= max_den and error
/// <= tol, found by walking the continued-fraction convergents of x's exact
/// value. Empty when no convergent qualifies.
std::optional<mpq_class> rational_reconstruct(const BigFloat& x, const mpz_class& max_den,
                                              const BigFloat& tol);

/// sqrt(q) when q is the square of a rational, empty otherwise.
std::optional<mpq_class> exact_sqrt(const mpq_class& q);

/// One square-free class of a polynomial: p = prod factor^multiplicity with
/// the factors monic, square-free and pairwise coprime.
struct SquareFreePart {
    Polynomial factor;
    unsigned multiplicity;
};

/// Yun's square-free decomposition (exact).
std::vector<SquareFreePart> squarefree_decompose(const Polynomial& p);

/// All complex roots of a square-free polynomial, by Aberth iteration at the
/// given precision; steps are driven below 2^{-(prec-16)} relative.
std::vector<Complex> roots_squarefree(const Polynomial& p, mpfr_prec_t prec);

/// Monic irreducible-over-Q factors of a square-free polynomial. Candidate
/// factors are reconstructed from subsets of numerical roots and certified by
/// exact division, so the returned product always equals p/leading(p) exactly.
std::vector<Polynomial> factor_squarefree(const Polynomial& p, mpfr_prec_t prec = 320);

struct IrreducibleFactor {
    Polynomial factor;  // monic
    unsigned multiplicity;
};

/// Full factorization p = leading * prod factor^multiplicity.
std::vector<IrreducibleFactor> factor_rational(const Polynomial& p, mpfr_prec_t prec = 320);

/// Poles of R with multiplicities. Rational and Gaussian-rational poles come
/// back exact; all others at the given precision. Sorted by descending real
/// part, then ascending imaginary part.
std::vector<std::pair<Scalar, unsigned>> poles(const RationalFunction& R,
                                               mpfr_prec_t prec = 256);

/// max Re(pole) as a Scalar, or empty when R is a polynomial.
std::optional<Scalar> max_pole_real_part(const RationalFunction& R, mpfr_prec_t prec = 256);

} // namespace newtonforge
