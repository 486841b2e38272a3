#pragma once

#include "newtonforge/roots.hpp"

#include <vector>

namespace newtonforge {

/// One proper summand num/base^power with deg num < deg base and base
/// irreducible over the rationals.
struct ProperTerm {
    Polynomial num;
    Polynomial base;
    unsigned power;

    Polynomial den() const { return base.pow(power); }
};

/// R = polynomial_part + sum of proper terms, exactly.
struct PartialFractions {
    Polynomial polynomial_part;
    std::vector<ProperTerm> terms;

    RationalFunction recombine() const;
};

/// num/(base^power) with the full per-factor numerator (deg num < power*deg base).
struct FactorBlock {
    Polynomial num;
    Polynomial base;
    unsigned power;
};

/// Split a proper fraction N/prod(factors) into one block per coprime factor
/// power, via Bezout cofactors. N must satisfy deg N < deg of the product.
std::vector<FactorBlock> coprime_split(const Polynomial& N,
                                       const std::vector<IrreducibleFactor>& factors);

/// Exact decomposition; the recombination identity is verified before return.
PartialFractions partial_fractions(const RationalFunction& R, mpfr_prec_t prec = 320);

} // namespace newtonforge
