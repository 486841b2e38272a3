#include "newtonforge/partial_fractions.hpp"

#include "newtonforge/errors.hpp"

namespace newtonforge {

namespace {

// Extended Euclid for coprime U, V: returns (a, b) with a*U + b*V = 1.
std::pair<Polynomial, Polynomial> bezout_coprime(const Polynomial& U, const Polynomial& V) {
    Polynomial r0 = U;
    Polynomial r1 = V;
    Polynomial s0 = Polynomial::constant(1);
    Polynomial s1;
    Polynomial t0;
    Polynomial t1 = Polynomial::constant(1);
    while (!(r1.degree() == -1)) {
        auto [q, r2] = r0.divmod(r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0)
        throw Error("internal: bezout_coprime called on polynomials with a common factor");
    mpq_class inv = 1 / r0.coeff(0);
    return {s0.scaled(inv), t0.scaled(inv)};
}

} // namespace

std::vector<FactorBlock> coprime_split(const Polynomial& N,
                                       const std::vector<IrreducibleFactor>& factors) {
    std::vector<FactorBlock> blocks;
    if (factors.empty()) {
        if (N.degree() != -1)
            throw Error("internal: nonzero numerator over an empty factor list");
        return blocks;
    }

    Polynomial remaining = Polynomial::constant(1);
    for (const auto& f : factors) remaining = remaining * f.factor.pow(f.multiplicity);

    Polynomial cur = N;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Polynomial U = factors[i].factor.pow(factors[i].multiplicity);
        if (i + 1 == factors.size()) {
            blocks.push_back({cur, factors[i].factor, factors[i].multiplicity});
            break;
        }
        auto [rest, leftover] = remaining.divmod(U);
        if (leftover.degree() != -1)
            throw Error("internal: factor product does not divide the denominator");
        auto [a, b] = bezout_coprime(U, rest);
        // cur/(U*rest) = r/U + (cur*a + s*rest)/rest  where  cur*b = s*U + r.
        auto [s, r] = (cur * b).divmod(U);
        blocks.push_back({r, factors[i].factor, factors[i].multiplicity});
        cur = cur * a + s * rest;
        // Properness of the split makes this remainder exact; reduce defensively.
        cur = cur.divmod(rest).second;
        remaining = rest;
    }
    return blocks;
}

RationalFunction PartialFractions::recombine() const {
    RationalFunction acc{polynomial_part, Polynomial::constant(1)};
    for (const auto& t : terms)
        acc = acc + RationalFunction{t.num, t.den()};
    return acc;
}

PartialFractions partial_fractions(const RationalFunction& R, mpfr_prec_t prec) {
    PartialFractions out;
    auto [p, rem] = R.num().divmod(R.den());
    out.polynomial_part = p;

    if (rem.degree() != -1) {
        auto factors = factor_rational(R.den(), prec);
        auto blocks = coprime_split(rem, factors);
        for (const auto& blk : blocks) {
            // Digit expansion of blk.num in base blk.base: the j-th digit sits
            // over base^(power-j).
            Polynomial r = blk.num;
            for (unsigned j = 0; j < blk.power; ++j) {
                auto [q, digit] = r.divmod(blk.base);
                if (digit.degree() != -1)
                    out.terms.push_back({digit, blk.base, blk.power - j});
                r = q;
            }
            if (r.degree() != -1)
                throw Error("internal: digit expansion left a nonzero carry");
        }
    }

    if (!(out.recombine() == R))
        throw Error("internal: partial fraction recombination mismatch");
    return out;
}

} // namespace newtonforge
