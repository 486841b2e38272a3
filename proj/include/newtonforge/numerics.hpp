#pragma once

#include "newtonforge/scalar.hpp"

#include <vector>

namespace newtonforge {

/// C(n, k) over the integers.
mpz_class binomial_exact(unsigned long n, unsigned long k);

/// n! over the integers.
mpz_class factorial_exact(unsigned long n);

/// Generalized binomial coefficient C(z, k) = z(z-1)...(z-k+1)/k! for
/// complex z. Exact input gives an exact result; floating input is computed
/// at the input's precision.
Scalar generalized_binomial(const Scalar& z, unsigned long k);

/// Sum of terms. All-exact input sums exactly; otherwise the terms are
/// accumulated in an extended-precision accumulator (64 guard bits above the
/// smallest operand precision) and rounded back once at the end.
Scalar compensated_sum(const std::vector<Scalar>& terms);

} // namespace newtonforge
