#pragma once

// Combinatorial kernels shared by the Hankel-minor formulas and the
// hypergeometric identities: factorial, binomial with the vanishing
// convention, and the rising factorial (Pochhammer symbol).

#include "subres/numbers.hpp"

#include <stdexcept>

namespace subres {

inline Integer factorial(unsigned long long k) {
    Integer r = 1;
    for (unsigned long long i = 2; i <= k; ++i) r *= i;
    return r;
}

// binomial(c, k) with binomial(c, k) = 0 for k < 0 and k > c. Computed by the
// multiplicative formula with stepwise exact division, so intermediates stay
// at the size of the result.
inline Integer binomial(long long c, long long k) {
    if (c < 0) throw std::domain_error("binomial: negative upper index");
    if (k < 0 || k > c) return 0;
    if (k > c - k) k = c - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= c - k + i;
        r /= i; // exact: r is binomial(c-k+i, i)
    }
    return r;
}

// (x)_0 = 1, (x)_j = x(x+1)...(x+j-1).
inline Rational pochhammer(const Rational& x, unsigned long long j) {
    Rational r = 1;
    for (unsigned long long i = 0; i < j; ++i) r *= x + Rational(i);
    return r;
}

} // namespace subres
